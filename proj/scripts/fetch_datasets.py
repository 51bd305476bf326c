#!/usr/bin/env python3
"""Fetch the four benchmark networks into data/.

This script needs outbound network access, so run it on a machine with
internet connectivity (it will not work inside an offline build sandbox):

    python3 scripts/fetch_datasets.py

It downloads the public archives, converts each network into the format
the test suite expects, writes the files below, and verifies node/edge
counts:

    data/dolphins.gml     62 nodes,   159 edges   (GML)
    data/football.gml    115 nodes,   615 edges   (GML)
    data/email.edgelist 1133 nodes,  5451 edges   (whitespace edge list;
                          the source lists 10902 directed arcs, i.e. each
                          undirected edge appears in both directions)
    data/power.gml      4941 nodes,  6594 edges   (GML)

Only the Python standard library is used. Once the files exist, the
acceptance tests that were skipped for lack of data will run:

    ctest --test-dir build --output-on-failure
"""

from __future__ import annotations

import io
import re
import sys
import urllib.request
import zipfile
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

# Each entry: (url, member-inside-zip or None for plain text, output name,
#              expected node count, expected undirected edge count)
SOURCES = [
    (
        "https://websites.umich.edu/~mejn/netdata/dolphins.zip",
        "dolphins.gml",
        "dolphins.gml",
        62,
        159,
    ),
    (
        "https://websites.umich.edu/~mejn/netdata/football.zip",
        "football.gml",
        "football.gml",
        115,
        615,
    ),
    (
        "https://deim.urv.cat/~alexandre.arenas/data/xarxes/email.zip",
        "email.txt",
        "email.edgelist",
        1133,
        5451,
    ),
    (
        "https://websites.umich.edu/~mejn/netdata/power.zip",
        "power.gml",
        "power.gml",
        4941,
        6594,
    ),
]


def download(url: str) -> bytes:
    print(f"  downloading {url}")
    req = urllib.request.Request(url, headers={"User-Agent": "Mozilla/5.0"})
    with urllib.request.urlopen(req, timeout=60) as resp:
        return resp.read()


def extract(blob: bytes, member: str) -> bytes:
    with zipfile.ZipFile(io.BytesIO(blob)) as zf:
        names = zf.namelist()
        # Tolerate archives that nest the file inside a directory.
        for name in names:
            if name.endswith(member):
                return zf.read(name)
    raise FileNotFoundError(f"{member} not found in archive ({names})")


def count_gml(text: str) -> tuple[int, int]:
    # Count node/edge blocks; good enough for Newman's flat GML files.
    nodes = len(re.findall(r"\bnode\s*\[", text))
    edges = len(re.findall(r"\bedge\s*\[", text))
    return nodes, edges


def convert_email(text: str) -> tuple[str, int, int]:
    """Normalize the Arenas email list to undirected 'u v' lines."""
    seen: set[tuple[int, int]] = set()
    nodes: set[int] = set()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith(("#", "%")):
            continue
        parts = line.split()
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            continue
        nodes.add(u)
        nodes.add(v)
        seen.add((min(u, v), max(u, v)))
    lines = [f"{u} {v}" for u, v in sorted(seen)]
    return "\n".join(lines) + "\n", len(nodes), len(seen)


def main() -> int:
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    failures = 0
    for url, member, out_name, want_n, want_m in SOURCES:
        out_path = DATA_DIR / out_name
        print(f"{out_name}:")
        try:
            blob = download(url)
            if url.endswith(".zip"):
                blob = extract(blob, member)
            text = blob.decode("utf-8", errors="replace")
            if out_name.endswith(".gml"):
                n, m = count_gml(text)
            else:
                text, n, m = convert_email(text)
            if (n, m) != (want_n, want_m):
                print(
                    f"  WARNING: expected {want_n} nodes / {want_m} edges, "
                    f"got {n} / {m}"
                )
                failures += 1
            out_path.write_text(text)
            print(f"  wrote {out_path} ({n} nodes, {m} edges)")
        except Exception as exc:  # noqa: BLE001 - report and continue
            print(f"  FAILED: {exc}")
            failures += 1
    if failures:
        print(f"{failures} dataset(s) had problems; see messages above.")
        return 1
    print("All datasets fetched and verified.")
    return 0


if __name__ == "__main__":
    sys.exit(main())
