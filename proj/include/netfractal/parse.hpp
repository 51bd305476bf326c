#pragma once

#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "netfractal/graph.hpp"

namespace netfractal {

enum class Format { edgelist, pajek, gml };

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline Format format_from_name(std::string_view name) {
  if (name == "edgelist") return Format::edgelist;
  if (name == "pajek") return Format::pajek;
  if (name == "gml") return Format::gml;
  throw GraphError("unknown format tag: " + std::string(name));
}

inline const char* format_name(Format f) {
  switch (f) {
    case Format::edgelist: return "edgelist";
    case Format::pajek: return "pajek";
    case Format::gml: return "gml";
  }
  return "?";
}

// Guess from the file name; whitespace pairs are the fallback.
inline Format guess_format(std::string_view path) {
  const auto dot = path.rfind('.');
  std::string ext = dot == std::string_view::npos ? "" : std::string(path.substr(dot + 1));
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (ext == "gml") return Format::gml;
  if (ext == "net" || ext == "paj" || ext == "pajek") return Format::pajek;
  return Format::edgelist;
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Fn>
inline void for_each_line(std::string_view content, Fn&& fn) {
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    fn(lineno, line);
    if (end == content.size()) break;
    pos = end + 1;
  }
}

inline Graph parse_edgelist(std::string_view content) {
  GraphBuilder b;
  for_each_line(content, [&](int lineno, std::string_view line) {
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty()) return;
    if (tok.size() < 2) throw ParseError(lineno, "expected a node-id pair");
    const int u = b.node_for(std::string(tok[0]));
    const int v = b.node_for(std::string(tok[1]));
    b.add_edge(u, v);  // trailing tokens (weights etc.) are ignored
  });
  return b.build();
}

inline long parse_long(std::string_view tok, int lineno, const char* what) {
  char* end = nullptr;
  const std::string s(tok);
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0')
    throw ParseError(lineno, std::string("expected integer ") + what + ", got '" + s + "'");
  return v;
}

// *Vertices / *Edges / *Arcs with 1-based vertex numbers. Arcs are
// symmetrized, weights ignored, %-comment lines skipped.
inline Graph parse_pajek(std::string_view content) {
  GraphBuilder b;
  enum class Section { none, vertices, links } section = Section::none;
  long declared = -1;

  for_each_line(content, [&](int lineno, std::string_view line) {
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '%') return;
    if (tok[0].front() == '*') {
      std::string key(tok[0].substr(1));
      for (auto& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      if (key == "network") return;  // title line
      if (key == "vertices") {
        if (tok.size() < 2) throw ParseError(lineno, "*Vertices needs a count");
        declared = parse_long(tok[1], lineno, "vertex count");
        if (declared <= 0) throw ParseError(lineno, "vertex count must be positive");
        for (long i = 1; i <= declared; ++i) b.add_node(std::to_string(i));
        section = Section::vertices;
        return;
      }
      if (key == "edges" || key == "arcs") {
        if (declared < 0) throw ParseError(lineno, "*Edges before *Vertices");
        section = Section::links;
        return;
      }
      throw ParseError(lineno, "unsupported section '" + std::string(tok[0]) + "'");
    }
    if (section == Section::vertices) {
      // "id \"label\" ..." lines; coordinates after the label are ignored.
      const long id = parse_long(tok[0], lineno, "vertex id");
      if (id < 1 || id > declared) throw ParseError(lineno, "vertex id out of range");
      auto start = line.find(tok[0]) + tok[0].size();
      while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
      if (start < line.size()) {
        std::string label;
        if (line[start] == '"') {
          const auto close = line.find('"', start + 1);
          if (close == std::string_view::npos) throw ParseError(lineno, "unterminated label");
          label = std::string(line.substr(start + 1, close - start - 1));
        } else {
          label = std::string(tok[1]);
        }
        b.set_label(static_cast<int>(id - 1), std::move(label));
      }
      return;
    }
    if (section == Section::links) {
      if (tok.size() < 2) throw ParseError(lineno, "expected an endpoint pair");
      const long u = parse_long(tok[0], lineno, "endpoint");
      const long v = parse_long(tok[1], lineno, "endpoint");
      if (u < 1 || u > declared || v < 1 || v > declared)
        throw ParseError(lineno, "endpoint out of range");
      b.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
      return;
    }
    throw ParseError(lineno, "data before any section header");
  });
  if (declared < 0) throw GraphError("empty graph");
  return b.build();
}

struct GmlToken {
  enum class Kind { key, number, string, open, close, eof } kind;
  std::string text;
  int line;
};

class GmlLexer {
 public:
  explicit GmlLexer(std::string_view s) : s_(s) {}

  GmlToken next() {
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {  // comment to end of line
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    if (pos_ >= s_.size()) return {GmlToken::Kind::eof, "", line_};
    const char c = s_[pos_];
    if (c == '[') {
      ++pos_;
      return {GmlToken::Kind::open, "[", line_};
    }
    if (c == ']') {
      ++pos_;
      return {GmlToken::Kind::close, "]", line_};
    }
    if (c == '"') {
      std::string text;
      ++pos_;
      while (pos_ < s_.size() && s_[pos_] != '"') {
        if (s_[pos_] == '\n') ++line_;
        text += s_[pos_++];
      }
      if (pos_ >= s_.size()) throw ParseError(line_, "unterminated string");
      ++pos_;
      return {GmlToken::Kind::string, text, line_};
    }
    std::string text;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           s_[pos_] != '[' && s_[pos_] != ']') {
      text += s_[pos_++];
    }
    const bool numeric = text.find_first_not_of("+-.0123456789eE") == std::string::npos &&
                         text.find_first_of("0123456789") != std::string::npos;
    return {numeric ? GmlToken::Kind::number : GmlToken::Kind::key, text, line_};
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

// Minimal GML: node blocks with id (and optional label), edge blocks with
// source/target. Every other key, including nested blocks, is skipped.
inline Graph parse_gml(std::string_view content) {
  GmlLexer lex(content);
  GraphBuilder b;
  std::unordered_map<long, int> by_gml_id;
  std::vector<std::pair<long, long>> edges;
  std::vector<int> edge_lines;

  auto skip_value = [&](GmlToken tok, auto&& self) -> void {
    if (tok.kind == GmlToken::Kind::open) {
      for (;;) {
        GmlToken t = lex.next();
        if (t.kind == GmlToken::Kind::eof) throw ParseError(t.line, "unterminated block");
        if (t.kind == GmlToken::Kind::close) return;
        if (t.kind == GmlToken::Kind::open) self(t, self);
      }
    }
  };

  auto parse_block = [&](bool is_node, int open_line) {
    long id = -1, source = -1, target = -1;
    std::string label;
    bool has_id = false, has_source = false, has_target = false, has_label = false;
    for (;;) {
      GmlToken t = lex.next();
      if (t.kind == GmlToken::Kind::eof) throw ParseError(open_line, "unterminated block");
      if (t.kind == GmlToken::Kind::close) break;
      if (t.kind != GmlToken::Kind::key) throw ParseError(t.line, "expected key");
      GmlToken v = lex.next();
      if (t.text == "id" && v.kind == GmlToken::Kind::number) {
        id = std::strtol(v.text.c_str(), nullptr, 10);
        has_id = true;
      } else if (t.text == "source" && v.kind == GmlToken::Kind::number) {
        source = std::strtol(v.text.c_str(), nullptr, 10);
        has_source = true;
      } else if (t.text == "target" && v.kind == GmlToken::Kind::number) {
        target = std::strtol(v.text.c_str(), nullptr, 10);
        has_target = true;
      } else if (t.text == "label" && v.kind == GmlToken::Kind::string) {
        label = v.text;
        has_label = true;
      } else {
        skip_value(v, skip_value);
      }
    }
    if (is_node) {
      if (!has_id) throw ParseError(open_line, "node block without id");
      if (by_gml_id.count(id)) throw ParseError(open_line, "duplicate node id");
      by_gml_id[id] = b.add_node(has_label ? label : std::to_string(id));
    } else {
      if (!has_source || !has_target) throw ParseError(open_line, "edge block needs source and target");
      edges.emplace_back(source, target);
      edge_lines.push_back(open_line);
    }
  };

  int depth = 0, last_open_line = 0;
  for (;;) {
    GmlToken t = lex.next();
    if (t.kind == GmlToken::Kind::eof) break;
    if (t.kind == GmlToken::Kind::open) {
      ++depth;
      last_open_line = t.line;
    } else if (t.kind == GmlToken::Kind::close) {
      if (--depth < 0) throw ParseError(t.line, "unmatched ]");
    } else if (t.kind == GmlToken::Kind::key && (t.text == "node" || t.text == "edge")) {
      const bool is_node = t.text == "node";
      GmlToken open = lex.next();
      if (open.kind != GmlToken::Kind::open)
        throw ParseError(open.line, "expected [ after " + t.text);
      parse_block(is_node, open.line);
    }
    // graph [, directed 0, Creator strings etc. fall through
  }
  if (depth != 0) throw ParseError(last_open_line, "unterminated block");

  if (by_gml_id.empty()) throw GraphError("empty graph");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto su = by_gml_id.find(edges[i].first);
    const auto sv = by_gml_id.find(edges[i].second);
    if (su == by_gml_id.end() || sv == by_gml_id.end())
      throw ParseError(edge_lines[i], "edge references undeclared node id");
    b.add_edge(su->second, sv->second);
  }
  return b.build();
}

}  // namespace detail

// Directed inputs are symmetrized, self-loops and duplicate edges dropped,
// weights ignored. Node ids come out contiguous, original identifiers are
// kept in Graph::labels.
inline Graph parse_network(std::string_view content, Format format) {
  switch (format) {
    case Format::edgelist: return detail::parse_edgelist(content);
    case Format::pajek: return detail::parse_pajek(content);
    case Format::gml: return detail::parse_gml(content);
  }
  throw GraphError("unknown format tag");
}

}  // namespace netfractal
