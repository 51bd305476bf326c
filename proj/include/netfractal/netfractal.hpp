#pragma once

// Fractal dimensions of complex networks: randomized greedy box covering,
// box-counting and box-entropy scaling, log-log least squares.

#include "netfractal/cover.hpp"
#include "netfractal/dimension.hpp"
#include "netfractal/distance.hpp"
#include "netfractal/entropy.hpp"
#include "netfractal/fit.hpp"
#include "netfractal/generators.hpp"
#include "netfractal/graph.hpp"
#include "netfractal/io.hpp"
#include "netfractal/parse.hpp"
#include "netfractal/rng.hpp"
#include "netfractal/series.hpp"
