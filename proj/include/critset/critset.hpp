#pragma once

// Umbrella header for the whole library.

#include "critset/chain.hpp"
#include "critset/critical.hpp"
#include "critset/cycles.hpp"
#include "critset/errors.hpp"
#include "critset/graph.hpp"
#include "critset/independence.hpp"
#include "critset/json_io.hpp"
#include "critset/matching.hpp"
#include "critset/rng.hpp"
#include "critset/search.hpp"
#include "critset/vertex_set.hpp"
