#pragma once

#include "wlkit/cfi.hpp"
#include "wlkit/cliques.hpp"
#include "wlkit/coloring.hpp"
#include "wlkit/cycles.hpp"
#include "wlkit/formulas.hpp"
#include "wlkit/generators.hpp"
#include "wlkit/graph.hpp"
#include "wlkit/graph_io.hpp"
#include "wlkit/isomorphism.hpp"
#include "wlkit/pair_profile.hpp"
#include "wlkit/refine.hpp"
#include "wlkit/tuple_type.hpp"
