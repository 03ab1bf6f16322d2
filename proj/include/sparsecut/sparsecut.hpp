#pragma once

#include "sparsecut/expansion.hpp"
#include "sparsecut/graph.hpp"
#include "sparsecut/graph_io.hpp"
#include "sparsecut/ksc.hpp"
#include "sparsecut/rational.hpp"
#include "sparsecut/reductions.hpp"
#include "sparsecut/sse.hpp"
#include "sparsecut/structure.hpp"
#include "sparsecut/td_io.hpp"
#include "sparsecut/tree_decomposition.hpp"
