#pragma once

// Umbrella header: the whole library.

#include "spanner/apsp.hpp"
#include "spanner/baswana_sen.hpp"
#include "spanner/bench.hpp"
#include "spanner/berman.hpp"
#include "spanner/deadline.hpp"
#include "spanner/densest_subgraph.hpp"
#include "spanner/digraph.hpp"
#include "spanner/dijkstra.hpp"
#include "spanner/elkin_neiman.hpp"
#include "spanner/errors.hpp"
#include "spanner/generators.hpp"
#include "spanner/graph.hpp"
#include "spanner/greedy.hpp"
#include "spanner/io.hpp"
#include "spanner/kortsarz_peleg.hpp"
#include "spanner/lp.hpp"
#include "spanner/max_flow.hpp"
#include "spanner/metrics.hpp"
#include "spanner/mst.hpp"
#include "spanner/rng.hpp"
#include "spanner/validate.hpp"
