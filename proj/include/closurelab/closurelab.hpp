#ifndef CLOSURELAB_CLOSURELAB_HPP
#define CLOSURELAB_CLOSURELAB_HPP

#include "closurelab/bigint.hpp"
#include "closurelab/bitset.hpp"
#include "closurelab/blowup.hpp"
#include "closurelab/bounds.hpp"
#include "closurelab/caps.hpp"
#include "closurelab/cliques.hpp"
#include "closurelab/dichotomy.hpp"
#include "closurelab/errors.hpp"
#include "closurelab/families.hpp"
#include "closurelab/fast_enum.hpp"
#include "closurelab/gadgets.hpp"
#include "closurelab/graph.hpp"
#include "closurelab/harness.hpp"
#include "closurelab/named_graphs.hpp"
#include "closurelab/pattern.hpp"
#include "closurelab/stats.hpp"
#include "closurelab/top_blocks.hpp"
#include "closurelab/twins.hpp"

#endif
