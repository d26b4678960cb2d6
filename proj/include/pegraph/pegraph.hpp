#pragma once

#include "pegraph/error.hpp"
#include "pegraph/number_theory.hpp"
#include "pegraph/group.hpp"
#include "pegraph/constructors.hpp"
#include "pegraph/group_ops.hpp"
#include "pegraph/iso_result.hpp"
#include "pegraph/group_iso.hpp"
#include "pegraph/graph.hpp"
#include "pegraph/group_graphs.hpp"
#include "pegraph/graph_probes.hpp"
#include "pegraph/refinement.hpp"
#include "pegraph/graph_iso.hpp"
#include "pegraph/expr.hpp"
#include "pegraph/serialize.hpp"
#include "pegraph/corpus.hpp"
#include "pegraph/verify.hpp"
