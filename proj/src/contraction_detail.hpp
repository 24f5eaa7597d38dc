#pragma once

#include <functional>
#include <vector>

#include "ncorder/contraction.hpp"

namespace ncorder::detail {

using EdgeSetVisitor = std::function<void(const std::vector<Edge>&)>;

/// Edge-set level enumerators behind for_each_contraction / for_each_noncrossing;
/// the visitor receives edges sorted by white position.
void enumerate_edge_sets(const Word& word, const EdgeSetVisitor& visit, const EnumerationLimits& limits);
void enumerate_noncrossing_edge_sets(const Word& word, const EdgeSetVisitor& visit, const EnumerationLimits& limits);

ContractionStats stats_of(const Word& word, const std::vector<Edge>& edges);

}  // namespace ncorder::detail
