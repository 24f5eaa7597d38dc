#pragma once

#include <json.hpp>

#include "ncorder/bigint.hpp"
#include "ncorder/bijections.hpp"
#include "ncorder/contraction.hpp"
#include "ncorder/normal_form.hpp"
#include "ncorder/series.hpp"

namespace ncorder {

using Json = nlohmann::ordered_json;

/// A number when it fits in int64, otherwise a decimal string.
Json bigint_to_json(const BigInt& value);
BigInt bigint_from_json(const Json& value);

/// {"schema": "ncorder/normal-form/1", "terms": [{"adag", "a", "coeffs": [c0, c1, ...]}]},
/// terms sorted by descending adag, then descending a.
Json normal_form_to_json(const NormalFormPolynomial& nf);
NormalFormPolynomial normal_form_from_json(const Json& j);

struct ContractionJsonOptions {
  bool canonical = false;
  bool stats = false;
};

/// {"schema": "ncorder/contraction/1", "word": "a a ad ad", "edges": [[w, b], ...],
/// "labels": "(42)(31)"} plus optional "canonical" and "stats".
Json contraction_to_json(const Contraction& c, const ContractionJsonOptions& options = {});
Contraction contraction_from_json(const Json& j);

/// {"schema": "ncorder/series/1", "family", "r", "s", "order", "rows": [[n, j, (i,) c], ...]}.
Json series_to_json(const TruncatedSeries& series);

/// Nested arrays, one entry per slot, null for an empty slot; null for the empty tree.
Json tree_to_json(const KaryTree& tree);
KaryTree tree_from_json(const Json& j, unsigned arity);

}  // namespace ncorder
