#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "gcut/connectivity.hpp"
#include "gcut/theorems.hpp"

namespace gcut {

/// One JSON-lines record for a connectivity computation:
/// {graph, k, method, value, witness, cut_edges, runtime_ms}. Infinite values
/// serialize as the string "inf"; cut edges as [u, v] pairs repeated per
/// multiplicity.
nlohmann::ordered_json cut_record(std::string_view graph, int k, std::string_view method, const CutResult& cut,
                                  double runtime_ms);

/// {graph, family, n, k, girth_class, lambda2_G, xi_G, which, predicted,
///  computed, method, match, preconditions, witness, runtime_ms} plus the
/// optional flow/brute values, product xi_3 and K_2 reference.
nlohmann::ordered_json verdict_record(const TheoremVerdict& v);

nlohmann::ordered_json classification_record(std::string_view graph, const ClassificationReport& r);

/// JSON encoding of an ExtendedCount: a number, or "inf".
nlohmann::ordered_json count_json(ExtendedCount c);

std::string verdict_csv_header();
std::string verdict_csv_row(const TheoremVerdict& v);

/// Human-readable multi-line summary.
std::string verdict_text(const TheoremVerdict& v);

/// Drops fields that vary between identical runs (runtime_ms).
nlohmann::ordered_json without_timing(nlohmann::ordered_json record);

}  // namespace gcut
