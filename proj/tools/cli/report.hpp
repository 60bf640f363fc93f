#pragma once

// JSON renderings of engine results and DOT output for determinised
// machines.

#include <string>

#include <cotrace/engines.hpp>
#include <cotrace/laws.hpp>
#include <cotrace/strategies.hpp>

#include "machine_file.hpp"

namespace cotrace::cli {

/// [[word, value], ...] in enumeration order.
Json language_json(const TruncatedLanguage& lang, const ElemUniverse& alphabet);
Json tree_language_json(const TruncatedTreeLanguage& lang);
/// [{"word", "terminal", "weight"?}, ...]
Json traces_json(const TruncatedTraceSet& ts, const ElemUniverse& labels, const ElemUniverse& terminals);
Json strategy_json(const Strategy& s, const IOSignature& sig);
Json law_json(const LawReport& r);
Json semantics_report_json(const SemanticsReport& r, const ElemUniverse& states, const ElemUniverse& alphabet,
                           const ElemUniverse* terminals = nullptr);

/// Subset names list members in universe order: "{q0,q1}".
std::string subset_name(const std::vector<StateId>& subset, const ElemUniverse& states);

std::string dot(const DeterministicMoore& d, const ElemUniverse& states);
std::string dot(const DeterminisedIO& d);

}  // namespace cotrace::cli
