#include "report.hpp"

namespace cotrace::cli {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json language_json(const TruncatedLanguage& lang, const ElemUniverse& alphabet) {
  Json out = Json::array();
  const auto words = enumerate_words(lang.alphabet_size(), lang.depth());
  for (std::size_t i = 0; i < words.size(); ++i)
    out.push_back(Json::array({show_word(words[i], &alphabet), omega_json(lang.values()[i])}));
  return out;
}

Json tree_language_json(const TruncatedTreeLanguage& lang) {
  Json out = Json::array();
  for (std::size_t i = 0; i < lang.trees().size(); ++i)
    out.push_back(Json::array({show_tree(lang.trees()[i], &lang.signature()), omega_json(lang.values()[i])}));
  return out;
}

Json traces_json(const TruncatedTraceSet& ts, const ElemUniverse& labels, const ElemUniverse& terminals) {
  Json out = Json::array();
  auto entry = [&](const Trace& t) {
    return Json{{"word", show_word(t.word, &labels)}, {"terminal", terminals.name(t.terminal)}};
  };
  for (const auto& t : ts.traces.elements()) out.push_back(entry(t));
  for (const auto& [t, p] : ts.traces.weights()) {
    Json e = entry(t);
    e["weight"] = p.str();
    out.push_back(std::move(e));
  }
  return out;
}

Json strategy_json(const Strategy& s, const IOSignature& sig) {
  Json plays = Json::array();
  for (const auto& p : s.plays) plays.push_back(show_play(p, &sig));
  return Json{{"mode", to_string(s.mode)}, {"bound", s.bound}, {"plays", std::move(plays)}};
}

Json law_json(const LawReport& r) {
  Json out{{"law", r.law_name}, {"carriers", r.carrier_sizes}, {"holds", r.holds}, {"inputs_checked", r.inputs_checked}};
  if (r.counterexample)
    out["counterexample"] = Json{{"input", r.counterexample->input}, {"lhs", r.counterexample->lhs},
                                 {"rhs", r.counterexample->rhs}};
  else
    out["counterexample"] = nullptr;
  return out;
}

Json semantics_report_json(const SemanticsReport& r, const ElemUniverse& states, const ElemUniverse& alphabet,
                           const ElemUniverse* terminals) {
  Json out;
  out["depth"] = r.depth;
  Json engines = Json::array();
  for (const auto& run : r.runs) engines.push_back(run.engine);
  out["engines"] = std::move(engines);
  Json agreements = Json::array();
  for (const auto& a : r.agreements) {
    Json e{{"lhs", a.lhs}, {"rhs", a.rhs}, {"equal", a.equal}};
    if (a.state) e["state"] = states.name(*a.state);
    if (a.word) e["word"] = show_word(*a.word, &alphabet);
    agreements.push_back(std::move(e));
  }
  out["agreements"] = std::move(agreements);
  out["all_equal"] = r.all_equal();

  Json per_state = Json::array();
  for (StateId x = 0; x < states.size(); ++x) {
    Json s{{"state", states.name(x)}};
    if (!r.runs.empty()) s["language"] = language_json(r.runs.front().languages[x], alphabet);
    if (terminals && x < r.kleisli.size()) s["traces"] = traces_json(r.kleisli[x], alphabet, *terminals);
    if (x < r.retained_mass.size()) s["retained_mass"] = r.retained_mass[x].str();
    per_state.push_back(std::move(s));
  }
  out["states"] = std::move(per_state);
  if (r.kbar_injective) {
    Json pairs = Json::array();
    for (const auto& [x, y] : r.log_equal_kl_distinct) pairs.push_back(Json::array({states.name(x), states.name(y)}));
    out["log_equal_kl_distinct"] = std::move(pairs);
    out["kbar_injective"] = *r.kbar_injective;
  }
  return out;
}

std::string subset_name(const std::vector<StateId>& subset, const ElemUniverse& states) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) out += (i ? "," : "") + states.name(subset[i]);
  return out + "}";
}

std::string dot(const DeterministicMoore& d, const ElemUniverse& states) {
  auto node = [&](std::size_t s) { return quoted(subset_name(d.subsets[s], states)); };
  std::string out = "digraph determinised {\n  rankdir=LR;\n  init [shape=point];\n";
  for (std::size_t s = 0; s < d.subsets.size(); ++s) {
    const bool* accepting = std::get_if<bool>(&d.output[s]);
    out += "  " + node(s) + " [shape=" + (accepting && *accepting ? "doublecircle" : "circle") + "];\n";
  }
  out += "  init -> " + node(0) + ";\n";
  for (std::size_t s = 0; s < d.subsets.size(); ++s)
    for (LetterId a = 0; a < d.next[s].size(); ++a)
      out += "  " + node(s) + " -> " + node(d.next[s][a]) + " [label=" + quoted(d.alphabet.name(a)) + "];\n";
  return out + "}\n";
}

std::string dot(const DeterminisedIO& d) {
  const auto& sys = d.system;
  const auto& sig = sys.signature();
  auto node = [&](StateId s) { return quoted(sys.states().name(s)); };
  std::string out = "digraph determinised {\n  rankdir=LR;\n  init [shape=point];\n";
  for (StateId s = 0; s < sys.states().size(); ++s) out += "  " + node(s) + " [shape=circle];\n";
  out += "  init -> " + node(0) + ";\n";
  for (StateId s = 0; s < sys.states().size(); ++s)
    for (const auto& t : sys.outputs(s))
      for (Elem i = 0; i < t.continuations.size(); ++i)
        out += "  " + node(s) + " -> " + node(t.continuations[i]) + " [label=" +
               quoted(sig.operations.name(t.op) + "/" + sig.arities[t.op].name(i)) + "];\n";
  return out + "}\n";
}

}  // namespace cotrace::cli
