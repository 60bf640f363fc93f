#include <algorithm>

#include "cotrace/engines.hpp"

namespace cotrace {

namespace {

EngineAgreement agree(const EngineRun& a, const EngineRun& b) {
  EngineAgreement r{a.engine, b.engine, true, std::nullopt, std::nullopt};
  for (StateId x = 0; x < a.languages.size(); ++x) {
    auto c = language_equal(a.languages[x], b.languages[x]);
    if (!c.equal) {
      r.equal = false;
      r.state = x;
      r.word = c.first_difference;
      break;
    }
  }
  return r;
}

void add_agreements(SemanticsReport& r) {
  for (std::size_t i = 0; i < r.runs.size(); ++i)
    for (std::size_t j = i + 1; j < r.runs.size(); ++j) r.agreements.push_back(agree(r.runs[i], r.runs[j]));
}

template <class F>
EngineRun run_engine(std::string name, std::size_t states, F&& language) {
  EngineRun run{std::move(name), {}};
  for (StateId x = 0; x < states; ++x) run.languages.push_back(language(x));
  return run;
}

}  // namespace

bool SemanticsReport::all_equal() const {
  return std::all_of(agreements.begin(), agreements.end(), [](const EngineAgreement& a) { return a.equal; });
}

SemanticsReport compare_semantics(const MooreCoalgebra& m, std::size_t depth) {
  SemanticsReport r;
  r.depth = depth;
  const std::size_t n = m.states().size();
  if (is_monad(m.kind()))
    r.runs.push_back(run_engine("em", n, [&](StateId x) { return em_language_bt(m, x, depth); }));
  r.runs.push_back(run_engine("logic", n, [&](StateId x) { return logic_language_word(m, x, depth); }));
  if (m.kind() == MonadKind::Pow)
    r.runs.push_back(
        run_engine("determinised", n, [&](StateId x) { return language_of(determinise_bt(m, x), 0, depth); }));
  add_agreements(r);
  return r;
}

SemanticsReport compare_semantics(const GenerativeCoalgebra& g, std::size_t depth, LogicKind logic) {
  SemanticsReport r;
  r.depth = depth;
  const std::size_t n = g.states().size();
  for (StateId x = 0; x < n; ++x) {
    r.kleisli.push_back(kleisli_traces(g, x, depth));
    if (g.kind() == MonadKind::SubDist) r.retained_mass.push_back(r.kleisli.back().traces.mass());
  }
  r.runs.push_back(run_engine("em", n, [&](StateId x) { return em_language_ta(g, x, depth); }));
  r.runs.push_back(run_engine("kleisli", n, [&](StateId x) { return kbar(r.kleisli[x], g.labels().size()); }));
  if (logic == LogicKind::Standard)
    r.runs.push_back(run_engine("logic", n, [&](StateId x) { return logic_language_generative(g, x, depth); }));
  else
    r.runs.push_back(run_engine("logic-strange", n, [&](StateId x) { return logic_language_strange(g, x, depth); }));
  add_agreements(r);

  const auto& logic_run = r.runs.back();
  for (StateId x = 0; x < n; ++x)
    for (StateId y = x + 1; y < n; ++y)
      if (logic_run.languages[x] == logic_run.languages[y] && !(r.kleisli[x] == r.kleisli[y]))
        r.log_equal_kl_distinct.emplace_back(x, y);
  r.kbar_injective = r.log_equal_kl_distinct.empty();
  return r;
}

}  // namespace cotrace
