#include <map>

#include "cotrace/engines.hpp"

namespace cotrace {

namespace {

MonadValue<StateId> start_value(const MooreCoalgebra& m, StateId x) {
  require_monad(m.kind(), "em trace map");
  (void)m.output(x);  // range check
  return unit(m.kind(), x);
}

MonadValue<StateId> advance(const MooreCoalgebra& m, const MonadValue<StateId>& u, LetterId a) {
  if (a >= m.alphabet().size()) throw Error(ErrorKind::UnknownSymbol, "letter " + std::to_string(a));
  return bind(u, [&](StateId y) { return m.next(y, a); });
}

OmegaValue observe(const MooreCoalgebra& m, const MonadValue<StateId>& u) {
  return algebra_eval(m.modality(), fmap([&](StateId y) { return m.output(y); }, u));
}

}  // namespace

OmegaValue em_eval_bt(const MooreCoalgebra& m, StateId x, const Word& w) {
  auto u = start_value(m, x);
  for (LetterId a : w) u = advance(m, u, a);
  return observe(m, u);
}

TruncatedLanguage em_language_bt(const MooreCoalgebra& m, StateId x, std::size_t depth, EnumerationGuard guard) {
  const std::size_t n = m.alphabet().size();
  const std::size_t total = word_count(n, depth);
  if (total > guard.max_objects) throw Error(ErrorKind::SizeGuard, "language table exceeds the enumeration bound");

  // Breadth-first over the word trie, so the running values come out in
  // enumeration order.
  std::vector<OmegaValue> values;
  values.reserve(total);
  std::vector<MonadValue<StateId>> layer{start_value(m, x)};
  values.push_back(observe(m, layer.front()));
  for (std::size_t len = 1; len <= depth && n > 0; ++len) {
    std::vector<MonadValue<StateId>> next;
    next.reserve(layer.size() * n);
    for (const auto& u : layer) {
      for (LetterId a = 0; a < n; ++a) {
        next.push_back(advance(m, u, a));
        values.push_back(observe(m, next.back()));
      }
    }
    layer = std::move(next);
  }
  return TruncatedLanguage(n, depth, m.carrier(), std::move(values));
}

DeterministicMoore determinise_bt(const MooreCoalgebra& m, StateId start) {
  if (m.kind() != MonadKind::Pow)
    throw Error(ErrorKind::Unsupported, "determinisation needs the powerset monad");
  DeterministicMoore d;
  d.alphabet = m.alphabet();
  d.modality = m.modality();
  std::map<std::vector<StateId>, std::size_t> index;
  auto intern = [&](std::vector<StateId> subset) {
    auto [it, fresh] = index.emplace(subset, d.subsets.size());
    if (fresh) d.subsets.push_back(std::move(subset));
    return it->second;
  };
  intern(start_value(m, start).elements());
  for (std::size_t i = 0; i < d.subsets.size(); ++i) {
    const auto u = MonadValue<StateId>::pow(d.subsets[i]);
    d.output.push_back(observe(m, u));
    std::vector<std::size_t> row;
    for (LetterId a = 0; a < m.alphabet().size(); ++a) row.push_back(intern(advance(m, u, a).elements()));
    d.next.push_back(std::move(row));
  }
  return d;
}

TruncatedLanguage language_of(const DeterministicMoore& d, std::size_t state, std::size_t depth,
                              EnumerationGuard guard) {
  if (state >= d.subsets.size()) throw Error(ErrorKind::UnknownSymbol, "subset state " + std::to_string(state));
  const std::size_t n = d.alphabet.size();
  if (word_count(n, depth) > guard.max_objects)
    throw Error(ErrorKind::SizeGuard, "language table exceeds the enumeration bound");
  std::vector<OmegaValue> values{d.output[state]};
  std::vector<std::size_t> layer{state};
  for (std::size_t len = 1; len <= depth && n > 0; ++len) {
    std::vector<std::size_t> next;
    for (std::size_t s : layer) {
      for (std::size_t a = 0; a < n; ++a) {
        next.push_back(d.next[s][a]);
        values.push_back(d.output[next.back()]);
      }
    }
    layer = std::move(next);
  }
  return TruncatedLanguage(n, depth, carrier_of(d.modality), std::move(values));
}

OmegaValue em_eval_ta(const GenerativeCoalgebra& g, StateId x, const Word& w) {
  return em_eval_bt(moore_of_generative(g), x, w);
}

TruncatedLanguage em_language_ta(const GenerativeCoalgebra& g, StateId x, std::size_t depth,
                                 EnumerationGuard guard) {
  return em_language_bt(moore_of_generative(g), x, depth, guard);
}

}  // namespace cotrace
