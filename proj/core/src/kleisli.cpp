#include "cotrace/engines.hpp"

namespace cotrace {

namespace {

Trace prefixed(LetterId a, const Trace& t) {
  Trace out{{a}, t.terminal};
  out.word.insert(out.word.end(), t.word.begin(), t.word.end());
  return out;
}

/// T(a . -) restricted to traces that stay within `depth`.
MonadValue<Trace> prepend(LetterId a, const MonadValue<Trace>& v, std::size_t depth) {
  if (v.kind() == MonadKind::Pow) {
    std::vector<Trace> out;
    for (const auto& t : v.elements())
      if (t.word.size() < depth) out.push_back(prefixed(a, t));
    return MonadValue<Trace>::pow(std::move(out));
  }
  std::vector<std::pair<Trace, Rational>> out;
  for (const auto& [t, p] : v.weights())
    if (t.word.size() < depth) out.emplace_back(prefixed(a, t), p);
  return MonadValue<Trace>::subdist(std::move(out));
}

}  // namespace

std::vector<std::vector<MonadValue<Trace>>> kleisli_iterates(const GenerativeCoalgebra& g, std::size_t depth,
                                                             std::size_t iterations) {
  const MonadKind kind = g.kind();
  const std::size_t n = g.states().size();
  std::vector<std::vector<MonadValue<Trace>>> iterates;
  iterates.emplace_back(n, MonadValue<Trace>::empty(kind));
  for (std::size_t k = 0; k < iterations; ++k) {
    const auto& cur = iterates.back();
    std::vector<MonadValue<Trace>> next;
    next.reserve(n);
    for (StateId y = 0; y < n; ++y) {
      next.push_back(bind(g.step(y), [&](const Move<StateId>& m) {
        if (const auto* t = std::get_if<Terminal>(&m)) return unit(kind, Trace{{}, t->id});
        const auto& e = std::get<Emit<StateId>>(m);
        return prepend(e.label, cur[e.next], depth);
      }));
    }
    iterates.push_back(std::move(next));
  }
  return iterates;
}

TruncatedTraceSet kleisli_traces(const GenerativeCoalgebra& g, StateId x, std::size_t depth) {
  (void)g.step(x);  // range check
  auto iterates = kleisli_iterates(g, depth, depth + 1);
  return {g.kind(), depth, g.terminals().size(), std::move(iterates.back()[x])};
}

TruncatedLanguage kbar(const TruncatedTraceSet& ts, std::size_t alphabet) {
  if (ts.terminal_count != 1)
    throw Error(ErrorKind::Unsupported, "kbar is implemented for a single terminal symbol only");
  const OmegaCarrier carrier = omega_carrier_of(ts.kind);
  std::vector<OmegaValue> values(word_count(alphabet, ts.depth), omega_bottom(carrier));
  auto slot = [&](const Trace& t) -> OmegaValue& {
    if (t.word.size() > ts.depth) throw Error(ErrorKind::InvalidValue, "trace longer than the truncation depth");
    return values[word_index(t.word, alphabet)];
  };
  for (const auto& t : ts.traces.elements()) slot(t) = true;
  for (const auto& [t, p] : ts.traces.weights()) slot(t) = p;
  return TruncatedLanguage(alphabet, ts.depth, carrier, std::move(values));
}

}  // namespace cotrace
