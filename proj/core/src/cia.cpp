#include <optional>

#include "cotrace/engines.hpp"

namespace cotrace {

namespace {

class GeneralizedEval {
 public:
  GeneralizedEval(const GeneralizedCoalgebra& g, const Word& w)
      : g_(g), w_(w), memo_((w.size() + 1) * g.states().size()) {
    for (LetterId a : w_)
      if (a >= g_.alphabet().size()) throw Error(ErrorKind::UnknownSymbol, "letter " + std::to_string(a));
  }

  OmegaValue eval(StateId x, std::size_t i) {
    const auto& step = g_.step(x);
    auto& slot = memo_[i * g_.states().size() + x];
    if (slot) return *slot;
    if (const auto* lang = std::get_if<TruncatedLanguage>(&step)) {
      slot = lang->at(Word(w_.begin() + static_cast<std::ptrdiff_t>(i), w_.end()));
    } else {
      const auto& obs = std::get<Observation<MonadValue<StateId>>>(step);
      if (i == w_.size())
        slot = obs.output;
      else
        slot = algebra_eval(g_.modality(), fmap([&](StateId y) { return eval(y, i + 1); }, obs.successors[w_[i]]));
    }
    return *slot;
  }

 private:
  const GeneralizedCoalgebra& g_;
  const Word& w_;
  std::vector<std::optional<OmegaValue>> memo_;
};

}  // namespace

OmegaValue cia_eval(const GeneralizedCoalgebra& g, StateId x, const Word& w) { return GeneralizedEval(g, w).eval(x, 0); }

TruncatedLanguage cia_language(const GeneralizedCoalgebra& g, StateId x, std::size_t depth, EnumerationGuard guard) {
  return TruncatedLanguage::tabulate(
      g.alphabet().size(), depth, g.carrier(), [&](const Word& w) { return cia_eval(g, x, w); }, guard);
}

}  // namespace cotrace
