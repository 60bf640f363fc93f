#include "cotrace/machines.hpp"

#include "cotrace/show.hpp"

namespace cotrace {

namespace {

void check_index(Elem e, std::size_t bound, const char* what) {
  if (e >= bound) throw Error(ErrorKind::UnknownSymbol, std::string(what) + " " + std::to_string(e));
}

void check_kind(MonadKind expected, MonadKind actual, const char* where) {
  if (expected != actual)
    throw Error(ErrorKind::KindMismatch, std::string(where) + " holds a " + to_string(actual) + " value, machine is " +
                                             to_string(expected));
}

template <class E, class F>
void for_each_element(const MonadValue<E>& v, F&& f) {
  for (const auto& e : v.elements()) f(e);
  for (const auto& [e, p] : v.weights()) f(e);
  for (const auto& inner : v.sets())
    for (const auto& e : inner) f(e);
}

void check_state_value(const MonadValue<StateId>& v, MonadKind kind, std::size_t states, const char* where) {
  check_kind(kind, v.kind(), where);
  for_each_element(v, [&](StateId y) { check_index(y, states, "state"); });
}

}  // namespace

MooreCoalgebra::MooreCoalgebra(ElemUniverse states, ElemUniverse alphabet, Modality modality,
                               std::vector<OmegaValue> output,
                               std::vector<std::vector<MonadValue<StateId>>> transitions)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      modality_(modality),
      output_(std::move(output)),
      transitions_(std::move(transitions)) {
  const std::size_t n = states_.size();
  if (output_.size() != n) throw Error(ErrorKind::ShapeMismatch, "output map is not total");
  if (transitions_.size() != n) throw Error(ErrorKind::ShapeMismatch, "transition map is not total");
  for (std::size_t x = 0; x < n; ++x) {
    if (!in_carrier(carrier(), output_[x]))
      throw Error(ErrorKind::InvalidValue, "output " + show(output_[x]) + " of " + states_.name(x) + " off carrier");
    if (transitions_[x].size() != alphabet_.size())
      throw Error(ErrorKind::ShapeMismatch, "transitions of " + states_.name(x) + " not total on the alphabet");
    for (const auto& v : transitions_[x]) check_state_value(v, kind(), n, "transition");
  }
}

const OmegaValue& MooreCoalgebra::output(StateId x) const {
  check_index(x, states_.size(), "state");
  return output_[x];
}

const MonadValue<StateId>& MooreCoalgebra::next(StateId x, LetterId a) const {
  check_index(x, states_.size(), "state");
  check_index(a, alphabet_.size(), "letter");
  return transitions_[x][a];
}

GenerativeCoalgebra::GenerativeCoalgebra(ElemUniverse states, ElemUniverse labels, ElemUniverse terminals,
                                         MonadKind kind, std::vector<MonadValue<Move<StateId>>> transitions)
    : states_(std::move(states)),
      labels_(std::move(labels)),
      terminals_(std::move(terminals)),
      kind_(kind),
      transitions_(std::move(transitions)) {
  require_monad(kind_, "generative coalgebra");
  if (transitions_.size() != states_.size()) throw Error(ErrorKind::ShapeMismatch, "transition map is not total");
  for (const auto& v : transitions_) {
    check_kind(kind_, v.kind(), "transition");
    for_each_element(v, [&](const Move<StateId>& m) {
      if (const auto* t = std::get_if<Terminal>(&m)) {
        check_index(t->id, terminals_.size(), "terminal");
      } else {
        const auto& e = std::get<Emit<StateId>>(m);
        check_index(e.label, labels_.size(), "label");
        check_index(e.next, states_.size(), "state");
      }
    });
  }
}

Modality GenerativeCoalgebra::modality() const {
  return kind_ == MonadKind::Pow ? Modality::Join : Modality::Expect;
}

const MonadValue<Move<StateId>>& GenerativeCoalgebra::step(StateId x) const {
  check_index(x, states_.size(), "state");
  return transitions_[x];
}

std::string show(const TreeStep& s) {
  std::string out = "f" + std::to_string(s.symbol) + "(";
  for (std::size_t i = 0; i < s.children.size(); ++i) out += (i ? "," : "") + show(s.children[i]);
  return out + ")";
}

TreeCoalgebra::TreeCoalgebra(ElemUniverse states, RankedAlphabet signature, Modality modality,
                             std::vector<MonadValue<TreeStep>> transitions)
    : states_(std::move(states)),
      signature_(std::move(signature)),
      modality_(modality),
      transitions_(std::move(transitions)) {
  if (signature_.arity.size() != signature_.symbols.size())
    throw Error(ErrorKind::ShapeMismatch, "signature arity table does not match its symbols");
  if (transitions_.size() != states_.size()) throw Error(ErrorKind::ShapeMismatch, "transition map is not total");
  for (const auto& v : transitions_) {
    check_kind(kind(), v.kind(), "transition");
    for_each_element(v, [&](const TreeStep& s) {
      check_index(s.symbol, signature_.size(), "symbol");
      if (s.children.size() != signature_.arity[s.symbol])
        throw Error(ErrorKind::ShapeMismatch, "symbol " + signature_.symbols.name(s.symbol) + " has arity " +
                                                  std::to_string(signature_.arity[s.symbol]));
      for (StateId y : s.children) check_index(y, states_.size(), "state");
    });
  }
}

const MonadValue<TreeStep>& TreeCoalgebra::step(StateId x) const {
  check_index(x, states_.size(), "state");
  return transitions_[x];
}

GeneralizedCoalgebra::GeneralizedCoalgebra(ElemUniverse states, ElemUniverse alphabet, Modality modality,
                                           std::vector<GeneralizedStep> steps)
    : states_(std::move(states)), alphabet_(std::move(alphabet)), modality_(modality), steps_(std::move(steps)) {
  require_monad(kind(), "generalized coalgebra");
  if (steps_.size() != states_.size()) throw Error(ErrorKind::ShapeMismatch, "step map is not total");
  for (const auto& s : steps_) {
    if (const auto* lang = std::get_if<TruncatedLanguage>(&s)) {
      if (lang->alphabet_size() != alphabet_.size() || lang->carrier() != carrier())
        throw Error(ErrorKind::ShapeMismatch, "semantic state language over a different alphabet or carrier");
      continue;
    }
    const auto& obs = std::get<Observation<MonadValue<StateId>>>(s);
    if (!in_carrier(carrier(), obs.output)) throw Error(ErrorKind::InvalidValue, "output off carrier");
    if (obs.successors.size() != alphabet_.size())
      throw Error(ErrorKind::ShapeMismatch, "transitions not total on the alphabet");
    for (const auto& v : obs.successors) check_state_value(v, kind(), states_.size(), "transition");
  }
}

GeneralizedCoalgebra GeneralizedCoalgebra::from_moore(const MooreCoalgebra& m) {
  std::vector<GeneralizedStep> steps;
  for (StateId x = 0; x < m.states().size(); ++x)
    steps.emplace_back(Observation<MonadValue<StateId>>{m.output(x), m.transitions()[x]});
  return GeneralizedCoalgebra(m.states(), m.alphabet(), m.modality(), std::move(steps));
}

const GeneralizedStep& GeneralizedCoalgebra::step(StateId x) const {
  check_index(x, states_.size(), "state");
  return steps_[x];
}

MooreCoalgebra moore_of_generative(const GenerativeCoalgebra& g) {
  if (g.terminals().size() != 1)
    throw Error(ErrorKind::Unsupported, "the language view needs exactly one terminal symbol");
  std::vector<OmegaValue> output;
  std::vector<std::vector<MonadValue<StateId>>> next;
  for (StateId x = 0; x < g.states().size(); ++x) {
    auto obs = rho2_generative(g.step(x), g.labels().size());
    output.push_back(std::move(obs.output));
    next.push_back(std::move(obs.successors));
  }
  return MooreCoalgebra(g.states(), g.labels(), g.modality(), std::move(output), std::move(next));
}

}  // namespace cotrace
