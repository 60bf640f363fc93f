#include <map>
#include <optional>

#include "cotrace/engines.hpp"

namespace cotrace {

namespace {

class WordLogic {
 public:
  WordLogic(const MooreCoalgebra& m, const Word& w)
      : m_(m), w_(w), memo_((w.size() + 1) * m.states().size()) {}

  OmegaValue eval(StateId x, std::size_t i) {
    (void)m_.output(x);
    auto& slot = memo_[i * m_.states().size() + x];
    if (!slot) {
      if (i == w_.size())
        slot = m_.output(x);
      else
        slot = algebra_eval(m_.modality(), fmap([&](StateId y) { return eval(y, i + 1); }, m_.next(x, w_[i])));
    }
    return *slot;
  }

 private:
  const MooreCoalgebra& m_;
  const Word& w_;
  std::vector<std::optional<OmegaValue>> memo_;
};

class GenerativeLogic {
 public:
  GenerativeLogic(const GenerativeCoalgebra& g, const Word& w)
      : g_(g), w_(w), memo_((w.size() + 1) * g.states().size()) {
    for (LetterId a : w_)
      if (a >= g_.labels().size()) throw Error(ErrorKind::UnknownSymbol, "label " + std::to_string(a));
  }

  OmegaValue eval(StateId x, std::size_t i) {
    const auto& step = g_.step(x);
    auto& slot = memo_[i * g_.states().size() + x];
    if (slot) return *slot;
    const OmegaValue top = omega_top(g_.carrier());
    const OmegaValue bottom = omega_bottom(g_.carrier());
    auto matched = fmap(
        [&](const Move<StateId>& m) -> OmegaValue {
          if (std::holds_alternative<Terminal>(m)) return i == w_.size() ? top : bottom;
          const auto& e = std::get<Emit<StateId>>(m);
          return i < w_.size() && e.label == w_[i] ? eval(e.next, i + 1) : bottom;
        },
        step);
    slot = algebra_eval(g_.modality(), matched);
    return *slot;
  }

 private:
  const GenerativeCoalgebra& g_;
  const Word& w_;
  std::vector<std::optional<OmegaValue>> memo_;
};

void check_tree(const RankedAlphabet& sig, const Tree& t) {
  if (t.symbol >= sig.size()) throw Error(ErrorKind::UnknownSymbol, "symbol " + std::to_string(t.symbol));
  if (t.children.size() != sig.arity[t.symbol])
    throw Error(ErrorKind::ShapeMismatch, "symbol " + sig.symbols.name(t.symbol) + " applied to " +
                                              std::to_string(t.children.size()) + " arguments, arity " +
                                              std::to_string(sig.arity[t.symbol]));
  for (const Tree& c : t.children) check_tree(sig, c);
}

class TreeLogic {
 public:
  explicit TreeLogic(const TreeCoalgebra& c) : c_(c) {}

  OmegaValue eval(StateId x, const Tree& t) {
    const auto key = std::make_pair(x, &t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const OmegaValue top = omega_top(c_.carrier());
    const OmegaValue bottom = omega_bottom(c_.carrier());
    auto matched = fmap(
        [&](const TreeStep& s) -> OmegaValue {
          if (s.symbol != t.symbol) return bottom;
          OmegaValue all = top;
          for (std::size_t i = 0; i < s.children.size(); ++i)
            all = omega_meet(all, eval(s.children[i], t.children[i]));
          return all;
        },
        c_.step(x));
    OmegaValue v = algebra_eval(c_.modality(), matched);
    memo_.emplace(key, v);
    return v;
  }

 private:
  const TreeCoalgebra& c_;
  std::map<std::pair<StateId, const Tree*>, OmegaValue> memo_;
};

void require_strange_shape(const GenerativeCoalgebra& g) {
  if (g.kind() != MonadKind::Pow || g.labels().size() != 1 || g.terminals().size() != 1)
    throw Error(ErrorKind::Unsupported, "the strange logic needs X -> Pow(X + 1): Pow, one label, one terminal");
}

}  // namespace

OmegaValue logic_eval_word(const MooreCoalgebra& m, StateId x, const Word& w) { return WordLogic(m, w).eval(x, 0); }

TruncatedLanguage logic_language_word(const MooreCoalgebra& m, StateId x, std::size_t depth,
                                      EnumerationGuard guard) {
  (void)m.output(x);
  const std::size_t n = m.alphabet().size();
  const auto words = enumerate_words(n, depth, guard);
  // table[j][y] = log(y)(words[j]); a word's suffix precedes it in the order.
  std::vector<std::vector<OmegaValue>> table;
  table.reserve(words.size());
  for (const Word& w : words) {
    std::vector<OmegaValue> row;
    row.reserve(m.states().size());
    if (w.empty()) {
      row = m.outputs();
    } else {
      const auto& tail = table[word_index(Word(w.begin() + 1, w.end()), n)];
      for (StateId y = 0; y < m.states().size(); ++y)
        row.push_back(algebra_eval(m.modality(), fmap([&](StateId z) { return tail[z]; }, m.next(y, w.front()))));
    }
    table.push_back(std::move(row));
  }
  std::vector<OmegaValue> values;
  values.reserve(words.size());
  for (const auto& row : table) values.push_back(row[x]);
  return TruncatedLanguage(n, depth, m.carrier(), std::move(values));
}

OmegaValue logic_eval_tree(const TreeCoalgebra& c, StateId x, const Tree& tree) {
  check_tree(c.signature(), tree);
  return TreeLogic(c).eval(x, tree);
}

TruncatedTreeLanguage logic_language_tree(const TreeCoalgebra& c, StateId x, std::size_t depth,
                                          EnumerationGuard guard) {
  auto trees = enumerate_trees(c.signature(), depth, guard);
  TreeLogic logic(c);
  std::vector<OmegaValue> values;
  values.reserve(trees.size());
  for (const Tree& t : trees) values.push_back(logic.eval(x, t));
  return TruncatedTreeLanguage(c.signature(), depth, c.carrier(), std::move(trees), std::move(values));
}

OmegaValue logic_eval_generative(const GenerativeCoalgebra& g, StateId x, const Word& w) {
  return GenerativeLogic(g, w).eval(x, 0);
}

TruncatedLanguage logic_language_generative(const GenerativeCoalgebra& g, StateId x, std::size_t depth,
                                            EnumerationGuard guard) {
  return TruncatedLanguage::tabulate(
      g.labels().size(), depth, g.carrier(), [&](const Word& w) { return logic_eval_generative(g, x, w); }, guard);
}

bool logic_eval_strange(const GenerativeCoalgebra& g, StateId x, std::size_t n) {
  require_strange_shape(g);
  const std::size_t states = g.states().size();
  (void)g.step(x);
  // value[k][y] = log(y)(k), built upwards from k = 0.
  std::vector<bool> prev(states), cur(states);
  for (std::size_t k = 0; k <= n; ++k) {
    for (StateId y = 0; y < states; ++y) {
      bool v = false;
      for (const auto& m : g.step(y).elements()) {
        if (std::holds_alternative<Terminal>(m) || (k > 0 && prev[std::get<Emit<StateId>>(m).next])) {
          v = true;
          break;
        }
      }
      cur[y] = v;
    }
    std::swap(prev, cur);
  }
  return prev[x];
}

TruncatedLanguage logic_language_strange(const GenerativeCoalgebra& g, StateId x, std::size_t depth) {
  std::vector<OmegaValue> values;
  for (std::size_t n = 0; n <= depth; ++n) values.emplace_back(logic_eval_strange(g, x, n));
  return TruncatedLanguage(1, depth, OmegaCarrier::Bool, std::move(values));
}

}  // namespace cotrace
