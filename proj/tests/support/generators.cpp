#include "generators.hpp"

#include <algorithm>
#include <numeric>

namespace cotrace::testing {

Rational Gen::grid_weight() {
  static const Rational grid[] = {Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1)};
  return grid[below(5)];
}

OmegaValue Gen::omega(OmegaCarrier c) {
  if (c == OmegaCarrier::Bool) return chance(1, 2);
  return grid_weight();
}

namespace {

/// A random subdistribution over `pool`, support at most 3.
template <class E>
MonadValue<E> random_subdist(Gen& g, const std::vector<E>& pool) {
  std::vector<std::size_t> idx(pool.size());
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t k = g.below(std::min<std::size_t>(3, pool.size()) + 1);
  std::vector<std::pair<E, Rational>> entries;
  Rational total;
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(idx[i], idx[i + g.below(pool.size() - i)]);
    entries.emplace_back(pool[idx[i]], g.grid_weight());
    total += entries.back().second;
  }
  if (total > Rational(1))
    for (auto& e : entries) e.second /= total;
  return MonadValue<E>::subdist(std::move(entries));
}

template <class E>
MonadValue<E> random_set(Gen& g, const std::vector<E>& pool, std::size_t num, std::size_t den) {
  std::vector<E> out;
  for (const auto& e : pool)
    if (g.chance(num, den)) out.push_back(e);
  return MonadValue<E>::pow(std::move(out));
}

std::vector<StateId> all_states(std::size_t n) {
  std::vector<StateId> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

MooreCoalgebra random_moore(Gen& g, Modality alg, MachineShape shape) {
  const std::size_t n = g.between(1, shape.max_states);
  const std::size_t a = g.between(1, shape.max_letters);
  const auto xs = all_states(n);
  std::vector<OmegaValue> out;
  std::vector<std::vector<MonadValue<StateId>>> next(n);
  for (std::size_t x = 0; x < n; ++x) {
    out.push_back(g.omega(carrier_of(alg)));
    for (std::size_t l = 0; l < a; ++l)
      next[x].push_back(kind_of(alg) == MonadKind::Pow ? random_set(g, xs, 2, 5) : random_subdist(g, xs));
  }
  return MooreCoalgebra(ElemUniverse::indexed("x", n), ElemUniverse::indexed("a", a), alg, std::move(out),
                        std::move(next));
}

GenerativeCoalgebra random_generative(Gen& g, MonadKind kind, MachineShape shape) {
  const std::size_t n = g.between(1, shape.max_states);
  const std::size_t a = g.between(1, shape.max_letters);
  std::vector<Move<StateId>> moves{Terminal{0}};
  for (LetterId l = 0; l < a; ++l)
    for (StateId y = 0; y < n; ++y) moves.push_back(Emit<StateId>{l, y});
  std::vector<MonadValue<Move<StateId>>> c;
  for (std::size_t x = 0; x < n; ++x)
    c.push_back(kind == MonadKind::Pow ? random_set(g, moves, 1, 4) : random_subdist(g, moves));
  return GenerativeCoalgebra(ElemUniverse::indexed("x", n), ElemUniverse::indexed("a", a), ElemUniverse({"✓"}), kind,
                             std::move(c));
}

TreeCoalgebra random_tree_automaton(Gen& g, std::size_t max_states) {
  const std::size_t symbols = g.between(1, 2);
  std::vector<std::size_t> arity{0};
  if (symbols == 2) arity.push_back(g.between(0, 2));
  if (g.chance(1, 2)) std::reverse(arity.begin(), arity.end());
  const std::size_t n = g.between(1, max_states);

  std::vector<TreeStep> steps;
  for (Elem s = 0; s < symbols; ++s) {
    std::vector<std::vector<StateId>> tuples{{}};
    for (std::size_t i = 0; i < arity[s]; ++i) {
      std::vector<std::vector<StateId>> longer;
      for (const auto& t : tuples)
        for (StateId y = 0; y < n; ++y) {
          longer.push_back(t);
          longer.back().push_back(y);
        }
      tuples = std::move(longer);
    }
    for (auto& t : tuples) steps.push_back(TreeStep{s, std::move(t)});
  }
  std::vector<MonadValue<TreeStep>> c;
  for (std::size_t x = 0; x < n; ++x) c.push_back(random_set(g, steps, 1, 3));
  RankedAlphabet sig{ElemUniverse::indexed("f", symbols), arity};
  return TreeCoalgebra(ElemUniverse::indexed("x", n), sig, Modality::Join, std::move(c));
}

IOSystem random_io(Gen& g, IOMode mode, std::size_t max_states) {
  const std::size_t n = g.between(1, max_states);
  const std::size_t ops = g.between(1, 2);
  IOSignature sig{ElemUniverse::indexed("k", ops), {}};
  for (std::size_t k = 0; k < ops; ++k) sig.arities.push_back(ElemUniverse::indexed("i", g.between(0, 2)));
  if (mode == IOMode::Generative) {
    std::vector<std::vector<OutputTransition>> c(n);
    for (auto& row : c) {
      const std::size_t count = g.below(3);
      for (std::size_t t = 0; t < count; ++t) {
        OutputTransition tr{static_cast<Elem>(g.below(ops)), {}};
        for (std::size_t i = 0; i < sig.arity(tr.op); ++i) tr.continuations.push_back(static_cast<StateId>(g.below(n)));
        row.push_back(std::move(tr));
      }
    }
    return IOSystem::generative(ElemUniverse::indexed("x", n), sig, std::move(c));
  }
  std::vector<std::vector<std::vector<AnswerTransition>>> c(n, std::vector<std::vector<AnswerTransition>>(ops));
  for (auto& row : c)
    for (Elem k = 0; k < ops; ++k)
      for (Elem i = 0; i < sig.arity(k); ++i)
        for (StateId y = 0; y < n; ++y)
          if (g.chance(1, 4)) row[k].push_back(AnswerTransition{i, y});
  return IOSystem::reactive(ElemUniverse::indexed("x", n), sig, std::move(c));
}

GeneralizedCoalgebra graft_languages(Gen& g, const MooreCoalgebra& m, std::size_t depth) {
  std::vector<GeneralizedStep> steps;
  const std::size_t a = m.alphabet().size();
  for (StateId x = 0; x < m.states().size(); ++x) {
    if (g.chance(1, 3)) {
      std::vector<OmegaValue> values;
      for (std::size_t i = 0; i < word_count(a, depth); ++i) values.push_back(g.omega(m.carrier()));
      steps.emplace_back(TruncatedLanguage(a, depth, m.carrier(), std::move(values)));
    } else {
      steps.emplace_back(Observation<MonadValue<StateId>>{m.output(x), m.transitions()[x]});
    }
  }
  return GeneralizedCoalgebra(m.states(), m.alphabet(), m.modality(), std::move(steps));
}

}  // namespace cotrace::testing
