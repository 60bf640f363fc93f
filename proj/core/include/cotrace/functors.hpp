#pragma once

#include <compare>
#include <cstddef>
#include <variant>
#include <vector>

#include "cotrace/modality.hpp"
#include "cotrace/monad.hpp"
#include "cotrace/universe.hpp"

namespace cotrace {

/// An element of B(Y) = Omega x Y^A: an output value and one successor per
/// letter.
template <class Y>
struct Observation {
  OmegaValue output;
  std::vector<Y> successors;

  friend auto operator<=>(const Observation&, const Observation&) = default;
  friend bool operator==(const Observation&, const Observation&) = default;
};

/// Right injection into A(Y) = Sigma x Y + S.
struct Terminal {
  Elem id = 0;

  friend auto operator<=>(const Terminal&, const Terminal&) = default;
};

/// Left injection into A(Y) = Sigma x Y + S.
template <class Y>
struct Emit {
  LetterId label = 0;
  Y next{};

  friend auto operator<=>(const Emit&, const Emit&) = default;
  friend bool operator==(const Emit&, const Emit&) = default;
};

template <class Y>
using Move = std::variant<Terminal, Emit<Y>>;

/// B(f) for B(Y) = Omega x Y^A.
template <class Y, class F>
auto map_observation(F&& f, const Observation<Y>& obs) {
  using Z = std::decay_t<std::invoke_result_t<F&, const Y&>>;
  Observation<Z> out{obs.output, {}};
  out.successors.reserve(obs.successors.size());
  for (const auto& y : obs.successors) out.successors.push_back(f(y));
  return out;
}

/// A(f) for A(Y) = Sigma x Y + S.
template <class Y, class F>
auto map_move(F&& f, const Move<Y>& m) {
  using Z = std::decay_t<std::invoke_result_t<F&, const Y&>>;
  return std::visit(
      [&](const auto& v) -> Move<Z> {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Terminal>)
          return v;
        else
          return Emit<Z>{v.label, f(v.next)};
      },
      m);
}

/// The EM-law TB => BT for B = Omega x (-)^A built from an algebra t:
/// kappa = (t x st) . <T pi_1, T pi_2>.
template <class X>
Observation<MonadValue<X>> kappa_moore(Modality alg, const MonadValue<Observation<X>>& v,
                                       std::size_t alphabet) {
  require_monad(v.kind(), "kappa");
  auto outputs = fmap([](const Observation<X>& o) { return o.output; }, v);
  auto transitions = fmap([](const Observation<X>& o) { return o.successors; }, v);
  return {algebra_eval(alg, outputs), strength(transitions, alphabet)};
}

/// The canonical Kleisli law A T => T A for A = Sigma x (-) + S:
/// [T inl . st, T inr . eta].
template <class X>
MonadValue<Move<X>> lambda_generative(MonadKind kind, const Move<MonadValue<X>>& m) {
  require_monad(kind, "lambda");
  if (const auto* t = std::get_if<Terminal>(&m)) return unit(kind, Move<X>{*t});
  const auto& e = std::get<Emit<MonadValue<X>>>(m);
  if (e.next.kind() != kind)
    throw Error(ErrorKind::KindMismatch, "lambda over a value of a different kind");
  return fmap([&](const X& x) { return Move<X>{Emit<X>{e.label, x}}; }, e.next);
}

/// Truth values matching a monad: 2 for Pow, [0,1] for SubDist.
inline OmegaCarrier omega_carrier_of(MonadKind kind) {
  require_monad(kind, "omega_carrier_of");
  return kind == MonadKind::Pow ? OmegaCarrier::Bool : OmegaCarrier::UnitInterval;
}

/// The extension rho2 : TA => BT in closed form. Pow:
/// S |-> (exists terminal in S, a |-> {x | (a,x) in S}); SubDist:
/// phi |-> (terminal mass of phi, a |-> x |-> phi(a,x)).
template <class X>
Observation<MonadValue<X>> rho2_generative(const MonadValue<Move<X>>& v, std::size_t alphabet) {
  require_monad(v.kind(), "rho2");
  Observation<MonadValue<X>> out;
  if (v.kind() == MonadKind::Pow) {
    bool terminates = false;
    std::vector<std::vector<X>> next(alphabet);
    for (const auto& m : v.elements()) {
      if (std::holds_alternative<Terminal>(m)) {
        terminates = true;
        continue;
      }
      const auto& e = std::get<Emit<X>>(m);
      if (e.label >= alphabet) throw Error(ErrorKind::UnknownSymbol, "label " + std::to_string(e.label));
      next[e.label].push_back(e.next);
    }
    out.output = terminates;
    for (auto& xs : next) out.successors.push_back(MonadValue<X>::pow(std::move(xs)));
    return out;
  }
  Rational halt;
  std::vector<std::vector<std::pair<X, Rational>>> next(alphabet);
  for (const auto& [m, p] : v.weights()) {
    if (std::holds_alternative<Terminal>(m)) {
      halt += p;
      continue;
    }
    const auto& e = std::get<Emit<X>>(m);
    if (e.label >= alphabet) throw Error(ErrorKind::UnknownSymbol, "label " + std::to_string(e.label));
    next[e.label].emplace_back(e.next, p);
  }
  out.output = halt;
  for (auto& xs : next) out.successors.push_back(MonadValue<X>::subdist(std::move(xs)));
  return out;
}

}  // namespace cotrace
