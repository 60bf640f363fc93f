#pragma once

// Deliberately broken laws. Each checker must reject its mutation with a
// counterexample that survives re-evaluation.

#include <cotrace/laws.hpp>
#include <cotrace/strategies.hpp>

namespace cotrace::testing {

/// kappa that forgets the pi_1 component and always outputs bottom.
struct OutputDroppingKappa {
  Modality alg;
  template <class X>
  Observation<MonadValue<X>> operator()(const MonadValue<Observation<X>>& v, std::size_t alphabet) const {
    auto out = kappa_moore(alg, v, alphabet);
    out.output = omega_bottom(carrier_of(alg));
    return out;
  }
};

/// lambda sending the terminal injection to the empty value instead of eta.
struct TerminalDroppingLambda {
  MonadKind kind;
  template <class X>
  MonadValue<Move<X>> operator()(const Move<MonadValue<X>>& m) const {
    if (std::holds_alternative<Terminal>(m)) return MonadValue<Move<X>>::empty(kind);
    return lambda_generative(kind, m);
  }
};

/// rho2 with its output bit flipped (Pow only).
struct OutputFlippingRho2 {
  std::size_t alphabet;
  template <class X>
  Observation<MonadValue<X>> operator()(const MonadValue<Move<X>>& v) const {
    auto out = rho2_generative(v, alphabet);
    out.output = !std::get<bool>(out.output);
    return out;
  }
};

/// Strange delta with delta(*) = bottom. The pentagon still commutes: the
/// terminal case is eta on both sides whatever delta(*) is.
inline PentagonKlConfig strange_bottom_terminal_config() {
  auto c = strange_logic_config();
  c.name = "strange-bottom-terminal";
  c.delta = [](const Move<Pred>& m, std::size_t, std::size_t) {
    if (std::holds_alternative<Terminal>(m)) return Pred{0};
    return Pred{std::get<Emit<Pred>>(m).next.bits};
  };
  return c;
}

/// Strange delta that also sets * on emitting moves; not strict, so the
/// pentagon fails at (label, empty set).
inline PentagonKlConfig strange_non_strict_config() {
  auto c = strange_logic_config();
  c.name = "strange-non-strict";
  c.delta = [](const Move<Pred>& m, std::size_t n, std::size_t) {
    if (std::holds_alternative<Terminal>(m)) return Pred{(1u << (n + 1)) - 1};
    return Pred{std::get<Emit<Pred>>(m).next.bits | (1u << n)};
  };
  return c;
}

/// Successor strategies computed one operation too deep.
inline Strategy off_by_one_traces(const IOSystem& sys, StateId x, std::size_t bound) {
  return io_traces(sys, x, bound + 1);
}

}  // namespace cotrace::testing
