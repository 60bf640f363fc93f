#pragma once

// Pointwise verifiers for distributive laws, extension laws and the
// logic pentagons. The law under test is a callable, so mutated laws can be
// checked the same way as the canonical ones.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cotrace/functors.hpp"
#include "cotrace/modality.hpp"
#include "cotrace/monad.hpp"
#include "cotrace/show.hpp"

namespace cotrace {

struct Counterexample {
  std::string input;
  std::string lhs;
  std::string rhs;
  /// Recomputes both sides on the recorded input.
  std::function<std::pair<std::string, std::string>()> reevaluate;
};

struct LawReport {
  std::string law_name;
  std::vector<std::size_t> carrier_sizes;
  bool holds = true;
  std::size_t inputs_checked = 0;
  std::optional<Counterexample> counterexample;
};

struct LawOptions {
  std::uint64_t seed = 1;
  /// Pow input spaces with at most this many values are exhausted.
  std::size_t exhaustive_cap = 4096;
  /// Values drawn from a space that is not exhausted.
  std::size_t samples = 256;
  /// Support size of sampled values.
  std::size_t max_support = 3;
};

/// Seeded source of monad values. Pow spaces are enumerated when small,
/// otherwise sampled; SubDist values always use the weight grid
/// {0, 1/4, 1/3, 1/2, 1}, normalized when the mass exceeds 1.
class InputSampler {
 public:
  explicit InputSampler(const LawOptions& opt) : opt_(opt), rng_(opt.seed) {}

  std::size_t draw(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }

  static const std::vector<Rational>& weight_grid();
  static std::vector<OmegaValue> omegas(OmegaCarrier c);

  template <class E>
  std::vector<MonadValue<E>> values(MonadKind kind, const std::vector<E>& base) {
    require_monad(kind, "sampler");
    std::vector<MonadValue<E>> out;
    out.push_back(MonadValue<E>::empty(kind));
    const std::size_t n = base.size();
    if (kind == MonadKind::Pow && n < 20 && (std::size_t{1} << n) <= opt_.exhaustive_cap) {
      for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<E> set;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1) set.push_back(base[i]);
        out.push_back(MonadValue<E>::pow(std::move(set)));
      }
      return out;
    }
    for (std::size_t i = 0; i < n && out.size() < opt_.samples; ++i) out.push_back(unit(kind, base[i]));
    while (out.size() < opt_.samples + 1 && n > 0) {
      const std::size_t k = 1 + draw(std::min(opt_.max_support, n));
      std::vector<std::size_t> idx(n);
      for (std::size_t i = 0; i < n; ++i) idx[i] = i;
      for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + draw(n - i)]);
      if (kind == MonadKind::Pow) {
        std::vector<E> set;
        for (std::size_t i = 0; i < k; ++i) set.push_back(base[idx[i]]);
        out.push_back(MonadValue<E>::pow(std::move(set)));
      } else {
        const auto& grid = weight_grid();
        std::vector<std::pair<E, Rational>> entries;
        Rational total;
        for (std::size_t i = 0; i < k; ++i) {
          entries.emplace_back(base[idx[i]], grid[draw(grid.size())]);
          total += entries.back().second;
        }
        if (total > Rational(1))
          for (auto& e : entries) e.second /= total;
        out.push_back(MonadValue<E>::subdist(std::move(entries)));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  LawOptions opt_;
  std::mt19937_64 rng_;
};

/// All total functions {0..arity-1} -> codomain, as vectors.
template <class E>
std::vector<std::vector<E>> all_functions(const std::vector<E>& codomain, std::size_t arity) {
  std::vector<std::vector<E>> out{{}};
  for (std::size_t i = 0; i < arity; ++i) {
    std::vector<std::vector<E>> next;
    for (const auto& prefix : out)
      for (const auto& e : codomain) {
        next.push_back(prefix);
        next.back().push_back(e);
      }
    out = std::move(next);
  }
  return out;
}

/// All of A(E) = Sigma x E + S.
template <class E>
std::vector<Move<E>> all_moves(std::size_t labels, std::size_t terminals, const std::vector<E>& base) {
  std::vector<Move<E>> out;
  for (Elem s = 0; s < terminals; ++s) out.push_back(Terminal{s});
  for (LetterId a = 0; a < labels; ++a)
    for (const auto& e : base) out.push_back(Emit<E>{a, e});
  return out;
}

std::vector<Elem> carrier_elements(std::size_t n);

namespace detail {

template <class Input, class Lhs, class Rhs>
bool check_inputs(LawReport& r, const std::string& context, const std::vector<Input>& inputs, const Lhs& lhs,
                  const Rhs& rhs) {
  for (const auto& in : inputs) {
    ++r.inputs_checked;
    auto l = lhs(in);
    auto rv = rhs(in);
    if (!(l == rv)) {
      r.holds = false;
      r.counterexample = Counterexample{context + " at " + show(in), show(l), show(rv), [lhs, rhs, in] {
                                          return std::pair{show(lhs(in)), show(rhs(in))};
                                        }};
      return false;
    }
  }
  return true;
}

}  // namespace detail

// ---- Canonical laws as callables ------------------------------------------

struct CanonicalKappa {
  Modality alg;
  template <class X>
  Observation<MonadValue<X>> operator()(const MonadValue<Observation<X>>& v, std::size_t alphabet) const {
    return kappa_moore(alg, v, alphabet);
  }
};

struct CanonicalLambda {
  MonadKind kind;
  template <class X>
  MonadValue<Move<X>> operator()(const Move<MonadValue<X>>& m) const {
    return lambda_generative(kind, m);
  }
};

/// The closed-form extension TA => BT.
struct CanonicalRho2 {
  std::size_t alphabet;
  template <class X>
  Observation<MonadValue<X>> operator()(const MonadValue<Move<X>>& v) const {
    return rho2_generative(v, alphabet);
  }
};

/// The step A => BT of generative machines: (a,x) |-> (bottom, b |-> [b = a]
/// eta(x)), s |-> (top, b |-> empty).
struct CanonicalRho4 {
  MonadKind kind;
  std::size_t alphabet;
  template <class X>
  Observation<MonadValue<X>> operator()(const Move<X>& m) const {
    const OmegaCarrier c = omega_carrier_of(kind);
    Observation<MonadValue<X>> out{omega_bottom(c),
                                   std::vector<MonadValue<X>>(alphabet, MonadValue<X>::empty(kind))};
    if (std::holds_alternative<Terminal>(m)) {
      out.output = omega_top(c);
    } else {
      const auto& e = std::get<Emit<X>>(m);
      if (e.label >= alphabet) throw Error(ErrorKind::UnknownSymbol, "label " + std::to_string(e.label));
      out.successors[e.label] = unit(kind, e.next);
    }
    return out;
  }
};

/// The mate of a step rho4 : A => BT, extended along the free algebra:
/// rho2 = B(mu) . kappa . T(rho4).
template <class Rho4>
struct MateRho2 {
  Modality alg;
  std::size_t alphabet;
  Rho4 rho4;

  template <class X>
  Observation<MonadValue<X>> operator()(const MonadValue<Move<X>>& v) const {
    auto lifted = fmap([&](const Move<X>& m) { return rho4(m); }, v);
    auto flat = kappa_moore(alg, lifted, alphabet);
    return map_observation([](const MonadValue<MonadValue<X>>& tt) { return join(tt); }, flat);
  }
};

template <class Rho4>
MateRho2<Rho4> mate_rho2_of_rho4(MonadKind kind, std::size_t alphabet, Rho4 rho4) {
  require_monad(kind, "mate");
  return {kind == MonadKind::Pow ? Modality::Join : Modality::Expect, alphabet, std::move(rho4)};
}

// ---- Checkers ---------------------------------------------------------------

/// kappa . eta_B = B(eta) and kappa . mu_B = B(mu) . kappa_T . T(kappa).
template <class Kappa>
LawReport check_em_law(Modality alg, std::size_t alphabet, const std::vector<std::size_t>& carriers,
                       const LawOptions& opt, Kappa kappa) {
  const MonadKind kind = kind_of(alg);
  require_monad(kind, "em law");
  LawReport r{"em-law", carriers, true, 0, std::nullopt};
  InputSampler sampler(opt);
  for (std::size_t n : carriers) {
    const auto xs = carrier_elements(n);
    std::vector<Observation<Elem>> bx;
    for (const auto& w : InputSampler::omegas(carrier_of(alg)))
      for (auto& g : all_functions(xs, alphabet)) bx.push_back({w, std::move(g)});
    const std::string ctx = "|X|=" + std::to_string(n);

    auto unit_lhs = [kappa, kind, alphabet](const Observation<Elem>& b) {
      return kappa(unit(kind, b), alphabet);
    };
    auto unit_rhs = [kind](const Observation<Elem>& b) {
      return map_observation([kind](Elem x) { return unit(kind, x); }, b);
    };
    if (!detail::check_inputs(r, ctx + " unit", bx, unit_lhs, unit_rhs)) return r;

    const auto ttbx = sampler.values(kind, sampler.values(kind, bx));
    using V = MonadValue<MonadValue<Observation<Elem>>>;
    auto mult_lhs = [kappa, alphabet](const V& v) { return kappa(join(v), alphabet); };
    auto mult_rhs = [kappa, alphabet](const V& v) {
      auto inner = fmap([&](const MonadValue<Observation<Elem>>& t) { return kappa(t, alphabet); }, v);
      return map_observation([](const MonadValue<MonadValue<Elem>>& tt) { return join(tt); }, kappa(inner, alphabet));
    };
    if (!detail::check_inputs(r, ctx + " multiplication", ttbx, mult_lhs, mult_rhs)) return r;
  }
  return r;
}

/// lambda . A(eta) = eta_A and lambda . A(mu) = mu_A . T(lambda) . lambda_T.
template <class Lambda>
LawReport check_kl_law(MonadKind kind, std::size_t labels, std::size_t terminals,
                       const std::vector<std::size_t>& carriers, const LawOptions& opt, Lambda lambda) {
  require_monad(kind, "kl law");
  LawReport r{"kl-law", carriers, true, 0, std::nullopt};
  InputSampler sampler(opt);
  for (std::size_t n : carriers) {
    const auto xs = carrier_elements(n);
    const std::string ctx = "|X|=" + std::to_string(n);

    auto unit_lhs = [lambda, kind](const Move<Elem>& m) {
      return lambda(map_move([kind](Elem x) { return unit(kind, x); }, m));
    };
    auto unit_rhs = [kind](const Move<Elem>& m) { return unit(kind, m); };
    if (!detail::check_inputs(r, ctx + " unit", all_moves(labels, terminals, xs), unit_lhs, unit_rhs)) return r;

    const auto ttx = sampler.values(kind, sampler.values(kind, xs));
    using U = Move<MonadValue<MonadValue<Elem>>>;
    auto mult_lhs = [lambda](const U& m) {
      return lambda(map_move([](const MonadValue<MonadValue<Elem>>& tt) { return join(tt); }, m));
    };
    auto mult_rhs = [lambda](const U& m) {
      return join(fmap([&](const Move<MonadValue<Elem>>& inner) { return lambda(inner); }, lambda(m)));
    };
    if (!detail::check_inputs(r, ctx + " multiplication", all_moves(labels, terminals, ttx), mult_lhs, mult_rhs))
      return r;
  }
  return r;
}

/// rho2 . mu_A = B(mu) . kappa . T(rho2).
template <class Rho2>
LawReport check_extension_square(MonadKind kind, std::size_t labels, std::size_t terminals,
                                 const std::vector<std::size_t>& carriers, const LawOptions& opt, Rho2 rho2) {
  require_monad(kind, "extension square");
  const Modality alg = kind == MonadKind::Pow ? Modality::Join : Modality::Expect;
  LawReport r{"extension-square", carriers, true, 0, std::nullopt};
  InputSampler sampler(opt);
  for (std::size_t n : carriers) {
    const auto tta =
        sampler.values(kind, sampler.values(kind, all_moves(labels, terminals, carrier_elements(n))));
    using V = MonadValue<MonadValue<Move<Elem>>>;
    auto lhs = [rho2](const V& v) { return rho2(join(v)); };
    auto rhs = [rho2, alg, labels](const V& v) {
      auto lifted = fmap([&](const MonadValue<Move<Elem>>& t) { return rho2(t); }, v);
      return map_observation([](const MonadValue<MonadValue<Elem>>& tt) { return join(tt); },
                             kappa_moore(alg, lifted, labels));
    };
    if (!detail::check_inputs(r, "|X|=" + std::to_string(n), tta, lhs, rhs)) return r;
  }
  return r;
}

/// B(mu) . U(rho2)T = U(rho2) . mu . T(lambda) on T(A(T(X))).
template <class Rho2, class Lambda>
LawReport check_extension_requirement(MonadKind kind, std::size_t labels, std::size_t terminals,
                                      const std::vector<std::size_t>& carriers, const LawOptions& opt, Rho2 rho2,
                                      Lambda lambda) {
  require_monad(kind, "extension requirement");
  LawReport r{"extension-requirement", carriers, true, 0, std::nullopt};
  InputSampler sampler(opt);
  for (std::size_t n : carriers) {
    const auto tx = sampler.values(kind, carrier_elements(n));
    const auto tatx = sampler.values(kind, all_moves(labels, terminals, tx));
    using V = MonadValue<Move<MonadValue<Elem>>>;
    auto lhs = [rho2](const V& v) {
      return map_observation([](const MonadValue<MonadValue<Elem>>& tt) { return join(tt); }, rho2(v));
    };
    auto rhs = [rho2, lambda](const V& v) {
      return rho2(join(fmap([&](const Move<MonadValue<Elem>>& m) { return lambda(m); }, v)));
    };
    if (!detail::check_inputs(r, "|X|=" + std::to_string(n), tatx, lhs, rhs)) return r;
  }
  return r;
}

// ---- Logic pentagons (Pow, Omega = 2) ---------------------------------------

/// A predicate on a carrier of at most 32 elements, as a bit set. On
/// L(X) = A x X + 1 bit a*|X| + x stands for (a, x) and bit |A|*|X| for the
/// constant.
struct Pred {
  std::uint32_t bits = 0;

  bool test(std::size_t i) const { return bits >> i & 1u; }
  friend auto operator<=>(const Pred&, const Pred&) = default;
  friend bool operator==(const Pred&, const Pred&) = default;
};

std::string show(const Pred& p);

/// All 2^n predicates on an n-element carrier (n <= 3).
std::vector<Pred> all_predicates(std::size_t n);

struct PentagonEmConfig {
  Modality kappa_alg = Modality::Join;  // builds kappa
  Modality tau_alg = Modality::Join;    // builds tau = the modality on G
  std::size_t alphabet = 1;
};

/// (delta . B(tau)) . kappa_G = tau_L . T(delta) where delta(o, (phi_a)) is
/// the predicate (a,x) |-> phi_a(x), * |-> o.
LawReport check_pentagon_em_logic(const PentagonEmConfig& config, const std::vector<std::size_t>& carriers,
                                  const LawOptions& opt);

/// delta : A G => G L for A = L = Sigma x (-) + 1, arguments (move, |X|, |Sigma|).
using LogicStep = std::function<Pred(const Move<Pred>&, std::size_t, std::size_t)>;

struct PentagonKlConfig {
  std::string name;
  std::size_t labels = 1;
  LogicStep delta;
};

/// delta((a, phi)) = {(a, x) | x in phi}, delta(*) = {*}.
PentagonKlConfig word_logic_config(std::size_t labels);
/// One label; delta(phi) = phi on X, delta(*) = everything.
PentagonKlConfig strange_logic_config();

/// (tau_L . T(delta)) . lambda_G = delta . A(tau), tau the join.
LawReport check_pentagon_kl_logic(const PentagonKlConfig& config, const std::vector<std::size_t>& carriers,
                                  const LawOptions& opt);

}  // namespace cotrace
