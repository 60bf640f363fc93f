#include "cotrace/laws.hpp"

namespace cotrace {

const std::vector<Rational>& InputSampler::weight_grid() {
  static const std::vector<Rational> grid{Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1)};
  return grid;
}

std::vector<OmegaValue> InputSampler::omegas(OmegaCarrier c) {
  if (c == OmegaCarrier::Bool) return {false, true};
  std::vector<OmegaValue> out;
  for (const auto& w : weight_grid()) out.emplace_back(w);
  return out;
}

std::vector<Elem> carrier_elements(std::size_t n) {
  std::vector<Elem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Elem>(i);
  return out;
}

std::string show(const Pred& p) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 32; ++i) {
    if (!p.test(i)) continue;
    out += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::vector<Pred> all_predicates(std::size_t n) {
  if (n > 3) throw Error(ErrorKind::Unsupported, "predicate spaces are exhausted only on carriers of size <= 3");
  std::vector<Pred> out;
  for (std::uint32_t b = 0; b < (1u << n); ++b) out.push_back(Pred{b});
  return out;
}

namespace {

/// tau_X : T(2^X) -> 2^X, pointwise evaluation with `alg`.
Pred tau(Modality alg, const MonadValue<Pred>& s, std::size_t width) {
  Pred out;
  for (std::size_t i = 0; i < width; ++i) {
    auto column = fmap([i](const Pred& p) -> OmegaValue { return p.test(i); }, s);
    if (std::get<bool>(algebra_eval(alg, column))) out.bits |= 1u << i;
  }
  return out;
}

/// The iso 2 x (2^X)^A -> 2^(A x X + 1).
Pred delta_moore(const Observation<Pred>& o, std::size_t n) {
  Pred out;
  for (std::size_t a = 0; a < o.successors.size(); ++a) out.bits |= o.successors[a].bits << (a * n);
  if (std::get<bool>(o.output)) out.bits |= 1u << (o.successors.size() * n);
  return out;
}

void require_small(std::size_t width) {
  if (width > 31) throw Error(ErrorKind::Unsupported, "predicate carrier too large");
}

}  // namespace

LawReport check_pentagon_em_logic(const PentagonEmConfig& config, const std::vector<std::size_t>& carriers,
                                  const LawOptions& opt) {
  for (Modality m : {config.kappa_alg, config.tau_alg})
    if (kind_of(m) != MonadKind::Pow)
      throw Error(ErrorKind::Unsupported, "the em pentagon is checked for Pow over 2 only");
  LawReport r{"pentagon-em-logic", carriers, true, 0, std::nullopt};
  InputSampler sampler(opt);
  const std::size_t alphabet = config.alphabet;
  for (std::size_t n : carriers) {
    require_small(alphabet * n + 1);
    std::vector<Observation<Pred>> bgx;
    for (bool o : {false, true})
      for (auto& g : all_functions(all_predicates(n), alphabet)) bgx.push_back({o, std::move(g)});
    const auto inputs = sampler.values(MonadKind::Pow, bgx);
    const std::size_t wide = alphabet * n + 1;
    auto lhs = [config, n, alphabet](const MonadValue<Observation<Pred>>& s) {
      auto k = kappa_moore(config.kappa_alg, s, alphabet);
      return delta_moore(map_observation([&](const MonadValue<Pred>& t) { return tau(config.tau_alg, t, n); }, k), n);
    };
    auto rhs = [config, n, wide](const MonadValue<Observation<Pred>>& s) {
      return tau(config.tau_alg, fmap([n](const Observation<Pred>& o) { return delta_moore(o, n); }, s), wide);
    };
    if (!detail::check_inputs(r, "|X|=" + std::to_string(n), inputs, lhs, rhs)) return r;
  }
  return r;
}

PentagonKlConfig word_logic_config(std::size_t labels) {
  return {"word", labels, [](const Move<Pred>& m, std::size_t n, std::size_t sigma) {
            if (std::holds_alternative<Terminal>(m)) return Pred{1u << (sigma * n)};
            const auto& e = std::get<Emit<Pred>>(m);
            return Pred{e.next.bits << (e.label * n)};
          }};
}

PentagonKlConfig strange_logic_config() {
  return {"strange", 1, [](const Move<Pred>& m, std::size_t n, std::size_t) {
            if (std::holds_alternative<Terminal>(m)) return Pred{(1u << (n + 1)) - 1};
            return Pred{std::get<Emit<Pred>>(m).next.bits};
          }};
}

LawReport check_pentagon_kl_logic(const PentagonKlConfig& config, const std::vector<std::size_t>& carriers,
                                  const LawOptions& opt) {
  LawReport r{"pentagon-kl-logic/" + config.name, carriers, true, 0, std::nullopt};
  InputSampler sampler(opt);
  const std::size_t labels = config.labels;
  for (std::size_t n : carriers) {
    require_small(labels * n + 1);
    const auto inputs = all_moves(labels, 1, sampler.values(MonadKind::Pow, all_predicates(n)));
    const std::size_t wide = labels * n + 1;
    auto lhs = [config, n, labels, wide](const Move<MonadValue<Pred>>& u) {
      auto stepped = fmap([&](const Move<Pred>& m) { return config.delta(m, n, labels); },
                          lambda_generative(MonadKind::Pow, u));
      return tau(Modality::Join, stepped, wide);
    };
    auto rhs = [config, n, labels](const Move<MonadValue<Pred>>& u) {
      return config.delta(map_move([n](const MonadValue<Pred>& s) { return tau(Modality::Join, s, n); }, u), n,
                          labels);
    };
    if (!detail::check_inputs(r, "|X|=" + std::to_string(n), inputs, lhs, rhs)) return r;
  }
  return r;
}

}  // namespace cotrace
