#include <catch_amalgamated.hpp>

#include <cotrace/laws.hpp>

#include "mutations.hpp"

using namespace cotrace;
using namespace cotrace::testing;

namespace {

const std::vector<std::size_t> kCarriers{0, 1, 2, 3};

void require_reproducible(const LawReport& r) {
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.counterexample.has_value());
  const auto& c = *r.counterexample;
  CHECK(c.lhs != c.rhs);
  const auto [lhs, rhs] = c.reevaluate();
  CHECK(lhs == c.lhs);
  CHECK(rhs == c.rhs);
}

void require_holds(const LawReport& r) {
  INFO(r.law_name << ": " << (r.counterexample ? r.counterexample->input : std::string("-")));
  CHECK(r.holds);
  CHECK_FALSE(r.counterexample.has_value());
  CHECK(r.inputs_checked > 0);
}

}  // namespace

TEST_CASE("EM-law for kappa", "[laws]") {
  const LawOptions opt;
  for (std::size_t alphabet = 0; alphabet <= 2; ++alphabet) {
    for (Modality alg : {Modality::Join, Modality::Meet, Modality::Expect}) {
      INFO("alphabet " << alphabet << ", " << to_string(alg));
      require_holds(check_em_law(alg, alphabet, kCarriers, opt, CanonicalKappa{alg}));
    }
  }
  CHECK(check_em_law(Modality::Join, 1, {1, 2}, opt, CanonicalKappa{Modality::Join}).holds);
  CHECK_THROWS_AS(check_em_law(Modality::JoinMeet, 1, {1}, opt, CanonicalKappa{Modality::JoinMeet}), Error);
}

TEST_CASE("EM-law rejects a kappa that drops the output", "[laws][mutation]") {
  for (Modality alg : {Modality::Join, Modality::Expect})
    require_reproducible(check_em_law(alg, 1, {1, 2}, LawOptions{}, OutputDroppingKappa{alg}));
}

TEST_CASE("Kl-law for lambda", "[laws]") {
  const LawOptions opt;
  for (MonadKind kind : {MonadKind::Pow, MonadKind::SubDist})
    for (std::size_t labels = 0; labels <= 2; ++labels)
      for (std::size_t terminals = 1; terminals <= 2; ++terminals) {
        INFO(to_string(kind) << " labels " << labels << " terminals " << terminals);
        require_holds(check_kl_law(kind, labels, terminals, kCarriers, opt, CanonicalLambda{kind}));
      }
}

TEST_CASE("Kl-law rejects a lambda that drops terminals", "[laws][mutation]") {
  for (MonadKind kind : {MonadKind::Pow, MonadKind::SubDist})
    require_reproducible(check_kl_law(kind, 1, 1, {1}, LawOptions{}, TerminalDroppingLambda{kind}));
}

TEST_CASE("Extension square and requirement for the canonical rho2", "[laws]") {
  const LawOptions opt;
  for (MonadKind kind : {MonadKind::Pow, MonadKind::SubDist})
    for (std::size_t labels = 0; labels <= 2; ++labels) {
      INFO(to_string(kind) << " labels " << labels);
      require_holds(check_extension_square(kind, labels, 1, kCarriers, opt, CanonicalRho2{labels}));
      require_holds(
          check_extension_requirement(kind, labels, 1, kCarriers, opt, CanonicalRho2{labels}, CanonicalLambda{kind}));
    }
}

TEST_CASE("Extension laws reject mutations", "[laws][mutation]") {
  require_reproducible(check_extension_square(MonadKind::Pow, 1, 1, {1}, LawOptions{}, OutputFlippingRho2{1}));
  for (MonadKind kind : {MonadKind::Pow, MonadKind::SubDist})
    require_reproducible(check_extension_requirement(kind, 1, 1, {1}, LawOptions{}, CanonicalRho2{1},
                                                     TerminalDroppingLambda{kind}));
}

TEST_CASE("The mate of rho4 extends it along the unit", "[laws][mate]") {
  for (MonadKind kind : {MonadKind::Pow, MonadKind::SubDist})
    for (std::size_t alphabet = 1; alphabet <= 2; ++alphabet) {
      const CanonicalRho4 rho4{kind, alphabet};
      const auto rho2 = mate_rho2_of_rho4(kind, alphabet, rho4);
      for (std::size_t n = 0; n <= 3; ++n)
        for (const auto& m : all_moves(alphabet, 1, carrier_elements(n))) CHECK(rho2(unit(kind, m)) == rho4(m));
    }
}

TEST_CASE("The mate of the canonical step is the closed-form rho2", "[laws][mate]") {
  LawOptions opt;
  for (MonadKind kind : {MonadKind::Pow, MonadKind::SubDist}) {
    InputSampler sampler(opt);
    const auto mate = mate_rho2_of_rho4(kind, 2, CanonicalRho4{kind, 2});
    for (const auto& v : sampler.values(kind, all_moves(2, 1, carrier_elements(2))))
      CHECK(mate(v) == rho2_generative(v, 2));
  }
}

TEST_CASE("rho2 on the nondeterministic example", "[laws][mate]") {
  using MV = MonadValue<Move<Elem>>;
  const auto rho2 = mate_rho2_of_rho4(MonadKind::Pow, 2, CanonicalRho4{MonadKind::Pow, 2});
  const auto out = rho2(MV::pow({Emit<Elem>{0, 0}, Terminal{0}}));
  CHECK(out.output == OmegaValue(true));
  CHECK(out.successors[0] == MonadValue<Elem>::pow({0}));
  CHECK(out.successors[1] == MonadValue<Elem>::pow({}));

  // A constant step sends the empty set to (bottom, empty).
  auto constant = [](const Move<Elem>&) {
    return Observation<MonadValue<Elem>>{false, {MonadValue<Elem>::pow({}), MonadValue<Elem>::pow({})}};
  };
  const auto c = mate_rho2_of_rho4(MonadKind::Pow, 2, constant)(MV::pow({}));
  CHECK(c.output == OmegaValue(false));
  CHECK(c.successors == std::vector<MonadValue<Elem>>{MonadValue<Elem>::pow({}), MonadValue<Elem>::pow({})});
}

TEST_CASE("EM logic pentagon", "[laws][pentagon]") {
  const LawOptions opt;
  for (std::size_t alphabet = 0; alphabet <= 2; ++alphabet) {
    INFO("alphabet " << alphabet);
    require_holds(check_pentagon_em_logic({Modality::Join, Modality::Join, alphabet}, kCarriers, opt));
    require_holds(check_pentagon_em_logic({Modality::Meet, Modality::Meet, alphabet}, kCarriers, opt));
  }
  CHECK(check_pentagon_em_logic({Modality::Join, Modality::Join, 1}, {0}, opt).holds);
  require_reproducible(check_pentagon_em_logic({Modality::Meet, Modality::Join, 1}, {1, 2}, opt));
  CHECK_THROWS_AS(check_pentagon_em_logic({Modality::Join, Modality::Join, 1}, {4}, opt), Error);
}

TEST_CASE("Kleisli logic pentagon", "[laws][pentagon]") {
  const LawOptions opt;
  for (std::size_t labels = 1; labels <= 2; ++labels) require_holds(check_pentagon_kl_logic(word_logic_config(labels), kCarriers, opt));
  require_holds(check_pentagon_kl_logic(strange_logic_config(), kCarriers, opt));
  // The terminal case is the unit on both sides, so delta(*) is unconstrained.
  require_holds(check_pentagon_kl_logic(strange_bottom_terminal_config(), kCarriers, opt));
  require_reproducible(check_pentagon_kl_logic(strange_non_strict_config(), kCarriers, opt));
  CHECK(check_pentagon_kl_logic(strange_non_strict_config(), kCarriers, opt).law_name ==
        "pentagon-kl-logic/strange-non-strict");
}

TEST_CASE("Sampling is seeded", "[laws]") {
  LawOptions a;
  a.seed = 7;
  const auto xs = carrier_elements(6);
  InputSampler s1(a), s2(a);
  CHECK(s1.values(MonadKind::SubDist, xs) == s2.values(MonadKind::SubDist, xs));
  InputSampler small(a);
  CHECK(small.values(MonadKind::Pow, carrier_elements(3)).size() == 8);
  for (const auto& v : s1.values(MonadKind::SubDist, xs)) CHECK(v.mass() <= Rational(1));
}
