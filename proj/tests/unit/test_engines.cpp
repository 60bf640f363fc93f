#include <catch_amalgamated.hpp>

#include <cotrace/engines.hpp>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cotrace;
using namespace cotrace::testing;

namespace {

OmegaValue B(bool b) { return b; }
OmegaValue R(long n, long d = 1) { return Rational(n, d); }

std::vector<OmegaValue> bools(std::initializer_list<bool> bs) { return {bs.begin(), bs.end()}; }

Trace tr(Word w, Elem s = 0) { return Trace{std::move(w), s}; }

/// log(x)(w) by the plain recursion, without memoization.
OmegaValue naive_log(const MooreCoalgebra& m, StateId x, const Word& w, std::size_t i = 0) {
  if (i == w.size()) return m.output(x);
  return algebra_eval(m.modality(), fmap([&](StateId y) { return naive_log(m, y, w, i + 1); }, m.next(x, w[i])));
}

/// Pow inclusion, SubDist pointwise order.
bool below(const MonadValue<Trace>& a, const MonadValue<Trace>& b) {
  for (const auto& t : a.elements())
    if (!b.contains(t)) return false;
  for (const auto& [t, p] : a.weights())
    if (p > b.weight(t)) return false;
  return true;
}

}  // namespace

TEST_CASE("em_eval_bt", "[engines][em]") {
  CHECK(em_eval_bt(n1(), 0, word({0, 1})) == B(true));
  CHECK(em_eval_bt(n1(), 0, {}) == B(false));
  CHECK(em_eval_bt(p1(), 0, word({0, 0})) == R(3, 4));
  CHECK_THROWS_AS(em_eval_bt(n1(), 2, {}), Error);
  CHECK_THROWS_AS(em_eval_bt(n1(), 0, word({2})), Error);
  try {
    em_eval_bt(aa1(), 0, word({0}));
    FAIL("DoublePow carries no monad");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FunctorOnly);
  }
}

TEST_CASE("em_language_bt", "[engines][em]") {
  CHECK(em_language_bt(n1(), 0, 2).values() == bools({false, true, false, true, true, false, false}));
  CHECK(em_language_bt(n1(), 1, 0).values() == bools({true}));
  CHECK(em_language_bt(p1(), 0, 1).values() == std::vector<OmegaValue>{R(0), R(1, 2)});
  CHECK(em_language_bt(p1(), 0, 2).at(word({0, 0})) == R(3, 4));
}

TEST_CASE("determinise_bt", "[engines][em]") {
  const auto d = determinise_bt(n1(), 0);
  // {q0} -a-> {q0,q1} -b-> {q1}, and {q0} -b-> {}.
  CHECK(d.subsets == std::vector<std::vector<StateId>>{{0}, {0, 1}, {}, {1}});
  CHECK(d.next[0] == std::vector<std::size_t>{1, 2});
  CHECK(d.next[1] == std::vector<std::size_t>{1, 3});
  for (std::size_t depth = 0; depth <= 4; ++depth)
    CHECK(language_of(d, 0, depth) == em_language_bt(n1(), 0, depth));
  CHECK_THROWS_AS(determinise_bt(p1(), 0), Error);

  // A deterministic machine yields singletons (and possibly the empty set).
  using SV = MonadValue<StateId>;
  MooreCoalgebra det(ElemUniverse::indexed("x", 3), ElemUniverse::indexed("a", 1), Modality::Join,
                     bools({false, false, true}), {{SV::pow({1})}, {SV::pow({2})}, {SV::pow({})}});
  for (const auto& s : determinise_bt(det, 0).subsets) CHECK(s.size() <= 1);
}

TEST_CASE("em_eval_ta", "[engines][em]") {
  CHECK(em_eval_ta(g1(), 0, word({0, 1})) == B(true));
  CHECK(em_eval_ta(g1(), 0, {}) == B(false));
  CHECK(em_eval_ta(g1(), 1, {}) == B(true));
  CHECK(em_eval_ta(g1_subdist(), 0, word({0})) == R(1, 4));
}

TEST_CASE("kleisli_traces", "[engines][kleisli]") {
  CHECK(kleisli_traces(g1(), 0, 2).traces ==
        MonadValue<Trace>::pow({tr({0}), tr({0, 0}), tr({0, 1})}));
  CHECK(kleisli_traces(g1(), 1, 0).traces == MonadValue<Trace>::pow({tr({})}));
  CHECK(kleisli_traces(g1_subdist(), 0, 1).traces ==
        MonadValue<Trace>::subdist({{tr({}), Rational(1, 2)}, {tr({0}), Rational(1, 4)}}));
}

TEST_CASE("kbar", "[engines][kleisli]") {
  TruncatedTraceSet ts{MonadKind::Pow, 2, 1, MonadValue<Trace>::pow({tr({0}), tr({0, 0}), tr({0, 1})})};
  CHECK(kbar(ts, 2).values() == bools({false, true, false, true, true, false, false}));
  TruncatedTraceSet none{MonadKind::SubDist, 1, 1, MonadValue<Trace>::empty(MonadKind::SubDist)};
  CHECK(kbar(none, 1).values() == std::vector<OmegaValue>{R(0), R(0)});
  CHECK(kbar(kleisli_traces(g1(), 0, 2), 2) == em_language_ta(g1(), 0, 2));
  TruncatedTraceSet two{MonadKind::Pow, 0, 2, MonadValue<Trace>::pow({})};
  CHECK_THROWS_AS(kbar(two, 1), Error);
}

TEST_CASE("kbar is a join-morphism", "[engines][kleisli][property]") {
  Gen g(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto m = random_generative(g, MonadKind::Pow, {3, 2});
    auto s1 = kleisli_traces(m, 0, 3);
    auto s2 = kleisli_traces(m, static_cast<StateId>(m.states().size() - 1), 3);
    std::vector<Trace> both = s1.traces.elements();
    both.insert(both.end(), s2.traces.elements().begin(), s2.traces.elements().end());
    TruncatedTraceSet u{MonadKind::Pow, 3, 1, MonadValue<Trace>::pow(both)};
    auto l1 = kbar(s1, m.labels().size()), l2 = kbar(s2, m.labels().size()), lu = kbar(u, m.labels().size());
    for (std::size_t i = 0; i < lu.values().size(); ++i)
      CHECK(std::get<bool>(lu.values()[i]) == (std::get<bool>(l1.values()[i]) || std::get<bool>(l2.values()[i])));

    // Convex combinations for SubDist.
    auto d = random_generative(g, MonadKind::SubDist, {3, 2});
    auto t1 = kleisli_traces(d, 0, 3), t2 = kleisli_traces(d, static_cast<StateId>(d.states().size() - 1), 3);
    std::vector<std::pair<Trace, Rational>> mix;
    for (const auto& [t, p] : t1.traces.weights()) mix.emplace_back(t, p * Rational(1, 3));
    for (const auto& [t, p] : t2.traces.weights()) mix.emplace_back(t, p * Rational(2, 3));
    TruncatedTraceSet c{MonadKind::SubDist, 3, 1, MonadValue<Trace>::subdist(mix)};
    auto k1 = kbar(t1, d.labels().size()), k2 = kbar(t2, d.labels().size()), kc = kbar(c, d.labels().size());
    for (std::size_t i = 0; i < kc.values().size(); ++i)
      CHECK(std::get<Rational>(kc.values()[i]) == Rational(1, 3) * std::get<Rational>(k1.values()[i]) +
                                                      Rational(2, 3) * std::get<Rational>(k2.values()[i]));
  }
}

TEST_CASE("Kleene iterates are monotone and stabilize", "[engines][kleisli][property]") {
  Gen g(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_generative(g, trial % 2 ? MonadKind::SubDist : MonadKind::Pow, {4, 2});
    const std::size_t d = 4;
    const auto it = kleisli_iterates(m, d, d + 3);
    for (std::size_t k = 0; k + 1 < it.size(); ++k)
      for (StateId x = 0; x < m.states().size(); ++x) CHECK(below(it[k][x], it[k + 1][x]));
    for (StateId x = 0; x < m.states().size(); ++x) CHECK(it[d + 1][x] == it.back()[x]);
  }
}

TEST_CASE("logic_eval_word", "[engines][logic]") {
  CHECK(logic_eval_word(aa1(), 0, word({0})) == B(false));
  CHECK(logic_eval_word(aa1(), 1, {}) == B(true));
  CHECK(logic_eval_word(n1(), 0, word({0, 1})) == B(true));
  CHECK(logic_eval_word(n1(), 0, word({0, 1})) == em_eval_bt(n1(), 0, word({0, 1})));
  CHECK(logic_eval_word(p1(), 0, word({0, 0})) == R(3, 4));
  for (StateId x = 0; x < 3; ++x) CHECK(logic_eval_word(aa1(), x, {}) == aa1().output(x));
}

TEST_CASE("Memoized logic equals the plain recursion", "[engines][logic][property]") {
  Gen g(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Modality alg = std::array{Modality::Join, Modality::Meet, Modality::Expect}[trial % 3];
    auto m = random_moore(g, alg, {4, 2});
    for (StateId x = 0; x < m.states().size(); ++x) {
      const auto lang = logic_language_word(m, x, 4);
      const auto words = enumerate_words(m.alphabet().size(), 4);
      for (std::size_t i = 0; i < words.size(); ++i) {
        const auto expected = naive_log(m, x, words[i]);
        CHECK(logic_eval_word(m, x, words[i]) == expected);
        CHECK(lang.values()[i] == expected);
      }
    }
  }
}

TEST_CASE("logic_eval_tree", "[engines][logic]") {
  const Tree c{0, {}};
  const Tree fcc{1, {c, c}};
  CHECK(logic_eval_tree(ta1(), 0, fcc) == B(true));
  CHECK(logic_eval_tree(ta1(), 0, c) == B(false));
  CHECK(logic_eval_tree(ta1(), 1, c) == B(true));
  CHECK_THROWS_AS(logic_eval_tree(ta1(), 0, Tree{1, {c}}), Error);
  const auto lang = logic_language_tree(ta1(), 0, 3);
  for (std::size_t i = 0; i < lang.trees().size(); ++i)
    CHECK(std::get<bool>(lang.values()[i]) == tree_run_oracle(ta1(), 0, lang.trees()[i]));
}

TEST_CASE("logic_eval_generative", "[engines][logic]") {
  CHECK(logic_eval_generative(g1(), 0, word({0, 1})) == B(true));
  CHECK(logic_eval_generative(g1(), 1, {}) == B(true));
  CHECK(logic_eval_generative(g1(), 0, word({1})) == B(false));
  CHECK(logic_eval_generative(g1_subdist(), 0, word({0})) == R(1, 4));
}

TEST_CASE("Strange logic separates nothing that Kleisli separates", "[engines][strange]") {
  const auto s = sr1();
  CHECK(logic_eval_strange(s, 0, 5));
  CHECK(logic_eval_strange(s, 1, 0));
  for (std::size_t n = 0; n <= 6; ++n) CHECK(logic_eval_strange(s, 0, n) == logic_eval_strange(s, 1, n));
  CHECK(kleisli_traces(s, 0, 3).traces == MonadValue<Trace>::pow({tr({})}));
  CHECK(kleisli_traces(s, 1, 3).traces ==
        MonadValue<Trace>::pow({tr({}), tr({0}), tr({0, 0}), tr({0, 0, 0})}));
  for (std::size_t d = 1; d <= 5; ++d) CHECK_FALSE(kleisli_traces(s, 0, d) == kleisli_traces(s, 1, d));
  CHECK_THROWS_AS(logic_eval_strange(g1(), 0, 1), Error);
}

TEST_CASE("cia_eval", "[engines][cia]") {
  using SV = MonadValue<StateId>;
  // L(w) = true iff w = "b" over {a, b}, depth 2.
  std::vector<OmegaValue> table(7, false);
  table[2] = true;
  const TruncatedLanguage lb(2, 2, OmegaCarrier::Bool, table);
  using Obs = Observation<SV>;
  GeneralizedCoalgebra only(ElemUniverse({"x"}), ElemUniverse({"a", "b"}), Modality::Join, {lb});
  CHECK(cia_eval(only, 0, word({1})) == B(true));

  GeneralizedCoalgebra graft(ElemUniverse({"s0", "sL"}), ElemUniverse({"a", "b"}), Modality::Join,
                             {Obs{false, {SV::pow({1}), SV::pow({})}}, lb});
  CHECK(cia_eval(graft, 0, word({0, 1})) == B(true));
  CHECK(cia_eval(graft, 0, word({0, 0})) == B(false));
  CHECK(cia_eval(graft, 0, {}) == B(false));
  try {
    cia_eval(graft, 0, word({0, 1, 1, 1}));
    FAIL("semantic state too shallow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DepthUnderflow);
  }

  const auto plain = GeneralizedCoalgebra::from_moore(n1());
  for (const auto& w : enumerate_words(2, 4)) CHECK(cia_eval(plain, 0, w) == em_eval_bt(n1(), 0, w));
}

TEST_CASE("compare_semantics", "[engines][compare]") {
  const auto rn = compare_semantics(n1(), 3);
  CHECK(rn.all_equal());
  CHECK(rn.runs.size() == 3);

  const auto rg = compare_semantics(g1(), 3);
  CHECK(rg.all_equal());
  CHECK(rg.kbar_injective == true);

  const auto rp = compare_semantics(g1_subdist(), 2);
  CHECK(rp.all_equal());
  REQUIRE(rp.retained_mass.size() == 2);
  // p: 1/2 + 1/4 + 1/8 (traces eps, a, ab)
  CHECK(rp.retained_mass[0] == Rational(7, 8));

  const auto rs = compare_semantics(sr1(), 4, LogicKind::Strange);
  CHECK(rs.log_equal_kl_distinct == std::vector<std::pair<StateId, StateId>>{{0, 1}});
  CHECK(rs.kbar_injective == false);
  CHECK_FALSE(rs.all_equal());

  CHECK(compare_semantics(aa1(), 2).runs.size() == 1);
}

TEST_CASE("Engines agree with brute-force oracles", "[engines][oracle][property]") {
  Gen g(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Modality alg = std::array{Modality::Join, Modality::Meet, Modality::Expect}[trial % 3];
    auto m = random_moore(g, alg, {4, 2});
    auto gen = random_generative(g, alg == Modality::Expect ? MonadKind::SubDist : MonadKind::Pow, {4, 2});
    for (const auto& w : enumerate_words(m.alphabet().size(), 3))
      for (StateId x = 0; x < m.states().size(); ++x) CHECK(em_eval_bt(m, x, w) == moore_path_oracle(m, x, w));
    for (StateId x = 0; x < gen.states().size(); ++x) {
      const auto runs = generative_run_oracle(gen, x, 3);
      const auto kl = kleisli_traces(gen, x, 3).traces;
      CHECK(kl.size() == runs.size());
      for (const auto& [t, p] : runs) CHECK((gen.kind() == MonadKind::Pow ? kl.contains(t) : kl.weight(t) == p));
      for (const auto& w : enumerate_words(gen.labels().size(), 3))
        CHECK(em_eval_ta(gen, x, w) == generative_word_oracle(gen, x, w));
    }
  }
}
