#include "fixtures.hpp"

namespace cotrace::testing {

namespace {

using SV = MonadValue<StateId>;
using MV = MonadValue<Move<StateId>>;

Move<StateId> tick() { return Terminal{0}; }
Move<StateId> emit(LetterId a, StateId x) { return Emit<StateId>{a, x}; }

}  // namespace

MooreCoalgebra n1() {
  return MooreCoalgebra(ElemUniverse({"q0", "q1"}), ElemUniverse({"a", "b"}), Modality::Join, {false, true},
                        {{SV::pow({0, 1}), SV::pow({})}, {SV::pow({}), SV::pow({1})}});
}

MooreCoalgebra p1() {
  return MooreCoalgebra(ElemUniverse({"u", "v"}), ElemUniverse({"a"}), Modality::Expect, {Rational(0), Rational(1)},
                        {{SV::subdist({{0, Rational(1, 2)}, {1, Rational(1, 2)}})}, {SV::subdist({{1, Rational(1)}})}});
}

MooreCoalgebra aa1() {
  return MooreCoalgebra(ElemUniverse({"x", "y", "z"}), ElemUniverse({"a"}), Modality::JoinMeet, {false, true, false},
                        {{SV::double_pow({{1, 2}})}, {SV::double_pow({})}, {SV::double_pow({})}});
}

GenerativeCoalgebra g1() {
  return GenerativeCoalgebra(ElemUniverse({"p", "q"}), ElemUniverse({"a", "b"}), ElemUniverse({"✓"}), MonadKind::Pow,
                             {MV::pow({emit(0, 0), emit(0, 1)}), MV::pow({tick(), emit(1, 1)})});
}

GenerativeCoalgebra g1_subdist() {
  return GenerativeCoalgebra(ElemUniverse({"p", "q"}), ElemUniverse({"a", "b"}), ElemUniverse({"✓"}),
                             MonadKind::SubDist,
                             {MV::subdist({{emit(0, 1), Rational(1, 2)}, {tick(), Rational(1, 2)}}),
                              MV::subdist({{tick(), Rational(1, 2)}, {emit(1, 1), Rational(1, 2)}})});
}

TreeCoalgebra ta1() {
  RankedAlphabet sig{ElemUniverse({"c", "f"}), {0, 2}};
  return TreeCoalgebra(ElemUniverse({"x", "y"}), sig, Modality::Join,
                       {MonadValue<TreeStep>::pow({TreeStep{1, {1, 1}}}), MonadValue<TreeStep>::pow({TreeStep{0, {}}})});
}

GenerativeCoalgebra sr1() {
  return GenerativeCoalgebra(ElemUniverse({"x", "y"}), ElemUniverse({"•"}), ElemUniverse({"*"}), MonadKind::Pow,
                             {MV::pow({tick()}), MV::pow({tick(), emit(0, 1)})});
}

IOSystem io1() {
  IOSignature sig{ElemUniverse({"k"}), {ElemUniverse({"0", "1"})}};
  return IOSystem::generative(ElemUniverse({"s"}), sig, {{OutputTransition{0, {0, 0}}}});
}

Word word(std::initializer_list<LetterId> letters) { return Word(letters); }

}  // namespace cotrace::testing
