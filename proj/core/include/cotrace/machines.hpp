#pragma once

#include <compare>
#include <cstddef>
#include <variant>
#include <vector>

#include "cotrace/functors.hpp"
#include "cotrace/languages.hpp"
#include "cotrace/modality.hpp"
#include "cotrace/monad.hpp"
#include "cotrace/universe.hpp"

namespace cotrace {

/// A BT-coalgebra <o, f> : X -> Omega x T(X)^A. T is fixed by the
/// modality (Join/Meet: Pow, Expect: SubDist, JoinMeet: DoublePow).
class MooreCoalgebra {
 public:
  MooreCoalgebra(ElemUniverse states, ElemUniverse alphabet, Modality modality, std::vector<OmegaValue> output,
                 std::vector<std::vector<MonadValue<StateId>>> transitions);

  const ElemUniverse& states() const { return states_; }
  const ElemUniverse& alphabet() const { return alphabet_; }
  Modality modality() const { return modality_; }
  MonadKind kind() const { return kind_of(modality_); }
  OmegaCarrier carrier() const { return carrier_of(modality_); }

  const OmegaValue& output(StateId x) const;
  const MonadValue<StateId>& next(StateId x, LetterId a) const;
  const std::vector<OmegaValue>& outputs() const { return output_; }
  const std::vector<std::vector<MonadValue<StateId>>>& transitions() const { return transitions_; }

 private:
  ElemUniverse states_;
  ElemUniverse alphabet_;
  Modality modality_;
  std::vector<OmegaValue> output_;
  std::vector<std::vector<MonadValue<StateId>>> transitions_;
};

/// A TA-coalgebra c : X -> T(Sigma x X + S) with T in {Pow, SubDist}.
class GenerativeCoalgebra {
 public:
  GenerativeCoalgebra(ElemUniverse states, ElemUniverse labels, ElemUniverse terminals, MonadKind kind,
                      std::vector<MonadValue<Move<StateId>>> transitions);

  const ElemUniverse& states() const { return states_; }
  const ElemUniverse& labels() const { return labels_; }
  const ElemUniverse& terminals() const { return terminals_; }
  MonadKind kind() const { return kind_; }
  /// Join for Pow, Expect for SubDist.
  Modality modality() const;
  OmegaCarrier carrier() const { return omega_carrier_of(kind_); }

  const MonadValue<Move<StateId>>& step(StateId x) const;
  const std::vector<MonadValue<Move<StateId>>>& transitions() const { return transitions_; }

 private:
  ElemUniverse states_;
  ElemUniverse labels_;
  ElemUniverse terminals_;
  MonadKind kind_;
  std::vector<MonadValue<Move<StateId>>> transitions_;
};

/// One element of H_Sigma(X): a symbol with one state per argument.
struct TreeStep {
  Elem symbol = 0;
  std::vector<StateId> children;

  friend auto operator<=>(const TreeStep&, const TreeStep&) = default;
  friend bool operator==(const TreeStep&, const TreeStep&) = default;
};

std::string show(const TreeStep& s);

/// A top-down tree automaton c : X -> T(H_Sigma(X)).
class TreeCoalgebra {
 public:
  TreeCoalgebra(ElemUniverse states, RankedAlphabet signature, Modality modality,
                std::vector<MonadValue<TreeStep>> transitions);

  const ElemUniverse& states() const { return states_; }
  const RankedAlphabet& signature() const { return signature_; }
  Modality modality() const { return modality_; }
  MonadKind kind() const { return kind_of(modality_); }
  OmegaCarrier carrier() const { return carrier_of(modality_); }
  const MonadValue<TreeStep>& step(StateId x) const;

 private:
  ElemUniverse states_;
  RankedAlphabet signature_;
  Modality modality_;
  std::vector<MonadValue<TreeStep>> transitions_;
};

/// A coalgebra c : X -> Theta + BT(X) whose states are either semantic
/// (labelled by a truncated language) or ordinary Moore states.
using GeneralizedStep = std::variant<TruncatedLanguage, Observation<MonadValue<StateId>>>;

class GeneralizedCoalgebra {
 public:
  GeneralizedCoalgebra(ElemUniverse states, ElemUniverse alphabet, Modality modality,
                       std::vector<GeneralizedStep> steps);

  /// Every state ordinary.
  static GeneralizedCoalgebra from_moore(const MooreCoalgebra& m);

  const ElemUniverse& states() const { return states_; }
  const ElemUniverse& alphabet() const { return alphabet_; }
  Modality modality() const { return modality_; }
  MonadKind kind() const { return kind_of(modality_); }
  OmegaCarrier carrier() const { return carrier_of(modality_); }
  const GeneralizedStep& step(StateId x) const;
  bool is_semantic(StateId x) const { return std::holds_alternative<TruncatedLanguage>(step(x)); }

 private:
  ElemUniverse states_;
  ElemUniverse alphabet_;
  Modality modality_;
  std::vector<GeneralizedStep> steps_;
};

/// The Moore machine <o, f> = rho2 . c obtained from a generative machine
/// through the canonical extension.
MooreCoalgebra moore_of_generative(const GenerativeCoalgebra& g);

}  // namespace cotrace
