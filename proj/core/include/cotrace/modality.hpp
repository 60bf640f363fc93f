#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "cotrace/monad.hpp"
#include "cotrace/rational.hpp"

namespace cotrace {

/// A truth value: an element of 2 = {false, true} or of the rational unit
/// interval.
using OmegaValue = std::variant<bool, Rational>;

enum class OmegaCarrier { Bool, UnitInterval };

/// The evaluator t : T(Omega) -> Omega interpreting branching.
enum class Modality {
  Join,      // Pow over 2, empty join is false
  Meet,      // Pow over 2, empty meet is true
  Expect,    // SubDist over [0,1], phi |-> sum p * phi(p)
  JoinMeet,  // DoublePow over 2, S |-> OR_{T in S} AND_{b in T} b
};

const char* to_string(Modality m) noexcept;
Modality parse_modality(std::string_view text);
MonadKind parse_monad_kind(std::string_view text);

OmegaCarrier carrier_of(Modality m);
/// The functor kind each modality evaluates.
MonadKind kind_of(Modality m);

OmegaValue omega_top(OmegaCarrier c);
OmegaValue omega_bottom(OmegaCarrier c);
bool in_carrier(OmegaCarrier c, const OmegaValue& v);

/// Binary meet: conjunction on 2, minimum on [0,1].
OmegaValue omega_meet(const OmegaValue& a, const OmegaValue& b);

std::string show(const OmegaValue& v);

OmegaValue algebra_eval(Modality alg, const MonadValue<OmegaValue>& v);

}  // namespace cotrace
