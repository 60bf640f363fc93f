#include "cotrace/modality.hpp"

#include <algorithm>

namespace cotrace {

const char* to_string(MonadKind kind) noexcept {
  switch (kind) {
    case MonadKind::Pow: return "pow";
    case MonadKind::SubDist: return "subdist";
    case MonadKind::DoublePow: return "doublepow";
  }
  return "?";
}

const char* to_string(Modality m) noexcept {
  switch (m) {
    case Modality::Join: return "join";
    case Modality::Meet: return "meet";
    case Modality::Expect: return "expect";
    case Modality::JoinMeet: return "joinmeet";
  }
  return "?";
}

Modality parse_modality(std::string_view text) {
  for (Modality m : {Modality::Join, Modality::Meet, Modality::Expect, Modality::JoinMeet})
    if (text == to_string(m)) return m;
  throw Error(ErrorKind::Parse, "unknown modality '" + std::string(text) + "'");
}

MonadKind parse_monad_kind(std::string_view text) {
  for (MonadKind k : {MonadKind::Pow, MonadKind::SubDist, MonadKind::DoublePow})
    if (text == to_string(k)) return k;
  throw Error(ErrorKind::Parse, "unknown monad '" + std::string(text) + "'");
}

OmegaCarrier carrier_of(Modality m) {
  return m == Modality::Expect ? OmegaCarrier::UnitInterval : OmegaCarrier::Bool;
}

MonadKind kind_of(Modality m) {
  switch (m) {
    case Modality::Join:
    case Modality::Meet: return MonadKind::Pow;
    case Modality::Expect: return MonadKind::SubDist;
    case Modality::JoinMeet: return MonadKind::DoublePow;
  }
  return MonadKind::Pow;
}

OmegaValue omega_top(OmegaCarrier c) {
  if (c == OmegaCarrier::Bool) return true;
  return Rational(1);
}

OmegaValue omega_bottom(OmegaCarrier c) {
  if (c == OmegaCarrier::Bool) return false;
  return Rational(0);
}

bool in_carrier(OmegaCarrier c, const OmegaValue& v) {
  if (c == OmegaCarrier::Bool) return std::holds_alternative<bool>(v);
  const auto* r = std::get_if<Rational>(&v);
  return r && r->sign() >= 0 && *r <= Rational(1);
}

OmegaValue omega_meet(const OmegaValue& a, const OmegaValue& b) {
  if (a.index() != b.index()) throw Error(ErrorKind::KindMismatch, "meet across carriers");
  if (const auto* x = std::get_if<bool>(&a)) return *x && std::get<bool>(b);
  return std::min(std::get<Rational>(a), std::get<Rational>(b));
}

std::string show(const OmegaValue& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "⊤" : "⊥";
  return std::get<Rational>(v).str();
}

namespace {

bool as_bool(const OmegaValue& v) {
  const auto* b = std::get_if<bool>(&v);
  if (!b) throw Error(ErrorKind::KindMismatch, "expected a boolean truth value, got " + show(v));
  return *b;
}

}  // namespace

OmegaValue algebra_eval(Modality alg, const MonadValue<OmegaValue>& v) {
  if (v.kind() != kind_of(alg))
    throw Error(ErrorKind::KindMismatch,
                std::string(to_string(alg)) + " evaluates " + to_string(kind_of(alg)) + " values, got " +
                    to_string(v.kind()));
  switch (alg) {
    case Modality::Join:
      return std::any_of(v.elements().begin(), v.elements().end(), as_bool);
    case Modality::Meet:
      return std::all_of(v.elements().begin(), v.elements().end(), as_bool);
    case Modality::Expect: {
      Rational sum;
      for (const auto& [p, weight] : v.weights()) {
        if (!in_carrier(OmegaCarrier::UnitInterval, p))
          throw Error(ErrorKind::InvalidValue, "expectation over " + show(p));
        sum += std::get<Rational>(p) * weight;
      }
      return sum;
    }
    case Modality::JoinMeet:
      return std::any_of(v.sets().begin(), v.sets().end(), [](const std::vector<OmegaValue>& conj) {
        return std::all_of(conj.begin(), conj.end(), as_bool);
      });
  }
  return false;
}

}  // namespace cotrace
