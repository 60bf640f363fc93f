#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cotrace/error.hpp"
#include "cotrace/rational.hpp"

namespace cotrace {

enum class MonadKind { Pow, SubDist, DoublePow };

const char* to_string(MonadKind kind) noexcept;

inline bool is_monad(MonadKind kind) { return kind != MonadKind::DoublePow; }

inline void require_monad(MonadKind kind, const char* op) {
  if (!is_monad(kind))
    throw Error(ErrorKind::FunctorOnly, std::string(op) + " needs a monad; DoublePow carries no monad structure");
}

/// A canonical finite value of T(E) for T the finite powerset, the rational
/// subdistribution or the double powerset functor.
///
/// Canonical form: Pow and DoublePow payloads are sorted and duplicate-free
/// (inner sets too); SubDist entries are sorted by element, weights are
/// strictly positive and sum to at most 1. Two values are equal iff their
/// payloads are equal.
template <class E>
class MonadValue {
 public:
  using element_type = E;
  using Weighted = std::pair<E, Rational>;

  MonadValue() = default;

  static MonadValue empty(MonadKind kind) {
    MonadValue v;
    v.kind_ = kind;
    return v;
  }

  static MonadValue pow(std::vector<E> elems) {
    MonadValue v;
    v.kind_ = MonadKind::Pow;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    v.set_ = std::move(elems);
    return v;
  }

  /// Merges repeated elements by adding weights and drops zero weights.
  static MonadValue subdist(std::vector<Weighted> entries) {
    MonadValue v;
    v.kind_ = MonadKind::SubDist;
    std::sort(entries.begin(), entries.end(),
              [](const Weighted& a, const Weighted& b) { return a.first < b.first; });
    Rational total;
    for (auto& [elem, weight] : entries) {
      if (weight.sign() < 0) throw Error(ErrorKind::InvalidValue, "negative weight " + weight.str());
      total += weight;
      if (!v.dist_.empty() && v.dist_.back().first == elem)
        v.dist_.back().second += weight;
      else
        v.dist_.emplace_back(std::move(elem), std::move(weight));
    }
    if (total > Rational(1)) throw Error(ErrorKind::MassOverflow, "total mass " + total.str() + " exceeds 1");
    std::erase_if(v.dist_, [](const Weighted& w) { return w.second.is_zero(); });
    return v;
  }

  static MonadValue double_pow(std::vector<std::vector<E>> sets) {
    MonadValue v;
    v.kind_ = MonadKind::DoublePow;
    for (auto& inner : sets) {
      std::sort(inner.begin(), inner.end());
      inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    v.sets_ = std::move(sets);
    return v;
  }

  MonadKind kind() const { return kind_; }

  const std::vector<E>& elements() const { return set_; }
  const std::vector<Weighted>& weights() const { return dist_; }
  const std::vector<std::vector<E>>& sets() const { return sets_; }

  bool empty() const { return set_.empty() && dist_.empty() && sets_.empty(); }

  std::size_t size() const {
    switch (kind_) {
      case MonadKind::Pow: return set_.size();
      case MonadKind::SubDist: return dist_.size();
      case MonadKind::DoublePow: return sets_.size();
    }
    return 0;
  }

  Rational mass() const {
    Rational total;
    for (const auto& w : dist_) total += w.second;
    return total;
  }

  /// Pow membership, SubDist support membership.
  bool contains(const E& e) const {
    if (kind_ == MonadKind::Pow) return std::binary_search(set_.begin(), set_.end(), e);
    return std::any_of(dist_.begin(), dist_.end(), [&](const Weighted& w) { return w.first == e; });
  }

  /// SubDist weight of `e` (zero outside the support).
  Rational weight(const E& e) const {
    auto it = std::lower_bound(dist_.begin(), dist_.end(), e,
                               [](const Weighted& w, const E& key) { return w.first < key; });
    if (it != dist_.end() && it->first == e) return it->second;
    return Rational();
  }

  friend auto operator<=>(const MonadValue&, const MonadValue&) = default;
  friend bool operator==(const MonadValue&, const MonadValue&) = default;

 private:
  MonadKind kind_ = MonadKind::Pow;
  std::vector<E> set_;
  std::vector<Weighted> dist_;
  std::vector<std::vector<E>> sets_;
};

template <class T>
struct is_monad_value : std::false_type {};
template <class E>
struct is_monad_value<MonadValue<E>> : std::true_type {};

/// Pow: {x}; SubDist: point mass 1 at x.
template <class E>
MonadValue<E> unit(MonadKind kind, E x) {
  require_monad(kind, "monad_unit");
  if (kind == MonadKind::Pow) return MonadValue<E>::pow({std::move(x)});
  return MonadValue<E>::subdist({{std::move(x), Rational(1)}});
}

/// Kleisli extension: mu . T(k).
template <class E, class F>
auto bind(const MonadValue<E>& t, F&& k) {
  using Result = std::decay_t<std::invoke_result_t<F&, const E&>>;
  static_assert(is_monad_value<Result>::value, "bind continuation must return a MonadValue");
  using Y = typename Result::element_type;
  require_monad(t.kind(), "monad_bind");
  auto check = [&](const Result& r) {
    if (r.kind() != t.kind())
      throw Error(ErrorKind::KindMismatch, std::string("bind continuation returned ") + to_string(r.kind()) +
                                               " for a " + to_string(t.kind()) + " value");
  };
  if (t.kind() == MonadKind::Pow) {
    std::vector<Y> out;
    for (const auto& e : t.elements()) {
      Result r = k(e);
      check(r);
      out.insert(out.end(), r.elements().begin(), r.elements().end());
    }
    return Result::pow(std::move(out));
  }
  std::vector<typename Result::Weighted> out;
  for (const auto& [e, p] : t.weights()) {
    Result r = k(e);
    check(r);
    for (const auto& [y, q] : r.weights()) out.emplace_back(y, p * q);
  }
  return Result::subdist(std::move(out));
}

/// mu_X : T(T(X)) -> T(X)
template <class E>
MonadValue<E> join(const MonadValue<MonadValue<E>>& tt) {
  return bind(tt, [](const MonadValue<E>& inner) { return inner; });
}

/// Functorial action; SubDist merges colliding targets by adding weights.
template <class E, class F>
auto fmap(F&& f, const MonadValue<E>& t) {
  using Y = std::decay_t<std::invoke_result_t<F&, const E&>>;
  switch (t.kind()) {
    case MonadKind::Pow: {
      std::vector<Y> out;
      out.reserve(t.elements().size());
      for (const auto& e : t.elements()) out.push_back(f(e));
      return MonadValue<Y>::pow(std::move(out));
    }
    case MonadKind::SubDist: {
      std::vector<std::pair<Y, Rational>> out;
      out.reserve(t.weights().size());
      for (const auto& [e, p] : t.weights()) out.emplace_back(f(e), p);
      return MonadValue<Y>::subdist(std::move(out));
    }
    case MonadKind::DoublePow: break;
  }
  std::vector<std::vector<Y>> out;
  out.reserve(t.sets().size());
  for (const auto& inner : t.sets()) {
    std::vector<Y> image;
    image.reserve(inner.size());
    for (const auto& e : inner) image.push_back(f(e));
    out.push_back(std::move(image));
  }
  return MonadValue<Y>::double_pow(std::move(out));
}

/// Strength at an exponent: st(t)(a) = T(ev_a)(t). Elements of `t` are total
/// functions A -> X stored as vectors indexed by letter.
template <class X>
std::vector<MonadValue<X>> strength(const MonadValue<std::vector<X>>& t, std::size_t alphabet) {
  auto check = [&](const std::vector<X>& g) {
    if (g.size() != alphabet)
      throw Error(ErrorKind::InvalidValue, "function of arity " + std::to_string(g.size()) +
                                               " on an alphabet of size " + std::to_string(alphabet));
  };
  std::vector<MonadValue<X>> out;
  out.reserve(alphabet);
  for (std::size_t a = 0; a < alphabet; ++a) {
    out.push_back(fmap(
        [&](const std::vector<X>& g) {
          check(g);
          return g[a];
        },
        t));
  }
  if (alphabet == 0) {
    for (const auto& g : t.elements()) check(g);
    for (const auto& [g, p] : t.weights()) check(g);
  }
  return out;
}

/// Information order used by Kleene iteration: inclusion for Pow, pointwise
/// <= for SubDist.
template <class E>
bool below(const MonadValue<E>& lhs, const MonadValue<E>& rhs) {
  if (lhs.kind() != rhs.kind()) throw Error(ErrorKind::KindMismatch, "comparing values of different kinds");
  switch (lhs.kind()) {
    case MonadKind::Pow:
      return std::includes(rhs.elements().begin(), rhs.elements().end(), lhs.elements().begin(),
                           lhs.elements().end());
    case MonadKind::SubDist:
      return std::all_of(lhs.weights().begin(), lhs.weights().end(),
                         [&](const auto& w) { return w.second <= rhs.weight(w.first); });
    case MonadKind::DoublePow: break;
  }
  throw Error(ErrorKind::FunctorOnly, "no information order on DoublePow");
}

}  // namespace cotrace
