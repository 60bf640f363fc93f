#pragma once

// Plain-text rendering of kernel values, used in counterexamples and
// diagnostics. Carriers are anonymous here: elements print as x<i>, letters
// as a<i>.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cotrace/functors.hpp"
#include "cotrace/modality.hpp"
#include "cotrace/monad.hpp"

namespace cotrace {

std::string show(Elem e);
std::string show(bool b);
std::string show(const Rational& r);
std::string show(const Terminal& t);

template <class E>
std::string show(const std::vector<E>& v);
template <class A, class B>
std::string show(const std::pair<A, B>& p);
template <class E>
std::string show(const MonadValue<E>& v);
template <class Y>
std::string show(const Observation<Y>& o);
template <class Y>
std::string show(const Emit<Y>& e);
template <class Y>
std::string show(const Move<Y>& m);

template <class E>
std::string show(const std::vector<E>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += show(v[i]);
  }
  return out + "]";
}

template <class A, class B>
std::string show(const std::pair<A, B>& p) {
  return "(" + show(p.first) + "," + show(p.second) + ")";
}

template <class E>
std::string show(const MonadValue<E>& v) {
  std::string out = "{";
  bool first = true;
  auto sep = [&] {
    if (!first) out += ",";
    first = false;
  };
  switch (v.kind()) {
    case MonadKind::Pow:
      for (const auto& e : v.elements()) {
        sep();
        out += show(e);
      }
      break;
    case MonadKind::SubDist:
      for (const auto& [e, p] : v.weights()) {
        sep();
        out += show(e) + "↦" + p.str();
      }
      break;
    case MonadKind::DoublePow:
      for (const auto& inner : v.sets()) {
        sep();
        out += "{";
        for (std::size_t i = 0; i < inner.size(); ++i) out += (i ? "," : "") + show(inner[i]);
        out += "}";
      }
      break;
  }
  return out + "}";
}

template <class Y>
std::string show(const Observation<Y>& o) {
  return "(" + show(o.output) + "," + show(o.successors) + ")";
}

template <class Y>
std::string show(const Emit<Y>& e) {
  return "(a" + std::to_string(e.label) + "," + show(e.next) + ")";
}

template <class Y>
std::string show(const Move<Y>& m) {
  if (const auto* t = std::get_if<Terminal>(&m)) return show(*t);
  return show(std::get<Emit<Y>>(m));
}

}  // namespace cotrace
