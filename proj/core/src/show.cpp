#include "cotrace/show.hpp"

namespace cotrace {

std::string show(Elem e) { return "x" + std::to_string(e); }

std::string show(bool b) { return b ? "⊤" : "⊥"; }

std::string show(const Rational& r) { return r.str(); }

std::string show(const Terminal& t) { return t.id == 0 ? "✓" : "✓" + std::to_string(t.id); }

}  // namespace cotrace
