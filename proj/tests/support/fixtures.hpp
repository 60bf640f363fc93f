#pragma once

// Hand-written machines shared by the unit and acceptance tests.

#include <cotrace/engines.hpp>
#include <cotrace/machines.hpp>
#include <cotrace/strategies.hpp>

namespace cotrace::testing {

/// NDA: q0 -a-> {q0,q1}, q1 -b-> {q1}, q1 accepting.
MooreCoalgebra n1();
/// PA: u -a-> {u:1/2, v:1/2}, v -a-> {v:1}, o(u)=0, o(v)=1.
MooreCoalgebra p1();
/// Alternating: x -a-> {{y,z}}, o(y)=true, o(z)=false.
MooreCoalgebra aa1();
/// Generative NDA: c(p)={(a,p),(a,q)}, c(q)={tick,(b,q)}.
GenerativeCoalgebra g1();
/// c(p)={(a,q):1/2, tick:1/2}, c(q)={tick:1/2, (b,q):1/2}.
GenerativeCoalgebra g1_subdist();
/// Top-down tree automaton over {c/0, f/2}: c(x)={f(y,y)}, c(y)={c}.
TreeCoalgebra ta1();
/// X -> Pow(X + 1): c(x)={*}, c(y)={*, y}.
GenerativeCoalgebra sr1();
/// K={k}, ar(k)={0,1}, c(s)={k(s,s)}.
IOSystem io1();

Word word(std::initializer_list<LetterId> letters);

}  // namespace cotrace::testing
