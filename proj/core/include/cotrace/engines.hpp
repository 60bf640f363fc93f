#pragma once

// The trace-semantics engines. Every engine computes exact values; depth is
// always explicit.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cotrace/languages.hpp"
#include "cotrace/machines.hpp"

namespace cotrace {

// ---- Eilenberg-Moore ------------------------------------------------------

/// em(x)(w): run u = eta(x), u <- bind(u, f(-)(a)) per letter, then evaluate
/// the outputs of u with the modality.
OmegaValue em_eval_bt(const MooreCoalgebra& m, StateId x, const Word& w);

/// em(x) tabulated up to `depth`; running values are shared along prefixes.
TruncatedLanguage em_language_bt(const MooreCoalgebra& m, StateId x, std::size_t depth, EnumerationGuard guard = {});

/// Subset construction restricted to the subsets reachable from {start}.
struct DeterministicMoore {
  ElemUniverse alphabet;
  Modality modality = Modality::Join;
  std::vector<std::vector<StateId>> subsets;  // subsets[0] = {start}
  std::vector<OmegaValue> output;
  std::vector<std::vector<std::size_t>> next;  // next[subset][letter]
};

DeterministicMoore determinise_bt(const MooreCoalgebra& m, StateId start);

TruncatedLanguage language_of(const DeterministicMoore& d, std::size_t state, std::size_t depth,
                              EnumerationGuard guard = {});

/// em^A(x)(w) = em(x)(w) on the Moore machine rho2 . c.
OmegaValue em_eval_ta(const GenerativeCoalgebra& g, StateId x, const Word& w);
TruncatedLanguage em_language_ta(const GenerativeCoalgebra& g, StateId x, std::size_t depth,
                                 EnumerationGuard guard = {});

// ---- Kleisli --------------------------------------------------------------

/// Kleene iterates L_0..L_iterations for every state; traces longer than
/// `depth` are discarded as they arise. Result indexed [k][state].
std::vector<std::vector<MonadValue<Trace>>> kleisli_iterates(const GenerativeCoalgebra& g, std::size_t depth,
                                                             std::size_t iterations);

/// L_{depth+1}(x): the complete traces of length <= depth.
TruncatedTraceSet kleisli_traces(const GenerativeCoalgebra& g, StateId x, std::size_t depth);

/// Pow: characteristic function of the traces; SubDist: their masses.
/// Needs a single terminal symbol.
TruncatedLanguage kbar(const TruncatedTraceSet& ts, std::size_t alphabet);

// ---- Logic ----------------------------------------------------------------

/// log(x)(eps) = o(x); log(x)(aw) = t(T(log(-)(w))(f(x)(a))). Works for every
/// functor kind, including DoublePow. Memoized over (state, suffix).
OmegaValue logic_eval_word(const MooreCoalgebra& m, StateId x, const Word& w);

/// log(x) tabulated by suffix dynamic programming.
TruncatedLanguage logic_language_word(const MooreCoalgebra& m, StateId x, std::size_t depth,
                                      EnumerationGuard guard = {});

/// log(x)(s(u1..un)) = t(T(m)(c(x))) with m(s',x1..xn) = AND_i log(xi)(ui) if s' = s,
/// bottom otherwise.
OmegaValue logic_eval_tree(const TreeCoalgebra& t, StateId x, const Tree& tree);

TruncatedTreeLanguage logic_language_tree(const TreeCoalgebra& t, StateId x, std::size_t depth,
                                          EnumerationGuard guard = {});

/// The word logic read directly off c : X -> T(Sigma x X + S).
OmegaValue logic_eval_generative(const GenerativeCoalgebra& g, StateId x, const Word& w);
TruncatedLanguage logic_language_generative(const GenerativeCoalgebra& g, StateId x, std::size_t depth,
                                            EnumerationGuard guard = {});

/// log(x)(n) = true iff a terminal is in c(x), or n > 0 and some successor y
/// has log(y)(n-1). Needs Pow, one label and one terminal.
bool logic_eval_strange(const GenerativeCoalgebra& g, StateId x, std::size_t n);

/// log_strange(x) as a language over the unary alphabet: a^n |-> log(x)(n).
TruncatedLanguage logic_language_strange(const GenerativeCoalgebra& g, StateId x, std::size_t depth);

// ---- Completely iterative evaluation -------------------------------------

/// em_c(x)(w) for c : X -> Theta + BT(X): ordinary states step as in
/// em_eval_bt, semantic states answer with their language on the remaining
/// word. Throws DepthUnderflow when a semantic language is too shallow.
OmegaValue cia_eval(const GeneralizedCoalgebra& g, StateId x, const Word& w);
TruncatedLanguage cia_language(const GeneralizedCoalgebra& g, StateId x, std::size_t depth,
                               EnumerationGuard guard = {});

// ---- Comparison -----------------------------------------------------------

struct EngineRun {
  std::string engine;
  std::vector<TruncatedLanguage> languages;  // one per state
};

struct EngineAgreement {
  std::string lhs;
  std::string rhs;
  bool equal = true;
  std::optional<StateId> state;  // first disagreeing state
  std::optional<Word> word;      // first disagreeing word there
};

struct SemanticsReport {
  std::size_t depth = 0;
  std::vector<EngineRun> runs;
  std::vector<EngineAgreement> agreements;
  std::vector<TruncatedTraceSet> kleisli;  // generative machines only
  std::vector<Rational> retained_mass;     // SubDist generative machines only
  /// Pairs x < y with equal logic languages but different Kleisli traces.
  std::vector<std::pair<StateId, StateId>> log_equal_kl_distinct;
  /// Whether kbar separated every pair of Kleisli-distinct states here.
  std::optional<bool> kbar_injective;

  bool all_equal() const;
};

enum class LogicKind { Standard, Strange };

/// Moore machines run em, logic and (for Pow) the determinised machine.
SemanticsReport compare_semantics(const MooreCoalgebra& m, std::size_t depth);
/// Generative machines run em^A, kbar . kleisli and the logic chosen.
SemanticsReport compare_semantics(const GenerativeCoalgebra& g, std::size_t depth,
                                  LogicKind logic = LogicKind::Standard);

}  // namespace cotrace
