#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "cotrace/laws.hpp"
#include "cotrace/universe.hpp"

namespace cotrace {

/// Operations K with an arity set ar(k) for each.
struct IOSignature {
  ElemUniverse operations;
  std::vector<ElemUniverse> arities;

  std::size_t arity(Elem k) const { return arities.at(k).size(); }
};

enum class IOMode { Generative, Reactive };

const char* to_string(IOMode mode) noexcept;

/// x ==k==> (y_i)_{i in ar(k)}
struct OutputTransition {
  Elem op = 0;
  std::vector<StateId> continuations;

  friend auto operator<=>(const OutputTransition&, const OutputTransition&) = default;
  friend bool operator==(const OutputTransition&, const OutputTransition&) = default;
};

/// x@k ==i==> x'
struct AnswerTransition {
  Elem answer = 0;
  StateId next = 0;

  friend auto operator<=>(const AnswerTransition&, const AnswerTransition&) = default;
  friend bool operator==(const AnswerTransition&, const AnswerTransition&) = default;
};

class IOSystem {
 public:
  static IOSystem generative(ElemUniverse states, IOSignature sig, std::vector<std::vector<OutputTransition>> c);
  /// c[x][k] lists the answers to k at x.
  static IOSystem reactive(ElemUniverse states, IOSignature sig,
                           std::vector<std::vector<std::vector<AnswerTransition>>> c);

  IOMode mode() const { return mode_; }
  const ElemUniverse& states() const { return states_; }
  const IOSignature& signature() const { return sig_; }
  const std::vector<OutputTransition>& outputs(StateId x) const;
  const std::vector<AnswerTransition>& answers(StateId x, Elem k) const;

 private:
  IOSystem() = default;

  IOMode mode_ = IOMode::Generative;
  ElemUniverse states_;
  IOSignature sig_;
  std::vector<std::vector<OutputTransition>> outputs_;
  std::vector<std::vector<std::vector<AnswerTransition>>> answers_;
};

/// Alternating operations and answers: k0 i0 k1 i1 ...
using Play = std::vector<Elem>;

/// A strategy truncated at `bound` operations. Generative plays end after an
/// operation, reactive plays after an answer.
struct Strategy {
  IOMode mode = IOMode::Generative;
  std::size_t bound = 0;
  std::vector<Play> plays;  // sorted, duplicate-free

  bool contains(const Play& p) const { return std::binary_search(plays.begin(), plays.end(), p); }
  friend bool operator==(const Strategy& a, const Strategy& b) { return a.mode == b.mode && a.plays == b.plays; }
};

Strategy make_strategy(IOMode mode, std::size_t bound, std::vector<Play> plays);

std::string show_play(const Play& p, const IOSignature* sig = nullptr);
std::string show(const Strategy& s);

/// The plays with at most `bound` operations witnessed from x.
Strategy io_traces(const IOSystem& sys, StateId x, std::size_t bound);

/// Generative: {k | (k) in sigma}. Reactive: the operations that some play
/// starts with.
std::vector<Elem> strat_init(const Strategy& s);

/// {s | k i s in sigma}. Throws NotInitial when k i cannot start a play.
Strategy strat_residual(const Strategy& s, Elem k, Elem i);

/// The closure invariant of the strategy's mode and the bound.
bool is_prefix_closed(const Strategy& s);

using TraceFunction = std::function<Strategy(const IOSystem&, StateId, std::size_t)>;

/// Checks that x |-> io_traces(x, bound) is a coalgebra morphism into the
/// strategies: Init matches the enabled operations and every residual is
/// the union of the successors' strategies at bound - 1. The successor side
/// is computed with `successor_traces`.
LawReport check_strategy_coalgebra(const IOSystem& sys, std::size_t bound,
                                   TraceFunction successor_traces = io_traces);

/// Sigma#: R subset of sum_j X_j |-> (L, (y_j)_{j in L}) with
/// y_j = join of f(j, x) over in_j x in R. `r` must be sorted.
template <class X, class F, class Join>
auto sigma_sharp(const std::vector<std::pair<Elem, X>>& r, F&& f, Join&& join) {
  using V = std::decay_t<std::invoke_result_t<F&, Elem, const X&>>;
  std::vector<std::pair<Elem, V>> out;
  for (const auto& [j, x] : r) {
    if (!out.empty() && out.back().first == j)
      out.back().second = join(out.back().second, f(j, x));
    else
      out.emplace_back(j, f(j, x));
  }
  return out;
}

/// (U, (Y_j)_{j in U}) with every Y_j non-empty.
using NonEmptyFamily = std::vector<std::pair<Elem, std::vector<Elem>>>;

/// (U, (Y_j)) |-> {(j, x) | j in U, x in Y_j}
std::vector<std::pair<Elem, Elem>> rho4_iso(const NonEmptyFamily& family);
/// The inverse, computed as Sigma# of the singleton maps.
NonEmptyFamily rho4_iso_inverse(const std::vector<std::pair<Elem, Elem>>& r);

struct DeterminisedIO {
  IOSystem system;
  std::vector<std::vector<StateId>> subsets;  // subsets[0] = {start}
};

/// Powerset determinisation of a generative system over the subsets
/// reachable from {start}.
DeterminisedIO determinise_io(const IOSystem& sys, StateId start);

}  // namespace cotrace
