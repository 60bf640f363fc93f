#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cotrace/functors.hpp"
#include "cotrace/modality.hpp"
#include "cotrace/monad.hpp"
#include "cotrace/universe.hpp"

namespace cotrace {

using Word = std::vector<LetterId>;

/// Bound on the number of enumerated words or trees.
struct EnumerationGuard {
  std::size_t max_objects = 20000;
};

/// Number of words of length <= depth (saturates at SIZE_MAX).
std::size_t word_count(std::size_t alphabet, std::size_t depth);

/// Position of `w` in length-then-lexicographic order.
std::size_t word_index(const Word& w, std::size_t alphabet);

/// All words of length <= depth, shortest first, lexicographic by letter
/// index within a length.
std::vector<Word> enumerate_words(std::size_t alphabet, std::size_t depth, EnumerationGuard guard = {});

std::string show_word(const Word& w, const ElemUniverse* alphabet = nullptr);

/// A ranked alphabet: symbol names with their arities.
struct RankedAlphabet {
  ElemUniverse symbols;
  std::vector<std::size_t> arity;

  std::size_t size() const { return symbols.size(); }
};

struct Tree {
  Elem symbol = 0;
  std::vector<Tree> children;

  std::size_t height() const;
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);
  friend bool operator==(const Tree&, const Tree&) = default;
};

std::string show_tree(const Tree& t, const RankedAlphabet* sig = nullptr);

/// All trees of height <= depth (a leaf has height 1). Ordered by height,
/// then by root symbol, then lexicographically by the positions of the
/// children in the enumeration of lower heights.
std::vector<Tree> enumerate_trees(const RankedAlphabet& sig, std::size_t depth, EnumerationGuard guard = {});

/// Depth-d restriction of a word language A* -> Omega, stored in
/// enumeration order.
class TruncatedLanguage {
 public:
  TruncatedLanguage(std::size_t alphabet, std::size_t depth, OmegaCarrier carrier, std::vector<OmegaValue> values);

  template <class F>
  static TruncatedLanguage tabulate(std::size_t alphabet, std::size_t depth, OmegaCarrier carrier, F&& f,
                                    EnumerationGuard guard = {}) {
    std::vector<OmegaValue> values;
    for (const Word& w : enumerate_words(alphabet, depth, guard)) values.push_back(f(w));
    return TruncatedLanguage(alphabet, depth, carrier, std::move(values));
  }

  std::size_t alphabet_size() const { return alphabet_; }
  std::size_t depth() const { return depth_; }
  OmegaCarrier carrier() const { return carrier_; }
  const std::vector<OmegaValue>& values() const { return values_; }

  /// Throws DepthUnderflow when |w| exceeds the depth.
  const OmegaValue& at(const Word& w) const;

  friend bool operator==(const TruncatedLanguage&, const TruncatedLanguage&) = default;

 private:
  std::size_t alphabet_;
  std::size_t depth_;
  OmegaCarrier carrier_;
  std::vector<OmegaValue> values_;
};

struct LanguageComparison {
  bool equal = true;
  std::optional<Word> first_difference;
};

/// Throws ShapeMismatch unless alphabet, depth and carrier agree.
LanguageComparison language_equal(const TruncatedLanguage& lhs, const TruncatedLanguage& rhs);

class TruncatedTreeLanguage {
 public:
  TruncatedTreeLanguage(RankedAlphabet sig, std::size_t depth, OmegaCarrier carrier, std::vector<Tree> trees,
                        std::vector<OmegaValue> values);

  const RankedAlphabet& signature() const { return sig_; }
  std::size_t depth() const { return depth_; }
  OmegaCarrier carrier() const { return carrier_; }
  const std::vector<Tree>& trees() const { return trees_; }
  const std::vector<OmegaValue>& values() const { return values_; }
  const OmegaValue& at(const Tree& t) const;

 private:
  RankedAlphabet sig_;
  std::size_t depth_;
  OmegaCarrier carrier_;
  std::vector<Tree> trees_;
  std::vector<OmegaValue> values_;
};

/// A complete trace: a word followed by a termination symbol, an element of
/// Sigma* x S.
struct Trace {
  Word word;
  Elem terminal = 0;

  friend auto operator<=>(const Trace&, const Trace&) = default;
  friend bool operator==(const Trace&, const Trace&) = default;
};

std::string show(const Trace& t);

/// T applied to the traces of length <= depth.
struct TruncatedTraceSet {
  MonadKind kind = MonadKind::Pow;
  std::size_t depth = 0;
  std::size_t terminal_count = 1;
  MonadValue<Trace> traces;

  friend bool operator==(const TruncatedTraceSet& a, const TruncatedTraceSet& b) { return a.traces == b.traces; }
};

}  // namespace cotrace
