#include "cotrace/languages.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace cotrace {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::size_t sat_add(std::size_t a, std::size_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::size_t sat_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

}  // namespace

std::size_t word_count(std::size_t alphabet, std::size_t depth) {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t len = 0; len <= depth; ++len) {
    total = sat_add(total, layer);
    layer = sat_mul(layer, alphabet);
  }
  return total;
}

std::size_t word_index(const Word& w, std::size_t alphabet) {
  std::size_t offset = w.empty() ? 0 : word_count(alphabet, w.size() - 1);
  std::size_t rank = 0;
  for (LetterId a : w) {
    if (a >= alphabet) throw Error(ErrorKind::UnknownSymbol, "letter " + std::to_string(a));
    rank = rank * alphabet + a;
  }
  return offset + rank;
}

std::vector<Word> enumerate_words(std::size_t alphabet, std::size_t depth, EnumerationGuard guard) {
  const std::size_t count = word_count(alphabet, depth);
  if (count > guard.max_objects)
    throw Error(ErrorKind::SizeGuard, std::to_string(count == kSaturated ? 0 : count) + " words exceed the bound " +
                                          std::to_string(guard.max_objects));
  std::vector<Word> out;
  out.reserve(count);
  out.emplace_back();
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= depth && alphabet > 0; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (LetterId a = 0; a < alphabet; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

std::string show_word(const Word& w, const ElemUniverse* alphabet) {
  if (w.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (alphabet) {
      const std::string& n = alphabet->name(w[i]);
      if (i && n.size() > 1) out += ".";
      out += n;
    } else {
      out += (i ? "." : "") + std::string("a") + std::to_string(w[i]);
    }
  }
  return out;
}

std::size_t Tree::height() const {
  std::size_t h = 0;
  for (const Tree& c : children) h = std::max(h, c.height());
  return h + 1;
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  if (auto c = a.symbol <=> b.symbol; c != 0) return c;
  return std::lexicographical_compare_three_way(a.children.begin(), a.children.end(), b.children.begin(),
                                                b.children.end());
}

std::string show_tree(const Tree& t, const RankedAlphabet* sig) {
  std::string out = sig ? sig->symbols.name(t.symbol) : "f" + std::to_string(t.symbol);
  if (t.children.empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) out += (i ? "," : "") + show_tree(t.children[i], sig);
  return out + ")";
}

std::vector<Tree> enumerate_trees(const RankedAlphabet& sig, std::size_t depth, EnumerationGuard guard) {
  if (sig.arity.size() != sig.symbols.size())
    throw Error(ErrorKind::ShapeMismatch, "signature arity table does not match its symbols");

  // Sizes of the layers first, so the guard fires before any allocation.
  std::vector<std::size_t> upto(depth + 1, 0);  // upto[h] = #trees of height <= h
  for (std::size_t h = 1; h <= depth; ++h) {
    std::size_t exact = 0;
    for (std::size_t s = 0; s < sig.size(); ++s) {
      const std::size_t n = sig.arity[s];
      if (n == 0) {
        exact = h == 1 ? sat_add(exact, 1) : exact;
      } else if (h >= 2) {
        const std::size_t all = sat_pow(upto[h - 1], n);
        const std::size_t lower = sat_pow(upto[h - 2], n);
        exact = sat_add(exact, all == kSaturated ? kSaturated : all - lower);
      }
    }
    upto[h] = sat_add(upto[h - 1], exact);
    if (upto[h] > guard.max_objects)
      throw Error(ErrorKind::SizeGuard, "trees of height <= " + std::to_string(h) + " exceed the bound " +
                                            std::to_string(guard.max_objects));
  }

  std::vector<Tree> out;
  for (std::size_t s = 0; s < sig.size(); ++s)
    if (sig.arity[s] == 0 && depth >= 1) out.push_back(Tree{static_cast<Elem>(s), {}});
  std::size_t prev_end = 0;  // trees [0, prev_end) have height <= h-2
  for (std::size_t h = 2; h <= depth; ++h) {
    const std::size_t lower_end = out.size();  // trees [0, lower_end) have height <= h-1
    for (std::size_t s = 0; s < sig.size(); ++s) {
      const std::size_t n = sig.arity[s];
      if (n == 0 || lower_end == 0) continue;
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        const bool reaches = std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= prev_end; });
        if (reaches) {
          Tree t{static_cast<Elem>(s), {}};
          t.children.reserve(n);
          for (std::size_t i : idx) t.children.push_back(out[i]);
          out.push_back(std::move(t));
        }
        std::size_t pos = n;
        while (pos > 0 && ++idx[pos - 1] == lower_end) idx[--pos] = 0;
        if (pos == 0) break;
      }
    }
    prev_end = lower_end;
  }
  return out;
}

TruncatedLanguage::TruncatedLanguage(std::size_t alphabet, std::size_t depth, OmegaCarrier carrier,
                                     std::vector<OmegaValue> values)
    : alphabet_(alphabet), depth_(depth), carrier_(carrier), values_(std::move(values)) {
  if (values_.size() != word_count(alphabet_, depth_))
    throw Error(ErrorKind::ShapeMismatch, "language table has " + std::to_string(values_.size()) +
                                              " entries, expected " + std::to_string(word_count(alphabet_, depth_)));
  for (const auto& v : values_)
    if (!in_carrier(carrier_, v)) throw Error(ErrorKind::InvalidValue, "language value " + show(v) + " off carrier");
}

const OmegaValue& TruncatedLanguage::at(const Word& w) const {
  if (w.size() > depth_)
    throw Error(ErrorKind::DepthUnderflow, "word of length " + std::to_string(w.size()) +
                                               " looked up in a language truncated at " + std::to_string(depth_));
  return values_[word_index(w, alphabet_)];
}

LanguageComparison language_equal(const TruncatedLanguage& lhs, const TruncatedLanguage& rhs) {
  if (lhs.alphabet_size() != rhs.alphabet_size() || lhs.depth() != rhs.depth() || lhs.carrier() != rhs.carrier())
    throw Error(ErrorKind::ShapeMismatch, "languages differ in alphabet, depth or carrier");
  const auto words = enumerate_words(lhs.alphabet_size(), lhs.depth(), {lhs.values().size()});
  for (std::size_t i = 0; i < words.size(); ++i)
    if (lhs.values()[i] != rhs.values()[i]) return {false, words[i]};
  return {};
}

TruncatedTreeLanguage::TruncatedTreeLanguage(RankedAlphabet sig, std::size_t depth, OmegaCarrier carrier,
                                             std::vector<Tree> trees, std::vector<OmegaValue> values)
    : sig_(std::move(sig)), depth_(depth), carrier_(carrier), trees_(std::move(trees)), values_(std::move(values)) {
  if (trees_.size() != values_.size()) throw Error(ErrorKind::ShapeMismatch, "tree language table is not total");
}

const OmegaValue& TruncatedTreeLanguage::at(const Tree& t) const {
  auto it = std::find(trees_.begin(), trees_.end(), t);
  if (it == trees_.end()) throw Error(ErrorKind::DepthUnderflow, "tree outside the truncation");
  return values_[static_cast<std::size_t>(it - trees_.begin())];
}

std::string show(const Trace& t) {
  return "(" + show_word(t.word) + "," + (t.terminal == 0 ? "✓" : "✓" + std::to_string(t.terminal)) + ")";
}

}  // namespace cotrace
