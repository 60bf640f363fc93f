#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace cotrace::testing {

namespace {

/// Leaf collector for the three modalities.
struct Accumulator {
  Modality alg;
  bool any = false;
  bool all = true;
  Rational sum;

  void leaf(const Rational& weight, const OmegaValue& v) {
    if (alg == Modality::Expect) {
      sum += weight * std::get<Rational>(v);
    } else {
      any = any || std::get<bool>(v);
      all = all && std::get<bool>(v);
    }
  }

  OmegaValue result() const {
    switch (alg) {
      case Modality::Join: return any;
      case Modality::Meet: return all;
      case Modality::Expect: return sum;
      case Modality::JoinMeet: break;
    }
    throw Error(ErrorKind::Unsupported, "oracle has no JoinMeet mode");
  }
};

template <class F>
void successors(const MonadValue<StateId>& v, F&& f) {
  for (StateId y : v.elements()) f(y, Rational(1));
  for (const auto& [y, p] : v.weights()) f(y, p);
}

}  // namespace

OmegaValue moore_path_oracle(const MooreCoalgebra& m, StateId x, const Word& w) {
  Accumulator acc{m.modality()};
  std::function<void(StateId, std::size_t, Rational)> walk = [&](StateId y, std::size_t i, Rational p) {
    if (i == w.size()) {
      acc.leaf(p, m.outputs()[y]);
      return;
    }
    successors(m.transitions()[y][w[i]], [&](StateId z, const Rational& q) { walk(z, i + 1, p * q); });
  };
  walk(x, 0, Rational(1));
  return acc.result();
}

OmegaValue generalized_path_oracle(const GeneralizedCoalgebra& g, StateId x, const Word& w) {
  Accumulator acc{g.modality()};
  std::function<void(StateId, std::size_t, Rational)> walk = [&](StateId y, std::size_t i, Rational p) {
    const auto& step = g.step(y);
    if (const auto* lang = std::get_if<TruncatedLanguage>(&step)) {
      // The remaining suffix t of the trace s.t.
      const Word t(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
      const auto words = enumerate_words(lang->alphabet_size(), lang->depth());
      const auto pos = std::find(words.begin(), words.end(), t) - words.begin();
      acc.leaf(p, lang->values()[static_cast<std::size_t>(pos)]);
      return;
    }
    const auto& obs = std::get<Observation<MonadValue<StateId>>>(step);
    if (i == w.size()) {
      acc.leaf(p, obs.output);
      return;
    }
    successors(obs.successors[w[i]], [&](StateId z, const Rational& q) { walk(z, i + 1, p * q); });
  };
  walk(x, 0, Rational(1));
  return acc.result();
}

std::map<Trace, Rational> generative_run_oracle(const GenerativeCoalgebra& g, StateId x, std::size_t depth) {
  std::map<Trace, Rational> out;
  std::function<void(StateId, Word&, Rational)> walk = [&](StateId y, Word& prefix, Rational p) {
    auto visit = [&](const Move<StateId>& m, const Rational& q) {
      if (const auto* t = std::get_if<Terminal>(&m)) {
        Rational& slot = out[Trace{prefix, t->id}];
        slot = g.kind() == MonadKind::Pow ? Rational(1) : slot + p * q;
        return;
      }
      const auto& e = std::get<Emit<StateId>>(m);
      if (prefix.size() == depth) return;
      prefix.push_back(e.label);
      walk(e.next, prefix, p * q);
      prefix.pop_back();
    };
    for (const auto& m : g.step(y).elements()) visit(m, Rational(1));
    for (const auto& [m, q] : g.step(y).weights()) visit(m, q);
  };
  Word prefix;
  walk(x, prefix, Rational(1));
  return out;
}

OmegaValue generative_word_oracle(const GenerativeCoalgebra& g, StateId x, const Word& w) {
  bool any = false;
  Rational sum;
  std::function<void(StateId, std::size_t, Rational)> walk = [&](StateId y, std::size_t i, Rational p) {
    auto visit = [&](const Move<StateId>& m, const Rational& q) {
      if (std::holds_alternative<Terminal>(m)) {
        if (i == w.size()) {
          any = true;
          sum += p * q;
        }
        return;
      }
      const auto& e = std::get<Emit<StateId>>(m);
      if (i < w.size() && e.label == w[i]) walk(e.next, i + 1, p * q);
    };
    for (const auto& m : g.step(y).elements()) visit(m, Rational(1));
    for (const auto& [m, q] : g.step(y).weights()) visit(m, q);
  };
  walk(x, 0, Rational(1));
  if (g.kind() == MonadKind::Pow) return any;
  return sum;
}

bool tree_run_oracle(const TreeCoalgebra& c, StateId x, const Tree& t) {
  // Flatten in preorder; children[i] holds node indices.
  std::vector<const Tree*> nodes;
  std::vector<std::vector<std::size_t>> children;
  std::function<std::size_t(const Tree&)> flatten = [&](const Tree& n) {
    const std::size_t id = nodes.size();
    nodes.push_back(&n);
    children.emplace_back();
    for (const Tree& ch : n.children) {
      const std::size_t cid = flatten(ch);
      children[id].push_back(cid);
    }
    return id;
  };
  flatten(t);

  const std::size_t states = c.states().size();
  std::vector<StateId> label(nodes.size(), 0);
  label[0] = x;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < nodes.size() && ok; ++i) {
      TreeStep want{nodes[i]->symbol, {}};
      for (std::size_t ch : children[i]) want.children.push_back(label[ch]);
      const auto& allowed = c.step(label[i]).elements();
      ok = std::find(allowed.begin(), allowed.end(), want) != allowed.end();
    }
    if (ok) return true;
    // Next labelling of nodes 1..n-1, odometer style.
    std::size_t pos = 1;
    while (pos < nodes.size() && ++label[pos] == states) label[pos++] = 0;
    if (pos >= nodes.size()) return false;
  }
}

namespace {

bool witnessed(const IOSystem& sys, StateId x, const Play& p, std::size_t pos) {
  if (sys.mode() == IOMode::Generative) {
    for (const auto& t : sys.outputs(x)) {
      if (t.op != p[pos]) continue;
      if (pos + 1 == p.size()) return true;
      if (witnessed(sys, t.continuations[p[pos + 1]], p, pos + 2)) return true;
    }
    return false;
  }
  if (pos == p.size()) return true;
  for (const auto& t : sys.answers(x, p[pos]))
    if (t.answer == p[pos + 1] && witnessed(sys, t.next, p, pos + 2)) return true;
  return false;
}

}  // namespace

std::vector<Play> play_oracle(const IOSystem& sys, StateId x, std::size_t bound) {
  const auto& sig = sys.signature();
  const bool generative = sys.mode() == IOMode::Generative;
  // Candidates: every alternating sequence with at most `bound` operations.
  std::vector<Play> candidates;
  std::vector<Play> frontier{{}};
  if (!generative) candidates.push_back({});
  for (std::size_t round = 0; round < bound; ++round) {
    std::vector<Play> longer;
    for (const Play& p : frontier)
      for (Elem k = 0; k < sig.operations.size(); ++k) {
        if (generative) {
          Play q = p;
          q.push_back(k);
          candidates.push_back(q);
        }
        for (Elem i = 0; i < sig.arity(k); ++i) {
          Play q = p;
          q.push_back(k);
          q.push_back(i);
          longer.push_back(q);
          if (!generative) candidates.push_back(q);
        }
      }
    frontier = std::move(longer);
  }
  std::vector<Play> out;
  for (const Play& p : candidates)
    if (witnessed(sys, x, p, 0)) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cotrace::testing
