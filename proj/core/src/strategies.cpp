#include "cotrace/strategies.hpp"

#include <set>

namespace cotrace {

namespace {

void check_index(Elem e, std::size_t bound, const char* what) {
  if (e >= bound) throw Error(ErrorKind::UnknownSymbol, std::string(what) + " " + std::to_string(e));
}

template <class T>
void canonicalize(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_signature(const IOSignature& sig) {
  if (sig.arities.size() != sig.operations.size())
    throw Error(ErrorKind::ShapeMismatch, "every operation needs an arity set");
}

std::vector<Play> plays_after(const Strategy& s, Elem k, Elem i) {
  std::vector<Play> out;
  for (const Play& p : s.plays)
    if (p.size() >= 2 && p[0] == k && p[1] == i) out.emplace_back(p.begin() + 2, p.end());
  return out;
}

std::vector<Play> union_of(const std::vector<Strategy>& parts) {
  std::vector<Play> out;
  for (const auto& s : parts) out.insert(out.end(), s.plays.begin(), s.plays.end());
  canonicalize(out);
  return out;
}

}  // namespace

const char* to_string(IOMode mode) noexcept { return mode == IOMode::Generative ? "generative" : "reactive"; }

IOSystem IOSystem::generative(ElemUniverse states, IOSignature sig, std::vector<std::vector<OutputTransition>> c) {
  check_signature(sig);
  if (c.size() != states.size()) throw Error(ErrorKind::ShapeMismatch, "transition map is not total");
  for (auto& row : c) {
    for (const auto& t : row) {
      check_index(t.op, sig.operations.size(), "operation");
      if (t.continuations.size() != sig.arity(t.op))
        throw Error(ErrorKind::ShapeMismatch, "operation " + sig.operations.name(t.op) + " needs " +
                                                  std::to_string(sig.arity(t.op)) + " continuations");
      for (StateId y : t.continuations) check_index(y, states.size(), "state");
    }
    canonicalize(row);
  }
  IOSystem s;
  s.mode_ = IOMode::Generative;
  s.states_ = std::move(states);
  s.sig_ = std::move(sig);
  s.outputs_ = std::move(c);
  return s;
}

IOSystem IOSystem::reactive(ElemUniverse states, IOSignature sig,
                            std::vector<std::vector<std::vector<AnswerTransition>>> c) {
  check_signature(sig);
  if (c.size() != states.size()) throw Error(ErrorKind::ShapeMismatch, "transition map is not total");
  for (auto& row : c) {
    if (row.size() != sig.operations.size())
      throw Error(ErrorKind::ShapeMismatch, "reactive transitions must list every operation");
    for (Elem k = 0; k < row.size(); ++k) {
      for (const auto& t : row[k]) {
        check_index(t.answer, sig.arity(k), "answer");
        check_index(t.next, states.size(), "state");
      }
      canonicalize(row[k]);
    }
  }
  IOSystem s;
  s.mode_ = IOMode::Reactive;
  s.states_ = std::move(states);
  s.sig_ = std::move(sig);
  s.answers_ = std::move(c);
  return s;
}

const std::vector<OutputTransition>& IOSystem::outputs(StateId x) const {
  if (mode_ != IOMode::Generative) throw Error(ErrorKind::KindMismatch, "reactive system has no output transitions");
  check_index(x, states_.size(), "state");
  return outputs_[x];
}

const std::vector<AnswerTransition>& IOSystem::answers(StateId x, Elem k) const {
  if (mode_ != IOMode::Reactive) throw Error(ErrorKind::KindMismatch, "generative system has no answer transitions");
  check_index(x, states_.size(), "state");
  check_index(k, sig_.operations.size(), "operation");
  return answers_[x][k];
}

Strategy make_strategy(IOMode mode, std::size_t bound, std::vector<Play> plays) {
  canonicalize(plays);
  return {mode, bound, std::move(plays)};
}

std::string show_play(const Play& p, const IOSignature* sig) {
  if (p.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ".";
    if (!sig)
      out += std::to_string(p[i]);
    else if (i % 2 == 0)
      out += sig->operations.name(p[i]);
    else
      out += sig->arities[p[i - 1]].name(p[i]);
  }
  return out;
}

std::string show(const Strategy& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.plays.size(); ++i) out += (i ? "," : "") + show_play(s.plays[i]);
  return out + "}";
}

Strategy io_traces(const IOSystem& sys, StateId x, std::size_t bound) {
  check_index(x, sys.states().size(), "state");
  std::vector<Play> plays;
  if (sys.mode() == IOMode::Generative) {
    if (bound == 0) return {IOMode::Generative, 0, {}};
    for (const auto& t : sys.outputs(x)) {
      plays.push_back({t.op});
      for (Elem i = 0; i < t.continuations.size(); ++i)
        for (const Play& s : io_traces(sys, t.continuations[i], bound - 1).plays) {
          Play p{t.op, i};
          p.insert(p.end(), s.begin(), s.end());
          plays.push_back(std::move(p));
        }
    }
  } else {
    plays.emplace_back();
    if (bound > 0)
      for (Elem k = 0; k < sys.signature().operations.size(); ++k)
        for (const auto& t : sys.answers(x, k))
          for (const Play& s : io_traces(sys, t.next, bound - 1).plays) {
            Play p{k, t.answer};
            p.insert(p.end(), s.begin(), s.end());
            plays.push_back(std::move(p));
          }
  }
  return make_strategy(sys.mode(), bound, std::move(plays));
}

std::vector<Elem> strat_init(const Strategy& s) {
  std::vector<Elem> out;
  for (const Play& p : s.plays)
    if (s.mode == IOMode::Generative ? p.size() == 1 : !p.empty()) out.push_back(p[0]);
  canonicalize(out);
  return out;
}

Strategy strat_residual(const Strategy& s, Elem k, Elem i) {
  const bool enabled = s.mode == IOMode::Generative ? s.contains(Play{k}) : s.contains(Play{k, i});
  if (!enabled || s.bound == 0)
    throw Error(ErrorKind::NotInitial, "residual along " + std::to_string(k) + "." + std::to_string(i) +
                                           " of a strategy that cannot start with it");
  return make_strategy(s.mode, s.bound - 1, plays_after(s, k, i));
}

bool is_prefix_closed(const Strategy& s) {
  const bool generative = s.mode == IOMode::Generative;
  if (!generative && !s.contains(Play{})) return false;
  for (const Play& p : s.plays) {
    if (generative ? p.size() % 2 == 0 : p.size() % 2 == 1) return false;
    if ((p.size() + 1) / 2 > s.bound) return false;
    if (p.size() >= 2 + (generative ? 1 : 0) && !s.contains(Play(p.begin(), p.end() - 2))) return false;
  }
  return true;
}

LawReport check_strategy_coalgebra(const IOSystem& sys, std::size_t bound, TraceFunction successor_traces) {
  LawReport r{"strategy-coalgebra", {sys.states().size()}, true, 0, std::nullopt};
  const auto& sig = sys.signature();
  const bool generative = sys.mode() == IOMode::Generative;

  // Expected residual along (k, i) from x: the union of the successors'
  // strategies one operation shorter.
  auto successors = [sys, successor_traces, bound, generative](StateId x, Elem k, Elem i) {
    std::vector<Strategy> parts;
    if (generative) {
      for (const auto& t : sys.outputs(x))
        if (t.op == k) parts.push_back(successor_traces(sys, t.continuations[i], bound - 1));
    } else {
      for (const auto& t : sys.answers(x, k))
        if (t.answer == i) parts.push_back(successor_traces(sys, t.next, bound - 1));
    }
    return union_of(parts);
  };
  auto residual = [sys, bound](StateId x, Elem k, Elem i) {
    return strat_residual(io_traces(sys, x, bound), k, i).plays;
  };
  auto fail = [&](std::string input, std::function<std::pair<std::string, std::string>()> again) {
    auto [l, rv] = again();
    r.holds = false;
    r.counterexample = Counterexample{std::move(input), std::move(l), std::move(rv), std::move(again)};
  };
  auto show_plays = [](const std::vector<Play>& ps) { return show(Strategy{IOMode::Generative, 0, ps}); };
  auto show_ops = [](const std::vector<Elem>& ks) {
    std::string out = "{";
    for (std::size_t i = 0; i < ks.size(); ++i) out += (i ? "," : "") + std::to_string(ks[i]);
    return out + "}";
  };

  for (StateId x = 0; x < sys.states().size(); ++x) {
    const Strategy sigma = io_traces(sys, x, bound);
    ++r.inputs_checked;
    if (!is_prefix_closed(sigma)) {
      const std::string shown = show(sigma);
      fail("prefix closure at state " + std::to_string(x), [shown] { return std::pair{shown, std::string("closed")}; });
      return r;
    }

    std::vector<Elem> enabled;
    if (bound > 0) {
      if (generative)
        for (const auto& t : sys.outputs(x)) enabled.push_back(t.op);
      else
        for (Elem k = 0; k < sig.operations.size(); ++k)
          if (!sys.answers(x, k).empty()) enabled.push_back(k);
    }
    canonicalize(enabled);
    ++r.inputs_checked;
    if (strat_init(sigma) != enabled) {
      fail("Init at state " + std::to_string(x), [sys, bound, x, enabled, show_ops] {
        return std::pair{show_ops(strat_init(io_traces(sys, x, bound))), show_ops(enabled)};
      });
      return r;
    }

    for (Elem k : enabled) {
      for (Elem i = 0; i < sig.arity(k); ++i) {
        if (!generative && !sigma.contains(Play{k, i})) continue;
        ++r.inputs_checked;
        if (residual(x, k, i) != successors(x, k, i)) {
          fail("residual at state " + std::to_string(x) + " along " + std::to_string(k) + "." + std::to_string(i),
               [residual, successors, show_plays, x, k, i] {
                 return std::pair{show_plays(residual(x, k, i)), show_plays(successors(x, k, i))};
               });
          return r;
        }
      }
    }
  }
  return r;
}

std::vector<std::pair<Elem, Elem>> rho4_iso(const NonEmptyFamily& family) {
  std::vector<std::pair<Elem, Elem>> out;
  for (const auto& [j, ys] : family) {
    if (ys.empty()) throw Error(ErrorKind::InvalidValue, "family member " + std::to_string(j) + " is empty");
    for (Elem x : ys) out.emplace_back(j, x);
  }
  canonicalize(out);
  return out;
}

NonEmptyFamily rho4_iso_inverse(const std::vector<std::pair<Elem, Elem>>& r) {
  auto sorted = r;
  canonicalize(sorted);
  return sigma_sharp(
      sorted, [](Elem, Elem x) { return std::vector<Elem>{x}; },
      [](std::vector<Elem> a, const std::vector<Elem>& b) {
        a.insert(a.end(), b.begin(), b.end());
        canonicalize(a);
        return a;
      });
}

DeterminisedIO determinise_io(const IOSystem& sys, StateId start) {
  if (sys.mode() != IOMode::Generative)
    throw Error(ErrorKind::Unsupported, "determinisation is defined for generative systems");
  check_index(start, sys.states().size(), "state");
  const auto& sig = sys.signature();
  std::vector<std::vector<StateId>> subsets;
  std::map<std::vector<StateId>, StateId> index;
  auto intern = [&](std::vector<StateId> u) {
    canonicalize(u);
    auto [it, fresh] = index.emplace(u, static_cast<StateId>(subsets.size()));
    if (fresh) subsets.push_back(std::move(u));
    return it->second;
  };
  intern({start});
  std::vector<std::vector<OutputTransition>> c;
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    std::map<Elem, std::vector<std::vector<StateId>>> merged;  // op -> position -> states
    const auto members = subsets[s];  // intern() below may grow `subsets`
    for (StateId x : members)
      for (const auto& t : sys.outputs(x)) {
        auto& slots = merged.try_emplace(t.op, sig.arity(t.op)).first->second;
        for (std::size_t i = 0; i < t.continuations.size(); ++i) slots[i].push_back(t.continuations[i]);
      }
    std::vector<OutputTransition> row;
    for (auto& [op, slots] : merged) {
      OutputTransition t{op, {}};
      for (auto& u : slots) t.continuations.push_back(intern(std::move(u)));
      row.push_back(std::move(t));
    }
    c.push_back(std::move(row));
  }
  std::vector<std::string> names;
  for (const auto& u : subsets) {
    std::string n = "{";
    for (std::size_t i = 0; i < u.size(); ++i) n += (i ? "," : "") + sys.states().name(u[i]);
    names.push_back(n + "}");
  }
  return {IOSystem::generative(ElemUniverse(std::move(names)), sig, std::move(c)), std::move(subsets)};
}

}  // namespace cotrace
