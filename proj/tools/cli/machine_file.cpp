#include "machine_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cotrace::cli {

const char* to_string(MachineKind kind) noexcept {
  switch (kind) {
    case MachineKind::Moore: return "moore";
    case MachineKind::Generative: return "generative";
    case MachineKind::Tree: return "tree";
    case MachineKind::IO: return "io";
    case MachineKind::Generalized: return "generalized";
    case MachineKind::Strange: return "strange";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::Parse, path + ": " + msg);
}

const Json& member(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

const Json* optional_member(const Json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::string child(const std::string& path, const std::string& key) { return path + "." + key; }
std::string child(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const std::string& text(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get_ref<const std::string&>();
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

const Json& object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  return j;
}

std::size_t natural(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a natural number");
  return j.get<std::size_t>();
}

ElemUniverse universe(const Json& j, const std::string& path) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) names.push_back(text(j[i], child(path, i)));
  try {
    return ElemUniverse(std::move(names));
  } catch (const Error& e) {
    fail(path, e.detail());
  }
}

Elem lookup(const ElemUniverse& u, const std::string& name, const std::string& path, const char* what) {
  if (auto e = u.find(name)) return *e;
  throw Error(ErrorKind::UnknownSymbol, path + ": undeclared " + what + " '" + name + "'");
}

Elem lookup(const ElemUniverse& u, const Json& j, const std::string& path, const char* what) {
  return lookup(u, text(j, path), path, what);
}

Rational rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  try {
    return Rational::parse(text(j, path));
  } catch (const Error& e) {
    fail(path, e.detail());
  }
}

OmegaValue omega(OmegaCarrier c, const Json& j, const std::string& path) {
  if (c == OmegaCarrier::Bool) {
    if (!j.is_boolean()) fail(path, "expected true or false");
    return j.get<bool>();
  }
  Rational r = rational(j, path);
  if (r < Rational(0) || r > Rational(1)) fail(path, "value " + r.str() + " outside [0,1]");
  return r;
}

/// Pow: [e, ...]; SubDist: [[e, "p/q"], ...]; DoublePow: [[e, ...], ...].
template <class E, class F>
MonadValue<E> value(MonadKind kind, const Json& j, const std::string& path, F&& elem) {
  array(j, path);
  auto no_duplicates = [&](std::vector<E> xs, const std::string& where) {
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) fail(where, "duplicate entry");
  };
  switch (kind) {
    case MonadKind::Pow: {
      std::vector<E> xs;
      for (std::size_t i = 0; i < j.size(); ++i) xs.push_back(elem(j[i], child(path, i)));
      no_duplicates(xs, path);
      return MonadValue<E>::pow(std::move(xs));
    }
    case MonadKind::SubDist: {
      std::vector<std::pair<E, Rational>> entries;
      std::vector<E> xs;
      for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = child(path, i);
        if (!j[i].is_array() || j[i].size() != 2) fail(p, "expected [element, weight]");
        Rational w = rational(j[i][1], child(p, 1));
        if (w.sign() <= 0) fail(child(p, 1), "weights must be positive");
        entries.emplace_back(elem(j[i][0], child(p, 0)), std::move(w));
        xs.push_back(entries.back().first);
      }
      no_duplicates(xs, path);
      try {
        return MonadValue<E>::subdist(std::move(entries));
      } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.detail());
      }
    }
    case MonadKind::DoublePow: {
      std::vector<std::vector<E>> sets;
      for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = child(path, i);
        std::vector<E> inner;
        for (std::size_t k = 0; k < array(j[i], p).size(); ++k) inner.push_back(elem(j[i][k], child(p, k)));
        no_duplicates(inner, p);
        sets.push_back(std::move(inner));
      }
      auto sorted = sets;
      for (auto& s : sorted) std::sort(s.begin(), s.end());
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail(path, "duplicate entry");
      return MonadValue<E>::double_pow(std::move(sets));
    }
  }
  fail(path, "unknown monad");
}

template <class E, class F>
Json value_json(const MonadValue<E>& v, F&& elem) {
  Json out = Json::array();
  switch (v.kind()) {
    case MonadKind::Pow:
      for (const auto& e : v.elements()) out.push_back(elem(e));
      break;
    case MonadKind::SubDist:
      for (const auto& [e, w] : v.weights()) out.push_back(Json::array({elem(e), w.str()}));
      break;
    case MonadKind::DoublePow:
      for (const auto& s : v.sets()) {
        Json inner = Json::array();
        for (const auto& e : s) inner.push_back(elem(e));
        out.push_back(std::move(inner));
      }
      break;
  }
  return out;
}

// ---- Moore and generalized ------------------------------------------------

struct MooreParts {
  ElemUniverse states;
  ElemUniverse alphabet;
  Modality modality;
  std::vector<OmegaValue> outputs;
  std::vector<std::vector<MonadValue<StateId>>> transitions;
};

/// Omitted outputs are bottom, omitted transitions the empty value.
MooreParts moore_parts(const Json& doc, const std::vector<bool>* semantic = nullptr) {
  MooreParts p;
  p.states = universe(member(doc, "$", "states"), "$.states");
  p.alphabet = universe(member(doc, "$", "alphabet"), "$.alphabet");
  try {
    p.modality = parse_modality(text(member(doc, "$", "modality"), "$.modality"));
  } catch (const Error& e) {
    fail("$.modality", e.detail());
  }
  const MonadKind kind = kind_of(p.modality);
  const OmegaCarrier carrier = carrier_of(p.modality);
  p.outputs.assign(p.states.size(), omega_bottom(carrier));
  p.transitions.assign(p.states.size(), std::vector<MonadValue<StateId>>(p.alphabet.size(), MonadValue<StateId>::empty(kind)));

  auto check_ordinary = [&](StateId x, const std::string& path) {
    if (semantic && (*semantic)[x]) fail(path, "state '" + p.states.name(x) + "' is semantic");
  };
  if (const Json* outs = optional_member(doc, "outputs")) {
    for (const auto& [name, v] : object(*outs, "$.outputs").items()) {
      const std::string path = child("$.outputs", name);
      const StateId x = lookup(p.states, name, path, "state");
      check_ordinary(x, path);
      p.outputs[x] = omega(carrier, v, path);
    }
  }
  auto state = [&](const Json& j, const std::string& path) { return lookup(p.states, j, path, "state"); };
  if (const Json* ts = optional_member(doc, "transitions")) {
    for (const auto& [name, row] : object(*ts, "$.transitions").items()) {
      const std::string path = child("$.transitions", name);
      const StateId x = lookup(p.states, name, path, "state");
      check_ordinary(x, path);
      for (const auto& [letter, v] : object(row, path).items()) {
        const std::string lp = child(path, letter);
        p.transitions[x][lookup(p.alphabet, letter, lp, "letter")] = value<StateId>(kind, v, lp, state);
      }
    }
  }
  return p;
}

Json moore_json(const ElemUniverse& states, const ElemUniverse& alphabet, Modality modality,
                const std::vector<const OmegaValue*>& outputs,
                const std::vector<const std::vector<MonadValue<StateId>>*>& transitions) {
  Json doc;
  doc["states"] = states.names();
  doc["alphabet"] = alphabet.names();
  doc["modality"] = to_string(modality);
  Json outs = Json::object();
  Json ts = Json::object();
  auto state = [&](StateId y) { return states.name(y); };
  for (StateId x = 0; x < states.size(); ++x) {
    if (!outputs[x]) continue;
    outs[states.name(x)] = omega_json(*outputs[x]);
    Json row = Json::object();
    for (LetterId a = 0; a < alphabet.size(); ++a) row[alphabet.name(a)] = value_json((*transitions[x])[a], state);
    ts[states.name(x)] = std::move(row);
  }
  doc["outputs"] = std::move(outs);
  doc["transitions"] = std::move(ts);
  return doc;
}

MooreCoalgebra parse_moore(const Json& doc) {
  auto p = moore_parts(doc);
  return MooreCoalgebra(std::move(p.states), std::move(p.alphabet), p.modality, std::move(p.outputs),
                        std::move(p.transitions));
}

Json serialize_moore(const MooreCoalgebra& m) {
  std::vector<const OmegaValue*> outs;
  std::vector<const std::vector<MonadValue<StateId>>*> ts;
  for (StateId x = 0; x < m.states().size(); ++x) {
    outs.push_back(&m.outputs()[x]);
    ts.push_back(&m.transitions()[x]);
  }
  return moore_json(m.states(), m.alphabet(), m.modality(), outs, ts);
}

/// Semantic states: "languages": {state: {"depth": d, "values": [...]}} with
/// values in length-then-lexicographic word order.
GeneralizedCoalgebra parse_generalized(const Json& doc) {
  const ElemUniverse states = universe(member(doc, "$", "states"), "$.states");
  const ElemUniverse alphabet = universe(member(doc, "$", "alphabet"), "$.alphabet");
  std::vector<bool> semantic(states.size(), false);
  std::vector<std::optional<TruncatedLanguage>> langs(states.size());
  const Json* ls = optional_member(doc, "languages");
  const Modality modality = [&] {
    try {
      return parse_modality(text(member(doc, "$", "modality"), "$.modality"));
    } catch (const Error& e) {
      fail("$.modality", e.detail());
    }
  }();
  if (ls) {
    for (const auto& [name, lang] : object(*ls, "$.languages").items()) {
      const std::string path = child("$.languages", name);
      const StateId x = lookup(states, name, path, "state");
      const std::size_t depth = natural(member(lang, path, "depth"), child(path, "depth"));
      const Json& vals = array(member(lang, path, "values"), child(path, "values"));
      std::vector<OmegaValue> values;
      for (std::size_t i = 0; i < vals.size(); ++i)
        values.push_back(omega(carrier_of(modality), vals[i], child(child(path, "values"), i)));
      try {
        langs[x] = TruncatedLanguage(alphabet.size(), depth, carrier_of(modality), std::move(values));
      } catch (const Error& e) {
        fail(path, e.detail());
      }
      semantic[x] = true;
    }
  }
  auto p = moore_parts(doc, &semantic);
  std::vector<GeneralizedStep> steps;
  for (StateId x = 0; x < states.size(); ++x) {
    if (semantic[x])
      steps.emplace_back(std::move(*langs[x]));
    else
      steps.emplace_back(Observation<MonadValue<StateId>>{p.outputs[x], p.transitions[x]});
  }
  return GeneralizedCoalgebra(states, alphabet, modality, std::move(steps));
}

Json serialize_generalized(const GeneralizedCoalgebra& g) {
  std::vector<const OmegaValue*> outs;
  std::vector<const std::vector<MonadValue<StateId>>*> ts;
  Json langs = Json::object();
  for (StateId x = 0; x < g.states().size(); ++x) {
    if (const auto* lang = std::get_if<TruncatedLanguage>(&g.step(x))) {
      outs.push_back(nullptr);
      ts.push_back(nullptr);
      Json values = Json::array();
      for (const auto& v : lang->values()) values.push_back(omega_json(v));
      langs[g.states().name(x)] = Json{{"depth", lang->depth()}, {"values", std::move(values)}};
    } else {
      const auto& obs = std::get<Observation<MonadValue<StateId>>>(g.step(x));
      outs.push_back(&obs.output);
      ts.push_back(&obs.successors);
    }
  }
  Json doc = moore_json(g.states(), g.alphabet(), g.modality(), outs, ts);
  doc["languages"] = std::move(langs);
  return doc;
}

// ---- Generative -----------------------------------------------------------

GenerativeCoalgebra parse_generative(const Json& doc) {
  const ElemUniverse states = universe(member(doc, "$", "states"), "$.states");
  const ElemUniverse labels = universe(member(doc, "$", "labels"), "$.labels");
  const Json* terms = optional_member(doc, "terminals");
  const ElemUniverse terminals = terms ? universe(*terms, "$.terminals") : ElemUniverse({"✓"});
  MonadKind kind;
  try {
    kind = parse_monad_kind(text(member(doc, "$", "monad"), "$.monad"));
  } catch (const Error& e) {
    fail("$.monad", e.detail());
  }
  if (!is_monad(kind)) fail("$.monad", "generative machines need pow or subdist");

  // A move is a terminal name or [label, state].
  auto move = [&](const Json& j, const std::string& path) -> Move<StateId> {
    if (j.is_string()) return Terminal{lookup(terminals, j, path, "terminal")};
    if (!j.is_array() || j.size() != 2) fail(path, "expected a terminal name or [label, state]");
    return Emit<StateId>{lookup(labels, j[0], child(path, 0), "label"), lookup(states, j[1], child(path, 1), "state")};
  };
  std::vector<MonadValue<Move<StateId>>> c(states.size(), MonadValue<Move<StateId>>::empty(kind));
  if (const Json* ts = optional_member(doc, "transitions")) {
    for (const auto& [name, v] : object(*ts, "$.transitions").items()) {
      const std::string path = child("$.transitions", name);
      c[lookup(states, name, path, "state")] = value<Move<StateId>>(kind, v, path, move);
    }
  }
  return GenerativeCoalgebra(states, labels, terminals, kind, std::move(c));
}

Json serialize_generative(const GenerativeCoalgebra& g) {
  Json doc;
  doc["states"] = g.states().names();
  doc["labels"] = g.labels().names();
  doc["terminals"] = g.terminals().names();
  doc["monad"] = to_string(g.kind());
  auto move = [&](const Move<StateId>& m) -> Json {
    if (const auto* t = std::get_if<Terminal>(&m)) return g.terminals().name(t->id);
    const auto& e = std::get<Emit<StateId>>(m);
    return Json::array({g.labels().name(e.label), g.states().name(e.next)});
  };
  Json ts = Json::object();
  for (StateId x = 0; x < g.states().size(); ++x) ts[g.states().name(x)] = value_json(g.step(x), move);
  doc["transitions"] = std::move(ts);
  return doc;
}

// ---- Trees ----------------------------------------------------------------

TreeCoalgebra parse_tree(const Json& doc) {
  const ElemUniverse states = universe(member(doc, "$", "states"), "$.states");
  const Json& sig = array(member(doc, "$", "signature"), "$.signature");
  std::vector<std::string> names;
  std::vector<std::size_t> arity;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const std::string path = child("$.signature", i);
    if (!sig[i].is_array() || sig[i].size() != 2) fail(path, "expected [symbol, arity]");
    names.push_back(text(sig[i][0], child(path, 0)));
    arity.push_back(natural(sig[i][1], child(path, 1)));
  }
  RankedAlphabet ranked{universe(Json(names), "$.signature"), std::move(arity)};
  Modality modality;
  try {
    modality = parse_modality(text(member(doc, "$", "modality"), "$.modality"));
  } catch (const Error& e) {
    fail("$.modality", e.detail());
  }
  // A step is [symbol, child state, ...].
  auto step = [&](const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected [symbol, state, ...]");
    TreeStep s{lookup(ranked.symbols, j[0], child(path, 0), "symbol"), {}};
    if (j.size() - 1 != ranked.arity[s.symbol])
      fail(path, "symbol '" + ranked.symbols.name(s.symbol) + "' has arity " + std::to_string(ranked.arity[s.symbol]));
    for (std::size_t i = 1; i < j.size(); ++i) s.children.push_back(lookup(states, j[i], child(path, i), "state"));
    return s;
  };
  std::vector<MonadValue<TreeStep>> c(states.size(), MonadValue<TreeStep>::empty(kind_of(modality)));
  if (const Json* ts = optional_member(doc, "transitions")) {
    for (const auto& [name, v] : object(*ts, "$.transitions").items()) {
      const std::string path = child("$.transitions", name);
      c[lookup(states, name, path, "state")] = value<TreeStep>(kind_of(modality), v, path, step);
    }
  }
  return TreeCoalgebra(states, std::move(ranked), modality, std::move(c));
}

Json serialize_tree(const TreeCoalgebra& t) {
  Json doc;
  doc["states"] = t.states().names();
  Json sig = Json::array();
  for (Elem s = 0; s < t.signature().size(); ++s)
    sig.push_back(Json::array({t.signature().symbols.name(s), t.signature().arity[s]}));
  doc["signature"] = std::move(sig);
  doc["modality"] = to_string(t.modality());
  auto step = [&](const TreeStep& s) {
    Json out = Json::array({t.signature().symbols.name(s.symbol)});
    for (StateId y : s.children) out.push_back(t.states().name(y));
    return out;
  };
  Json ts = Json::object();
  for (StateId x = 0; x < t.states().size(); ++x) ts[t.states().name(x)] = value_json(t.step(x), step);
  doc["transitions"] = std::move(ts);
  return doc;
}

// ---- I/O systems ------------------------------------------------------------

IOSystem parse_io(const Json& doc) {
  const ElemUniverse states = universe(member(doc, "$", "states"), "$.states");
  const std::string& mode = text(member(doc, "$", "mode"), "$.mode");
  if (mode != "generative" && mode != "reactive") fail("$.mode", "expected generative or reactive");
  const Json& ops = array(member(doc, "$", "operations"), "$.operations");
  std::vector<std::string> names;
  IOSignature sig;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const std::string path = child("$.operations", i);
    names.push_back(text(member(ops[i], path, "name"), child(path, "name")));
    sig.arities.push_back(universe(member(ops[i], path, "arity"), child(path, "arity")));
  }
  sig.operations = universe(Json(names), "$.operations");
  const Json* ts = optional_member(doc, "transitions");

  if (mode == "generative") {
    std::vector<std::vector<OutputTransition>> c(states.size());
    if (ts)
      for (const auto& [name, row] : object(*ts, "$.transitions").items()) {
        const std::string path = child("$.transitions", name);
        auto& out = c[lookup(states, name, path, "state")];
        for (std::size_t i = 0; i < array(row, path).size(); ++i) {
          const std::string p = child(path, i);
          if (!row[i].is_array() || row[i].empty()) fail(p, "expected [operation, state, ...]");
          OutputTransition t{lookup(sig.operations, row[i][0], child(p, 0), "operation"), {}};
          if (row[i].size() - 1 != sig.arity(t.op))
            fail(p, "operation '" + sig.operations.name(t.op) + "' has arity " + std::to_string(sig.arity(t.op)));
          for (std::size_t k = 1; k < row[i].size(); ++k)
            t.continuations.push_back(lookup(states, row[i][k], child(p, k), "state"));
          if (std::find(out.begin(), out.end(), t) != out.end()) fail(p, "duplicate entry");
          out.push_back(std::move(t));
        }
      }
    return IOSystem::generative(states, std::move(sig), std::move(c));
  }
  std::vector<std::vector<std::vector<AnswerTransition>>> c(
      states.size(), std::vector<std::vector<AnswerTransition>>(sig.operations.size()));
  if (ts)
    for (const auto& [name, row] : object(*ts, "$.transitions").items()) {
      const std::string path = child("$.transitions", name);
      const StateId x = lookup(states, name, path, "state");
      for (const auto& [op, answers] : object(row, path).items()) {
        const std::string op_path = child(path, op);
        const Elem k = lookup(sig.operations, op, op_path, "operation");
        for (std::size_t i = 0; i < array(answers, op_path).size(); ++i) {
          const std::string p = child(op_path, i);
          if (!answers[i].is_array() || answers[i].size() != 2) fail(p, "expected [answer, state]");
          AnswerTransition t{lookup(sig.arities[k], answers[i][0], child(p, 0), "answer"),
                             lookup(states, answers[i][1], child(p, 1), "state")};
          if (std::find(c[x][k].begin(), c[x][k].end(), t) != c[x][k].end()) fail(p, "duplicate entry");
          c[x][k].push_back(t);
        }
      }
    }
  return IOSystem::reactive(states, std::move(sig), std::move(c));
}

Json serialize_io(const IOSystem& sys) {
  const auto& sig = sys.signature();
  Json doc;
  doc["states"] = sys.states().names();
  doc["mode"] = to_string(sys.mode());
  Json ops = Json::array();
  for (Elem k = 0; k < sig.operations.size(); ++k)
    ops.push_back(Json{{"name", sig.operations.name(k)}, {"arity", sig.arities[k].names()}});
  doc["operations"] = std::move(ops);
  Json ts = Json::object();
  for (StateId x = 0; x < sys.states().size(); ++x) {
    if (sys.mode() == IOMode::Generative) {
      Json row = Json::array();
      for (const auto& t : sys.outputs(x)) {
        Json e = Json::array({sig.operations.name(t.op)});
        for (StateId y : t.continuations) e.push_back(sys.states().name(y));
        row.push_back(std::move(e));
      }
      ts[sys.states().name(x)] = std::move(row);
    } else {
      Json row = Json::object();
      for (Elem k = 0; k < sig.operations.size(); ++k) {
        Json answers = Json::array();
        for (const auto& t : sys.answers(x, k))
          answers.push_back(Json::array({sig.arities[k].name(t.answer), sys.states().name(t.next)}));
        row[sig.operations.name(k)] = std::move(answers);
      }
      ts[sys.states().name(x)] = std::move(row);
    }
  }
  doc["transitions"] = std::move(ts);
  return doc;
}

MachineKind parse_kind(const Json& doc) {
  const std::string& k = text(member(doc, "$", "kind"), "$.kind");
  for (MachineKind m : {MachineKind::Moore, MachineKind::Generative, MachineKind::Tree, MachineKind::IO,
                        MachineKind::Generalized, MachineKind::Strange})
    if (k == to_string(m)) return m;
  fail("$.kind", "unknown machine kind '" + k + "'");
}

}  // namespace

Json omega_json(const OmegaValue& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b;
  return std::get<Rational>(v).str();
}

MachineFile parse_machine(const Json& doc) {
  if (!doc.is_object()) fail("$", "expected an object");
  const Json& version = member(doc, "$", "format");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    fail("$.format", "unsupported format version (expected " + std::to_string(kFormatVersion) + ")");
  const MachineKind kind = parse_kind(doc);
  switch (kind) {
    case MachineKind::Moore: return {kind, parse_moore(doc)};
    case MachineKind::Generative: return {kind, parse_generative(doc)};
    case MachineKind::Strange: {
      auto g = parse_generative(doc);
      if (g.kind() != MonadKind::Pow || g.labels().size() != 1 || g.terminals().size() != 1)
        fail("$", "strange machines need monad pow, one label and one terminal");
      return {kind, std::move(g)};
    }
    case MachineKind::Tree: return {kind, parse_tree(doc)};
    case MachineKind::IO: return {kind, parse_io(doc)};
    case MachineKind::Generalized: return {kind, parse_generalized(doc)};
  }
  fail("$.kind", "unknown machine kind");
}

MachineFile parse_machine_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return parse_machine(doc);
}

MachineFile load_machine(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_machine_text(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.detail());
  }
}

Json serialize(const MachineFile& file) {
  Json doc;
  doc["format"] = kFormatVersion;
  doc["kind"] = to_string(file.kind);
  Json body = std::visit(
      [](const auto& m) -> Json {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, MooreCoalgebra>) return serialize_moore(m);
        if constexpr (std::is_same_v<M, GenerativeCoalgebra>) return serialize_generative(m);
        if constexpr (std::is_same_v<M, TreeCoalgebra>) return serialize_tree(m);
        if constexpr (std::is_same_v<M, IOSystem>) return serialize_io(m);
        if constexpr (std::is_same_v<M, GeneralizedCoalgebra>) return serialize_generalized(m);
      },
      file.machine);
  for (auto& [k, v] : body.items()) doc[k] = v;
  return doc;
}

}  // namespace cotrace::cli
