#include "commands.hpp"

#include <chrono>

#include "report.hpp"

namespace cotrace::cli {

namespace {

[[noreturn]] void mismatch(const std::string& msg) { throw Error(ErrorKind::KindMismatch, msg); }

std::size_t require_depth(const CommandOptions& opt) {
  if (!opt.depth) throw Error(ErrorKind::Parse, opt.command + " needs --depth");
  return *opt.depth;
}

MachineFile require_machine(const CommandOptions& opt) {
  if (!opt.file) throw Error(ErrorKind::Parse, opt.command + " needs a machine file");
  return load_machine(*opt.file);
}

/// The states to report: the --state one, or all of them.
std::vector<StateId> selected(const CommandOptions& opt, const ElemUniverse& states) {
  if (opt.state) return {states.at(*opt.state, "state")};
  std::vector<StateId> all(states.size());
  for (StateId x = 0; x < all.size(); ++x) all[x] = x;
  return all;
}

std::string default_engine(MachineKind kind) {
  switch (kind) {
    case MachineKind::Moore:
    case MachineKind::Generative: return "em";
    case MachineKind::Tree:
    case MachineKind::Strange: return "logic";
    case MachineKind::Generalized: return "cia";
    case MachineKind::IO: break;
  }
  mismatch("io systems have no language semantics; use the strategies command");
}

[[noreturn]] void engine_mismatch(const std::string& engine, MachineKind kind) {
  mismatch("engine '" + engine + "' does not apply to " + to_string(kind) + " machines");
}

Json semantics(const CommandOptions& opt) {
  const auto file = require_machine(opt);
  const std::size_t depth = require_depth(opt);
  const std::string engine = opt.engine.value_or(default_engine(file.kind));
  Json out;
  out["engine"] = engine;
  Json states = Json::array();

  if (const auto* m = std::get_if<MooreCoalgebra>(&file.machine)) {
    for (StateId x : selected(opt, m->states())) {
      TruncatedLanguage lang = [&] {
        if (engine == "em") return em_language_bt(*m, x, depth);
        if (engine == "logic") return logic_language_word(*m, x, depth);
        if (engine == "cia") return cia_language(GeneralizedCoalgebra::from_moore(*m), x, depth);
        engine_mismatch(engine, file.kind);
      }();
      states.push_back(Json{{"state", m->states().name(x)}, {"language", language_json(lang, m->alphabet())}});
    }
  } else if (const auto* g = std::get_if<GenerativeCoalgebra>(&file.machine)) {
    const bool strange = file.kind == MachineKind::Strange;
    for (StateId x : selected(opt, g->states())) {
      Json s{{"state", g->states().name(x)}};
      if (engine == "em") {
        s["language"] = language_json(em_language_ta(*g, x, depth), g->labels());
      } else if (engine == "logic") {
        s["language"] = language_json(
            strange ? logic_language_strange(*g, x, depth) : logic_language_generative(*g, x, depth), g->labels());
      } else if (engine == "kleisli") {
        const auto ts = kleisli_traces(*g, x, depth);
        s["traces"] = traces_json(ts, g->labels(), g->terminals());
        if (g->terminals().size() == 1) s["language"] = language_json(kbar(ts, g->labels().size()), g->labels());
        if (g->kind() == MonadKind::SubDist) s["retained_mass"] = ts.traces.mass().str();
      } else {
        engine_mismatch(engine, file.kind);
      }
      states.push_back(std::move(s));
    }
  } else if (const auto* t = std::get_if<TreeCoalgebra>(&file.machine)) {
    if (engine != "logic") engine_mismatch(engine, file.kind);
    for (StateId x : selected(opt, t->states()))
      states.push_back(
          Json{{"state", t->states().name(x)}, {"language", tree_language_json(logic_language_tree(*t, x, depth))}});
  } else if (const auto* c = std::get_if<GeneralizedCoalgebra>(&file.machine)) {
    if (engine != "cia") engine_mismatch(engine, file.kind);
    for (StateId x : selected(opt, c->states()))
      states.push_back(
          Json{{"state", c->states().name(x)}, {"language", language_json(cia_language(*c, x, depth), c->alphabet())}});
  } else {
    default_engine(file.kind);
  }
  out["states"] = std::move(states);
  return out;
}

Json compare(const CommandOptions& opt) {
  const auto file = require_machine(opt);
  const std::size_t depth = require_depth(opt);
  if (const auto* m = std::get_if<MooreCoalgebra>(&file.machine))
    return semantics_report_json(compare_semantics(*m, depth), m->states(), m->alphabet());
  if (const auto* g = std::get_if<GenerativeCoalgebra>(&file.machine)) {
    const LogicKind logic = file.kind == MachineKind::Strange ? LogicKind::Strange : LogicKind::Standard;
    return semantics_report_json(compare_semantics(*g, depth, logic), g->states(), g->labels(), &g->terminals());
  }
  mismatch(std::string("compare does not apply to ") + to_string(file.kind) + " machines");
}

Json laws(const CommandOptions& opt) {
  if (!opt.seed) throw Error(ErrorKind::Parse, "laws needs --seed");
  LawOptions lo;
  lo.seed = *opt.seed;
  const std::vector<std::size_t> carriers{0, 1, 2, 3};
  Json reports = Json::array();
  auto add = [&](const LawReport& r, Json config) {
    Json j = law_json(r);
    j["config"] = std::move(config);
    reports.push_back(std::move(j));
  };
  auto moore_laws = [&](Modality alg, std::size_t alphabet) {
    const Json config{{"modality", to_string(alg)}, {"alphabet", alphabet}};
    if (is_monad(kind_of(alg))) add(check_em_law(alg, alphabet, carriers, lo, CanonicalKappa{alg}), config);
    if (alg == Modality::Join || alg == Modality::Meet)
      add(check_pentagon_em_logic({alg, alg, alphabet}, carriers, lo), config);
  };
  auto generative_laws = [&](MonadKind kind, std::size_t labels, std::size_t terminals, bool strange) {
    const Json config{{"monad", to_string(kind)}, {"labels", labels}, {"terminals", terminals}};
    add(check_kl_law(kind, labels, terminals, carriers, lo, CanonicalLambda{kind}), config);
    add(check_extension_square(kind, labels, terminals, carriers, lo, CanonicalRho2{labels}), config);
    add(check_extension_requirement(kind, labels, terminals, carriers, lo, CanonicalRho2{labels},
                                    CanonicalLambda{kind}),
        config);
    if (kind == MonadKind::Pow && terminals == 1 && labels > 0)
      add(check_pentagon_kl_logic(word_logic_config(labels), carriers, lo), config);
    if (strange) add(check_pentagon_kl_logic(strange_logic_config(), carriers, lo), config);
  };

  if (!opt.file) {
    for (std::size_t a = 0; a <= 2; ++a) {
      for (Modality alg : {Modality::Join, Modality::Meet, Modality::Expect}) moore_laws(alg, a);
      for (MonadKind kind : {MonadKind::Pow, MonadKind::SubDist}) generative_laws(kind, a, 1, false);
    }
    add(check_pentagon_kl_logic(strange_logic_config(), carriers, lo), Json{{"monad", "pow"}, {"labels", 1}});
  } else {
    const auto file = load_machine(*opt.file);
    if (const auto* m = std::get_if<MooreCoalgebra>(&file.machine)) {
      moore_laws(m->modality(), m->alphabet().size());
    } else if (const auto* g = std::get_if<GenerativeCoalgebra>(&file.machine)) {
      generative_laws(g->kind(), g->labels().size(), g->terminals().size(), file.kind == MachineKind::Strange);
    } else if (const auto* c = std::get_if<GeneralizedCoalgebra>(&file.machine)) {
      moore_laws(c->modality(), c->alphabet().size());
    }
  }
  bool all = true;
  for (const auto& r : reports) all = all && r["holds"].get<bool>();
  return Json{{"seed", lo.seed}, {"all_hold", all}, {"reports", std::move(reports)}};
}

Json strategies(const CommandOptions& opt) {
  const auto file = require_machine(opt);
  const std::size_t bound = require_depth(opt);
  const auto* sys = std::get_if<IOSystem>(&file.machine);
  if (!sys) mismatch(std::string("strategies needs an io system, got ") + to_string(file.kind));
  Json states = Json::array();
  for (StateId x : selected(opt, sys->states()))
    states.push_back(Json{{"state", sys->states().name(x)},
                          {"strategy", strategy_json(io_traces(*sys, x, bound), sys->signature())}});
  return Json{{"bound", bound},
              {"states", std::move(states)},
              {"coherence", law_json(check_strategy_coalgebra(*sys, bound))}};
}

Json counterexample(const CommandOptions& opt) {
  const auto g = strange_example();
  const std::size_t depth = opt.depth.value_or(6);
  const auto r = compare_semantics(g, depth, LogicKind::Strange);
  Json out = semantics_report_json(r, g.states(), g.labels(), &g.terminals());
  Json separated = Json::array();
  for (const auto& [x, y] : r.log_equal_kl_distinct)
    separated.push_back(g.states().name(x) + " and " + g.states().name(y) +
                        " are log-equal under the strange logic but kl-distinct");
  out["separation"] = std::move(separated);
  return out;
}

CommandResult determinise(const CommandOptions& opt) {
  const auto file = require_machine(opt);
  std::string text;
  Json subsets = Json::array();
  if (const auto* m = std::get_if<MooreCoalgebra>(&file.machine)) {
    const StateId start = opt.state ? m->states().at(*opt.state, "state") : 0;
    const auto d = determinise_bt(*m, start);
    for (const auto& u : d.subsets) subsets.push_back(subset_name(u, m->states()));
    text = dot(d, m->states());
  } else if (const auto* sys = std::get_if<IOSystem>(&file.machine)) {
    const StateId start = opt.state ? sys->states().at(*opt.state, "state") : 0;
    const auto d = determinise_io(*sys, start);
    for (const auto& u : d.subsets) subsets.push_back(subset_name(u, sys->states()));
    text = dot(d);
  } else {
    mismatch(std::string("determinise does not apply to ") + to_string(file.kind) + " machines");
  }
  if (opt.dot) return {Json(), std::move(text)};
  return {Json{{"subsets", std::move(subsets)}, {"dot", std::move(text)}}, std::nullopt};
}

}  // namespace

GenerativeCoalgebra strange_example() {
  using MV = MonadValue<Move<StateId>>;
  return GenerativeCoalgebra(ElemUniverse({"x", "y"}), ElemUniverse({"•"}), ElemUniverse({"*"}), MonadKind::Pow,
                             {MV::pow({Terminal{0}}), MV::pow({Terminal{0}, Emit<StateId>{0, 1}})});
}

CommandResult run_command(const CommandOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  if (opt.command == "semantics")
    result.report = semantics(opt);
  else if (opt.command == "compare")
    result.report = compare(opt);
  else if (opt.command == "laws")
    result.report = laws(opt);
  else if (opt.command == "strategies")
    result.report = strategies(opt);
  else if (opt.command == "counterexample")
    result.report = counterexample(opt);
  else if (opt.command == "determinise")
    result = determinise(opt);
  else
    throw Error(ErrorKind::Parse, "unknown command '" + opt.command + "'");
  if (result.text) return result;

  Json echo{{"command", opt.command}};
  if (opt.file) echo["file"] = *opt.file;
  if (opt.depth) echo["depth"] = *opt.depth;
  if (opt.state) echo["state"] = *opt.state;
  if (opt.engine) echo["engine"] = *opt.engine;
  if (opt.seed) echo["seed"] = *opt.seed;
  Json report{{"request", std::move(echo)}};
  for (auto& [k, v] : result.report.items()) report[k] = v;
  report["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  result.report = std::move(report);
  return result;
}

}  // namespace cotrace::cli
