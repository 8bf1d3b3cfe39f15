// pomlog: command-line front end to the pomlog library.
//
// Exit codes: 0 success or true, 1 false or counterexample, 2 input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pomlog/automaton.hpp"
#include "pomlog/concstate.hpp"
#include "pomlog/decomposition.hpp"
#include "pomlog/error.hpp"
#include "pomlog/formula.hpp"
#include "pomlog/harness.hpp"
#include "pomlog/pomset_json.hpp"
#include "pomlog/semantics.hpp"
#include "pomlog/translate.hpp"

using namespace pomlog;
using nlohmann::json;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Settings shared by every subcommand; --config supplies defaults and flags
// override them.
struct Common {
  std::string config;
  std::vector<std::string> alphabet;
  std::optional<std::size_t> k;
  std::optional<std::size_t> max_events;
  bool autoconcurrency_free = false;
  unsigned threads = 0;

  void load() {
    if (config.empty()) return;
    json j;
    try {
      j = json::parse(read_input(config));
    } catch (const json::exception& e) {
      throw InputError("config: " + std::string(e.what()));
    }
    if (alphabet.empty() && j.contains("alphabet"))
      alphabet = j["alphabet"].get<std::vector<std::string>>();
    if (!k && j.contains("k")) k = j["k"].get<std::size_t>();
    if (!max_events && j.contains("max_events")) max_events = j["max_events"].get<std::size_t>();
    if (!autoconcurrency_free && j.contains("autoconcurrency_free"))
      autoconcurrency_free = j["autoconcurrency_free"].get<bool>();
    if (threads == 0 && j.contains("threads")) threads = j["threads"].get<unsigned>();
  }

  std::optional<Alphabet> declared() const {
    if (alphabet.empty()) return std::nullopt;
    std::vector<std::string_view> names(alphabet.begin(), alphabet.end());
    std::vector<Label> labels;
    for (auto n : names) labels.emplace_back(n);
    return Alphabet(labels, true);
  }
  Alphabet alphabet_or(const Alphabet& fallback) const { return declared().value_or(fallback); }

  EnumSpec spec() const {
    EnumSpec s;
    s.alphabet = alphabet_or(Alphabet{"a", "b"});
    s.k = k.value_or(2);
    s.max_events = max_events.value_or(3);
    s.autoconcurrency_free = autoconcurrency_free;
    return s;
  }
};

void add_common(CLI::App* app, Common& c, bool enumeration) {
  app->add_option("--config", c.config, "JSON file with alphabet, k, max_events, ...");
  app->add_option("--alphabet", c.alphabet, "Labels, comma separated")->delimiter(',');
  app->add_option("-k", c.k, "Width bound");
  if (enumeration) {
    app->add_option("--max-events", c.max_events, "Largest pomset size");
    app->add_flag("--autoconcurrency-free", c.autoconcurrency_free,
                  "Only pomsets without concurrent equal labels");
    app->add_option("--threads", c.threads, "Worker threads (default POMLOG_THREADS or all)");
  }
}

// A pomset given as a JSON file, an ST-sequence or a conclist sequence.
struct PomsetInput {
  std::string file;
  std::string st;
  std::string conclists;

  void add(CLI::App* app, bool required = true) {
    auto* f = app->add_option("file", file, "Pomset JSON file, - for stdin");
    auto* s = app->add_option("--st", st, "ST-sequence, glued");
    auto* c = app->add_option("--conclists", conclists, "Conclist sequence, reconstructed");
    f->excludes(s)->excludes(c);
    s->excludes(c);
    if (required) app->require_option(1, 0);
  }
  bool given() const { return !file.empty() || !st.empty() || !conclists.empty(); }

  Pomset load() const {
    if (!st.empty()) return glue_sequence(parse_st_sequence(st));
    if (!conclists.empty()) return conclist_reconstruct(parse_conclist_sequence(conclists));
    const std::string text = read_input(file);
    if (!json::accept(text)) throw InputError(file + ": not valid JSON");
    return pomset_from_json(text);
  }
};

// ------------------------------------------------------------- commands

int cmd_validate(const PomsetInput& in) {
  Pomset p;
  try {
    p = in.load();
  } catch (const ValidationError& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return kFalse;
  }
  json out = json::object();
  out["valid"] = true;
  out["events"] = p.size();
  out["dimension"] = dimension(p);
  out["autoconcurrency_free"] = p.autoconcurrency_free();
  std::cout << out.dump() << "\n";
  return kTrue;
}

int cmd_decompose(const PomsetInput& in, bool json_out) {
  const Pomset p = in.load();
  const StSequence w = sparse_decompose(p);
  const ConclistSequence s = conclist_decompose(p);
  if (json_out) {
    std::cout << json{{"sparse", to_string(w)}, {"conclists", to_string(s)}}.dump() << "\n";
  } else {
    std::cout << to_string(w) << "\n" << to_string(s) << "\n";
  }
  return kTrue;
}

int cmd_glue(const std::vector<std::string>& files, const PomsetInput& in) {
  if (!files.empty()) {
    if (files.size() != 2) throw InputError("glue takes exactly two pomset files");
    Pomset acc = pomset_from_json(read_input(files[0]));
    acc = glue(acc, pomset_from_json(read_input(files[1])));
    std::cout << to_json(acc, 2) << "\n";
    return kTrue;
  }
  if (!in.given()) throw InputError("glue needs two files, --st or --conclists");
  std::cout << to_json(in.load(), 2) << "\n";
  return kTrue;
}

struct EvalArgs {
  std::string logic;
  std::string formula;
  std::string word;
  std::string event;
  std::vector<std::string> free_vars;
};

int cmd_eval(const EvalArgs& a, const PomsetInput& in, const Common& c) {
  const Logic logic = logic_from_string(a.logic);
  ParseOptions opts;
  if (auto sigma = c.declared()) opts.alphabet = sigma;
  if (c.k) opts.k = c.k;
  const FormulaPtr f = parse(logic, a.formula, opts);
  bool verdict = false;
  if (!a.word.empty()) {
    const StSequence w = parse_st_sequence(a.word);
    switch (logic) {
      case Logic::FoSt:
      case Logic::FoStExt:
        verdict = eval_fo_st(w, {}, *f);
        break;
      case Logic::LtlSt:
        verdict = eval_ltl_st(w, *f);
        break;
      case Logic::Sptl:
        verdict = eval_sptl_seq(conclist_sequence_of(w), *f);
        break;
      default:
        throw IncompatibleLogics(std::string(to_string(logic)) + " is not a word logic");
    }
  } else {
    const Pomset p = in.load();
    if (logic == Logic::Eptl) {
      if (a.event.empty()) throw InputError("eptl needs --event");
      verdict = eval_eptl(p, p.at(a.event), *f);
    } else {
      verdict = eval_on_pomset({logic, f}, p);
    }
  }
  std::cout << (verdict ? "true" : "false") << "\n";
  return verdict ? kTrue : kFalse;
}

struct TranslateArgs {
  std::string from, to, formula;
  bool stats = false;
};

int cmd_translate(const TranslateArgs& a, const Common& c) {
  const Logic from = logic_from_string(a.from);
  const Logic to = logic_from_string(a.to);
  const FormulaPtr f = parse(from, a.formula);
  const std::size_t k = c.k.value_or(2);
  FormulaPtr g;
  if (from == Logic::FoPomset && (to == Logic::FoStExt || to == Logic::FoSt))
    g = translate_fo_pomset_to_fo_st(f, k, c.alphabet_or(Alphabet{"a", "b"}));
  else if (from == Logic::LtlSt && to == Logic::Sptl)
    g = translate_ltl_st_to_sptl(f);
  else if (from == Logic::Sptl && to == Logic::MsoPomset)
    g = translate_sptl_to_bounded(f, k);
  else if (from == Logic::Sptl && to == Logic::FoPomset)
    g = translate_sptl_to_fo_pomset(f, k);
  else
    throw IncompatibleLogics("no translation from " + std::string(to_string(from)) + " to " +
                             std::string(to_string(to)));
  if (a.stats)
    std::cout << json{{"nodes", node_count(*g)}, {"depth", depth(*g)}}.dump() << "\n";
  else
    std::cout << print(g) << "\n";
  return kTrue;
}

struct EquivArgs {
  std::string logic_a, formula_a, logic_b, formula_b;
  std::optional<std::size_t> translate_k;
};

int cmd_equiv(const EquivArgs& a, const Common& c) {
  const Logic la = logic_from_string(a.logic_a);
  const Logic lb = logic_from_string(a.logic_b);
  const TaggedFormula fa{la, parse(la, a.formula_a)};
  const TaggedFormula fb{lb, parse(lb, a.formula_b)};
  const EquivReport r = check_equivalence(fa, fb, c.spec(), c.threads);
  std::cout << to_json(r) << "\n";
  return r.equivalent ? kTrue : kFalse;
}

struct AutomatonArgs {
  int i = 1, j = 1;
  std::string label = "a";
  std::string variant = "tracked";
  bool check = false, minimal = false, adjacency = false;
};

int cmd_same_event(const AutomatonArgs& a, const Common& c) {
  const Alphabet sigma = c.alphabet_or(Alphabet{"a", "b"});
  const auto variant =
      a.variant == "literal" ? SameEventVariant::Literal : SameEventVariant::Tracked;
  const auto s = build_same_event_dfa(a.i, a.j, Label(a.label), c.k.value_or(2), sigma, variant);
  Dfa d = a.minimal ? minimize(s.dfa) : trim(s.dfa);
  int code = kTrue;
  if (a.adjacency || !a.check) std::cout << to_adjacency(d);
  if (a.check) {
    const auto cert = check_counter_free(s.dfa);
    std::cout << to_json(cert) << "\n";
    code = cert.aperiodic ? kTrue : kFalse;
  }
  return code;
}

int cmd_even_repetition(const AutomatonArgs& a) {
  const Dfa d = even_repetition_dfa();
  int code = kTrue;
  if (a.adjacency || !a.check) std::cout << to_adjacency(d);
  if (a.check) {
    const auto cert = check_counter_free(d);
    std::cout << to_json(cert) << "\n";
    code = cert.aperiodic ? kTrue : kFalse;
  }
  return code;
}

struct GenArgs {
  bool random = false;
  std::uint64_t seed = 0;
  bool json_out = false;
  bool count = false;
};

int cmd_gen(const GenArgs& a, const Common& c) {
  EnumSpec spec = c.spec();
  const auto show = [&](const Pomset& p) {
    if (a.json_out)
      std::cout << to_json(p) << "\n";
    else
      std::cout << (p.empty() ? std::string("<empty>") : to_string(sparse_decompose(p))) << "\n";
  };
  if (a.random) {
    spec.seed = a.seed;
    show(random_pomset(spec));
    return kTrue;
  }
  const auto all = enumerate_pomsets(spec);
  if (a.count) {
    std::cout << all.size() << "\n";
    return kTrue;
  }
  for (const auto& p : all) show(p);
  return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval pomsets with interfaces: decompositions, logics, translations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pomlog 0.1.0");

  Common common;
  PomsetInput input;

  auto* validate_cmd = app.add_subcommand("validate", "Check a pomset description");
  input.add(validate_cmd);

  bool decompose_json = false, sparse = false;
  auto* decompose_cmd = app.add_subcommand("decompose", "Sparse ST and conclist decompositions");
  input.add(decompose_cmd);
  decompose_cmd->add_flag("--sparse", sparse, "Sparse decomposition (the default)");
  decompose_cmd->add_flag("--json", decompose_json, "JSON output");

  std::vector<std::string> glue_files;
  auto* glue_cmd = app.add_subcommand("glue", "Glue two pomsets or a sequence of letters");
  glue_cmd->add_option("--files", glue_files, "Two pomset JSON files")->expected(2);
  glue_cmd->add_option("--st", input.st, "ST-sequence");
  glue_cmd->add_option("--conclists", input.conclists, "Conclist sequence");

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a closed formula");
  eval_cmd
      ->add_option("--logic", eval_args.logic,
                   "fo-pomset, mso-pomset, fo-st, fo-st-ext, ltl-st, sptl, eptl, cptl")
      ->required();
  eval_cmd->add_option("--formula", eval_args.formula, "Formula text")->required();
  eval_cmd->add_option("--word", eval_args.word, "ST-sequence model for word logics");
  eval_cmd->add_option("--event", eval_args.event, "Event id (eptl)");
  input.add(eval_cmd, false);
  add_common(eval_cmd, common, false);

  TranslateArgs tr_args;
  auto* tr_cmd = app.add_subcommand("translate", "Translate a formula between logics");
  tr_cmd->add_option("--from", tr_args.from, "Source logic")->required();
  tr_cmd->add_option("--to", tr_args.to, "Target logic")->required();
  tr_cmd->add_option("--formula", tr_args.formula, "Formula text")->required();
  tr_cmd->add_flag("--stats", tr_args.stats, "Print node count and depth instead");
  add_common(tr_cmd, common, false);

  EquivArgs eq_args;
  auto* eq_cmd = app.add_subcommand("equiv", "Compare two formulas on enumerated pomsets");
  eq_cmd->add_option("--logic-a", eq_args.logic_a, "Logic of the first formula")->required();
  eq_cmd->add_option("--a", eq_args.formula_a, "First formula")->required();
  eq_cmd->add_option("--logic-b", eq_args.logic_b, "Logic of the second formula")->required();
  eq_cmd->add_option("--b", eq_args.formula_b, "Second formula")->required();
  add_common(eq_cmd, common, true);

  AutomatonArgs au_args;
  auto* au_cmd = app.add_subcommand("automaton", "Build and certify automata");
  au_cmd->require_subcommand(1);
  auto* se_cmd = au_cmd->add_subcommand("same-event", "The automaton A_{i,j,a}");
  se_cmd->add_option("--i", au_args.i, "Slot at the earlier position")->required();
  se_cmd->add_option("--j", au_args.j, "Slot at the later position")->required();
  se_cmd->add_option("--label", au_args.label, "Tracked label")->required();
  se_cmd->add_option("--variant", au_args.variant, "tracked or literal")
      ->check(CLI::IsMember({"tracked", "literal"}));
  add_common(se_cmd, common, false);
  auto* ev_cmd =
      au_cmd->add_subcommand("even-repetition", "Minimal automaton of ([a*,b*].[*a,*b])^2n");
  for (auto* cmd : {se_cmd, ev_cmd}) {
    cmd->add_flag("--check-counter-free", au_args.check, "Print the counter-freeness certificate");
    cmd->add_flag("--adjacency", au_args.adjacency, "Print transitions");
  }
  se_cmd->add_flag("--minimize", au_args.minimal, "Minimize before printing");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Enumerate or sample pomsets");
  gen_cmd->add_flag("--random", gen_args.random, "One random pomset");
  gen_cmd->add_option("--seed", gen_args.seed, "Seed for --random");
  gen_cmd->add_flag("--json", gen_args.json_out, "JSON lines instead of ST text");
  gen_cmd->add_flag("--count", gen_args.count, "Only the number of pomsets");
  add_common(gen_cmd, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kTrue : kInputError;
  }

  try {
    common.load();
    if (*validate_cmd) return cmd_validate(input);
    if (*decompose_cmd) return cmd_decompose(input, decompose_json);
    if (*glue_cmd) return cmd_glue(glue_files, input);
    if (*eval_cmd) return cmd_eval(eval_args, input, common);
    if (*tr_cmd) return cmd_translate(tr_args, common);
    if (*eq_cmd) return cmd_equiv(eq_args, common);
    if (*se_cmd) return cmd_same_event(au_args, common);
    if (*ev_cmd) return cmd_even_repetition(au_args);
    if (*gen_cmd) return cmd_gen(gen_args, common);
  } catch (const InputError& e) {
    std::cerr << "pomlog: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "pomlog: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "pomlog: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
