#include "cli.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "indshape/fol/classify.hpp"
#include "indshape/fol/dnf.hpp"
#include "indshape/fol/parse.hpp"
#include "indshape/fol/print.hpp"
#include "indshape/model/nat_eval.hpp"
#include "indshape/model/zx_eval.hpp"
#include "indshape/prover/prover.hpp"
#include "indshape/schemes/schemes.hpp"
#include "indshape/transforms/kaye.hpp"
#include "indshape/transforms/transforms.hpp"

namespace indshape::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Optional per-directory defaults, one key=value per line, # comments.
std::map<std::string, std::string> load_config() {
  std::map<std::string, std::string> out;
  std::ifstream in("indshape.conf");
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t pos = t.find('=');
    if (pos == std::string::npos) continue;
    out[trim(t.substr(0, pos))] = trim(t.substr(pos + 1));
  }
  return out;
}

// Inline text, or the contents of a file when the argument is @path.
std::string read_arg_text(const std::string& s) {
  if (s.empty() || s[0] != '@') return s;
  std::ifstream in(s.substr(1));
  if (!in) throw UsageError("cannot read file '" + s.substr(1) + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

fol::FormulaPtr parse_arg_formula(const std::string& s) {
  try {
    return fol::parse_formula(read_arg_text(s));
  } catch (const fol::ParseError& e) {
    throw UsageError("bad formula: " + std::string(e.what()));
  }
}

fol::FormulaPtr parse_arg_template(const std::string& s) {
  try {
    return fol::parse_template(read_arg_text(s));
  } catch (const fol::ParseError& e) {
    throw UsageError("bad template: " + std::string(e.what()));
  }
}

schemes::Notion parse_notion_arg(const std::string& s) {
  auto n = schemes::Notion::parse(s);
  if (!n) throw UsageError("bad notion '" + s + "'");
  return *n;
}

std::vector<std::string> split_params(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

std::vector<std::string> default_params(const fol::FormulaPtr& f, const std::string& var) {
  std::vector<std::string> out;
  for (const auto& v : fol::free_vars(f))
    if (v != var) out.push_back(v);  // set iteration gives sorted order
  return out;
}

struct ProverOpts {
  bool force_builtin = false;
  std::string external;
  double timeout = 30;
  std::size_t max_clauses = 50000;
  double max_seconds = 10;
  bool trace = false;
};

prover::Backend make_backend(const ProverOpts& o, const std::map<std::string, std::string>& cfg) {
  if (!o.force_builtin) {
    if (!o.external.empty()) return prover::Backend::external(o.external, o.timeout);
    if (auto env = prover::external_command_from_env())
      return prover::Backend::external(*env, o.timeout);
    auto it = cfg.find("prover_cmd");
    if (it != cfg.end() && !it->second.empty())
      return prover::Backend::external(it->second, o.timeout);
  }
  prover::BuiltinLimits lim;
  lim.max_clauses = o.max_clauses;
  lim.max_seconds = o.max_seconds;
  return prover::Backend::builtin(lim);
}

int exit_from_verdicts(bool any_refuted, bool any_unknown) {
  if (any_refuted) return 1;
  if (any_unknown) return 2;
  return 0;
}

RunReport cmd_check(const std::string& formula, const std::string& var, const std::string& notion,
                    const ProverOpts& popts, const std::map<std::string, std::string>& cfg) {
  RunReport r;
  r.command = "check";
  auto phi = parse_arg_formula(formula);
  auto n = parse_notion_arg(notion);
  auto obls = schemes::inductiveness_obligations(phi, var, n);
  auto backend = make_backend(popts, cfg);
  auto verdicts = prover::prove(obls, backend);

  bool refuted = false, unknown = false;
  for (const auto& obl : obls.obligations) {
    const auto& v = verdicts.at(obl.tag);
    Entry e;
    e.name = obl.tag;
    e.status = prover::to_string(v.kind);
    e.detail = v.detail;
    refuted = refuted || v.kind == prover::VerdictKind::Refuted;
    unknown = unknown || v.kind == prover::VerdictKind::Unknown;
    r.entries.push_back(std::move(e));
    if (popts.trace)
      for (const auto& line : v.trace) r.notes.push_back(obl.tag + ": " + line);
  }
  r.exit_code = exit_from_verdicts(refuted, unknown);
  return r;
}

RunReport cmd_scheme(const std::vector<std::string>& thetas, const std::string& var,
                     const std::string& params_arg, const std::string& notion,
                     const std::string& cls_arg, bool less_free) {
  RunReport r;
  r.command = "scheme";
  auto n = parse_notion_arg(notion);
  std::optional<fol::FormulaClass> cls;
  if (!cls_arg.empty()) {
    cls = fol::FormulaClass::parse(cls_arg);
    if (!cls) throw UsageError("bad class '" + cls_arg + "'");
  }

  for (std::size_t i = 0; i < thetas.size(); ++i) {
    auto theta = parse_arg_formula(thetas[i]);
    Entry e;
    e.name = thetas.size() == 1 ? "axiom" : "axiom" + std::to_string(i + 1);
    bool keep = true;
    if (less_free && fol::contains_less(theta)) keep = false;
    if (keep && cls && !fol::class_within(fol::classify(theta), *cls)) keep = false;
    if (!keep) {
      e.status = "filtered";
    } else {
      auto params = params_arg.empty() ? default_params(theta, var) : split_params(params_arg);
      e.status = "ok";
      e.detail = fol::print_text(schemes::induction_axiom(theta, var, params, n));
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

model::ZxLimits make_zx_limits(int max_degree, long max_coeff, std::size_t max_assignments) {
  model::ZxLimits lim;
  lim.max_degree = max_degree;
  lim.max_coeff = max_coeff;
  lim.max_assignments = max_assignments;
  return lim;
}

RunReport cmd_refute(const std::string& formula, int max_degree, long max_coeff,
                     std::size_t max_assignments) {
  RunReport r;
  r.command = "refute";
  auto f = parse_arg_formula(formula);
  for (const auto& v : fol::free_vars(f)) f = fol::forall(v, f);  // read frees universally
  auto lim = make_zx_limits(max_degree, max_coeff, max_assignments);
  auto cex = model::refute_claim(f, lim);
  if (cex) {
    for (const auto& [name, value] : cex->assignment) {
      Entry e;
      e.name = name;
      e.status = value.to_string();
      r.entries.push_back(std::move(e));
    }
    for (const auto& line : cex->trace) r.notes.push_back(line);
    r.exit_code = 1;
  } else {
    Entry e;
    e.name = "counterexample";
    e.status = "none";
    e.detail = "no falsifying assignment within the search limits";
    r.entries.push_back(std::move(e));
  }
  return r;
}

RunReport cmd_eval(const std::string& formula, const std::vector<std::string>& assigns,
                   int max_degree, long max_coeff, std::size_t max_assignments) {
  RunReport r;
  r.command = "eval";
  auto f = parse_arg_formula(formula);
  model::ZxEnv env;
  for (const auto& a : assigns) {
    std::size_t pos = a.find('=');
    if (pos == std::string::npos) throw UsageError("bad assignment '" + a + "', want var=poly");
    std::string name = trim(a.substr(0, pos));
    try {
      env[name] = model::PolyPlus::parse(trim(a.substr(pos + 1)));
    } catch (const std::invalid_argument& ex) {
      throw UsageError("bad assignment '" + a + "': " + ex.what());
    }
  }
  auto lim = make_zx_limits(max_degree, max_coeff, max_assignments);
  auto res = model::zx_eval(f, env, lim);
  Entry e;
  e.name = "value";
  switch (res.value) {
    case model::Truth::True: e.status = "True"; break;
    case model::Truth::False: e.status = "False"; break;
    case model::Truth::Unknown: e.status = "Unknown"; break;
  }
  e.detail = res.reason;
  r.entries.push_back(std::move(e));
  r.exit_code =
      res.value == model::Truth::False ? 1 : (res.value == model::Truth::Unknown ? 2 : 0);
  return r;
}

schemes::Notion parse_gen_arg(const std::string& s) {
  std::string full = s.rfind("gen:", 0) == 0 ? s : "gen:" + s;
  auto n = schemes::Notion::parse(full);
  if (!n) throw UsageError("bad base/step sets '" + s + "', want B=0,1;S=x+1");
  return *n;
}

RunReport cmd_walther(const std::string& left, const std::string& right, bool nat_check,
                      unsigned long bound) {
  RunReport r;
  r.command = "walther";
  auto l = parse_gen_arg(left);
  auto rt = parse_gen_arg(right);
  bool lr = schemes::walther_subsumes(l, rt);
  bool rl = schemes::walther_subsumes(rt, l);
  r.entries.push_back({"left", "gen", l.to_string()});
  r.entries.push_back({"right", "gen", rt.to_string()});
  r.entries.push_back({"left_subsumes_right", lr ? "yes" : "no", ""});
  r.entries.push_back({"right_subsumes_left", rl ? "yes" : "no", ""});
  if (lr || rl) {
    r.notes.push_back("subsumption established by subset test");
    r.exit_code = 0;
  } else {
    r.notes.push_back(
        "incomparable by subset test; NOTE: syntactic comparison is incomplete (Thm IOpen)");
    r.exit_code = 1;
  }
  if (nat_check) {
    auto gap = [bound](const schemes::Notion& n) -> std::string {
      auto reached = model::reachable_points(n, bound);
      for (unsigned long m = 0; m <= bound; ++m)
        if (!reached.count(m)) return std::to_string(m);
      return "none";
    };
    r.entries.push_back({"left_first_unreached", gap(l), ""});
    r.entries.push_back({"right_first_unreached", gap(rt), ""});
  }
  return r;
}

RunReport cmd_gallery(const std::string& name, const std::string& phi_arg,
                      const std::string& delta_arg, const std::string& var, unsigned long m,
                      unsigned long n) {
  RunReport r;
  r.command = "gallery";
  transforms::GalleryInputs in;
  in.phi = parse_arg_formula(phi_arg);
  if (!delta_arg.empty()) in.delta = parse_arg_formula(delta_arg);
  in.x = var;
  in.m = m;
  in.n = n;
  Entry e;
  e.name = name;
  e.status = "ok";
  e.detail = fol::print_text(transforms::gallery(name, in));
  r.entries.push_back(std::move(e));
  return r;
}

struct TransformArgs {
  std::string kind;
  std::vector<std::string> thetas;
  std::string var = "x";
  std::string params;
  std::string sigma, psi;
  std::string tmpl, phi, delta;
  std::string name;
  unsigned long m = 0, n = 0;
  std::string formula;
};

RunReport cmd_transform(const TransformArgs& a) {
  RunReport r;
  r.command = "transform";

  auto entry_params = [&a](const fol::FormulaPtr& theta) {
    return a.params.empty() ? default_params(theta, a.var) : split_params(a.params);
  };

  if (a.kind == "normalize") {
    if (a.thetas.empty()) throw UsageError("normalize needs --theta");
    for (std::size_t i = 0; i < a.thetas.size(); ++i) {
      auto theta = parse_arg_formula(a.thetas[i]);
      Entry e;
      e.name = a.thetas.size() == 1 ? "inductive" : "inductive" + std::to_string(i + 1);
      e.status = "ok";
      e.detail =
          fol::print_text(transforms::axiom_to_inductive(theta, a.var, entry_params(theta)));
      r.entries.push_back(std::move(e));
    }
    return r;
  }
  if (a.kind == "merge") {
    if (a.thetas.empty()) throw UsageError("merge needs --theta");
    std::vector<transforms::MergeEntry> entries;
    for (const auto& t : a.thetas) {
      auto theta = parse_arg_formula(t);
      entries.push_back({theta, a.var, entry_params(theta)});
    }
    Entry e;
    e.name = "merged";
    e.status = "ok";
    e.detail = fol::print_text(transforms::merge(entries));
    r.entries.push_back(std::move(e));
    return r;
  }
  if (a.kind == "equiv") {
    if (a.sigma.empty() || a.psi.empty()) throw UsageError("equiv needs --sigma and --psi");
    Entry e;
    e.name = "shaped";
    e.status = "ok";
    e.detail = fol::print_text(
        transforms::equivalence_shape(parse_arg_formula(a.sigma), parse_arg_formula(a.psi)));
    r.entries.push_back(std::move(e));
    return r;
  }
  if (a.kind == "substitute") {
    if (a.tmpl.empty() || a.phi.empty()) throw UsageError("substitute needs --template and --phi");
    transforms::SchemeTemplate tmpl{parse_arg_template(a.tmpl)};
    auto phi = parse_arg_formula(a.phi);
    auto params = a.params.empty() ? default_params(phi, a.var) : split_params(a.params);
    Entry e;
    e.name = "substituted";
    e.status = "ok";
    e.detail = fol::print_text(transforms::scheme_substitute(tmpl, phi, a.var, params));
    r.entries.push_back(std::move(e));
    return r;
  }
  if (a.kind == "gallery") {
    if (a.name.empty() || a.phi.empty()) throw UsageError("gallery needs --name and --phi");
    return cmd_gallery(a.name, a.phi, a.delta, a.var, a.m, a.n);
  }
  if (a.kind == "kaye") {
    if (a.formula.empty()) throw UsageError("kaye needs --formula");
    auto f = parse_arg_formula(a.formula);
    auto conjuncts = fol::to_dnf(f);
    for (std::size_t i = 0; i < conjuncts.size(); ++i) {
      auto reduced = transforms::kaye_reduce(conjuncts[i]);
      Entry e;
      e.name = "conjunct" + std::to_string(i + 1);
      e.status = "reduced";
      e.detail = fol::print_text(reduced.characteristic());
      r.entries.push_back(std::move(e));
    }
    return r;
  }
  throw UsageError("unknown transform kind '" + a.kind + "'");
}

}  // namespace

std::string render_text(const RunReport& r) {
  std::string out = "command: " + r.command + "\n";
  for (const auto& e : r.entries) {
    out += e.name + ": " + e.status + "\n";
    if (!e.detail.empty()) {
      std::istringstream lines(e.detail);
      std::string line;
      while (std::getline(lines, line)) out += "  " + line + "\n";
    }
  }
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  out += "exit: " + std::to_string(r.exit_code) + "\n";
  return out;
}

std::string render_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json je;
    je["name"] = e.name;
    je["status"] = e.status;
    je["detail"] = e.detail;
    j["entries"].push_back(std::move(je));
  }
  j["notes"] = r.notes;
  j["exit"] = r.exit_code;
  return j.dump(2) + "\n";
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto cfg = load_config();
  auto cfg_get = [&cfg](const char* key, auto fallback) {
    auto it = cfg.find(key);
    if (it == cfg.end()) return fallback;
    std::istringstream in(it->second);
    decltype(fallback) value;
    in >> value;
    return in ? value : fallback;
  };

  CLI::App app{"induction shapes workbench: schemes, transforms, models, proofs"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit the report as JSON");

  ProverOpts popts;
  popts.max_clauses = cfg_get("max_clauses", static_cast<std::size_t>(50000));
  popts.max_seconds = cfg_get("max_seconds", 10.0);
  popts.timeout = cfg_get("prover_timeout", 30.0);
  int max_degree = cfg_get("max_degree", 3);
  long max_coeff = cfg_get("max_coeff", 7L);
  std::size_t max_assignments = static_cast<std::size_t>(20000);

  auto add_prover_flags = [&popts](CLI::App* sub) {
    sub->add_flag("--builtin", popts.force_builtin, "force the built-in prover");
    sub->add_option("--external", popts.external, "external prover command, {file} placeholder");
    sub->add_option("--timeout", popts.timeout, "external prover deadline, seconds");
    sub->add_option("--max-clauses", popts.max_clauses, "built-in clause limit");
    sub->add_option("--max-seconds", popts.max_seconds, "built-in time limit, seconds");
    sub->add_flag("--trace", popts.trace, "include derivation traces in the report");
  };
  auto add_model_flags = [&max_degree, &max_coeff, &max_assignments](CLI::App* sub) {
    sub->add_option("--max-degree", max_degree, "witness search degree bound");
    sub->add_option("--max-coeff", max_coeff, "witness search coefficient bound");
    sub->add_option("--max-assignments", max_assignments, "assignment search cap");
  };

  std::function<RunReport()> selected;

  // check
  {
    auto* sub = app.add_subcommand("check", "generate and discharge inductiveness obligations");
    auto formula = std::make_shared<std::string>();
    auto var = std::make_shared<std::string>("x");
    auto notion = std::make_shared<std::string>();
    sub->add_option("--formula", *formula, "formula, inline or @file")->required();
    sub->add_option("--var", *var, "induction variable");
    sub->add_option("--notion", *notion,
                    "succ | less | step:k | kind:k | pind[:b] | cut | acut | amcut | gen:B=..;S=..")
        ->required();
    add_prover_flags(sub);
    sub->callback([&selected, formula, var, notion, &popts, &cfg] {
      selected = [=, &popts, &cfg] { return cmd_check(*formula, *var, *notion, popts, cfg); };
    });
  }

  // scheme
  {
    auto* sub = app.add_subcommand("scheme", "instantiate induction axioms");
    auto thetas = std::make_shared<std::vector<std::string>>();
    auto var = std::make_shared<std::string>("x");
    auto params = std::make_shared<std::string>();
    auto notion = std::make_shared<std::string>();
    auto cls = std::make_shared<std::string>();
    auto less_free = std::make_shared<bool>(false);
    sub->add_option("--theta", *thetas, "target formula, repeatable")->required();
    sub->add_option("--var", *var, "induction variable");
    sub->add_option("--params", *params, "comma-separated parameter variables");
    sub->add_option("--notion", *notion, "notion of induction")->required();
    sub->add_option("--class", *cls, "atomic | qf | bounded | sigma:k | any");
    sub->add_flag("--less-free", *less_free, "drop targets mentioning <");
    sub->callback([&selected, thetas, var, params, notion, cls, less_free] {
      selected = [=] { return cmd_scheme(*thetas, *var, *params, *notion, *cls, *less_free); };
    });
  }

  // transform
  {
    auto* sub = app.add_subcommand("transform", "syntactic constructions");
    auto args = std::make_shared<TransformArgs>();
    sub->add_option("--kind", args->kind, "normalize | merge | equiv | substitute | gallery | kaye")
        ->required();
    sub->add_option("--theta", args->thetas, "target formula, repeatable");
    sub->add_option("--var", args->var, "induction variable");
    sub->add_option("--params", args->params, "comma-separated parameter variables");
    sub->add_option("--sigma", args->sigma, "closed switch formula (equiv)");
    sub->add_option("--psi", args->psi, "carrier formula (equiv)");
    sub->add_option("--template", args->tmpl, "scheme template with X(...) atoms (substitute)");
    sub->add_option("--phi", args->phi, "formula to plug in (substitute, gallery)");
    sub->add_option("--delta", args->delta, "side condition formula (gallery)");
    sub->add_option("--name", args->name, "gallery construction name");
    sub->add_option("--m", args->m, "gallery modulus knob");
    sub->add_option("--n", args->n, "gallery offset knob");
    sub->add_option("--formula", args->formula, "quantifier-free <-free formula (kaye)");
    sub->callback([&selected, args] {
      selected = [=] { return cmd_transform(*args); };
    });
  }

  // refute
  {
    auto* sub = app.add_subcommand("refute", "search for a counterexample over polynomials");
    auto formula = std::make_shared<std::string>();
    sub->add_option("--formula", *formula, "claim, free variables read universally")->required();
    add_model_flags(sub);
    sub->callback([&selected, formula, &max_degree, &max_coeff, &max_assignments] {
      selected = [=, &max_degree, &max_coeff, &max_assignments] {
        return cmd_refute(*formula, max_degree, max_coeff, max_assignments);
      };
    });
  }

  // eval
  {
    auto* sub = app.add_subcommand("eval", "evaluate a formula over polynomials");
    auto formula = std::make_shared<std::string>();
    auto assigns = std::make_shared<std::vector<std::string>>();
    sub->add_option("--formula", *formula, "formula, inline or @file")->required();
    sub->add_option("--assign", *assigns, "assignment var=poly, e.g. x=X+1, repeatable");
    add_model_flags(sub);
    sub->callback([&selected, formula, assigns, &max_degree, &max_coeff, &max_assignments] {
      selected = [=, &max_degree, &max_coeff, &max_assignments] {
        return cmd_eval(*formula, *assigns, max_degree, max_coeff, max_assignments);
      };
    });
  }

  // walther
  {
    auto* sub = app.add_subcommand("walther", "compare base/step induction schemes");
    auto left = std::make_shared<std::string>();
    auto right = std::make_shared<std::string>();
    auto nat_check = std::make_shared<bool>(false);
    auto bound = std::make_shared<unsigned long>(32);
    sub->add_option("--left", *left, "B=..;S=..")->required();
    sub->add_option("--right", *right, "B=..;S=..")->required();
    sub->add_flag("--nat-check", *nat_check, "report the first standard point the scheme misses");
    sub->add_option("--bound", *bound, "nat-check range");
    sub->callback([&selected, left, right, nat_check, bound] {
      selected = [=] { return cmd_walther(*left, *right, *nat_check, *bound); };
    });
  }

  // gallery
  {
    auto* sub = app.add_subcommand("gallery", "named witness constructions");
    auto name = std::make_shared<std::string>();
    auto phi = std::make_shared<std::string>();
    auto delta = std::make_shared<std::string>();
    auto var = std::make_shared<std::string>("x");
    auto m = std::make_shared<unsigned long>(0);
    auto n = std::make_shared<unsigned long>(0);
    sub->add_option("--name", *name, "not_cut | not_acut | chi | rho | rho0 | square")->required();
    sub->add_option("--phi", *phi, "carrier formula")->required();
    sub->add_option("--delta", *delta, "side condition formula");
    sub->add_option("--var", *var, "free variable of phi and delta");
    sub->add_option("--m", *m, "chi modulus knob");
    sub->add_option("--n", *n, "rho offset knob");
    sub->callback([&selected, name, phi, delta, var, m, n] {
      selected = [=] { return cmd_gallery(*name, *phi, *delta, *var, *m, *n); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  try {
    RunReport report = selected();
    out << (json ? render_json(report) : render_text(report));
    return report.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const fol::ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace indshape::cli
