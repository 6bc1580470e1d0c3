// dmc: typecheck, run, classify and verify .dmc combinator programs.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dmc/diagrams.hpp"
#include "dmc/model2i.hpp"
#include "dmc/program.hpp"
#include "dmc/sexpr.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFuel = 2;

struct Options {
  int levels = 3;
  unsigned long long fuel = 1'000'000;
  bool extended_prn = false;
  bool json_out = false;
  bool trace = false;
  unsigned long long samples = 8;
  std::string bound;  // empty = partial semantics
  std::string file;
  std::string name;
  std::vector<std::string> args;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dmc::ProgramFile load(const Options& o) {
  return dmc::parse_program(slurp(o.file), o.levels, o.extended_prn);
}

dmc::TermPtr resolve(const dmc::ProgramFile& p, const Options& o,
                     const std::string& name) {
  if (const dmc::Definition* d = p.find(name)) return d->term;
  for (const auto& e : dmc::stdlib(o.levels))
    if (e.name == name) return e.term;
  throw std::runtime_error("no definition named '" + name + "'");
}

json judgment_json(const dmc::Judgment& j) {
  return {{"dom", dmc::print_object(j.dom)},
          {"cod", dmc::print_object(j.cod)},
          {"mindepth", j.mindepth}};
}

int cmd_check(const Options& o) {
  dmc::ProgramFile p = load(o);
  dmc::CheckConfig cfg{o.levels, o.extended_prn};
  json out = json::array();
  bool ok = true;
  for (const auto& d : p.definitions) {
    dmc::TypeResult r = dmc::typecheck(d.term, cfg);
    if (auto* j = std::get_if<dmc::Judgment>(&r)) {
      bool declared_ok = true;
      if (d.declared) {
        dmc::Obj dom = dmc::normalize_object(d.declared->first, o.levels);
        dmc::Obj cod = dmc::normalize_object(d.declared->second, o.levels);
        declared_ok = dmc::obj_equal(dom, j->dom) && dmc::obj_equal(cod, j->cod);
      }
      if (o.json_out) {
        json e = {{"name", d.name}, {"judgment", judgment_json(*j)},
                  {"declared_ok", declared_ok}};
        out.push_back(e);
      } else {
        std::cout << d.name << " : " << dmc::render_judgment(*j);
        if (!declared_ok) std::cout << "  MISMATCH with declared type";
        std::cout << "\n";
      }
      if (!declared_ok) ok = false;
    } else {
      const auto& e = std::get<dmc::TypeError>(r);
      if (o.json_out)
        out.push_back({{"name", d.name},
                       {"error", dmc::type_error_kind_name(e.kind)},
                       {"path", e.path},
                       {"detail", e.detail}});
      else
        std::cout << d.name << " : " << dmc::render_type_error(e) << "\n";
      ok = false;
    }
  }
  if (o.json_out) std::cout << out.dump(2) << "\n";
  return ok ? kExitOk : kExitError;
}

dmc::Val parse_args(const std::vector<std::string>& args) {
  if (args.empty()) return dmc::val_star();
  std::vector<dmc::Val> vs;
  for (const auto& a : args) vs.push_back(dmc::parse_value(a));
  dmc::Val v = vs.back();
  for (size_t i = vs.size() - 1; i-- > 0;) v = dmc::val_pair(vs[i], v);
  return v;
}

int run_one(const Options& o, const dmc::TermPtr& t,
            const std::vector<std::string>& args, json& out) {
  dmc::CheckConfig cfg{o.levels, o.extended_prn};
  dmc::TypeResult r = dmc::typecheck(t, cfg);
  if (auto* e = std::get_if<dmc::TypeError>(&r)) {
    if (o.json_out)
      out.push_back({{"error", dmc::render_type_error(*e)}});
    else
      std::cout << dmc::render_type_error(*e) << "\n";
    return kExitError;
  }
  dmc::TraceFn trace = nullptr;
  if (o.trace)
    trace = [](const std::string& node, const dmc::Val& in,
               unsigned long long left) {
      std::cerr << node << " " << dmc::print_value(in) << " fuel=" << left
                << "\n";
    };
  dmc::Outcome res = dmc::eval(t, parse_args(args), o.fuel, trace);
  if (!res.done) {
    if (o.json_out)
      out.push_back({{"fuel_exhausted", true}, {"fuel", res.steps}});
    else
      std::cout << "fuel exhausted after " << res.steps << " steps\n";
    return kExitFuel;
  }
  if (o.json_out)
    out.push_back({{"value", dmc::print_value(res.value)}});
  else
    std::cout << dmc::print_value(res.value) << "\n";
  return kExitOk;
}

int cmd_run(const Options& o) {
  dmc::ProgramFile p = load(o);
  json out = json::array();
  int rc = kExitOk;
  if (!o.name.empty()) {
    rc = run_one(o, resolve(p, o, o.name), o.args, out);
  } else {
    // no name: execute the file's own run directives
    for (const auto& d : p.directives) {
      if (d.kind != dmc::Directive::Kind::Run) continue;
      int r = run_one(o, resolve(p, o, d.name), d.args, out);
      if (r != kExitOk) rc = r;
    }
  }
  if (o.json_out) std::cout << out.dump(2) << "\n";
  return rc;
}

int cmd_classify(const Options& o) {
  dmc::ProgramFile p = load(o);
  dmc::CheckConfig cfg{o.levels, o.extended_prn};
  dmc::TermPtr t = resolve(p, o, o.name);
  dmc::TypeResult r = dmc::typecheck(t, cfg);
  if (auto* e = std::get_if<dmc::TypeError>(&r)) {
    std::cout << dmc::render_type_error(*e) << "\n";
    return kExitError;
  }
  int level = std::get<dmc::Judgment>(r).mindepth;
  if (o.json_out)
    std::cout << json{{"name", o.name}, {"level", level}}.dump(2) << "\n";
  else
    std::cout << "level " << level << " → class P^Σ_" << level
              << " membership bound: □ᴾ_" << level + 1 << "\n";
  return kExitOk;
}

int cmd_verify_diagrams(const Options& o) {
  dmc::CheckConfig cfg{o.levels, o.extended_prn};
  auto suites = dmc::all_suites(cfg, o.fuel);
  json out = json::array();
  bool ok = true;
  for (const auto& s : suites) {
    int bad = s.failures();
    if (bad) ok = false;
    if (o.json_out) {
      json js = {{"suite", s.name},
                 {"diagrams", s.diagrams.size()},
                 {"failures", bad}};
      json fails = json::array();
      for (const auto& d : s.diagrams)
        if (!d.commutes())
          fails.push_back({{"name", d.name},
                           {"judgments_match", d.judgments_match},
                           {"detail", d.judgment_detail},
                           {"disagreements", d.disagreements.size()},
                           {"inconclusive", d.inconclusive.size()}});
      js["failed"] = fails;
      out.push_back(js);
    } else {
      std::cout << s.name << ": " << s.diagrams.size() << " diagrams, " << bad
                << " failures\n";
      for (const auto& d : s.diagrams)
        if (!d.commutes())
          std::cout << "  FAIL " << d.name << " (" << d.disagreements.size()
                    << " disagreements, " << d.inconclusive.size()
                    << " inconclusive) " << d.judgment_detail << "\n";
    }
  }
  if (o.json_out) std::cout << out.dump(2) << "\n";
  return ok ? kExitOk : kExitError;
}

int cmd_verify_model(const Options& o) {
  dmc::ModelReport rep = dmc::verify_model_equations(o.levels);
  if (o.json_out) {
    json out = {{"levels", o.levels},
                {"checks", rep.checks.size()},
                {"passed", rep.passed()}};
    json flagged = json::array();
    for (const auto& f : rep.flagged)
      flagged.push_back({{"what", f.what}, {"detail", f.detail}});
    json failed = json::array();
    for (const auto& c : rep.checks)
      if (!c.ok) failed.push_back({{"what", c.what}, {"detail", c.detail}});
    out["flagged"] = flagged;
    out["failed"] = failed;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << rep.checks.size() << " model checks, "
              << (rep.passed() ? "all passed" : "FAILURES") << "\n";
    for (const auto& c : rep.checks)
      if (!c.ok) std::cout << "  FAIL " << c.what << ": " << c.detail << "\n";
    for (const auto& f : rep.flagged)
      std::cout << "  flagged (known discrepancy) " << f.what << ": "
                << f.detail << "\n";
  }
  return rep.passed() ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dmc — tiered safe-recursion combinator calculus"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--levels", o.levels, "hierarchy parameter i (>= 1)")
      ->envname("DMC_LEVELS")
      ->check(CLI::PositiveNumber);
  app.add_option("--fuel", o.fuel, "evaluation fuel (>= 1)")
      ->envname("DMC_FUEL")
      ->check(CLI::PositiveNumber);
  app.add_flag("--extended-prn", o.extended_prn,
               "enable the two-branch recursion-on-notation extension")
      ->envname("DMC_EXTENDED_PRN");
  app.add_flag("--json", o.json_out, "JSON output")->envname("DMC_JSON");
  app.add_flag("--trace", o.trace, "trace fuel spending to stderr")
      ->envname("DMC_TRACE");
  app.add_option("--bound", o.bound,
                 "search bound for total minimization (default: partial)")
      ->envname("DMC_BOUND");
  app.add_option("--samples", o.samples, "sample bound for diagram checks")
      ->envname("DMC_SAMPLES");

  auto* check = app.add_subcommand("check", "typecheck a program file");
  check->add_option("file", o.file)->required();
  auto* run = app.add_subcommand("run", "evaluate a definition on arguments");
  run->add_option("file", o.file)->required();
  run->add_option("name", o.name);
  run->add_option("args", o.args);
  auto* classify =
      app.add_subcommand("classify", "hierarchy level of a definition");
  classify->add_option("file", o.file)->required();
  classify->add_option("name", o.name)->required();
  auto* vd = app.add_subcommand("verify-diagrams",
                                "check the coherence diagram suites");
  auto* vm = app.add_subcommand("verify-model",
                                "check the 2 x i presheaf model equations");
  auto* tab = app.add_subcommand("table", "print the model's functor table");
  (void)vd;
  (void)vm;
  for (auto* s : app.get_subcommands({})) s->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(o);
    if (run->parsed()) return cmd_run(o);
    if (classify->parsed()) return cmd_classify(o);
    if (vd->parsed()) return cmd_verify_diagrams(o);
    if (vm->parsed()) return cmd_verify_model(o);
    if (tab->parsed()) {
      std::cout << dmc::render_table(o.levels);
      return kExitOk;
    }
  } catch (const dmc::ParseError& e) {
    std::cerr << "parse error at " << e.line << ":" << e.column << ": "
              << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
