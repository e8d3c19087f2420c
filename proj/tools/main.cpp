#include "commands.hpp"
#include "emit.hpp"
#include "sweep.hpp"

#include <brjuno/numeric.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#ifndef BRJUNO_VERSION
#define BRJUNO_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using namespace brjuno_cli;

namespace {

void add_common(CLI::App* sub, Options& o, const Command& cmd) {
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("-o,--output", o.output, "output file; stdout when omitted");
  sub->add_option("--output-dir", o.output_dir, "one artifact per value plus an aggregate CSV");
  sub->add_option("--precision", o.bits, "working precision in bits")
      ->envname("BRJUNO_PRECISION")
      ->check(CLI::Range(64, 1 << 20));
  sub->add_option("--threads", o.threads, "sweep workers, 0 = one per core")->check(CLI::NonNegativeNumber);
  std::string vars;
  for (const auto& v : cmd.sweepable) vars += (vars.empty() ? "" : ", ") + v;
  sub->add_option("--sweep", o.sweep, "VAR=VALUES with VAR in {" + vars + "}; VALUES is a,b,c | grid:start:stop:count | noble:N | metallic:N");
  if (cmd.needs_x) sub->add_option("--set", o.set, "values for " + cmd.sweepable.front() + ", same syntax as --sweep");
}

void add_specific(CLI::App* sub, Options& o, const std::string& name) {
  auto x_opt = [&](const char* flag, const char* what) { sub->add_option(flag, o.x, what); };
  if (name == "cf" || name == "brjuno" || name == "bseries") {
    x_opt("--x", "number: p/q, (a+b*sqrt(d))/c or decimal[@bits]");
    sub->add_option("--alpha", o.alpha, "alpha in [1/2, 1], rational or decimal");
    sub->add_option("--depth", o.depth, "expansion depth")->check(CLI::PositiveNumber);
  }
  if (name == "bseries") sub->add_option("--f", o.f, "weight: neglog | power:NU | logpower:NU:MU");
  if (name == "dioph") {
    x_opt("--x", "number");
    sub->add_option("--depth", o.depth)->check(CLI::PositiveNumber);
    sub->add_option("--nu", o.nu, "exponent of the B_nu bracket check")->check(CLI::PositiveNumber);
  }
  if (name == "operator") {
    sub->add_option("--n", o.n, "grid size")->check(CLI::Range(2, 1 << 22));
    sub->add_option("--alpha", o.alpha, "alpha in [1/2, 1]; 1/2 uses the even grid");
    sub->add_option("--gamma", o.gamma, "Holder exponent in (0, 1/2]");
    sub->add_option("--A", o.A, "weight of the Holder seminorm")->check(CLI::PositiveNumber);
    sub->add_option("--B", o.B, "weight of the sup norm; 0 picks 2A/(2^gamma - 2^-gamma)")->check(CLI::NonNegativeNumber);
    sub->add_option("--tol", o.tol, "Neumann stopping tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-terms", o.max_terms)->check(CLI::PositiveNumber);
  }
  if (name == "complex" || name == "scan") {
    sub->add_option("--eps", o.eps, "distance above the real axis");
    sub->add_option("--q-max", o.q_max, "bound on the monoid entry d")->check(CLI::PositiveNumber);
    sub->add_option("--n-max", o.n_max, "explicit periodization range")->check(CLI::PositiveNumber);
    sub->add_flag("--extended", o.extended, "long double evaluation");
  }
  if (name == "complex") {
    x_opt("--x", "real part");
    sub->add_option("--jump", o.jump, "also fit the Re jump at x with this half-width")->check(CLI::NonNegativeNumber);
  }
  if (name == "scan") {
    sub->add_option("--x0", o.x0);
    sub->add_option("--x1", o.x1);
    sub->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  }
  if (name == "lindstedt" || name == "compare") {
    x_opt("--rho", "rotation number");
    sub->add_option("--order", o.order, "perturbative order")->check(CLI::PositiveNumber);
    sub->add_option("--map", o.map, "semi | standard")->check(CLI::IsMember({"semi", "standard"}));
  }
}

json echo_parameters(const CLI::App* sub) {
  json p = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_lnames().empty() || opt->get_lnames()[0] == "help") continue;
    std::string v;
    if (opt->count() > 0) {
      for (const auto& r : opt->results()) v += (v.empty() ? "" : ",") + r;
    } else {
      v = opt->get_default_str();
    }
    p[opt->get_lnames()[0]] = v;
  }
  return p;
}

json with_input(const std::string& var, const std::string& value, const json& obj) {
  if (var.empty() || obj.contains(var)) return obj;
  json out = {{var, value}};
  for (const auto& [k, v] : obj.items()) out[k] = v;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brjuno function toolkit", "brjuno"};
  app.set_version_flag("--version", BRJUNO_VERSION);
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  const std::map<std::string, std::string> about = {
      {"cf", "alpha-continued fraction expansion"},
      {"brjuno", "Brjuno function B_alpha(x)"},
      {"bseries", "Brjuno series with a general weight"},
      {"dioph", "Diophantine exponent estimate and the B_nu bracket"},
      {"operator", "grid Brjuno operator: Neumann inverse of -ln and norm checks"},
      {"complex", "complex Brjuno function at x + i eps"},
      {"scan", "complex Brjuno function along a horizontal segment"},
      {"lindstedt", "Lindstedt series, radius estimates and critical constant"},
      {"compare", "ln(1/k_hat) against 2B(rho)"},
  };
  std::map<std::string, Options> opts;
  std::map<std::string, CLI::App*> subs;
  for (const auto& cmd : commands()) {
    Options& o = opts[cmd.name];
    if (cmd.name == "cf") o.depth = 40;
    if (cmd.name == "operator") o.alpha = "1/2";
    if (cmd.name == "compare") o.order = 50;
    auto* sub = app.add_subcommand(cmd.name, about.at(cmd.name));
    add_common(sub, o, cmd);
    add_specific(sub, o, cmd.name);
    subs[cmd.name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const Command* cmd = nullptr;
  for (const auto& c : commands())
    if (subs[c.name]->parsed()) cmd = &c;
  Options& o = opts[cmd->name];
  auto* sub = subs[cmd->name];

  std::string var;
  std::vector<std::string> values;
  try {
    if (!o.sweep.empty() && !o.set.empty()) throw CLI::ValidationError("--set", "use either --set or --sweep");
    if (!o.sweep.empty()) {
      auto sp = parse_sweep(o.sweep);
      if (std::find(cmd->sweepable.begin(), cmd->sweepable.end(), sp.variable) == cmd->sweepable.end() &&
          !(sp.variable == "x" && cmd->sweepable.front() == "rho") && !(sp.variable == "rho" && cmd->sweepable.front() == "x"))
        throw CLI::ValidationError("--sweep", "'" + sp.variable + "' cannot be swept by " + cmd->name);
      var = sp.variable;
      values = std::move(sp.values);
    } else if (!o.set.empty()) {
      var = cmd->sweepable.front();
      values = expand_values(o.set);
    } else {
      if (cmd->needs_x && o.x.empty())
        throw CLI::RequiredError(std::string(cmd->sweepable.front() == "rho" ? "--rho" : "--x") + " (or --set)");
      values = {""};
    }
  } catch (const CLI::Error& e) {
    std::cerr << "brjuno " << cmd->name << ": " << e.what() << '\n';
    return kUsage;
  }
  if (values.empty()) return kOk;

  // The mpfr default precision is process wide, so every worker runs at one precision fixed here.
  if (cmd->high_precision) o.bits = std::max(o.bits, brjuno::kDefaultBits);
  brjuno::PrecisionScope precision(o.bits);

  Shared shared;
  if (cmd->uses_complex) {
    brjuno::TruncationPolicy policy;
    policy.q_max = o.q_max;
    policy.n_max = o.n_max;
    policy.extended = o.extended;
    shared.complex = std::make_unique<brjuno::ComplexBrjuno>(policy);
  }

  std::vector<Outcome> outcomes(values.size());
  auto job = [&](std::size_t i) {
    Inputs in{o.x, o.alpha, o.eps, o.gamma};
    if (var == "x" || var == "rho") in.x = values[i];
    if (var == "alpha") in.alpha = values[i];
    if (var == "eps") in.eps = values[i];
    if (var == "gamma") in.gamma = values[i];
    outcomes[i] = run(*cmd, o, in, shared);
  };
  // scan parallelises inside the segment instead; an explicit "@bits" on a value changes the
  // process-wide precision while that value runs, so such sweeps stay sequential
  bool own_bits = o.x.find('@') != std::string::npos ||
                  std::any_of(values.begin(), values.end(), [](const std::string& v) { return v.find('@') != std::string::npos; });
  parallel_map(values.size(), cmd->name == "scan" || own_bits ? 1 : o.threads, job);

  Meta meta{BRJUNO_VERSION, cmd->name, echo_parameters(sub), nullptr, o.bits};
  if (!var.empty()) meta.sweep = {{"variable", var}, {"values", values}};

  std::vector<json> csv_rows;
  json results = json::array();
  bool usage = false;
  int status = kOk;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& out = outcomes[i];
    json s = with_input(var, values[i], out.summary);
    if (out.status == kUsage) {
      usage = true;
      std::cerr << "brjuno " << cmd->name << ": " << s["error"].get<std::string>() << '\n';
    } else if (s.contains("error")) {
      std::cerr << "brjuno " << cmd->name << ": " << (var.empty() ? "" : var + "=" + values[i] + ": ")
                << s["error"].get<std::string>() << '\n';
    }
    status = std::max(status, out.status == kUsage ? kOk : out.status);
    if (cmd->rows_in_csv) {
      for (const auto& r : out.rows) csv_rows.push_back(with_input(var, values[i], r));
    } else if (!cmd->rows_in_csv) {
      csv_rows.push_back(s);
    }
    if (!out.rows.empty()) s["rows"] = out.rows;
    results.push_back(std::move(s));
  }
  if (usage) return kUsage;

  try {
    if (!o.output_dir.empty()) {
      fs::create_directories(o.output_dir);
      for (std::size_t i = 0; i < results.size(); ++i) {
        char name[64];
        std::snprintf(name, sizeof name, "%s_%03zu.%s", cmd->name.c_str(), i, o.format.c_str());
        std::ofstream f(fs::path(o.output_dir) / name);
        if (o.format == "json") {
          write_json(f, meta, json::array({results[i]}));
        } else {
          std::vector<json> rows;
          if (cmd->rows_in_csv) {
            for (const auto& r : outcomes[i].rows) rows.push_back(with_input(var, values[i], r));
          } else {
            json s = results[i];
            s.erase("rows");
            rows.push_back(s);
          }
          write_csv(f, meta, rows);
        }
      }
      std::ofstream agg(fs::path(o.output_dir) / (cmd->name + "_aggregate.csv"));
      write_csv(agg, meta, csv_rows);
      if (!agg) throw std::runtime_error("cannot write to " + o.output_dir);
    } else {
      std::ofstream file;
      if (!o.output.empty()) {
        file.open(o.output);
        if (!file) throw std::runtime_error("cannot open " + o.output);
      }
      std::ostream& os = o.output.empty() ? std::cout : file;
      if (o.format == "json")
        write_json(os, meta, results);
      else
        write_csv(os, meta, csv_rows);
    }
  } catch (const std::exception& e) {
    std::cerr << "brjuno " << cmd->name << ": " << e.what() << '\n';
    return kUsage;
  }
  return status;
}
