#include "commands.hpp"

#include <brjuno/brjuno_real.hpp>
#include <brjuno/cf.hpp>
#include <brjuno/errors.hpp>
#include <brjuno/lindstedt.hpp>
#include <brjuno/operator_bench.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace brjuno_cli {

namespace mp = boost::multiprecision;
using brjuno::BigInt;
using brjuno::Rational;
using brjuno::Real;

const std::vector<Command>& commands() {
  static const std::vector<Command> all = {
      {"cf", {"x", "alpha"}, true, true, false, false},
      {"brjuno", {"x", "alpha"}, true, false, false, false},
      {"bseries", {"x", "alpha"}, true, false, false, false},
      {"dioph", {"x"}, true, false, false, false},
      {"operator", {"alpha", "gamma"}, false, true, false, false},
      {"complex", {"x", "eps"}, true, false, true, false},
      {"scan", {"eps"}, false, true, true, false},
      {"lindstedt", {"rho"}, true, true, false, true},
      {"compare", {"rho"}, true, false, false, true},
  };
  return all;
}

const Command& find_command(const std::string& name) {
  for (const auto& c : commands())
    if (c.name == name) return c;
  throw std::logic_error("unknown command " + name);
}

namespace {

std::string str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

json num(const Real& x) {
  if (mp::isnan(x)) return "nan";
  if (mp::isinf(x)) return x > 0 ? "inf" : "-inf";
  return brjuno::format_real(x);
}

json num(const BigInt& v) {
  if (mp::abs(v) < (BigInt(1) << 53)) return static_cast<std::int64_t>(v);
  return v.str();
}

// Decimals become exact rationals: 0.618 is 618/1000.
Rational parse_alpha(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return brjuno::parse_rational(s);
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  if (digits.empty() || digits.find_first_not_of("+-0123456789") != std::string::npos)
    throw brjuno::ParseError("not a decimal: '" + s + "'");
  bool neg = digits.front() == '-';
  if (neg || digits.front() == '+') digits.erase(0, 1);
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));  // "0618" would read as octal
  Rational r(BigInt(digits), mp::pow(BigInt(10), static_cast<unsigned>(s.size() - dot - 1)));
  return neg ? Rational(-r) : r;
}

double parse_double(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw brjuno::ParseError(std::string(what) + ": not a number: '" + s + "'");
  return v;
}

brjuno::SeriesFunction parse_f(const std::string& s) {
  auto parts = [&](std::size_t from) {
    std::vector<double> v;
    std::stringstream ss(s.substr(from));
    for (std::string t; std::getline(ss, t, ':');) v.push_back(parse_double(t, "--f"));
    return v;
  };
  if (s == "neglog") return brjuno::SeriesFunction::neg_log();
  if (s.rfind("power:", 0) == 0) {
    auto v = parts(6);
    if (v.size() == 1) return brjuno::SeriesFunction::power(v[0]);
  }
  if (s.rfind("logpower:", 0) == 0) {
    auto v = parts(9);
    if (v.size() == 2) return brjuno::SeriesFunction::log_power(v[0], v[1]);
  }
  throw brjuno::ParseError("--f: expected neglog, power:NU or logpower:NU:MU, got '" + s + "'");
}

const char* tail_name(brjuno::BrjunoEval::Tail t) {
  switch (t) {
    case brjuno::BrjunoEval::Tail::ExactPeriodic: return "exact_periodic";
    case brjuno::BrjunoEval::Tail::GeometricBound: return "geometric";
    case brjuno::BrjunoEval::Tail::Heuristic: return "heuristic";
    default: return "none";
  }
}

Outcome run_cf(const Options& o, const Inputs& in) {
  auto x = brjuno::parse_number(in.x, o.bits);
  auto alpha = parse_alpha(in.alpha);
  auto e = brjuno::expand(x, alpha, o.depth);
  Outcome out;
  auto& s = out.summary;
  s["x"] = x.str();
  s["alpha"] = str(alpha);
  s["depth"] = o.depth;
  s["terms"] = e.size();
  s["exact"] = e.exact();
  s["period"] = e.period ? json::array({e.period->first, e.period->second}) : json(nullptr);
  s["terminated_at"] = e.terminated_at ? json(*e.terminated_at) : json(nullptr);
  if (e.terminated_at) s["convergent"] = e.p.back().str() + "/" + e.q.back().str();
  s["truncated"] = e.truncated;
  if (e.truncated) {
    s["truncation_reason"] = e.truncation_reason;
    out.status = kUnreliable;
  }
  for (std::size_t n = 0; n < e.size(); ++n)
    out.rows.push_back({{"n", n},
                        {"a", num(e.a[n])},
                        {"eps", e.eps[n]},
                        {"x_n", num(e.x[n])},
                        {"p", num(e.p[n])},
                        {"q", num(e.q[n])},
                        {"beta", num(e.beta[n])},
                        {"bits", e.bits}});
  return out;
}

Outcome run_series(const Options& o, const Inputs& in, const brjuno::SeriesFunction& f) {
  auto x = brjuno::parse_number(in.x, o.bits);
  auto alpha = parse_alpha(in.alpha);
  auto ev = brjuno::brjuno_series(x, f, alpha, o.depth);
  Outcome out;
  out.summary = {{"x", x.str()},
                 {"alpha", str(alpha)},
                 {"f", f.name()},
                 {"depth", ev.depth},
                 {"value", num(ev.value)},
                 {"tail_bound", num(ev.tail_bound)},
                 {"diverged", ev.diverged},
                 {"tail", tail_name(ev.tail)},
                 {"reliable", ev.reliable},
                 {"bits", x.is_float() ? x.bits() : o.bits}};
  if (!ev.reliable) out.status = kUnreliable;
  return out;
}

Outcome run_dioph(const Options& o, const Inputs& in) {
  auto x = brjuno::parse_number(in.x, o.bits);
  auto e = brjuno::expand(x, Rational(1), o.depth);
  auto d = brjuno::diophantine_estimate(e);
  auto b = brjuno::bnu_series(x, o.nu, o.depth);
  Outcome out;
  out.summary = {{"x", x.str()},
                 {"depth", o.depth},
                 {"tau_hat", d.tau_hat},
                 {"c_hat", d.c_hat},
                 {"slope", d.slope},
                 {"nu", o.nu},
                 {"b_nu", num(b.series.value)},
                 {"bracket", num(b.bracket)},
                 {"lower_ratio_min", num(b.lower_ratio_min)},
                 {"upper_ok", b.upper_ok},
                 {"lower_ok", b.lower_ok},
                 {"lower_weak_ok", b.lower_weak_ok},
                 {"bits", x.is_float() ? x.bits() : o.bits}};
  for (std::size_t n = 0; n < d.tau_n.size(); ++n) out.rows.push_back({{"n", n + 1}, {"tau_n", d.tau_n[n]}});
  if (!b.series.reliable) out.status = kUnreliable;
  return out;
}

Outcome run_operator(const Options& o, const Inputs& in) {
  using brjuno::GridFunction;
  auto alpha = parse_alpha(in.alpha);
  double gamma = parse_double(in.gamma, "--gamma");
  bool even = alpha == Rational(1, 2);
  GridFunction f = even ? brjuno::neg_log_grid(o.n)
                        : GridFunction::sample(
                              o.n, [n = o.n](double t) { return t > 0 ? -std::log(t) : std::log(double(n)) + 1; },
                              GridFunction::Symmetry::Periodic);
  auto nr = brjuno::neumann_inverse(f, alpha, o.tol, o.max_terms);
  Outcome out;
  auto& s = out.summary;
  s["n"] = o.n;
  s["alpha"] = str(alpha);
  s["source"] = "neglog";
  s["lambda"] = static_cast<double>(brjuno::lambda_of(alpha));
  s["terms"] = nr.terms;
  s["decay_ratio"] = nr.decay_ratio;
  s["sup_norm"] = nr.g.sup_norm();
  if (even) {
    double B = o.B > 0 ? o.B : 2 * o.A / (std::pow(2.0, gamma) - std::pow(2.0, -gamma));
    auto c = brjuno::contraction_check(nr.g, gamma, o.A, B);
    s["gamma"] = gamma;
    s["A"] = o.A;
    s["B"] = B;
    s["holder_seminorm"] = brjuno::holder_seminorm(nr.g, gamma);
    s["bmo"] = brjuno::bmo_seminorm(nr.g, 4096);
    s["contraction_lhs"] = c.lhs;
    s["contraction_rhs"] = c.rhs;
    s["contraction_slack"] = c.slack;
    s["contraction_ok"] = c.ok;
  }
  for (std::size_t j = 0; j < nr.g.size(); ++j)
    out.rows.push_back({{"x", nr.g.node(static_cast<int>(j))}, {"g", nr.g[j]}});
  return out;
}

Outcome run_complex(const Options& o, const Inputs& in, const brjuno::ComplexBrjuno& B) {
  auto xin = brjuno::parse_number(in.x, o.bits);
  double x = static_cast<double>(xin.to_real());
  double eps = parse_double(in.eps, "--eps");
  auto v = B({x, eps});
  Outcome out;
  auto& s = out.summary;
  s["x"] = xin.str();
  s["eps"] = eps;
  s["re"] = v.value.real();
  s["im"] = v.value.imag();
  if (xin.is_surd()) {
    double b = static_cast<double>(brjuno::brjuno_B(xin, 200).value);
    s["boundary_B"] = b;
    s["im_error"] = std::abs(v.value.imag() - b);
  }
  if (o.jump > 0) {
    auto j = brjuno::jump_estimate(B, x, eps, o.jump);
    s["jump_delta"] = j.delta;
    s["jump_raw"] = j.raw;
    s["jump"] = j.jump;
    s["jump_slope"] = j.slope;
  }
  s["shell_decay"] = v.shell_decay;
  s["tail_estimate"] = v.tail_estimate;
  s["periodization_tail"] = v.periodization_tail;
  s["truncation_unreliable"] = v.truncation_unreliable;
  s["q_max"] = B.policy().q_max;
  s["n_max"] = B.policy().n_max;
  s["elements"] = B.element_count();
  if (v.truncation_unreliable) out.status = kUnreliable;
  return out;
}

Outcome run_scan(const Options& o, const Inputs& in, const brjuno::ComplexBrjuno& B) {
  double eps = parse_double(in.eps, "--eps");
  auto rows = brjuno::boundary_scan(B, o.x0, o.x1, eps, o.samples, o.threads);
  Outcome out;
  out.summary = {{"x0", o.x0}, {"x1", o.x1}, {"eps", eps}, {"samples", o.samples}, {"q_max", B.policy().q_max}};
  for (const auto& r : rows)
    out.rows.push_back({{"x", r.x}, {"eps", r.eps}, {"re", r.value.real()}, {"im", r.value.imag()}});
  return out;
}

brjuno::MapKind map_kind(const std::string& s) {
  return s == "standard" ? brjuno::MapKind::Standard : brjuno::MapKind::SemiStandard;
}

void put_estimate(json& s, const brjuno::CriticalEstimate& est) {
  s["k_hat"] = num(est.k_hat);
  s["ln_inv_k"] = num(est.ln_inv_k);
  s["two_B"] = num(est.two_B);
  s["delta"] = num(est.delta);
}

Outcome run_lindstedt(const Options& o, const Inputs& in) {
  auto rho = brjuno::parse_number(in.x, o.bits);
  auto kind = map_kind(o.map);
  auto series = kind == brjuno::MapKind::SemiStandard ? brjuno::semi_standard_series(rho, o.order)
                                                      : brjuno::standard_map_series(rho, o.order);
  Outcome out;
  auto& s = out.summary;
  s["rho"] = rho.str();
  s["order"] = o.order;
  s["map"] = o.map;
  try {
    auto est = brjuno::critical_constant_estimate(series);
    put_estimate(s, est);
    s["slope_first"] = num(est.slope_first);
    s["slope_second"] = num(est.slope_second);
    s["window"] = json::array({est.window_lo, est.window_hi});
  } catch (const brjuno::Error& e) {
    s["estimate_error"] = e.what();
    out.status = kUnreliable;
  }
  s["bits"] = series.bits;
  for (int k = 1; k <= series.order; ++k) {
    Real size = 0;
    if (kind == brjuno::MapKind::SemiStandard) {
      size = series.c[k].abs();
    } else {
      for (const auto& m : series.modes[k])
        if (Real a = m.abs(); a > size) size = a;
    }
    out.rows.push_back({{"n", k}, {"abs_c", num(size)}, {"r_n", num(series.radius_estimates[k])}});
  }
  return out;
}

Outcome run_compare(const Options& o, const Inputs& in) {
  auto rho = brjuno::parse_number(in.x, o.bits);
  auto est = brjuno::critical_constant(rho, map_kind(o.map), o.order);
  Outcome out;
  out.summary["rho"] = rho.str();
  out.summary["order"] = o.order;
  put_estimate(out.summary, est);
  out.summary["bits"] = std::max(o.bits, brjuno::kDefaultBits);
  if (est.rational) {
    out.summary["error"] = "rational rotation number";
    out.status = kDomain;
  }
  return out;
}

}  // namespace

Outcome run(const Command& cmd, const Options& o, const Inputs& in, const Shared& shared) {
  try {
    if (cmd.name == "cf") return run_cf(o, in);
    if (cmd.name == "brjuno") return run_series(o, in, brjuno::SeriesFunction::neg_log());
    if (cmd.name == "bseries") return run_series(o, in, parse_f(o.f));
    if (cmd.name == "dioph") return run_dioph(o, in);
    if (cmd.name == "operator") return run_operator(o, in);
    if (cmd.name == "complex") return run_complex(o, in, *shared.complex);
    if (cmd.name == "scan") return run_scan(o, in, *shared.complex);
    if (cmd.name == "lindstedt") return run_lindstedt(o, in);
    if (cmd.name == "compare") return run_compare(o, in);
  } catch (const brjuno::ParseError& e) {
    return {{{"error", e.what()}}, {}, kUsage};
  } catch (const brjuno::NoConvergence& e) {
    return {{{"error", e.what()}}, {}, kUnreliable};
  } catch (const brjuno::Unstable& e) {
    return {{{"error", e.what()}}, {}, kUnreliable};
  } catch (const brjuno::InsufficientDepth& e) {
    return {{{"error", e.what()}}, {}, kUnreliable};
  } catch (const brjuno::Error& e) {
    return {{{"error", e.what()}}, {}, kDomain};
  } catch (const std::runtime_error& e) {
    return {{{"error", e.what()}}, {}, kUsage};
  }
  throw std::logic_error("no runner for " + cmd.name);
}

}  // namespace brjuno_cli
