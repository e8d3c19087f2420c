#include "brjuno/brjuno_real.hpp"

#include "brjuno/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace brjuno {

namespace mp = boost::multiprecision;

SeriesFunction SeriesFunction::neg_log() { return SeriesFunction{}; }

SeriesFunction SeriesFunction::power(double nu) {
  if (nu < 0) throw DomainError("power weight needs nu >= 0");
  SeriesFunction f;
  f.tag = Tag::Power;
  f.nu = nu;
  return f;
}

SeriesFunction SeriesFunction::log_power(double nu, double mu) {
  if (nu < 0) throw DomainError("log_power weight needs nu >= 0");
  if (mu < 0 && nu <= 0) throw DomainError("log_power weight: mu < 0 requires nu > 0");
  SeriesFunction f;
  f.tag = Tag::LogPower;
  f.nu = nu;
  f.mu = mu;
  return f;
}

SeriesFunction SeriesFunction::from_callable(std::function<Real(const Real&)> fn, std::optional<Real> sup) {
  SeriesFunction f;
  f.tag = Tag::Custom;
  f.custom = std::move(fn);
  f.custom_bounded = sup.has_value();
  if (sup) f.custom_sup = *sup;
  return f;
}

Real SeriesFunction::operator()(const Real& x) const {
  switch (tag) {
    case Tag::NegLog:
      return -mp::log(x);
    case Tag::Power:
      if (nu == 0) return Real(1);
      return mp::pow(x, Real(-nu));
    case Tag::LogPower: {
      Real v = nu == 0 ? Real(1) : Real(mp::pow(x, Real(-nu)));
      if (mu != 0) v *= mp::pow(mp::abs(mp::log(x)), Real(mu));
      return v;
    }
    case Tag::Custom:
      return custom(x);
  }
  return Real(0);
}

bool SeriesFunction::bounded() const {
  switch (tag) {
    case Tag::NegLog:
      return false;
    case Tag::Power:
      return nu == 0;
    case Tag::LogPower:
      return nu == 0 && mu == 0;
    case Tag::Custom:
      return custom_bounded;
  }
  return false;
}

Real SeriesFunction::sup() const {
  if (tag == Tag::Custom) return custom_sup;
  return Real(1);
}

std::string SeriesFunction::name() const {
  std::ostringstream os;
  switch (tag) {
    case Tag::NegLog:
      return "neg_log";
    case Tag::Power:
      os << "power(" << nu << ")";
      return os.str();
    case Tag::LogPower:
      os << "log_power(" << nu << "," << mu << ")";
      return os.str();
    case Tag::Custom:
      return "custom";
  }
  return "?";
}

namespace {

Real rounding_allowance(const Real& value, std::size_t terms) {
  return mp::ldexp(mp::abs(value) + 1, 8 - current_bits()) * Real(terms + 1);
}

}  // namespace

BrjunoEval brjuno_series(const CFExpansion& e, const SeriesFunction& f) {
  PrecisionScope ps(e.bits > 0 ? e.bits : current_bits());
  BrjunoEval out;
  out.alpha = e.alpha;
  out.depth = e.size() == 0 ? 0 : e.size() - 1;
  out.partial_sum = 0;
  out.tail_bound = 0;
  if (e.size() == 0) {
    out.value = std::numeric_limits<double>::quiet_NaN();
    out.tail_bound = std::numeric_limits<double>::infinity();
    out.tail = BrjunoEval::Tail::Heuristic;
    out.reliable = false;
    return out;
  }

  std::size_t last = e.terminated_at ? *e.terminated_at : e.size() - 1;
  std::vector<Real> terms;
  terms.reserve(last + 1);
  for (std::size_t n = 0; n <= last; ++n) {
    if (e.x[n] == 0) {
      if (!f.bounded()) break;
      terms.push_back(e.beta_at(static_cast<long>(n) - 1) * f(Real(0)));
      continue;
    }
    terms.push_back(e.beta_at(static_cast<long>(n) - 1) * f(e.x[n]));
  }
  for (const auto& t : terms) out.partial_sum += t;

  if (e.terminated_at) {
    if (!f.bounded()) {
      out.diverged = true;
      out.value = std::numeric_limits<double>::infinity();
      out.tail_bound = std::numeric_limits<double>::infinity();
    } else {
      out.value = out.partial_sum;
      out.tail_bound = rounding_allowance(out.value, terms.size());
    }
    return out;
  }

  if (e.period && e.period->first + e.period->second <= e.size()) {
    auto [k, len] = *e.period;
    Real pre = 0, block = 0;
    for (std::size_t n = 0; n < k; ++n) pre += terms[n];
    for (std::size_t n = k; n < k + len; ++n) block += terms[n];
    Real rho = e.beta[k + len - 1] / e.beta_at(static_cast<long>(k) - 1);
    out.value = pre + block / (1 - rho);
    out.tail = BrjunoEval::Tail::ExactPeriodic;
    out.tail_bound = mp::abs(out.value - out.partial_sum) + rounding_allowance(out.value, terms.size());
    return out;
  }

  BetaGrowth g = beta_growth_check(e);
  std::size_t N = e.size() - 1;
  Real geo = g.c1 * mp::pow(g.lambda_used, Real(static_cast<long>(N))) / (1 - g.lambda_used);
  if (f.bounded()) {
    out.tail = BrjunoEval::Tail::GeometricBound;
    out.tail_bound = f.sup() * geo + rounding_allowance(out.partial_sum, terms.size());
  } else {
    Real fmax = 0;
    for (std::size_t n = 0; n <= N; ++n)
      if (e.x[n] > 0) { Real fv = f(e.x[n]); if (fv > fmax) fmax = fv; }
    out.tail = BrjunoEval::Tail::Heuristic;
    out.tail_bound = e.beta[N] * fmax / (1 - g.lambda_used) + rounding_allowance(out.partial_sum, terms.size());
    out.reliable = false;
  }
  out.value = out.partial_sum;
  return out;
}

BrjunoEval brjuno_series(const RealInput& x, const SeriesFunction& f, const Rational& alpha, int depth) {
  if (depth < 1) throw DomainError("brjuno_series: depth must be >= 1");
  if (x.is_float()) {
    PrecisionScope ps(x.bits());
    return brjuno_series(expand(x, alpha, depth), f);
  }
  return brjuno_series(expand(x, alpha, depth), f);
}

BrjunoEval brjuno_B(const RealInput& x, int depth) {
  return brjuno_series(x, SeriesFunction::neg_log(), Rational(1), depth);
}

BrjunoEval brjuno_Be(const RealInput& x, int depth) {
  return brjuno_series(x, SeriesFunction::neg_log(), Rational(1, 2), depth);
}

Real odd_part_closed_form(const Real& x) {
  if (!(x > 0) || x > Real(0.5)) throw DomainError("odd_part_closed_form: x must lie in (0, 1/2]");
  return x * mp::log(1 / x - 1) / 2;
}

EvenOddResiduals even_odd_check(const RealInput& x, const SeriesFunction& f, int depth) {
  if (x.is_float()) throw DomainError("even_odd_check: needs an exact input");
  QuadraticSurd xs = x.exact();
  if (xs.sign() <= 0 || numeric_less(QuadraticSurd(Rational(1, 2)), xs))
    throw DomainError("even_odd_check: x must lie in (0, 1/2]");
  if (xs.is_rational() && !f.bounded()) throw DomainError("even_odd_check: rational x makes the series infinite");

  const Rational one(1);
  auto B = [&](const QuadraticSurd& v) { return brjuno_series(RealInput(v), f, one, depth); };
  BrjunoEval bx = B(xs), bmx = B(-xs);
  QuadraticSurd ys = xs.reciprocal();
  BrjunoEval by = B(ys), bmy = B(-ys);

  Real xr = xs.to_real();
  Real one_m = (QuadraticSurd(BigInt(1)) - xs).to_real();
  Real ratio = (xs * (QuadraticSurd(BigInt(1)) - xs).reciprocal()).to_real();
  Real f_x = f(xr), f_1mx = f(one_m), f_ratio = f(ratio);

  Real Bminus_x = (bx.value - bmx.value) / 2;
  Real Bplus_x = (bx.value + bmx.value) / 2;
  Real Bminus_y = (by.value - bmy.value) / 2;
  Real Bplus_y = (by.value + bmy.value) / 2;

  EvenOddResiduals r;
  r.r26a = mp::abs(Bminus_x - (f_x - f_1mx - one_m * f_ratio) / 2);
  Real G = f_x + f_1mx + one_m * f_ratio + 2 * xr * Bminus_y;
  r.r26b = mp::abs(Bplus_x - xr * Bplus_y - G / 2);
  r.tail_26a = (bx.tail_bound + bmx.tail_bound) / 2;
  r.tail_26b = r.tail_26a + xr * (by.tail_bound + bmy.tail_bound);
  Real slack = rounding_allowance(bx.value + by.value, 4 * static_cast<std::size_t>(depth));
  r.ok = r.r26a <= r.tail_26a + slack && r.r26b <= r.tail_26b + slack;
  return r;
}

BnuEval bnu_series(const RealInput& x, double nu, int depth) {
  if (!(nu > 0)) throw DomainError("bnu_series: nu must be positive");
  std::optional<PrecisionScope> ps;
  if (x.is_float()) ps.emplace(x.bits());
  CFExpansion e = expand(x, Rational(1), depth);
  BnuEval out;
  out.series = brjuno_series(e, SeriesFunction::power(nu));
  out.bracket = 0;
  out.lower_ratio_min = 1;
  if (out.series.diverged) return out;
  Real partial = 0;
  Real nu_r(nu);
  for (std::size_t n = 0; n < e.size(); ++n) {
    if (e.beta[n] == 0) break;
    Real term = e.beta_at(static_cast<long>(n) - 1) * mp::pow(e.x[n], -nu_r);
    Real br = mp::pow(to_real(e.q[n]), -1 - nu_r) * mp::pow(e.beta[n], -nu_r);
    partial += term;
    out.bracket += br;
    { Real ratio = term / br; if (ratio < out.lower_ratio_min) out.lower_ratio_min = ratio; }
  }
  Real tiny = rounding_allowance(partial, e.size());
  out.upper_ok = partial <= out.bracket + tiny;
  out.lower_ok = mp::pow(Real(2), -nu_r) * out.bracket <= partial + tiny;
  out.lower_weak_ok = mp::pow(Real(2), -1 - nu_r) * out.bracket <= partial + tiny;
  return out;
}

DiophantineEstimate diophantine_estimate(const CFExpansion& e) {
  if (e.alpha != 1) throw DomainError("diophantine_estimate: needs the alpha = 1 expansion");
  std::size_t usable = e.size();
  while (usable > 0 && e.beta[usable - 1] == 0) --usable;
  if (usable < 6) throw InsufficientDepth("diophantine_estimate: need depth >= 5 with nonzero beta");
  std::vector<double> lb(usable);
  for (std::size_t n = 0; n < usable; ++n) lb[n] = static_cast<double>(mp::log(e.beta[n]));

  DiophantineEstimate d;
  for (std::size_t n = 1; n < usable; ++n) d.tau_n.push_back(lb[n] / lb[n - 1] - 1);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double m = 0;
  for (std::size_t n = 2; n < usable; ++n) {
    double X = lb[n - 1], Y = lb[n];
    sx += X;
    sy += Y;
    sxx += X * X;
    sxy += X * Y;
    m += 1;
  }
  double den = m * sxx - sx * sx;
  d.slope = den != 0 ? (m * sxy - sx * sy) / den : 1.0;
  d.tau_hat = std::max(0.0, d.slope - 1);
  double c = std::numeric_limits<double>::infinity();
  for (std::size_t n = 2; n < usable; ++n) c = std::min(c, std::exp(lb[n] - (1 + d.tau_hat) * lb[n - 1]));
  d.c_hat = c;
  return d;
}

}  // namespace brjuno
