#include "brjuno/cf.hpp"

#include "brjuno/errors.hpp"

#include <map>

namespace brjuno {

namespace mp = boost::multiprecision;

namespace {

void check_alpha(const Rational& alpha) {
  if (alpha < Rational(1, 2) || alpha > 1) throw DomainError("alpha must lie in [1/2, 1]");
}

bool alpha_is_dyadic(const Rational& alpha) {
  BigInt den = mp::denominator(alpha);
  return (den & (den - 1)) == 0;
}

}  // namespace

std::pair<BigInt, QuadraticSurd> modified_parts(const QuadraticSurd& x, const Rational& alpha) {
  check_alpha(alpha);
  BigInt k = (x + Rational(1 - alpha)).floor();
  return {k, x - k};
}

std::pair<BigInt, Real> modified_parts(const Real& x, const Rational& alpha) {
  check_alpha(alpha);
  BigInt k = floor_to_int(x);
  Real frac = x - to_real(k);
  if (frac >= to_real(alpha)) {
    k += 1;
    frac -= 1;
  }
  return {k, frac};
}

GaussStep gauss_step(const QuadraticSurd& x, const Rational& alpha) {
  if (x.is_zero()) throw DomainError("gauss_step: x = 0 (expansion terminates)");
  auto [k, r] = modified_parts(x.reciprocal(), alpha);
  int eps = r.sign() < 0 ? -1 : 1;
  return {k, eps, r.abs()};
}

GaussStepReal gauss_step(const Real& x, const Rational& alpha) {
  if (x == 0) throw DomainError("gauss_step: x = 0 (expansion terminates)");
  auto [k, r] = modified_parts(Real(1) / x, alpha);
  int eps = r < 0 ? -1 : 1;
  return {k, eps, mp::abs(r)};
}

Real lambda_of(const Rational& alpha) {
  check_alpha(alpha);
  if (alpha * alpha + alpha > 1) return (mp::sqrt(Real(5)) - 1) / 2;
  return mp::sqrt(Real(2)) - 1;
}

namespace {

void push_convergent(CFExpansion& e) {
  std::size_t n = e.a.size() - 1;
  if (n == 0) {
    e.p.push_back(e.a[0]);
    e.q.push_back(1);
    return;
  }
  const BigInt& pm2 = n >= 2 ? e.p[n - 2] : BigInt(1);
  const BigInt& qm2 = n >= 2 ? e.q[n - 2] : BigInt(0);
  int s = e.eps[n - 1];
  e.p.push_back(e.a[n] * e.p[n - 1] + s * pm2);
  e.q.push_back(e.a[n] * e.q[n - 1] + s * qm2);
}

void push_remainder(CFExpansion& e, Real xn) {
  Real b = e.beta.empty() ? xn : Real(e.beta.back() * xn);
  e.x.push_back(std::move(xn));
  e.beta.push_back(std::move(b));
}

CFExpansion expand_exact(const QuadraticSurd& x, const Rational& alpha, int max_depth) {
  CFExpansion e;
  e.alpha = alpha;
  e.bits = current_bits();
  e.x_value = x.to_real();
  auto [a0, r0] = modified_parts(x, alpha);
  e.a.push_back(a0);
  e.eps.push_back(r0.sign() < 0 ? -1 : 1);
  push_convergent(e);
  QuadraticSurd xn = r0.abs();
  std::map<QuadraticSurd, std::size_t, SurdKeyLess> seen;
  for (std::size_t n = 0;; ++n) {
    if (e.period) {
      // copy forward from the cycle instead of redoing surd arithmetic
      std::size_t src = e.period->first + (n - e.period->first) % e.period->second;
      QuadraticSurd xs = e.x_exact[src];
      e.x_exact.push_back(std::move(xs));
      push_remainder(e, e.x[src]);
      if (static_cast<int>(n) >= max_depth) break;
      BigInt an = e.a[src + 1];
      e.a.push_back(std::move(an));
      e.eps.push_back(e.eps[src + 1]);
      push_convergent(e);
      continue;
    }
    e.x_exact.push_back(xn);
    push_remainder(e, xn.to_real());
    if (xn.is_zero()) {
      e.terminated_at = n;
      break;
    }
    if (!xn.is_rational()) {
      auto [it, fresh] = seen.emplace(xn, n);
      if (!fresh) {
        e.period = std::make_pair(it->second, n - it->second);
        e.x_exact.pop_back();
        e.x.pop_back();
        e.beta.pop_back();
        --n;
        continue;
      }
    }
    if (static_cast<int>(n) >= max_depth) break;
    GaussStep st = gauss_step(xn, alpha);
    e.a.push_back(st.a);
    e.eps.push_back(st.eps);
    push_convergent(e);
    xn = st.x_next;
  }
  return e;
}

CFExpansion expand_float(const FloatValue& in, const Rational& alpha, int max_depth) {
  PrecisionScope ps(in.bits);
  CFExpansion e;
  e.alpha = alpha;
  e.bits = in.bits;
  e.x_value = in.value;
  const Real alpha_r = to_real(alpha);
  const bool alpha_exact = alpha_is_dyadic(alpha);
  const Real min_rel = mp::ldexp(Real(1), -8);

  auto truncate = [&e](const char* why) {
    e.truncated = true;
    e.truncation_reason = why;
  };

  // one reduction y -> ([y]_alpha, {y}_alpha); false when the error interval straddles a branch boundary
  auto reduce = [&](const Real& y, const Real& err, BigInt& k, Real& r) {
    k = floor_to_int(y);
    Real frac;
    mpfr_frac(frac.backend().data(), y.backend().data(), MPFR_RNDN);
    if (frac < 0) frac += 1;
    Real slack = err + (alpha_exact ? Real(0) : ulp_of(alpha_r));
    if (slack > 0 && mp::abs(frac - alpha_r) <= slack) return false;
    if (frac >= alpha_r) {
      k += 1;
      frac -= 1;
    }
    if (err > 0 && mp::abs(frac) <= err) return false;
    r = frac;
    return true;
  };

  BigInt k;
  Real r;
  Real err = in.error;
  if (!reduce(in.value, err, k, r)) {
    truncate("integer part undetermined at input precision");
    return e;
  }
  e.a.push_back(k);
  e.eps.push_back(r < 0 ? -1 : 1);
  push_convergent(e);
  Real xn = mp::abs(r);
  for (std::size_t n = 0;; ++n) {
    push_remainder(e, xn);
    if (xn == 0) {
      e.terminated_at = n;
      break;
    }
    if (static_cast<int>(n) >= max_depth) break;
    if (err > xn * min_rel) {
      truncate("fewer than 8 significant bits left");
      break;
    }
    Real y;
    int inexact = mpfr_ui_div(y.backend().data(), 1, xn.backend().data(), MPFR_RNDN);
    Real ey = err / (xn * (xn - err));
    if (inexact != 0) ey += ulp_of(y) / 2;
    if (!reduce(y, ey, k, r)) {
      truncate("error interval straddles a branch boundary");
      break;
    }
    e.a.push_back(k);
    e.eps.push_back(r < 0 ? -1 : 1);
    push_convergent(e);
    xn = mp::abs(r);
    err = ey;
  }
  return e;
}

}  // namespace

CFExpansion expand(const RealInput& x, const Rational& alpha, int max_depth) {
  check_alpha(alpha);
  if (max_depth < 1) throw DomainError("expand: max_depth must be >= 1");
  if (x.is_float()) return expand_float(x.flt(), alpha, max_depth);
  return expand_exact(x.exact(), alpha, max_depth);
}

BetaGrowth beta_growth_check(const CFExpansion& e, std::optional<std::size_t> upto) {
  BetaGrowth g;
  g.lambda_used = lambda_of(e.alpha);
  std::size_t n_end = std::min(upto.value_or(e.size()), e.size());
  n_end = std::min(n_end, e.q.size());
  if (n_end == 0) return g;
  g.c1 = 0;
  g.c2 = -1;
  Real lp = 1;  // lambda^n
  for (std::size_t n = 0; n < n_end; ++n) {
    Real r1 = e.beta[n] / lp;
    Real r2 = to_real(e.q[n]) * lp;
    if (r1 > g.c1) g.c1 = r1;
    if (g.c2 < 0 || r2 < g.c2) g.c2 = r2;
    lp *= g.lambda_used;
  }
  g.ok = mp::isfinite(g.c1) && mp::isfinite(g.c2) && g.c2 > 0;
  return g;
}

std::vector<Real> beta_q_products(const CFExpansion& e) {
  std::vector<Real> out;
  std::size_t n_end = std::min(e.size(), e.q.size());
  if (n_end == 0) return out;
  if (e.terminated_at && n_end > 0) n_end = std::min(n_end, *e.terminated_at);
  for (std::size_t n = 0; n + 1 < e.q.size() && n < n_end; ++n) {
    if (e.terminated_at && n + 1 == *e.terminated_at) break;
    out.push_back(e.beta[n] * to_real(e.q[n + 1]));
  }
  return out;
}

Real reconstruct(const CFExpansion& e, std::size_t n) {
  Real t = e.eps[n] * e.x[n];
  Real pm1 = n >= 1 ? to_real(e.p[n - 1]) : Real(1);
  Real qm1 = n >= 1 ? to_real(e.q[n - 1]) : Real(0);
  return (to_real(e.p[n]) + pm1 * t) / (to_real(e.q[n]) + qm1 * t);
}

}  // namespace brjuno
