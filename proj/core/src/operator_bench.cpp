#include "brjuno/operator_bench.hpp"

#include "brjuno/errors.hpp"

#include <algorithm>
#include <cmath>

namespace brjuno {

GridFunction::GridFunction(int n, std::vector<double> values, Symmetry s) : n_(n), sym_(s), v_(std::move(values)) {
  if (n < 1) throw DomainError("GridFunction: n must be >= 1");
  if (v_.size() != static_cast<std::size_t>(n) + 1) throw DomainError("GridFunction: expected n + 1 node values");
}

GridFunction GridFunction::sample(int n, const std::function<double(double)>& f, Symmetry s) {
  std::vector<double> v(static_cast<std::size_t>(n) + 1);
  double h = s == Symmetry::Even ? 0.5 / n : 1.0 / n;
  for (int j = 0; j <= n; ++j) v[j] = f(j * h);
  return GridFunction(n, std::move(v), s);
}

GridFunction GridFunction::constant(int n, double c, Symmetry s) {
  return GridFunction(n, std::vector<double>(static_cast<std::size_t>(n) + 1, c), s);
}

double GridFunction::operator()(double x) const {
  double t, pos;
  if (sym_ == Symmetry::Even) {
    t = std::fabs(x - std::nearbyint(x));
    pos = t * 2 * n_;
  } else {
    t = x - std::floor(x);
    pos = t * n_;
  }
  if (pos >= n_) return v_[n_];
  int j = static_cast<int>(pos);
  double w = pos - j;
  return w == 0 ? v_[j] : (1 - w) * v_[j] + w * v_[j + 1];
}

double GridFunction::sup_norm() const {
  double m = 0;
  for (double v : v_) m = std::max(m, std::fabs(v));
  return m;
}

GridFunction GridFunction::operator+(const GridFunction& o) const {
  if (o.n_ != n_ || o.sym_ != sym_) throw DomainError("GridFunction: incompatible grids");
  std::vector<double> v(v_.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = v_[j] + o.v_[j];
  return GridFunction(n_, std::move(v), sym_);
}

GridFunction GridFunction::operator*(double s) const {
  std::vector<double> v(v_);
  for (double& x : v) x *= s;
  return GridFunction(n_, std::move(v), sym_);
}

GridFunction apply_T(const GridFunction& f, const Rational& alpha) {
  if (alpha < Rational(1, 2) || alpha > 1) throw DomainError("apply_T: alpha must lie in [1/2, 1]");
  const int n = f.n();
  std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
  if (f.symmetry() == GridFunction::Symmetry::Even) {
    if (alpha != Rational(1, 2)) throw DomainError("apply_T: even grids carry alpha = 1/2, use a periodic grid");
    for (int j = 1; j <= n; ++j) {
      double x = f.node(j);
      out[j] = x * f(1.0 / x);
    }
    return GridFunction(n, std::move(out), f.symmetry());
  }
  const double a = static_cast<double>(alpha);
  for (int j = 1; j < n; ++j) {
    double x = f.node(j);
    // (0, alpha) by the formula; [alpha, 1) through the evenness of the image on (0, 1 - alpha]
    double y = (x < a || alpha == 1) ? x : 1.0 - x;
    out[j] = y * f(1.0 / y);
  }
  if (alpha == 1) out[n] = f[0];  // left limit at 1
  return GridFunction(n, std::move(out), f.symmetry());
}

NeumannResult neumann_inverse(const GridFunction& f, const Rational& alpha, double tol, int max_terms) {
  if (!(tol > 0)) throw DomainError("neumann_inverse: tol must be positive");
  NeumannResult r;
  GridFunction term = f;
  std::vector<double> acc(f.values());
  for (int k = 0;; ++k) {
    double nrm = term.sup_norm();
    r.term_norms.push_back(nrm);
    if (nrm <= tol) {
      r.terms = k + 1;
      break;
    }
    if (k + 1 >= max_terms) throw NoConvergence("neumann_inverse: tolerance not met within the term limit");
    term = apply_T(term, alpha);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += term[j];
  }
  r.g = GridFunction(f.n(), std::move(acc), f.symmetry());
  const auto& t = r.term_norms;
  std::size_t first = t.size() / 2, count = 0;
  double logsum = 0;
  for (std::size_t k = std::max<std::size_t>(first, 1); k < t.size(); ++k) {
    if (t[k - 1] <= 0 || t[k] <= 0) continue;
    logsum += std::log(t[k] / t[k - 1]);
    ++count;
  }
  r.decay_ratio = count ? std::exp(logsum / count) : 0.0;
  return r;
}

GridFunction neg_log_grid(int n) {
  std::vector<double> v(static_cast<std::size_t>(n) + 1);
  v[0] = std::log(2.0 * n) + 1;
  for (int j = 1; j <= n; ++j) v[j] = -std::log(j * 0.5 / n);
  return GridFunction(n, std::move(v), GridFunction::Symmetry::Even);
}

double holder_seminorm(const GridFunction& f, double gamma) {
  if (!(gamma > 0) || gamma > 1) throw DomainError("holder_seminorm: gamma must lie in (0, 1]");
  const auto& v = f.values();
  const std::size_t m = v.size();
  std::vector<double> inv(m);
  for (std::size_t d = 1; d < m; ++d) inv[d] = std::pow(d * f.step(), -gamma);
  double best = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) best = std::max(best, std::fabs(v[i] - v[j]) * inv[j - i]);
  return best;
}

HolderNorm holder_norm(const GridFunction& f, double gamma, double A, double B) {
  HolderNorm h;
  h.gamma = gamma;
  h.seminorm = holder_seminorm(f, gamma);
  h.sup_norm = f.sup_norm();
  h.A = A;
  h.B = B;
  return h;
}

ContractionCheck contraction_check(const GridFunction& f, double gamma, double A, double B) {
  if (!(gamma > 0) || gamma > 0.5) throw DomainError("contraction_check: gamma must lie in (0, 1/2]");
  if (!(A > 0) || !(B > 0) || B / A <= 1.0 / (std::pow(2.0, gamma) - std::pow(2.0, -gamma)))
    throw BadWeights("contraction_check: need B/A > 1/(2^gamma - 2^-gamma)");
  if (f.symmetry() != GridFunction::Symmetry::Even) throw DomainError("contraction_check: needs an even grid");
  GridFunction tf = apply_T(f, Rational(1, 2));
  ContractionCheck c;
  c.lhs = holder_norm(tf, gamma, A, B).norm();
  c.rhs = std::pow(2.0, 2 * gamma - 1) * holder_norm(f, gamma, A, B).norm();
  c.slack = A * 2 * std::pow(f.step(), 1 - gamma) * f.sup_norm();
  c.ok = c.lhs <= c.rhs + c.slack;
  return c;
}

LemmaCheck lemma_check(double x, double y) {
  if (!(y > 0) || !(y < x) || !(x <= 0.5)) throw DomainError("lemma_check: need 0 < y < x <= 1/2");
  Rational X(x), Y(y);
  auto remainder = [](const Rational& t) {
    Rational inv = 1 / t;
    Rational shifted = inv + Rational(1, 2);
    BigInt m = boost::multiprecision::numerator(shifted) / boost::multiprecision::denominator(shifted);
    return Rational(inv - m);
  };
  Rational x1 = remainder(X), y1 = remainder(Y);
  Rational lhs = boost::multiprecision::abs(boost::multiprecision::abs(x1) - boost::multiprecision::abs(y1));
  Rational rhs = (X - Y) / (X * Y);
  LemmaCheck c;
  c.x1 = static_cast<double>(x1);
  c.y1 = static_cast<double>(y1);
  c.lhs = static_cast<double>(lhs);
  c.rhs = static_cast<double>(rhs);
  c.ok = lhs <= rhs;
  return c;
}

namespace {

// piecewise-linear function on [0, 1] with uniform cells
struct Unit {
  std::vector<double> w;
  double h;

  double mean(double a, double b) const { return integral(a, b, 0.0, false) / (b - a); }

  // integral of (f - c) or |f - c| over [a, b]
  double integral(double a, double b, double c, bool absolute) const {
    double total = 0;
    std::size_t M = w.size() - 1;
    std::size_t j0 = std::min(M - 1, static_cast<std::size_t>(a / h));
    for (std::size_t j = j0; j < M; ++j) {
      double l = j * h, r = (j + 1) * h;
      if (l >= b) break;
      double s0 = std::max(a, l), s1 = std::min(b, r);
      if (s1 <= s0) continue;
      double f0 = w[j] + (w[j + 1] - w[j]) * (s0 - l) / h - c;
      double f1 = w[j] + (w[j + 1] - w[j]) * (s1 - l) / h - c;
      double len = s1 - s0;
      if (!absolute) {
        total += 0.5 * (f0 + f1) * len;
      } else if ((f0 >= 0) == (f1 >= 0)) {
        total += 0.5 * std::fabs(f0 + f1) * len;
      } else {
        double t = f0 / (f0 - f1);
        total += 0.5 * (std::fabs(f0) * t + std::fabs(f1) * (1 - t)) * len;
      }
    }
    return total;
  }
};

Unit unit_interval(const GridFunction& f) {
  Unit u;
  if (f.symmetry() == GridFunction::Symmetry::Even) {
    int M = 2 * f.n();
    u.w.resize(static_cast<std::size_t>(M) + 1);
    for (int k = 0; k <= M; ++k) u.w[k] = f[std::min(k, M - k)];
    u.h = 1.0 / M;
  } else {
    u.w = f.values();
    u.h = 1.0 / f.n();
  }
  return u;
}

}  // namespace

double bmo_seminorm(const GridFunction& f, int max_windows) {
  if (max_windows < 1) throw DomainError("bmo_seminorm: max_windows must be >= 1");
  Unit u = unit_interval(f);
  double best = 0;
  long used = 0;
  for (int level = 0;; ++level) {
    long count = 1L << level;
    double len = 1.0 / count;
    if (len < u.h * 0.999 || used + count > max_windows) break;
    for (long k = 0; k < count; ++k) {
      double a = k * len, b = (k + 1) * len;
      double c = u.mean(a, b);
      best = std::max(best, u.integral(a, b, c, true) / len);
    }
    used += count;
  }
  return best;
}

double interpolation_bound(const GridFunction& f, double x) {
  const int n = f.n();
  auto at = [&](int j) {
    if (f.symmetry() == GridFunction::Symmetry::Even) {
      if (j < 0) j = -j;
      if (j > n) j = 2 * n - j;
    } else {
      j = ((j % n) + n) % n;
    }
    return f[static_cast<std::size_t>(j)];
  };
  double t = f.symmetry() == GridFunction::Symmetry::Even ? std::fabs(x - std::nearbyint(x)) * 2 * n
                                                            : (x - std::floor(x)) * n;
  int j = std::min(static_cast<int>(t), n - 1);
  double d2 = 0;
  for (int i : {j, j + 1}) d2 = std::max(d2, std::fabs(at(i - 1) - 2 * at(i) + at(i + 1)));
  return d2 / 8;
}

}  // namespace brjuno
