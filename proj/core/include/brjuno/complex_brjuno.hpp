#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

namespace brjuno {

using cplx = std::complex<double>;

// F(z) = -Li2(1/z)/pi, the Cauchy transform of -ln on (0, 1), and its derivative.
cplx F_neglog(cplx z);
cplx F_neglog_prime(cplx z);

// (1/pi) int_0^1 f(x)/(x - z) dx by tanh-sinh quadrature with the value at Re z subtracted.
// Throws OnSlit for z in [0, 1].
cplx cauchy_F(const std::function<double(double)>& f, cplx z);

struct Holomorphic {
  std::function<cplx(cplx)> f;
  std::function<cplx(cplx)> df;
};

Holomorphic neg_log_transform();

struct Periodized {
  cplx partial;      // symmetric sum over |n| <= n_max
  cplx value;        // Richardson combination of the n_max and n_max/2 sums
  double tail_estimate = 0;
};

Periodized periodize(const std::function<cplx(cplx)>& F, cplx z, int n_max);

struct MonoidElement {
  long a = 1, b = 0, c = 0, d = 1;
  long det() const { return a * d - b * c; }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  bool operator==(const MonoidElement&) const = default;
  auto operator<=>(const MonoidElement&) const = default;
};

MonoidElement operator*(const MonoidElement& g, const MonoidElement& h);
MonoidElement monoid_generator(long m);  // (0 1; 1 m)
bool is_member(const MonoidElement& g);
// Generators m_1 .. m_k with g = g_{m_1} ... g_{m_k}; empty for the identity.
std::vector<long> factorize(const MonoidElement& g);

// Breadth-first products of generators with d <= q_max, identity first.
std::vector<MonoidElement> monoid_enumerate(long q_max);
// Same set by scanning all matrices with d <= q_max against is_member, sorted.
std::vector<MonoidElement> monoid_filter(long q_max);

// (L_g F)(z) with its derivative; the identity returns F itself. PoleProximity if |a - cz| < 1e-15.
cplx Lg_action(const MonoidElement& g, const Holomorphic& F, cplx z);
Holomorphic Lg_action(const MonoidElement& g, const Holomorphic& F);

struct TruncationPolicy {
  long q_max = 256;     // bound on the entry d
  int n_max = 1000;     // explicit periodization range; the remainder is added analytically
  double series_tol = 1e-14;
  int n_near = 4;       // translates evaluated element by element
  int laurent_terms = 40;
  int laurent_points = 64;
  bool extended = false;  // long double evaluation, for eps below 1e-6
};

struct ComplexBrjunoValue {
  cplx value;
  std::vector<cplx> shells;     // contribution of d in (2^(k-1), 2^k], shell 0 is d <= 1
  double shell_decay = 0;       // |last shell| / |previous shell|
  double tail_estimate = 0;     // geometric extrapolation from the last shell
  double periodization_tail = 0;  // magnitude of the analytic remainder beyond n_max
  bool truncation_unreliable = false;
};

// The monoid sum for f = -ln with precomputed elements and Laurent data; evaluation is thread-safe.
class ComplexBrjuno {
 public:
  explicit ComplexBrjuno(TruncationPolicy policy = {});
  ~ComplexBrjuno();
  ComplexBrjuno(ComplexBrjuno&&) noexcept;
  ComplexBrjuno& operator=(ComplexBrjuno&&) noexcept;

  ComplexBrjunoValue operator()(cplx z) const;
  const TruncationPolicy& policy() const;
  std::size_t element_count() const;
  // Laurent coefficient d_0 of the aggregate about 1/2; zero up to quadrature error.
  double constant_term() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

ComplexBrjunoValue complex_brjuno(cplx z, const TruncationPolicy& policy = {});

struct ScanRow {
  double x = 0, eps = 0;
  cplx value;
};

std::vector<ScanRow> boundary_scan(const ComplexBrjuno& B, double x0, double x1, double eps, int samples,
                                   int threads = 0);

struct JumpEstimate {
  double x0 = 0, eps = 0, delta = 0;
  double raw = 0;    // Re B(x0 + delta + i eps) - Re B(x0 - delta + i eps)
  double jump = 0;   // fitted step height; a decreasing jump is negative
  double slope = 0;  // fitted smooth part
};

// Fits D(delta) = J (2/pi) atan(delta/eps) + s delta from delta and 2 delta.
JumpEstimate jump_estimate(const ComplexBrjuno& B, double x0, double eps, double delta);

}  // namespace brjuno
