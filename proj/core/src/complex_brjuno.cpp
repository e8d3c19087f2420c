#include "brjuno/complex_brjuno.hpp"

#include "brjuno/dilog.hpp"
#include "brjuno/errors.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bernoulli.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <thread>

namespace brjuno {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

template <class T>
std::complex<T> F_of(std::complex<T> w) {
  return -dilog(T(1) / w) / boost::math::constants::pi<T>();
}

template <class T>
std::complex<T> dF_of(std::complex<T> w) {
  return -std::log(T(1) - T(1) / w) / w / boost::math::constants::pi<T>();
}

// pi cot(pi w), stable for large |Im w|
template <class T>
std::complex<T> pi_cot(std::complex<T> w) {
  const T pi = boost::math::constants::pi<T>();
  const std::complex<T> I(0, 1);
  if (w.imag() >= 0) {
    std::complex<T> q = std::exp(T(2) * I * pi * w);
    return pi * I * (q + T(1)) / (q - T(1));
  }
  std::complex<T> q = std::exp(T(-2) * I * pi * w);
  return -pi * I * (q + T(1)) / (q - T(1));
}

// Hurwitz zeta sum_{k >= 0} (a + k)^-s for integer s >= 2 and Re a >= 1, by Euler-Maclaurin.
template <class T>
std::complex<T> hurwitz(int s, std::complex<T> a) {
  constexpr int shift = 10, terms = 12;
  std::complex<T> sum = 0;
  for (int k = 0; k < shift; ++k) sum += std::pow(a + T(k), -s);
  std::complex<T> b = a + T(shift);
  sum += std::pow(b, 1 - s) / T(s - 1) + std::pow(b, -s) / T(2);
  std::complex<T> p = std::pow(b, -s - 1);
  std::complex<T> b2 = b * b;
  T rising = s;  // s (s+1) ... (s + 2m - 2)
  T fact = 2;    // (2m)!
  for (int m = 1; m <= terms; ++m) {
    sum += boost::math::bernoulli_b2n<T>(m) / fact * rising * p;
    rising *= T(s + 2 * m - 1) * T(s + 2 * m);
    fact *= T(2 * m + 1) * T(2 * m + 2);
    p /= b2;
  }
  return sum;
}

template <class Fn>
void parallel_for(std::size_t n, Fn fn, int threads = 0) {
  unsigned t = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
  t = static_cast<unsigned>(std::min<std::size_t>(t, n));
  if (t <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += t) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

cplx F_neglog(cplx z) {
  if (z.imag() == 0 && z.real() >= 0 && z.real() <= 1) throw OnSlit("F: argument on the slit [0, 1]");
  return F_of(z);
}

cplx F_neglog_prime(cplx z) {
  if (z.imag() == 0 && z.real() >= 0 && z.real() <= 1) throw OnSlit("F': argument on the slit [0, 1]");
  return dF_of(z);
}

Holomorphic neg_log_transform() { return {F_neglog, F_neglog_prime}; }

cplx cauchy_F(const std::function<double(double)>& f, cplx z) {
  if (z.imag() == 0 && z.real() >= 0 && z.real() <= 1) throw OnSlit("cauchy_F: z on [0, 1]");
  boost::math::quadrature::tanh_sinh<double> ts;
  auto integrate = [&](double lo, double hi, double shift_value, bool subtract) {
    if (hi <= lo) return cplx(0);
    auto part = [&](bool imag) {
      return ts.integrate(
          [&](double x) {
            double g = subtract ? f(x) - shift_value : f(x);
            double dx = x - z.real();
            double den = dx * dx + z.imag() * z.imag();
            return g * (imag ? z.imag() : dx) / den;
          },
          lo, hi);
    };
    return cplx(part(false), part(true));
  };
  double x0 = z.real();
  cplx total;
  if (x0 > 0 && x0 < 1) {
    double f0 = f(x0);
    total = integrate(0, x0, f0, true) + integrate(x0, 1, f0, true) + f0 * (std::log(1.0 - z) - std::log(-z));
  } else {
    total = integrate(0, 1, 0, false);
  }
  return total / kPi;
}

Periodized periodize(const std::function<cplx(cplx)>& F, cplx z, int n_max) {
  if (!(z.imag() > 0)) throw DomainError("periodize: need Im z > 0");
  if (n_max < 2) throw DomainError("periodize: n_max must be >= 2");
  int half = n_max / 2;
  cplx s_half = F(z);
  for (int n = 1; n <= half; ++n) s_half += F(z + double(n)) + F(z - double(n));
  cplx s = s_half;
  for (int n = half + 1; n <= n_max; ++n) s += F(z + double(n)) + F(z - double(n));
  // the symmetric tail is O(1/N): N S(N) - (N/2) S(N/2) over N/2
  Periodized p;
  p.partial = s;
  p.value = (double(n_max) * s - double(half) * s_half) / double(n_max - half);
  p.tail_estimate = std::abs(s - s_half);
  return p;
}

MonoidElement operator*(const MonoidElement& g, const MonoidElement& h) {
  return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

MonoidElement monoid_generator(long m) {
  if (m < 1) throw DomainError("monoid_generator: m must be >= 1");
  return {0, 1, 1, m};
}

bool is_member(const MonoidElement& g) {
  if (g.is_identity()) return true;
  long det = g.det();
  if (det != 1 && det != -1) return false;
  return g.d >= g.c && g.c >= g.a && g.a >= 0 && g.d >= g.b && g.b >= g.a;
}

std::vector<long> factorize(const MonoidElement& g) {
  if (!is_member(g)) throw DomainError("factorize: not a monoid element");
  std::vector<long> out;
  MonoidElement cur = g;
  while (!cur.is_identity()) {
    bool found = false;
    long top = cur.d / cur.c;
    for (long m : {top, top - 1}) {
      if (m < 1) continue;
      MonoidElement h{cur.b - m * cur.a, cur.a, cur.d - m * cur.c, cur.c};
      if (is_member(h)) {
        out.push_back(m);
        cur = h;
        found = true;
        break;
      }
    }
    if (!found) throw DomainError("factorize: no generator peels off");
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<MonoidElement> monoid_enumerate(long q_max) {
  if (q_max < 1) throw DomainError("monoid_enumerate: q_max must be >= 1");
  std::vector<MonoidElement> out{MonoidElement{}};
  std::deque<MonoidElement> queue{MonoidElement{}};
  while (!queue.empty()) {
    MonoidElement g = queue.front();
    queue.pop_front();
    // g (0 1; 1 m) = (b, a + m b; d, c + m d)
    for (long m = 1; g.c + m * g.d <= q_max; ++m) {
      MonoidElement h{g.b, g.a + m * g.b, g.d, g.c + m * g.d};
      out.push_back(h);
      queue.push_back(h);
    }
  }
  return out;
}

std::vector<MonoidElement> monoid_filter(long q_max) {
  if (q_max < 1) throw DomainError("monoid_filter: q_max must be >= 1");
  std::vector<MonoidElement> out{MonoidElement{}};
  for (long d = 1; d <= q_max; ++d)
    for (long c = 0; c <= d; ++c)
      for (long a = 0; a <= c; ++a)
        for (long b = a; b <= d; ++b) {
          MonoidElement g{a, b, c, d};
          if (!g.is_identity() && is_member(g)) out.push_back(g);
        }
  std::sort(out.begin(), out.end());
  return out;
}

cplx Lg_action(const MonoidElement& g, const Holomorphic& F, cplx z) {
  if (g.is_identity()) return F.f(z);
  if (g.c == 0) throw DomainError("Lg_action: c = 0 outside the identity is not a monoid element");
  cplx den = double(g.a) - double(g.c) * z;
  if (std::abs(den) < 1e-15) throw PoleProximity("Lg_action: a - cz vanishes");
  double w0 = -double(g.d) / double(g.c);
  cplx M = (double(g.d) * z - double(g.b)) / den;
  return den * (F.f(M) - F.f(w0)) - double(g.det()) / double(g.c) * F.df(w0);
}

Holomorphic Lg_action(const MonoidElement& g, const Holomorphic& F) {
  if (g.is_identity()) return F;
  Holomorphic out;
  out.f = [g, F](cplx z) { return Lg_action(g, F, z); };
  out.df = [g, F](cplx z) {
    cplx den = double(g.a) - double(g.c) * z;
    if (std::abs(den) < 1e-15) throw PoleProximity("Lg_action: a - cz vanishes");
    double w0 = -double(g.d) / double(g.c);
    cplx M = (double(g.d) * z - double(g.b)) / den;
    return -double(g.c) * (F.f(M) - F.f(w0)) + double(g.det()) * F.df(M) / den;
  };
  return out;
}

// ---------------------------------------------------------------------------------------------

struct ComplexBrjuno::Impl {
  using LD = long double;
  struct El {
    LD a, b, c, d, e;
    std::complex<LD> Fw0, dFw0;
    bool identity;
  };
  TruncationPolicy policy;
  std::vector<std::vector<El>> shells;
  std::vector<std::vector<std::complex<LD>>> laurent;  // per shell, d_j about 1/2
  std::size_t count = 0;

  template <class T>
  std::complex<T> shell_value(const std::vector<El>& els, std::complex<T> w) const {
    std::complex<T> s = 0;
    for (const El& el : els) {
      if (el.identity) {
        s += F_of(w);
        continue;
      }
      std::complex<T> den = T(el.a) - T(el.c) * w;
      std::complex<T> num = T(el.d) * w - T(el.b);
      // F(M) = -Li2(1/M)/pi with 1/M = den/num
      std::complex<T> FM = -dilog(den / num) / boost::math::constants::pi<T>();
      s += den * (FM - std::complex<T>(el.Fw0)) - T(el.e) / T(el.c) * std::complex<T>(el.dFw0);
    }
    return s;
  }

  std::complex<LD> shell_at(std::size_t k, std::complex<LD> w) const {
    if (policy.extended) return shell_value<LD>(shells[k], w);
    return std::complex<LD>(shell_value<double>(shells[k], std::complex<double>(w)));
  }
};

ComplexBrjuno::ComplexBrjuno(TruncationPolicy policy) : impl_(std::make_unique<Impl>()) {
  using LD = Impl::LD;
  if (policy.q_max < 1 || policy.n_max < 1 || policy.n_near < 1 || policy.n_near > policy.n_max)
    throw DomainError("ComplexBrjuno: need q_max >= 1 and 1 <= n_near <= n_max");
  impl_->policy = policy;
  auto els = monoid_enumerate(policy.q_max);
  impl_->count = els.size();
  for (const auto& g : els) {
    std::size_t k = 0;
    while ((1L << k) < g.d) ++k;
    if (impl_->shells.size() <= k) impl_->shells.resize(k + 1);
    Impl::El el{};
    el.identity = g.is_identity();
    el.a = g.a, el.b = g.b, el.c = g.c, el.d = g.d, el.e = g.det();
    if (!el.identity) {
      std::complex<LD> w0(-el.d / el.c, 0);
      el.Fw0 = F_of(w0);
      el.dFw0 = dF_of(w0);
    }
    impl_->shells[k].push_back(el);
  }
  // Laurent coefficients about 1/2 from the trapezoid rule on |w - 1/2| = 1
  const int M = policy.laurent_points, J = policy.laurent_terms;
  const LD pi = boost::math::constants::pi<LD>();
  impl_->laurent.assign(impl_->shells.size(), std::vector<std::complex<LD>>(J + 1));
  std::vector<std::vector<std::complex<LD>>> samples(impl_->shells.size(), std::vector<std::complex<LD>>(M));
  parallel_for(static_cast<std::size_t>(M), [&](std::size_t m) {
    LD th = 2 * pi * (LD(m) + LD(0.5)) / M;
    std::complex<LD> u = std::polar(LD(1), th);
    for (std::size_t k = 0; k < impl_->shells.size(); ++k) samples[k][m] = impl_->shell_at(k, LD(0.5) + u);
  });
  for (std::size_t k = 0; k < impl_->shells.size(); ++k)
    for (int m = 0; m < M; ++m) {
      LD th = 2 * pi * (LD(m) + LD(0.5)) / M;
      std::complex<LD> u = std::polar(LD(1), th), p = 1;
      for (int j = 0; j <= J; ++j) {
        impl_->laurent[k][j] += samples[k][m] * p / LD(M);
        p *= u;
      }
    }
}

ComplexBrjuno::~ComplexBrjuno() = default;
ComplexBrjuno::ComplexBrjuno(ComplexBrjuno&&) noexcept = default;
ComplexBrjuno& ComplexBrjuno::operator=(ComplexBrjuno&&) noexcept = default;

const TruncationPolicy& ComplexBrjuno::policy() const { return impl_->policy; }
std::size_t ComplexBrjuno::element_count() const { return impl_->count; }

double ComplexBrjuno::constant_term() const {
  std::complex<long double> s = 0;
  for (const auto& l : impl_->laurent) s += l[0];
  return static_cast<double>(std::abs(s));
}

ComplexBrjunoValue ComplexBrjuno::operator()(cplx z) const {
  using LD = Impl::LD;
  if (!(z.imag() > 0)) throw DomainError("complex_brjuno: need Im z > 0");
  const auto& P = impl_->policy;
  const int N0 = P.n_near, J = P.laurent_terms;
  const std::complex<LD> zz(z), w = zz - LD(0.5);

  // translates |n| > N0: T_j the full symmetric sums, E_j the part with |n| <= n_max
  std::vector<std::complex<LD>> Tj(J + 1), Ej(J + 1);
  {
    std::complex<LD> near1 = 0;
    for (int n = -N0; n <= N0; ++n) near1 += LD(1) / (w + LD(n));
    Tj[1] = pi_cot(w) - near1;
    for (int j = 2; j <= J; ++j)
      Tj[j] = hurwitz(j, w + LD(N0 + 1)) + (j % 2 ? LD(-1) : LD(1)) * hurwitz(j, -w + LD(N0 + 1));
    for (int n = N0 + 1; n <= P.n_max; ++n) {
      std::complex<LD> ip = LD(1) / (w + LD(n)), im = LD(1) / (w - LD(n));
      std::complex<LD> pp = ip, pm = im;
      for (int j = 1; j <= J; ++j) {
        Ej[j] += pp + pm;
        pp *= ip;
        pm *= im;
      }
    }
  }

  ComplexBrjunoValue out;
  std::complex<LD> total = 0, remainder = 0;
  for (std::size_t k = 0; k < impl_->shells.size(); ++k) {
    std::complex<LD> s = 0;
    for (int n = -N0; n <= N0; ++n) s += impl_->shell_at(k, zz + LD(n));
    for (int j = 1; j <= J; ++j) {
      s += impl_->laurent[k][j] * Tj[j];
      remainder += impl_->laurent[k][j] * (Tj[j] - Ej[j]);
    }
    out.shells.push_back(cplx(s));
    total += s;
  }
  out.value = cplx(total);
  out.periodization_tail = static_cast<double>(std::abs(remainder));

  const auto& sh = out.shells;
  std::size_t K = sh.size();
  if (K >= 3) {
    double last = std::abs(sh[K - 1]), prev = std::abs(sh[K - 2]), prev2 = std::abs(sh[K - 3]);
    out.shell_decay = prev > 0 ? last / prev : 0;
    out.truncation_unreliable = !(last < prev && prev < prev2);
    out.tail_estimate = out.shell_decay < 1 ? last * out.shell_decay / (1 - out.shell_decay) : last;
  } else {
    out.truncation_unreliable = true;
    out.tail_estimate = K ? std::abs(sh.back()) : 0;
  }
  return out;
}

ComplexBrjunoValue complex_brjuno(cplx z, const TruncationPolicy& policy) { return ComplexBrjuno(policy)(z); }

std::vector<ScanRow> boundary_scan(const ComplexBrjuno& B, double x0, double x1, double eps, int samples,
                                   int threads) {
  if (!(eps > 0) || samples < 1 || !(x1 >= x0)) throw DomainError("boundary_scan: need eps > 0, samples >= 1, x1 >= x0");
  std::vector<ScanRow> rows(static_cast<std::size_t>(samples));
  parallel_for(
      rows.size(),
      [&](std::size_t i) {
        double x = samples == 1 ? x0 : x0 + (x1 - x0) * double(i) / double(samples - 1);
        rows[i] = {x, eps, B(cplx(x, eps)).value};
      },
      threads);
  return rows;
}

JumpEstimate jump_estimate(const ComplexBrjuno& B, double x0, double eps, double delta) {
  if (!(eps > 0) || !(delta > 0)) throw DomainError("jump_estimate: need eps > 0 and delta > 0");
  auto diff = [&](double dl) { return B(cplx(x0 + dl, eps)).value.real() - B(cplx(x0 - dl, eps)).value.real(); };
  double D1 = diff(delta), D2 = diff(2 * delta);
  double a1 = 2 / kPi * std::atan(delta / eps), a2 = 2 / kPi * std::atan(2 * delta / eps);
  JumpEstimate j;
  j.x0 = x0, j.eps = eps, j.delta = delta, j.raw = D1;
  j.jump = (2 * D1 - D2) / (2 * a1 - a2);
  j.slope = (a1 * D2 - a2 * D1) / (delta * (2 * a1 - a2));
  return j;
}

}  // namespace brjuno
