#pragma once

#include "brjuno/input.hpp"
#include "brjuno/numeric.hpp"
#include "brjuno/surd.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace brjuno {

// [x]_alpha and {x}_alpha with alpha - 1 <= {x}_alpha < alpha.
std::pair<BigInt, QuadraticSurd> modified_parts(const QuadraticSurd& x, const Rational& alpha);
std::pair<BigInt, Real> modified_parts(const Real& x, const Rational& alpha);

struct GaussStep {
  BigInt a;
  int eps;
  QuadraticSurd x_next;
};
struct GaussStepReal {
  BigInt a;
  int eps;
  Real x_next;
};

GaussStep gauss_step(const QuadraticSurd& x, const Rational& alpha);
GaussStepReal gauss_step(const Real& x, const Rational& alpha);

struct CFExpansion {
  Rational alpha;
  Real x_value;                      // the expanded number, at working precision
  std::vector<BigInt> a;             // a_0 .. a_N
  std::vector<int> eps;              // eps_0 .. eps_N, x = a_0 + eps_0 x_0 and 1/x_n = a_{n+1} + eps_{n+1} x_{n+1}
  std::vector<Real> x;               // remainders x_0 .. x_N
  std::vector<QuadraticSurd> x_exact;  // same, exact; empty for float inputs
  std::vector<BigInt> p, q;          // convergents 0 .. N
  std::vector<Real> beta;            // beta_n = x_0 ... x_n
  std::optional<std::size_t> terminated_at;
  std::optional<std::pair<std::size_t, std::size_t>> period;  // (first index, length)
  bool truncated = false;            // float input ran out of precision
  std::string truncation_reason;
  int bits = 0;

  std::size_t size() const { return x.size(); }
  bool exact() const { return !x_exact.empty(); }
  // beta_{n}, with beta_{-1} = 1
  Real beta_at(long n) const { return n < 0 ? Real(1) : beta[static_cast<std::size_t>(n)]; }
};

// Remainders x_0 .. x_{max_depth} unless the expansion terminates or runs out of precision.
CFExpansion expand(const RealInput& x, const Rational& alpha, int max_depth);

Real lambda_of(const Rational& alpha);

struct BetaGrowth {
  Real c1;
  Real c2;
  Real lambda_used;
  bool ok = false;
};

// Smallest C1, C2 with beta_n <= C1 lambda^n and q_n >= C2 lambda^-n over indices [0, upto).
BetaGrowth beta_growth_check(const CFExpansion& e, std::optional<std::size_t> upto = std::nullopt);

// beta_n q_{n+1} for every index where q_{n+1} is available; terminating expansions drop the last one.
std::vector<Real> beta_q_products(const CFExpansion& e);

// Fold [a_0; (eps, a)...] back to a number with the recorded remainder at index n.
Real reconstruct(const CFExpansion& e, std::size_t n);

}  // namespace brjuno
