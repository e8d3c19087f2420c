#pragma once

#include "brjuno/cf.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace brjuno {

struct SeriesFunction {
  enum class Tag { NegLog, Power, LogPower, Custom };
  Tag tag = Tag::NegLog;
  double nu = 0;
  double mu = 0;
  std::function<Real(const Real&)> custom;  // used when tag == Custom
  bool custom_bounded = false;
  Real custom_sup = 0;  // sup over [0, 1] when custom_bounded

  static SeriesFunction neg_log();
  static SeriesFunction power(double nu);
  static SeriesFunction log_power(double nu, double mu);
  static SeriesFunction from_callable(std::function<Real(const Real&)> f, std::optional<Real> sup = std::nullopt);

  Real operator()(const Real& x) const;
  bool bounded() const;
  Real sup() const;  // only meaningful when bounded()
  std::string name() const;
};

struct BrjunoEval {
  enum class Tail { None, ExactPeriodic, GeometricBound, Heuristic };
  Real value;  // +inf when diverged
  Real partial_sum;
  Real tail_bound;
  std::size_t depth = 0;
  Rational alpha;
  bool diverged = false;
  Tail tail = Tail::None;
  bool reliable = true;
};

BrjunoEval brjuno_series(const RealInput& x, const SeriesFunction& f, const Rational& alpha, int depth);
BrjunoEval brjuno_series(const CFExpansion& e, const SeriesFunction& f);
BrjunoEval brjuno_B(const RealInput& x, int depth);
BrjunoEval brjuno_Be(const RealInput& x, int depth);

// (1/2) x ln(1/x - 1) for 0 < x <= 1/2
Real odd_part_closed_form(const Real& x);

struct EvenOddResiduals {
  Real r26a;        // |B^-_series - closed form of the odd part|
  Real r26b;        // |B^+(x) - x B^+(1/x) - G(x)/2|
  Real tail_26a;    // tail bounds feeding each side
  Real tail_26b;
  bool ok = false;
};

// x must be an exact irrational in (0, 1/2]
EvenOddResiduals even_odd_check(const RealInput& x, const SeriesFunction& f, int depth);

struct BnuEval {
  BrjunoEval series;
  Real bracket;          // sum q_n^{-1-nu} |q_n x - p_n|^{-nu} over the same indices
  Real lower_ratio_min;  // min over n of the termwise ratio series/bracket
  bool upper_ok = false;       // B_nu <= bracket
  bool lower_ok = false;       // 2^{-nu} bracket <= B_nu
  bool lower_weak_ok = false;  // 2^{-1-nu} bracket <= B_nu
};

BnuEval bnu_series(const RealInput& x, double nu, int depth);

struct DiophantineEstimate {
  double tau_hat = 0;
  double c_hat = 0;
  double slope = 0;
  std::vector<double> tau_n;  // ln beta_n / ln beta_{n-1} - 1
};

DiophantineEstimate diophantine_estimate(const CFExpansion& e);

}  // namespace brjuno
