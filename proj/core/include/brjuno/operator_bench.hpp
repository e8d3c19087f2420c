#pragma once

#include "brjuno/numeric.hpp"

#include <functional>
#include <vector>

namespace brjuno {

// Even grids sample [0, 1/2] at j/(2n) and extend by f(x) = f(dist(x, Z)).
// Periodic grids sample [0, 1] at j/n and extend by f(x) = f(x - floor x); they carry
// the alpha > 1/2 operators, whose functions are not even. The last periodic node holds
// the left limit at 1, so a jump at the integers is representable.
class GridFunction {
 public:
  enum class Symmetry { Even, Periodic };

  GridFunction() = default;
  GridFunction(int n, std::vector<double> values, Symmetry s = Symmetry::Even);
  static GridFunction sample(int n, const std::function<double(double)>& f, Symmetry s = Symmetry::Even);
  static GridFunction constant(int n, double c, Symmetry s = Symmetry::Even);

  int n() const { return n_; }
  Symmetry symmetry() const { return sym_; }
  double step() const { return sym_ == Symmetry::Even ? 0.5 / n_ : 1.0 / n_; }
  double node(int j) const { return j * step(); }
  std::size_t size() const { return v_.size(); }
  const std::vector<double>& values() const { return v_; }
  double operator[](std::size_t j) const { return v_[j]; }

  double operator()(double x) const;
  double sup_norm() const;

  GridFunction operator+(const GridFunction& o) const;
  GridFunction operator*(double s) const;

 private:
  int n_ = 0;
  Symmetry sym_ = Symmetry::Even;
  std::vector<double> v_;
};

GridFunction apply_T(const GridFunction& f, const Rational& alpha);

struct NeumannResult {
  GridFunction g;
  int terms = 0;
  std::vector<double> term_norms;  // sup norm of T^k f, k = 0 .. terms-1
  double decay_ratio = 0;          // geometric mean of successive ratios over the second half
};

NeumannResult neumann_inverse(const GridFunction& f, const Rational& alpha, double tol, int max_terms = 1000);

// -ln on an even grid with the node at 0 set to ln(2n) + 1.
GridFunction neg_log_grid(int n);

double holder_seminorm(const GridFunction& f, double gamma);

struct HolderNorm {
  double gamma = 0;
  double seminorm = 0;
  double sup_norm = 0;
  double A = 1, B = 1;
  double norm() const { return A * seminorm + B * sup_norm; }
};

HolderNorm holder_norm(const GridFunction& f, double gamma, double A, double B);

struct ContractionCheck {
  double lhs = 0;
  double rhs = 0;
  double slack = 0;
  bool ok = false;
};

ContractionCheck contraction_check(const GridFunction& f, double gamma, double A, double B);

struct LemmaCheck {
  double x1 = 0, y1 = 0;
  double lhs = 0, rhs = 0;
  bool ok = false;
};

// Decided in exact rational arithmetic on the binary values of x and y.
LemmaCheck lemma_check(double x, double y);

// Sup over dyadic subintervals of [0, 1] (at most max_windows of them) of the mean oscillation.
double bmo_seminorm(const GridFunction& f, int max_windows);

// Local estimate of the piecewise-linear interpolation error around x: max |second difference| / 8
// over the nodes adjacent to the cell containing x.
double interpolation_bound(const GridFunction& f, double x);

}  // namespace brjuno
