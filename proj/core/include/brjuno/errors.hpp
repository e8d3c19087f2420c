#pragma once

#include <stdexcept>
#include <string>

namespace brjuno {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct InsufficientDepth : Error {
  using Error::Error;
};
struct NoConvergence : Error {
  using Error::Error;
};
struct BadWeights : Error {
  using Error::Error;
};
struct BranchCut : Error {
  using Error::Error;
};
struct OnSlit : Error {
  using Error::Error;
};
struct PoleProximity : Error {
  using Error::Error;
};
struct SolvabilityViolation : Error {
  using Error::Error;
};
struct Unstable : Error {
  using Error::Error;
};

// k is the perturbative order, nu the Fourier mode (nu == k for the semi-standard map).
struct SmallDivisorZero : Error {
  int k;
  int nu;
  SmallDivisorZero(int k_, int nu_)
      : Error("small divisor vanishes at order " + std::to_string(k_) + ", mode " + std::to_string(nu_)),
        k(k_), nu(nu_) {}
};

}  // namespace brjuno
