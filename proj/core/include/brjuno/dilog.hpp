#pragma once

#include <complex>

namespace brjuno {

// Principal-branch dilogarithm. Throws BranchCut for real z > 1 (the cut [1, inf) minus its
// endpoint); off the real axis the cut side follows the sign of Im z.
std::complex<double> dilog(std::complex<double> z);
std::complex<long double> dilog(std::complex<long double> z);

}  // namespace brjuno
