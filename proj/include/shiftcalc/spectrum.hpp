#pragma once

#include <complex>
#include <vector>

#include "shiftcalc/matrix.hpp"

namespace shiftcalc {

struct EigenvalueCluster {
    std::complex<double> value;
    int multiplicity = 1;
};

/// Eigenvalues of a real square matrix with algebraic multiplicities.
/// `raw` holds all n eigenvalues; `clusters` groups raw values that agree
/// within an absolute distance of 1e-8. Both lists are sorted
/// lexicographically by (real part, imaginary part) and are closed under
/// complex conjugation.
struct Spectrum {
    std::vector<std::complex<double>> raw;
    std::vector<EigenvalueCluster> clusters;

    int dimension() const { return static_cast<int>(raw.size()); }
};

/// All eigenvalues of X via orthogonal reduction to Hessenberg form followed
/// by shifted QR iteration. Throws numeric_failure if the iteration stalls.
Spectrum spectrum(const RealMatrix& x);

} // namespace shiftcalc
