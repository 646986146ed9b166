#pragma once

#include <complex>
#include <vector>

#include "ovenctl/matrix.hpp"

namespace ovenctl {

/**
 * Eigenvalues of a real square matrix.
 *
 * Non-real values occur in conjugate pairs. Sorted by ascending real part,
 * ties broken by imaginary part, so spectra compare as ordered lists.
 */
struct Spectrum {
    std::vector<std::complex<double>> eigenvalues;

    bool all_real(double imag_tol = 0.0) const;
    bool asymptotically_stable() const;  // all real parts strictly negative
};

/**
 * All eigenvalues via Householder Hessenberg reduction followed by Francis
 * double-shift QR iteration. Trailing 2x2 blocks are resolved in closed
 * form. Deflation threshold: 1e-12 * (|h[i-1,i-1]| + |h[i,i]|).
 *
 * Throws NoConvergence if an eigenvalue fails to deflate within 100 sweeps,
 * DimensionMismatch for non-square or empty input.
 */
Spectrum eigenvalues(const Matrix& a);

}  // namespace ovenctl
