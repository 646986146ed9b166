#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ovenctl/matrix.hpp"

namespace ovenctl {

/**
 * Monic real polynomial, coefficients stored highest degree first with the
 * unit leading coefficient included: p(s) = s^d + c[1] s^(d-1) + ... + c[d].
 */
class Polynomial {
   public:
    // Coefficients must start with exactly 1.
    explicit Polynomial(std::vector<double> coefficients);

    /**
     * Monic polynomial with the given roots. Non-real roots must come in
     * conjugate pairs (matching tolerance 1e-9, relative to root magnitude);
     * throws UnpairedComplexRoot otherwise. Each matched pair is
     * conjugate-symmetrized before expansion so the product is real to
     * roundoff; any residual imaginary part is discarded.
     */
    static Polynomial from_roots(std::span<const std::complex<double>> roots);

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<double>& coefficients() const { return coefficients_; }

    double evaluate(double x) const;
    std::complex<double> evaluate(std::complex<double> x) const;

    // p(A) by Horner's rule with matrix arguments.
    Matrix evaluate(const Matrix& a) const;

    // Companion matrix whose eigenvalues are the polynomial's roots.
    Matrix companion() const;

   private:
    std::vector<double> coefficients_;
};

}  // namespace ovenctl
