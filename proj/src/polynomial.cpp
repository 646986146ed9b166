#include "ovenctl/polynomial.hpp"

#include <cmath>
#include <stdexcept>

#include "ovenctl/errors.hpp"

namespace ovenctl {

Polynomial::Polynomial(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty() || coefficients_.front() != 1.0) {
        throw std::invalid_argument("Polynomial: leading coefficient must be exactly 1");
    }
    for (double c : coefficients_) {
        if (!std::isfinite(c)) throw std::invalid_argument("Polynomial: non-finite coefficient");
    }
}

Polynomial Polynomial::from_roots(std::span<const std::complex<double>> roots) {
    constexpr double kPairTol = 1e-9;
    constexpr double kImagResidueTol = 1e-12;

    // Split into real roots and conjugate-symmetrized pairs.
    std::vector<double> real_roots;
    std::vector<std::complex<double>> pairs;  // one representative per pair, imag > 0
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        const auto r = roots[i];
        const double scale = std::max(1.0, std::abs(r));
        if (std::abs(r.imag()) <= kPairTol * scale) {
            real_roots.push_back(r.real());
            continue;
        }
        std::size_t partner = roots.size();
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(roots[j] - std::conj(r)) <= kPairTol * scale) {
                partner = j;
                break;
            }
        }
        if (partner == roots.size()) {
            throw UnpairedComplexRoot("from_roots: non-real root without conjugate partner");
        }
        used[partner] = true;
        const std::complex<double> mean{0.5 * (r.real() + roots[partner].real()),
                                        0.5 * (r.imag() - roots[partner].imag())};
        pairs.push_back(mean);
    }

    // Expand: real linear factors and real quadratic factors for the pairs;
    // the convolution stays real to roundoff by construction.
    std::vector<std::complex<double>> coeffs{1.0};
    auto multiply_factor = [&coeffs](std::span<const std::complex<double>> factor) {
        std::vector<std::complex<double>> next(coeffs.size() + factor.size() - 1, 0.0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            for (std::size_t j = 0; j < factor.size(); ++j) next[i + j] += coeffs[i] * factor[j];
        }
        coeffs = std::move(next);
    };
    for (double r : real_roots) {
        const std::complex<double> factor[] = {1.0, -r};
        multiply_factor(factor);
    }
    for (const auto& p : pairs) {
        const std::complex<double> factor[] = {1.0, -2.0 * p.real(), std::norm(p)};
        multiply_factor(factor);
    }

    std::vector<double> real_coeffs(coeffs.size());
    double coeff_scale = 1.0;
    for (const auto& c : coeffs) coeff_scale = std::max(coeff_scale, std::abs(c.real()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (std::abs(coeffs[i].imag()) > kImagResidueTol * coeff_scale) {
            throw UnpairedComplexRoot("from_roots: imaginary residue exceeds tolerance");
        }
        real_coeffs[i] = coeffs[i].real();
    }
    real_coeffs[0] = 1.0;
    return Polynomial(std::move(real_coeffs));
}

double Polynomial::evaluate(double x) const {
    double acc = 0.0;
    for (double c : coefficients_) acc = acc * x + c;
    return acc;
}

std::complex<double> Polynomial::evaluate(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (double c : coefficients_) acc = acc * x + c;
    return acc;
}

Matrix Polynomial::evaluate(const Matrix& a) const {
    if (!a.is_square()) throw DimensionMismatch("Polynomial::evaluate: square matrix required");
    const int n = a.rows();
    Matrix acc = Matrix::zero(n, n);
    for (double c : coefficients_) acc = acc * a + Matrix::identity(n) * c;
    return acc;
}

Matrix Polynomial::companion() const {
    const int d = degree();
    if (d < 1) throw std::invalid_argument("companion: degree must be at least 1");
    Matrix c(d, d);
    for (int j = 0; j < d; ++j) c(0, j) = -coefficients_[static_cast<std::size_t>(j) + 1];
    for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
    return c;
}

}  // namespace ovenctl
