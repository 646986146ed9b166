#include "ovenctl/expm.hpp"

#include <array>
#include <cmath>

#include "ovenctl/errors.hpp"

namespace ovenctl {

namespace {

// Coefficients of the degree-8 diagonal Pade numerator for exp(x):
// c[k] = c[k-1] * (m - k + 1) / (k * (2m - k + 1)), m = 8, c[0] = 1.
std::array<double, 9> pade8_coefficients() {
    std::array<double, 9> c{};
    c[0] = 1.0;
    constexpr int m = 8;
    for (int k = 1; k <= m; ++k) {
        c[k] = c[k - 1] * static_cast<double>(m - k + 1) /
               (static_cast<double>(k) * (2 * m - k + 1));
    }
    return c;
}

}  // namespace

Matrix expm(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("expm: square matrix required");
    const int n = a.rows();
    if (n == 0) return Matrix();

    // Scale so that ||A / 2^s||_inf <= 0.5.
    int squarings = 0;
    double norm = a.norm_inf();
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    Matrix scaled = a * std::ldexp(1.0, -squarings);

    const auto c = pade8_coefficients();
    const Matrix identity = Matrix::identity(n);
    const Matrix a2 = scaled * scaled;

    // Even part V = c0 I + c2 A^2 + c4 A^4 + c6 A^6 + c8 A^8,
    // odd part  U = A (c1 I + c3 A^2 + c5 A^4 + c7 A^6).
    Matrix even = identity * c[8];
    Matrix odd = identity * c[7];
    for (int k = 6; k >= 2; k -= 2) {
        even = a2 * even + identity * c[k];
        odd = a2 * odd + identity * c[k - 1];
    }
    even = a2 * even + identity * c[0];
    odd = scaled * odd;

    // exp(A) ~ (V - U)^-1 (V + U); the denominator is the numerator at -A.
    Matrix result = solve(even - odd, even + odd);
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

}  // namespace ovenctl
