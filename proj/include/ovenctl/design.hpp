#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ovenctl/eigensolver.hpp"
#include "ovenctl/matrix.hpp"
#include "ovenctl/plant.hpp"

namespace ovenctl {

/**
 * Requested closed-loop pole locations for the state-feedback controller
 * and the full-order observer. All real parts must be strictly negative and
 * non-real values must come in conjugate pairs (validate() enforces both).
 */
struct PoleSet {
    std::vector<std::complex<double>> controller;
    std::vector<std::complex<double>> observer;

    void validate() const;

    // Observer poles are meant to sit at least 5x deeper in the left half
    // plane than the matching controller poles. Violations are reported as
    // warnings, not errors: they degrade estimation, not correctness.
    std::vector<std::string> guideline_warnings() const;

    PoleSet scaled(double factor) const;
};

// State-feedback gain K (1 x n), observer injection L (n x 1) and the
// reference feedforward scaling applied as u = n_ff * r.
struct GainSet {
    Matrix k;
    Matrix l;
    double n_ff = 1.0;
};

/**
 * Augmented plant + estimation-error system:
 *   a_fb = [A - BK   BK  ]   b_fb = [B]   c_fb = [C 0]
 *          [  0    A - LC ]         [0]
 *
 * States are the plant states followed by the estimation errors, so the
 * spectrum is the union of controller and observer poles.
 */
struct ClosedLoop {
    Matrix a_fb;
    Matrix b_fb;
    Matrix c_fb;
    std::vector<std::string> state_labels;

    int order() const { return a_fb.rows(); }
    int plant_order() const { return a_fb.rows() / 2; }
};

// Controllability matrix [b, ab, a^2 b, ...] and its dual.
Matrix ctrb(const Matrix& a, const Matrix& b);
Matrix obsv(const Matrix& a, const Matrix& c);

/**
 * SISO pole placement by Ackermann's formula:
 *   K = [0 ... 0 1] Ctrb(a,b)^-1 p(a)
 * with p the monic polynomial having the requested poles as roots.
 *
 * Throws Uncontrollable when rank(Ctrb) < n, IllConditioned when the
 * controllability solve leaves a relative residual above 1e-6 or the
 * achieved eigenvalues miss the request by more than 1e-8 relative.
 * Multi-input systems are rejected.
 */
Matrix place(const Matrix& a, const Matrix& b, std::span<const std::complex<double>> poles);

// Observer gain by duality: L = place(a^T, c^T, poles)^T.
// Throws Unobservable when the dual rank is deficient.
Matrix observer_gain(const Matrix& a, const Matrix& c, std::span<const std::complex<double>> poles);

/**
 * Reference scaling N = -1 / (c (a - b k)^-1 b) so that a constant
 * reference r applied as u = N r settles the output at r.
 * Throws SingularDcGain when the closed-loop DC gain is zero within 1e-12.
 */
double feedforward(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& k);

// Assembles the block system above. Throws DimensionMismatch.
ClosedLoop augment(const StateSpace& ss, const GainSet& gains);

// Built-in pole choices per food preset.
PoleSet default_poles(std::string_view food);

// place + observer_gain + feedforward in one step.
GainSet design_gains(const StateSpace& ss, const PoleSet& poles);

struct StabilityReport {
    Spectrum poles;
    bool asymptotically_stable;
    int controllability_rank;
    int observability_rank;
};

StabilityReport analyze(const StateSpace& ss);

}  // namespace ovenctl
