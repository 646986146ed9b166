#pragma once

namespace ovenctl {

/**
 * Fluid properties for natural-convection estimates. Values are taken as
 * printed model inputs; the unit annotations follow the source data
 * (cp in Btu/(lb.F), rho in lb/ft3, k in Btu/(ft.s.F), beta in 1/F,
 * mu in lbf.s/ft2, g in ft/s2).
 */
struct AirProperties {
    double cp;
    double rho;
    double k;
    double beta;
    double mu;
    double g = 32.174;
};

struct DimensionlessGroup {
    double gr;  // Grashof
    double pr;  // Prandtl
    double nu;  // Nusselt
};

// Convective surface exchange: q_rate = h * area * (t_i - t_j), positive
// when heat flows from i to j.
struct ConvectionExchange {
    double h;
    double area;
    double t_i;
    double t_j;
    double q_rate;
};

// Gr = D^3 rho^2 g dT beta / mu^2. Throws InvalidGeometry if d <= 0.
double grashof(const AirProperties& props, double char_length, double delta_t);

// Pr = mu cp / k.
double prandtl(const AirProperties& props);

/**
 * Empirical flat-surface correlation:
 *   Gr > 1e9:  Nu = 0.138 Gr^0.36 (Pr^0.175 - 0.55)^0.25
 *   Gr <= 1e9: Nu = 0.683 Gr^0.25 Pr^0.25 (Pr / (0.861 + Pr))^0.25
 *
 * The boundary Gr = 1e9 belongs to the second branch; the two correlations
 * are discontinuous there and no blending is applied. Throws
 * CorrelationDomain when the first branch's base (Pr^0.175 - 0.55) is
 * non-positive.
 */
double nusselt(double gr, double pr);

// h = Nu k / D. Throws InvalidGeometry if d <= 0.
double htc(double nu, double k, double char_length);

double conv_heat_rate(double h, double area, double t_i, double t_j);

ConvectionExchange make_exchange(double h, double area, double t_i, double t_j);

struct HtcEstimate {
    DimensionlessGroup groups;
    double h;
};

// Full pipeline Gr -> Pr -> Nu -> h for a surface of characteristic length
// char_length against air at temperature difference delta_t.
HtcEstimate estimate_htc(const AirProperties& props, double char_length, double delta_t);

}  // namespace ovenctl
