#include "ovenctl/heat_transfer.hpp"

#include <cmath>
#include <stdexcept>

#include "ovenctl/errors.hpp"

namespace ovenctl {

double grashof(const AirProperties& props, double char_length, double delta_t) {
    if (char_length <= 0.0) throw InvalidGeometry("grashof: characteristic length must be > 0");
    if (delta_t < 0.0) throw std::invalid_argument("grashof: delta_t must be >= 0");
    const double d3 = char_length * char_length * char_length;
    return d3 * props.rho * props.rho * props.g * delta_t * props.beta / (props.mu * props.mu);
}

double prandtl(const AirProperties& props) {
    if (props.k <= 0.0) throw std::invalid_argument("prandtl: conductivity must be > 0");
    return props.mu * props.cp / props.k;
}

double nusselt(double gr, double pr) {
    if (gr < 0.0 || pr <= 0.0) throw std::invalid_argument("nusselt: gr >= 0 and pr > 0 required");
    if (gr > 1e9) {
        const double base = std::pow(pr, 0.175) - 0.55;
        if (base <= 0.0) {
            throw CorrelationDomain("nusselt: Pr^0.175 - 0.55 must be positive for Gr > 1e9");
        }
        return 0.138 * std::pow(gr, 0.36) * std::pow(base, 0.25);
    }
    return 0.683 * std::pow(gr, 0.25) * std::pow(pr, 0.25) * std::pow(pr / (0.861 + pr), 0.25);
}

double htc(double nu, double k, double char_length) {
    if (char_length <= 0.0) throw InvalidGeometry("htc: characteristic length must be > 0");
    return nu * k / char_length;
}

double conv_heat_rate(double h, double area, double t_i, double t_j) {
    if (h <= 0.0 || area <= 0.0) {
        throw std::invalid_argument("conv_heat_rate: h and area must be > 0");
    }
    return h * area * (t_i - t_j);
}

ConvectionExchange make_exchange(double h, double area, double t_i, double t_j) {
    return ConvectionExchange{h, area, t_i, t_j, conv_heat_rate(h, area, t_i, t_j)};
}

HtcEstimate estimate_htc(const AirProperties& props, double char_length, double delta_t) {
    DimensionlessGroup groups{};
    groups.gr = grashof(props, char_length, delta_t);
    groups.pr = prandtl(props);
    groups.nu = nusselt(groups.gr, groups.pr);
    return HtcEstimate{groups, htc(groups.nu, props.k, char_length)};
}

}  // namespace ovenctl
