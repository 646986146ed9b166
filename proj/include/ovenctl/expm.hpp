#pragma once

#include "ovenctl/matrix.hpp"

namespace ovenctl {

/**
 * Matrix exponential by scaling-and-squaring with a diagonal [8/8] Pade
 * approximant. The input is scaled by a power of two so its infinity norm
 * is at most 0.5 before the rational approximation, then squared back.
 *
 * Handles defective matrices (no eigendecomposition involved).
 */
Matrix expm(const Matrix& a);

}  // namespace ovenctl
