#pragma once

#include "shiftcalc/matrix.hpp"

namespace shiftcalc {

/// e^X by scaling-and-squaring with a degree-13 diagonal Pade approximant.
/// Throws numeric_failure when the result overflows or the argument norm is
/// too extreme to scale down.
RealMatrix mat_exp(const RealMatrix& x);

} // namespace shiftcalc
