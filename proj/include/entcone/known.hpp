#pragma once

// Four-variable non-Shannon inequalities that are known in closed form. They
// serve as classification context and as fixed targets in tests.

#include <vector>

#include "entcone/entropy_space.hpp"

namespace entcone {

/// The Zhang-Yeung inequality.
LinForm zhang_yeung();

/// The inequality obtained by projecting the Zhang-Yeung-tightened bound
/// through one more copy of xi_3 over xi_{1,2}.
LinForm iterated_zhang_yeung();

/// Three inequalities obtained from the seven-variable scenario
/// (xi_5, xi_6, xi_7 copies of xi_3, xi_3, xi_2).
std::vector<LinForm> seven_variable_inequalities();

}  // namespace entcone
