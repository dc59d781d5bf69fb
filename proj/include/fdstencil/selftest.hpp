#pragma once

#include <iosfwd>

namespace fdstencil {

/// Cross-module identity suite: moment conditions, closed-form coefficient
/// equivalence, the power-sum and magnitude-bound identities, the minor
/// determinant closed form against brute-force cofactor expansion, and the
/// uniform-node specializations. Deterministic; prints one line per check.
/// Returns true when every check passes.
bool run_selftest(std::ostream& out);

}  // namespace fdstencil
