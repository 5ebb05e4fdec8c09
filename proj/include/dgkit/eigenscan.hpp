#pragma once

#include <optional>
#include <vector>

#include "dgkit/config.hpp"
#include "dgkit/matrix.hpp"

namespace dgkit {

/// Characteristic polynomial by Faddeev-LeVerrier; rationals only (divides
/// by integers up to the dimension). Coefficients from degree n down to 0.
std::vector<Scalar> char_poly_rational(const Matrix& t);

/// Eigenvalues of t that lie in the base field. Exhaustive over F_p (residue
/// scan). Over Q: integer-root scan of the scaled characteristic polynomial;
/// `complete` reports whether the scan bound was honored (if false, further
/// rational eigenvalues may exist beyond the cap — callers must not conclude
/// non-existence).
std::vector<Scalar> field_eigenvalues(const Matrix& t, const Caps& caps,
                                      bool* complete);

}  // namespace dgkit
