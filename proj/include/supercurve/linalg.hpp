#pragma once

#include <vector>

#include "supercurve/element.hpp"

namespace supercurve {

/// Square matrices with even entries (which commute), small dimensions.
using ElementMatrix = std::vector<std::vector<SuperElement>>;
using ElementVector = std::vector<SuperElement>;

ElementMatrix mat_identity(const AlgebraSignature& sig, int n);
ElementMatrix mat_mul(const ElementMatrix& a, const ElementMatrix& b);
ElementVector mat_apply(const ElementMatrix& a, const ElementVector& v);
ElementMatrix mat_add(const ElementMatrix& a, const ElementMatrix& b);
ElementMatrix mat_scale(const ElementMatrix& a, const SuperElement& c);

/// Laplace expansion; valid because entries are even (commutative).
SuperElement mat_det(const ElementMatrix& a);

/// Adjugate/determinant inverse; the determinant inverse itself runs the
/// reduced-part inverse plus Neumann correction at element level.  Throws
/// NotInvertible when det is not a unit.
ElementMatrix mat_inverse(const ElementMatrix& a);

} // namespace supercurve
