#pragma once

// Integer-coefficient polynomial kernels shared by the resultant, gcd and
// Sturm code. Not part of the public interface.

#include <vector>

#include "coxperron/poly.hpp"

namespace coxperron::detail {

/// Coefficient i multiplies t^i; no zero leading entry; empty is zero.
using IntPoly = std::vector<Integer>;

inline int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(IntPoly& p);

/// Nonnegative gcd of the coefficients (0 for the zero polynomial).
Integer content(const IntPoly& p);

/// Divides out the (positive) content in place; sign is preserved.
void make_primitive(IntPoly& p);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Splits f = scale * p with p primitive integer and scale > 0.
/// Returns the scale; p is written to `out`.
Rational split_content(const Poly& f, IntPoly& out);

Poly to_poly(const IntPoly& p);

}  // namespace coxperron::detail
