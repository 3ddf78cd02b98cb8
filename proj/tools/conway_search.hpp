#pragma once

#include <cstdint>
#include <map>

#include "sl2bar/conway.hpp"
#include "sl2bar/gf2_poly.hpp"

namespace sl2bar::tools {

/// Conway polynomials for levels below n, keyed by level.
using LowerConway = std::map<int, Gf2Poly>;

/// Lexicographically least primitive polynomial of degree n that is
/// norm-compatible with every entry of `lower` whose level divides n.
/// Prime levels scan candidates in order; composite levels enumerate the
/// compatible primitive elements of a reference field and take the least
/// minimal polynomial.
Gf2Poly conway_polynomial(int n, const LowerConway& lower);

/// Plain candidate scan over all degree-n masks in increasing order. Slow for
/// large composite n; used to cross-check conway_polynomial.
Gf2Poly conway_polynomial_by_scan(int n, const LowerConway& lower);

}  // namespace sl2bar::tools
