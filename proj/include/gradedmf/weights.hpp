#pragma once

#include <map>
#include <string>
#include <vector>

#include "gradedmf/rational.hpp"

namespace gmf {

// Dense univariate integer polynomial, coefficient of T^i at index i.
// Only the weight-system characteristic function needs it.
using ZPoly = std::vector<BigInt>;

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
// Exact division, throws if the remainder is nonzero.
ZPoly zpoly_div(const ZPoly& a, const ZPoly& b);
BigInt zpoly_eval(const ZPoly& p, const BigInt& t);

// d-th cyclotomic polynomial Phi_d via iterated exact division of T^d - 1,
// cached per process.
const ZPoly& cyclotomic_polynomial(int d);

struct RegularityResult {
    bool regular = false;
    // For a regular system, chi(T) expanded as a polynomial.
    ZPoly chi;
    // Otherwise the smallest d with deficient Phi_d multiplicity.
    int offending_root_order = 0;
};

// chi(T) = prod (T^(h-a_i) - 1) / prod (T^(a_i) - 1) is a polynomial iff for
// every d the cyclotomic multiplicity of Phi_d in the numerator covers the
// denominator: #{i : d | h-a_i} >= #{i : d | a_i}.
RegularityResult is_regular_weight_system(int a, int b, int c, int h);

// mu = (h-a)(h-b)(h-c)/(abc), which equals chi(1) for regular systems.
Rational milnor_number(int a, int b, int c, int h);

} // namespace gmf
