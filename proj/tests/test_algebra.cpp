#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gradedmf/cyclotomic.hpp"
#include "gradedmf/poly.hpp"
#include "gradedmf/ratmatrix.hpp"
#include "gradedmf/rng.hpp"
#include "gradedmf/selftest.hpp"
#include "gradedmf/weights.hpp"

using namespace gmf;

namespace {

Poly xp(long c, int m) { return Poly::x_power(ratio(c), m); }

// Independent route for the regularity tests: assemble the numerator and
// denominator products and divide exactly, instead of counting cyclotomic
// multiplicities.
ZPoly t_pow_minus_one(int m) {
    ZPoly p(m + 1, BigInt(0));
    p[0] = -1;
    p[m] = 1;
    return p;
}

bool chi_by_division(int a, int b, int c, int h, ZPoly* out) {
    ZPoly num{BigInt(1)}, den{BigInt(1)};
    for (int m : {h - a, h - b, h - c}) num = zpoly_mul(num, t_pow_minus_one(m));
    for (int m : {a, b, c}) den = zpoly_mul(den, t_pow_minus_one(m));
    try {
        *out = zpoly_div(num, den);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

} // namespace

TEST_CASE("rational helpers") {
    CHECK(ratio(2, 4) == ratio(1, 2));
    CHECK(rational_str(ratio(-3, 6)) == "-1/2");
    CHECK(parse_rational("7") == ratio(7));
    CHECK(parse_rational("-4/6") == ratio(-2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("zzz"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
    // (x+1)(x-1) = x^2 - 1
    Poly xplus1 = xp(1, 1) + xp(1, 0);
    Poly xminus1 = xp(1, 1) - xp(1, 0);
    CHECK(xplus1 * xminus1 == xp(1, 2) - xp(1, 0));
    // additive identity
    CHECK(xp(1, 3) + Poly(1) == xp(1, 3));
    // exact rational cancellation: (2/3) * 3x = 2x
    CHECK(xp(3, 1).scaled(ratio(2, 3)) == xp(2, 1));
    // mismatch
    CHECK_THROWS_AS(xp(1, 1) + Poly::constant(ratio(1), 2), std::invalid_argument);
    // canonical order is descending lex, no zero terms
    Poly p = xp(1, 1) + xp(5, 0) + xp(2, 3) + xp(-1, 1);
    std::vector<int> degs;
    for (const auto& [e, c] : p.terms()) degs.push_back(e[0]);
    CHECK(degs == std::vector<int>{3, 0});
}

TEST_CASE("weighted degree") {
    WeightSystem w1{{1}, 4};
    CHECK(weighted_degree(xp(1, 3), w1) == ratio(3, 2));

    WeightSystem w2{{1, 2}, 4};
    Poly p = Poly::monomial(ratio(1), {2, 0}) + Poly::monomial(ratio(1), {0, 1});
    CHECK(weighted_degree(p, w2) == ratio(1));

    CHECK(weighted_degree(xp(1, 1) + xp(1, 2), w1) == std::nullopt);
    CHECK_THROWS_AS(weighted_degree(Poly(1), w1), std::invalid_argument);

    // degree is additive on homogeneous products
    Rng rng(7);
    for (int c = 0; c < 50; ++c) {
        Poly a = xp(rng.range(1, 5), static_cast<int>(rng.below(6)));
        Poly b = xp(rng.range(1, 5), static_cast<int>(rng.below(6)));
        CHECK(*weighted_degree(a * b, w1) == *weighted_degree(a, w1) + *weighted_degree(b, w1));
    }
}

TEST_CASE("quasi-homogeneity") {
    CHECK(check_quasi_homogeneous(xp(1, 4), WeightSystem{{1}, 4}));
    // cubic x^3 + y^3 + z^3 with unit weights and h = 3
    Poly cubic = Poly::monomial(ratio(1), {3, 0, 0}) + Poly::monomial(ratio(1), {0, 3, 0}) +
                 Poly::monomial(ratio(1), {0, 0, 3});
    CHECK(check_quasi_homogeneous(cubic, WeightSystem{{1, 1, 1}, 3}));
    CHECK_FALSE(check_quasi_homogeneous(xp(1, 3) + xp(1, 1), WeightSystem{{1}, 3}));
    // equivalent to weighted degree 2
    CHECK(weighted_degree(xp(1, 4), WeightSystem{{1}, 4}) == ratio(2));
}

TEST_CASE("partial derivative and residue") {
    CHECK(partial_derivative(xp(1, 4), 0) == xp(4, 3));
    Poly x2y = Poly::monomial(ratio(1), {2, 1});
    CHECK(partial_derivative(x2y, 1) == Poly::monomial(ratio(1), {2, 0}));
    CHECK(partial_derivative(Poly::constant(ratio(5), 1), 0).is_zero());
    CHECK_THROWS_AS(partial_derivative(x2y, 2), std::out_of_range);

    CHECK(residue_div(xp(1, 2), 4) == ratio(1, 4));
    CHECK(residue_div(xp(1, 3), 4) == ratio(0));
    CHECK(residue_div(xp(5, 1) + xp(1, 4), 3) == ratio(5, 3));
    CHECK_THROWS_AS(residue_div(xp(1, 1), 1), std::invalid_argument);
}

TEST_CASE("regular weight systems") {
    // (1,1,1;3): chi = (T+1)^3 by direct cancellation
    RegularityResult r = is_regular_weight_system(1, 1, 1, 3);
    REQUIRE(r.regular);
    CHECK(r.chi == ZPoly{BigInt(1), BigInt(3), BigInt(3), BigInt(1)});

    // (2,3,4;10): both the multiplicity count and exact division agree that
    // chi is the polynomial Phi_6 Phi_7 Phi_8 with chi(1) = 14.
    ZPoly division_chi;
    bool division_ok = chi_by_division(2, 3, 4, 10, &division_chi);
    RegularityResult r2 = is_regular_weight_system(2, 3, 4, 10);
    CHECK(division_ok);
    REQUIRE(r2.regular);
    CHECK(r2.chi == division_chi);
    CHECK(zpoly_eval(r2.chi, BigInt(1)) == 14);
    CHECK(milnor_number(2, 3, 4, 10) == ratio(14));

    // (1,1,2;4): regular, mu = 9
    ZPoly division_chi3;
    CHECK(chi_by_division(1, 1, 2, 4, &division_chi3));
    RegularityResult r3 = is_regular_weight_system(1, 1, 2, 4);
    REQUIRE(r3.regular);
    CHECK(r3.chi == division_chi3);
    CHECK(milnor_number(1, 1, 2, 4) == ratio(9));
    CHECK(zpoly_eval(r3.chi, BigInt(1)) == 9);

    // genuinely deficient systems
    ZPoly scratch;
    CHECK_FALSE(is_regular_weight_system(2, 2, 3, 7).regular);
    CHECK_FALSE(chi_by_division(2, 2, 3, 7, &scratch));
    RegularityResult bad = is_regular_weight_system(1, 3, 5, 7);
    CHECK_FALSE(bad.regular);
    CHECK(bad.offending_root_order == 5);
    CHECK_FALSE(chi_by_division(1, 3, 5, 7, &scratch));

    // exhaustive agreement between the two routes on a small box
    for (int h = 2; h <= 9; ++h)
        for (int a = 1; a < h; ++a)
            for (int b = a; b < h; ++b)
                for (int c = b; c < h; ++c) {
                    ZPoly chi;
                    bool by_div = chi_by_division(a, b, c, h, &chi);
                    RegularityResult by_mult = is_regular_weight_system(a, b, c, h);
                    REQUIRE(by_div == by_mult.regular);
                    if (by_div) REQUIRE(chi == by_mult.chi);
                }
}

TEST_CASE("milnor numbers") {
    CHECK(milnor_number(1, 1, 1, 3) == ratio(8));
    CHECK(milnor_number(1, 1, 1, 4) == ratio(27));
    CHECK_THROWS_AS(milnor_number(2, 2, 3, 7), std::invalid_argument);
    // limit identity: chi(1) equals mu
    RegularityResult r = is_regular_weight_system(1, 1, 1, 4);
    CHECK(Rational(zpoly_eval(r.chi, BigInt(1))) == milnor_number(1, 1, 1, 4));
}

TEST_CASE("kernel and image") {
    RatMatrix id3 = RatMatrix::identity(3);
    KernelImage k1 = rat_kernel_image(id3);
    CHECK(k1.rank == 3);
    CHECK(k1.kernel.empty());

    RatMatrix z(2, 5);
    KernelImage k2 = rat_kernel_image(z);
    CHECK(k2.rank == 0);
    CHECK(k2.kernel.size() == 5);

    RatMatrix prop(2, 2);
    prop.at(0, 0) = 1; prop.at(0, 1) = 2;
    prop.at(1, 0) = 2; prop.at(1, 1) = 4;
    KernelImage k3 = rat_kernel_image(prop);
    CHECK(k3.rank == 1);
    REQUIRE(k3.kernel.size() == 1);
    // kernel spanned by (-2, 1)
    CHECK(k3.kernel[0][0] == ratio(-2));
    CHECK(k3.kernel[0][1] == ratio(1));

    // solve and invert
    RatMatrix a(2, 2);
    a.at(0, 0) = ratio(1); a.at(0, 1) = ratio(1, 2);
    a.at(1, 0) = ratio(0); a.at(1, 1) = ratio(1, 3);
    RatMatrix inv = rat_inverse(a);
    CHECK(inv * a == RatMatrix::identity(2));
    CHECK_THROWS_AS(rat_inverse(prop), std::invalid_argument);
}

TEST_CASE("cyclotomic group ring") {
    int h = 12;
    CyclotomicInt sum(h);
    for (int m = 0; m < h; ++m) sum.add_root_power(m, 1);
    CHECK(std::abs(sum.to_complex()) < 1e-12);

    CyclotomicInt w = CyclotomicInt::root_power(h, 1);
    CHECK(w.shifted(h) == w); // w^h = 1
    CHECK(w.shifted(5) == CyclotomicInt::root_power(h, 6));
    CHECK((w - w).is_zero());
    CHECK_THROWS_AS(w + CyclotomicInt(5), std::invalid_argument);
}

TEST_CASE("algebra property suite") {
    SuiteResult res = algebra_suite(42);
    INFO((res.failures.empty() ? std::string() : res.failures.front()));
    CHECK(res.pass);
}
