#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gradedmf/decompose.hpp"
#include "gradedmf/mf.hpp"
#include "gradedmf/rng.hpp"
#include "gradedmf/stability.hpp"

using namespace gmf;

namespace {

Poly xp(long c, int m) { return Poly::x_power(ratio(c), m); }

GradedMF make_univariate(int h, std::vector<int> even, std::vector<int> odd,
                         std::vector<std::vector<Poly>> pm, std::vector<std::vector<Poly>> mp) {
    GradedMF m;
    m.obj = GradedObject{std::move(even), std::move(odd), WeightSystem{{1}, h}};
    m.f = xp(1, h);
    int r = static_cast<int>(pm.size());
    int p = r ? static_cast<int>(pm[0].size()) : 0;
    m.q_pm = PolyMat(r, p, 1);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < p; ++i) m.q_pm.at(j, i) = pm[j][i];
    m.q_mp = PolyMat(p, r, 1);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < r; ++j) m.q_mp.at(i, j) = mp[i][j];
    return m;
}

} // namespace

TEST_CASE("verification") {
    CHECK(verify_mf(indecomposable(2, 0, 5)).pass());

    GradedMF good = make_univariate(4, {0}, {2}, {{xp(1, 2)}}, {{xp(1, 2)}});
    CHECK(verify_mf(good).pass());

    GradedMF bad = make_univariate(4, {0}, {1}, {{xp(1, 1)}}, {{xp(1, 1)}});
    VerificationReport rep = verify_mf(bad);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.maurer_cartan);

    // wrong grading tags flagged even when the products are right
    GradedMF inhom = make_univariate(4, {0}, {3}, {{xp(1, 2)}}, {{xp(1, 2)}});
    VerificationReport rep2 = verify_mf(inhom);
    CHECK(rep2.maurer_cartan);
    CHECK_FALSE(rep2.homogeneous);

    CHECK(verify_mf(GradedMF::zero(xp(1, 4), WeightSystem{{1}, 4})).pass());
}

TEST_CASE("indecomposable constructors") {
    GradedMF m = indecomposable(1, 0, 4);
    CHECK(m.obj.even_tags == std::vector<int>{0});
    CHECK(m.obj.odd_tags == std::vector<int>{1});
    CHECK(m.q_pm.at(0, 0) == xp(1, 1));
    CHECK(m.q_mp.at(0, 0) == xp(1, 3));

    GradedMF n = indecomposable(3, 2, 4);
    CHECK(n.obj.even_tags == std::vector<int>{2});
    CHECK(n.obj.odd_tags == std::vector<int>{5});
    CHECK(n.q_pm.at(0, 0) == xp(1, 3));
    CHECK(n.q_mp.at(0, 0) == xp(1, 1));
    CHECK(verify_mf(n).pass());

    CHECK_THROWS_AS(indecomposable(0, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(indecomposable(4, 0, 4), std::invalid_argument);
}

TEST_CASE("translate") {
    GradedMF m = indecomposable(2, 1, 5);
    CHECK(translate(m, 1) == indecomposable(2, 2, 5));
    CHECK(translate(m, 0) == m);
    Rng rng(3);
    GradedMF r = random_object(6, rng);
    CHECK(translate(translate(r, 2), 3) == translate(r, 5));
}

TEST_CASE("shift") {
    int h = 4;
    for (int l = 1; l <= h - 1; ++l)
        for (int i : {-2, 0, 3}) {
            // [1] M(l,i) is literally M(h-l, l+i) in this presentation
            CHECK(shift(indecomposable(l, i, h), 1) == indecomposable(h - l, l + i, h));
        }
    Rng rng(4);
    GradedMF m = random_object(5, rng);
    CHECK(shift(m, 2) == translate(m, 5));
    CHECK(shift(shift(m, 1), -1) == m);
    CHECK(verify_mf(shift(m, 1)).pass());
    CHECK(verify_mf(shift(m, -3)).pass());
}

TEST_CASE("serre functor") {
    // h=4: S(M(1,0)) = M(3,0)
    CHECK(serre(indecomposable(1, 0, 4)) == indecomposable(3, 0, 4));
    CHECK(serre_label(IndecompLabel{1, 0}, 4) == IndecompLabel{3, 0});

    // S^4 = [2] on labels and objects for h=4
    GradedMF s = indecomposable(1, 0, 4);
    for (int k = 0; k < 4; ++k) s = serre(s);
    CHECK(is_isomorphic(s, shift(indecomposable(1, 0, 4), 2)));

    // h=2: S^2 = [0]
    GradedMF s2 = indecomposable(1, 0, 2);
    for (int k = 0; k < 2; ++k) s2 = serre(s2);
    CHECK(is_isomorphic(s2, indecomposable(1, 0, 2)));
}

TEST_CASE("direct sums") {
    Poly f = xp(1, 4);
    WeightSystem ws{{1}, 4};
    GradedMF empty = direct_sum(f, ws, {});
    CHECK(empty.is_zero_object());
    CHECK(verify_mf(empty).pass());
    CHECK_THROWS_AS(direct_sum({}), std::invalid_argument);

    GradedMF s = direct_sum({indecomposable(1, 0, 4), indecomposable(2, 0, 4)});
    CHECK(s.q_pm.at(0, 0) == xp(1, 1));
    CHECK(s.q_pm.at(1, 1) == xp(1, 2));
    CHECK(s.q_pm.at(0, 1).is_zero());
    CHECK(s.q_pm.at(1, 0).is_zero());
    CHECK(verify_mf(s).pass());

    CHECK_THROWS_AS(direct_sum({indecomposable(1, 0, 4), indecomposable(1, 0, 5)}),
                    std::invalid_argument);
}

TEST_CASE("trivial pairs") {
    GradedMF u = trivial_pair(TrivialKind::Unit, 0, 4);
    CHECK(u.obj.even_tags == std::vector<int>{0});
    CHECK(u.obj.odd_tags == std::vector<int>{0});
    CHECK(u.q_pm.at(0, 0) == xp(1, 0));
    CHECK(verify_mf(u).pass());

    GradedMF fu = trivial_pair(TrivialKind::FUnit, 0, 4);
    CHECK(fu.obj.odd_tags == std::vector<int>{4});
    CHECK(fu.q_pm.at(0, 0) == xp(1, 4));
    CHECK(verify_mf(fu).pass());

    CHECK(decompose(u).labels.empty());
    CHECK(decompose(fu).labels.empty());
    CHECK(decompose(fu).stripped_trivial == 1);
}

TEST_CASE("knorrer doubling") {
    // M(2,0) for h=4 doubled against x^4 + yz
    GradedMF d = knorrer_double(indecomposable(2, 0, 4), 2, 2);
    CHECK(d.obj.ws.weights == std::vector<int>{1, 2, 2});
    CHECK(verify_mf(d).pass());
    CHECK(check_quasi_homogeneous(d.f, d.obj.ws));

    CHECK(verify_mf(knorrer_double(trivial_pair(TrivialKind::Unit, 1, 4), 1, 3)).pass());

    // doubling commutes with direct sums up to the interleaving permutation
    GradedMF a = indecomposable(1, 0, 4);
    GradedMF b = indecomposable(3, -1, 4);
    GradedMF lhs = knorrer_double(direct_sum({a, b}), 1, 3);
    GradedMF da = knorrer_double(a, 1, 3);
    GradedMF db = knorrer_double(b, 1, 3);
    GradedMF rhs = direct_sum({da, db});
    // permutation sending the interleaved summands onto the blockwise order:
    // even components (a.e, b.e, a.o-wy, b.o-wy) vs (a.e, a.o-wy, b.e, b.o-wy)
    std::vector<int> perm{0, 2, 1, 3};
    GradedMF rearranged = rhs;
    for (int i = 0; i < 4; ++i) {
        rearranged.obj.even_tags[i] = rhs.obj.even_tags[perm[i]];
        rearranged.obj.odd_tags[i] = rhs.obj.odd_tags[perm[i]];
        for (int j = 0; j < 4; ++j)
            rearranged.q_pm.at(i, j) = rhs.q_pm.at(perm[i], perm[j]);
        for (int j = 0; j < 4; ++j)
            rearranged.q_mp.at(i, j) = rhs.q_mp.at(perm[i], perm[j]);
    }
    CHECK(lhs == rearranged);

    CHECK_THROWS_AS(knorrer_double(a, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(knorrer_double(a, 0, 4), std::invalid_argument);
}

TEST_CASE("weight system validation") {
    CHECK_THROWS_AS(validate_weight_system(WeightSystem{{2, 4}, 6}), std::invalid_argument);
    CHECK_THROWS_AS(validate_weight_system(WeightSystem{{}, 3}), std::invalid_argument);
    CHECK_THROWS_AS(validate_weight_system(WeightSystem{{1, -1}, 3}), std::invalid_argument);
    CHECK_NOTHROW(validate_weight_system(WeightSystem{{2, 3}, 5}));
}

TEST_CASE("label maps") {
    CHECK(translate_label(IndecompLabel{2, -1}, 3) == IndecompLabel{2, 2});
    CHECK(shift_label(IndecompLabel{1, 0}, 1, 4) == IndecompLabel{3, 1});
    CHECK(shift_label(shift_label(IndecompLabel{2, 5}, 1, 7), -1, 7) == IndecompLabel{2, 5});
    CHECK(shift_label(IndecompLabel{3, 1}, 2, 5) == IndecompLabel{3, 6});
    CHECK(label_phase(IndecompLabel{2, 1}, 5) == ratio(3, 10));
}
