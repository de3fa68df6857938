#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gradedmf/quiver.hpp"
#include "gradedmf/selftest.hpp"
#include "gradedmf/stability.hpp"

using namespace gmf;

TEST_CASE("interval hom and ext") {
    int h = 3; // quiver 1 -> 2
    IntervalModule s1{1, 1}, s2{2, 2}, p{1, 2};
    // solver results for the linear orientation
    CHECK(interval_hom_dim(s1, p, h, 0) == 0);
    CHECK(interval_hom_dim(p, s1, h, 0) == 1);
    CHECK(interval_hom_dim(s1, s2, h, 1) == 1);
    CHECK(interval_hom_dim(s2, s1, h, 1) == 0);
    CHECK(interval_hom_dim(p, p, h, 1) == 0);

    // scalar endomorphisms and rigidity for every interval
    for (int hh = 2; hh <= 8; ++hh)
        for (int lo = 1; lo <= hh - 1; ++lo)
            for (int hi = lo; hi <= hh - 1; ++hi) {
                IntervalModule u{lo, hi};
                CHECK(interval_hom_dim(u, u, hh, 0) == 1);
                CHECK(interval_hom_dim(u, u, hh, 1) == 0);
            }

    CHECK_THROWS_AS(interval_hom_dim({0, 1}, {1, 1}, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(interval_hom_dim({1, 1}, {1, 1}, 3, 2), std::invalid_argument);
}

TEST_CASE("projective identification") {
    for (int h : {3, 5, 8}) {
        std::vector<IntervalModule> proj = projective_intervals(h);
        REQUIRE(static_cast<int>(proj.size()) == h - 1);
        // the family is strongly exceptional in the computed order
        for (int i = 0; i < h - 1; ++i)
            for (int j = 0; j < h - 1; ++j) {
                CHECK(interval_hom_dim(proj[i], proj[j], h, 0) == (i <= j ? 1 : 0));
                CHECK(interval_hom_dim(proj[i], proj[j], h, 1) == 0);
            }
    }
}

TEST_CASE("euler matrices and the lattice") {
    EulerData d4 = euler_matrix(4, EulerSource::MF);
    CHECK(d4.a == IMat{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
    CHECK(d4.gram == IMat{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    CHECK(d4.gram == cartan_matrix_A(3));
    CHECK(euler_matrix(4, EulerSource::Quiver).a == d4.a);

    CHECK(cartan_matrix_A(1) == IMat{{2}});
    CHECK(cartan_matrix_A(2) == IMat{{2, -1}, {-1, 2}});

    for (int h = 2; h <= 12; ++h) {
        EulerData mf = euler_matrix(h, EulerSource::MF);
        // upper unitriangular with unit determinant
        for (int i = 0; i < h - 1; ++i) {
            CHECK(mf.a[i][i] == 1);
            for (int j = 0; j < i; ++j) CHECK(mf.a[i][j] == 0);
        }
        CHECK(imat_mul(mf.a, mf.a_inv) == imat_identity(h - 1));
        CHECK(mf.gram == cartan_matrix_A(h - 1));
        CHECK(euler_matrix(h, EulerSource::Quiver).a == mf.a);
    }
}

TEST_CASE("k0 classes") {
    int h = 5;
    for (int k = 1; k <= h - 1; ++k) {
        std::vector<long> e = k0_class(indecomposable(k, 0, h), h);
        for (int t = 0; t < h - 1; ++t) CHECK(e[t] == (t == k - 1 ? 1 : 0));
    }
    Rng rng(13);
    GradedMF m = random_object(h, rng);
    std::vector<long> v = k0_class(m, h);
    std::vector<long> vs = k0_class(shift(m, 1), h);
    for (int t = 0; t < h - 1; ++t) CHECK(vs[t] == -v[t]);

    // the class is blind to trivial summands
    GradedMF padded = direct_sum({m, trivial_pair(TrivialKind::FUnit, 1, h)});
    CHECK(k0_class(padded, h) == v);
}

TEST_CASE("equivalence evidence") {
    EquivalenceReport r2 = equivalence_report(2);
    CHECK(r2.pass());
    CHECK(r2.mf_count == 2);
    CHECK(r2.mf_table == IMat{{1}});

    EquivalenceReport r6 = equivalence_report(6);
    INFO((r6.failures.empty() ? std::string() : r6.failures.front()));
    CHECK(r6.pass());
    CHECK(r6.mf_count == 30);

    // negative control: a perturbed table no longer matches
    IMat perturbed = r6.quiver_table;
    perturbed[0][0] += 1;
    CHECK(r6.mf_table != perturbed);
}

TEST_CASE("quiver suite including serre action on k0") {
    SuiteResult res = quiver_suite(8, 7);
    INFO((res.failures.empty() ? std::string() : res.failures.front()));
    CHECK(res.pass);
}
