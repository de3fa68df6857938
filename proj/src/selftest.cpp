#include "gradedmf/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "gradedmf/hom.hpp"
#include "gradedmf/quiver.hpp"
#include "gradedmf/weights.hpp"

namespace gmf {

namespace {

std::string spot(int h, long c) {
    std::ostringstream s;
    s << "h=" << h << " case " << c;
    return s.str();
}

} // namespace

SuiteResult algebra_suite(std::uint64_t seed) {
    SuiteResult res;
    res.name = "algebra";
    Rng rng(seed);

    // Kernel/image structure on random rational matrices.
    for (long c = 0; c < 200; ++c) {
        int rows = static_cast<int>(rng.below(6)) + 1;
        int cols = static_cast<int>(rng.below(6)) + 1;
        RatMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = rng.small_rational();
        KernelImage ki = rat_kernel_image(m);
        ++res.checked;
        if (ki.rank + static_cast<int>(ki.kernel.size()) != cols)
            res.fail("rank-nullity violated at case " + std::to_string(c));
        for (const auto& v : ki.kernel) {
            auto mv = m.apply(v);
            for (const auto& entry : mv)
                if (entry != 0) res.fail("kernel vector not annihilated at case " + std::to_string(c));
        }
        // Image columns must be independent and exhaust the column space.
        RatMatrix img(rows, static_cast<int>(ki.image.size()));
        for (size_t j = 0; j < ki.image.size(); ++j)
            for (int i = 0; i < rows; ++i) img.at(i, static_cast<int>(j)) = ki.image[j][i];
        if (rat_rank(img) != ki.rank || rat_rank(m) != ki.rank)
            res.fail("image basis rank mismatch at case " + std::to_string(c));
    }

    // Regularity vs the chi(T) limit identity over a small scan.
    for (int h = 2; h <= 12; ++h)
        for (int a = 1; a < h; ++a)
            for (int b = a; b < h; ++b)
                for (int cw = b; cw < h; ++cw) {
                    ++res.checked;
                    RegularityResult r = is_regular_weight_system(a, b, cw, h);
                    if (!r.regular) continue;
                    Rational mu = milnor_number(a, b, cw, h);
                    if (!is_integer(mu))
                        res.fail("non-integer Milnor number in scan");
                    if (Rational(zpoly_eval(r.chi, BigInt(1))) != mu)
                        res.fail("chi(1) differs from the Milnor number in scan");
                }
    return res;
}

SuiteResult cdg_suite(int h_max, long count, std::uint64_t seed) {
    SuiteResult res;
    res.name = "cdg-identities";
    Rng rng(seed);
    long c = 0;
    while (c < count) {
        int h = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(h_max - 1)));
        Rng orng(rng.next());
        GradedMF a = random_object(h, orng, 3, false);
        GradedMF b = random_object(h, orng, 3, false);
        GradedMF g = random_object(h, orng, 3, false);
        int qx = static_cast<int>(orng.range(-3, 3));
        int qy = static_cast<int>(orng.range(-3, 3));
        int qz = static_cast<int>(orng.range(-3, 3));
        Morphism x = Morphism::random(b, g, qx, orng);
        Morphism y = Morphism::random(a, b, qy, orng);
        Morphism z = Morphism::random(g, a, qz, orng);

        // m1 twice is zero.
        if (!m1(m1(y)).is_zero()) res.fail("m1^2 != 0 at " + spot(h, c));

        // Unit axioms for the adopted sign.
        Morphism idb = Morphism::identity(b);
        if (!(m2(x, idb) - x).is_zero()) res.fail("right unit fails at " + spot(h, c));
        Morphism ey = m2(idb, y);
        Morphism want = (qy % 2 == 0) ? y : y.scaled(ratio(-1));
        if (!(ey - want).is_zero()) res.fail("left unit fails at " + spot(h, c));

        // Curvature relation: (-1)^|x| m2(F (x) x) - m2(x (x) F) = 0 with
        // F = f*Id of degree 2 (m1 vanishes on the underlying algebra).
        {
            Morphism f_src = project_to_slots(
                b, b, 2, PolyMat::scalar(b.obj.even_count() + b.obj.odd_count(), b.f));
            Morphism f_tgt = project_to_slots(
                g, g, 2, PolyMat::scalar(g.obj.even_count() + g.obj.odd_count(), g.f));
            Morphism lhs = m2(f_tgt, x);
            if (qx % 2 != 0) lhs = lhs.scaled(ratio(-1));
            if (!(lhs - m2(x, f_src)).is_zero())
                res.fail("curvature identity fails at " + spot(h, c));
        }

        // Associativity with the sign: m2(m2(x,y),z) = (-1)^|z| m2(x, m2(y,z)).
        Morphism lhs = m2(m2(x, y), z);
        Morphism rhs = m2(x, m2(y, z));
        if (qz % 2 != 0) rhs = rhs.scaled(ratio(-1));
        if (!(lhs - rhs).is_zero()) res.fail("associativity fails at " + spot(h, c));

        // Leibniz: m1(m2(x,y)) = (-1)^|y| m2(m1(x), y) - m2(x, m1(y)).
        Morphism lz = m1(m2(x, y));
        Morphism r1 = m2(m1(x), y);
        if (qy % 2 != 0) r1 = r1.scaled(ratio(-1));
        Morphism r2 = m2(x, m1(y));
        if (!(lz - (r1 - r2)).is_zero()) res.fail("Leibniz fails at " + spot(h, c));

        ++c;
        ++res.checked;
    }
    return res;
}

SuiteResult cone_suite(int h_max, long count, std::uint64_t seed) {
    SuiteResult res;
    res.name = "cone-maurer-cartan";
    Rng rng(seed);
    long closed_seen = 0;
    for (long c = 0; c < count; ++c) {
        int h = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(h_max - 1)));
        Rng orng(rng.next());
        GradedMF a = random_object(h, orng, 3, false);
        GradedMF b = random_object(h, orng, 3, false);
        Morphism t = Morphism::random(a, b, 0, orng);
        bool closed = m1(t).is_zero();
        bool mc = verify_mf(cone_unchecked(t)).pass();
        if (closed != mc) res.fail("cone MC mismatch at " + spot(h, c));
        ++res.checked;

        // Also exercise a guaranteed-closed map so both branches occur.
        HomReport hr = hom(a, b, 0);
        if (hr.dim > 0) {
            Morphism tc = hr.representatives[0];
            if (!verify_mf(cone_unchecked(tc)).pass())
                res.fail("cone MC fails on closed map at " + spot(h, c));
            ++closed_seen;
            ++res.checked;
        }
    }
    if (closed_seen == 0) res.fail("corpus never produced a closed map");
    return res;
}

SuiteResult functor_suite(int h_max, long count, std::uint64_t seed) {
    SuiteResult res;
    res.name = "functors";
    Rng rng(seed);
    for (long c = 0; c < count; ++c) {
        int h = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(h_max - 1)));
        Rng orng(rng.next());
        GradedMF m = random_object(h, orng);
        ++res.checked;

        if (!(translate(m, h) == shift(m, 2))) res.fail("{2h/h} != [2] at " + spot(h, c));
        if (!(shift(shift(m, 1), 1) == translate(m, h)))
            res.fail("[1][1] != {2h/h} at " + spot(h, c));
        if (!(shift(shift(m, 1), -1) == m)) res.fail("shift inverse fails at " + spot(h, c));
        if (!(translate(translate(m, 2), -5) == translate(m, -3)))
            res.fail("translate additivity fails at " + spot(h, c));
        if (!verify_mf(shift(m, 1)).pass() || !verify_mf(translate(m, 3)).pass() ||
            !verify_mf(serre(m)).pass())
            res.fail("functor image fails verification at " + spot(h, c));

        // Serre order on labels: S^h = [h-2].
        int l = 1 + static_cast<int>(orng.below(static_cast<std::uint64_t>(h - 1)));
        int i = static_cast<int>(orng.range(-h, h));
        GradedMF ind = indecomposable(l, i, h);
        GradedMF s = ind;
        for (int step = 0; step < h; ++step) s = serre(s);
        if (!is_isomorphic(s, shift(ind, h - 2)))
            res.fail("S^h != [h-2] at " + spot(h, c));

        // Hom dimensions are invariant under both autoequivalences.
        GradedMF n = random_object(h, orng, 3, false);
        int q = static_cast<int>(orng.range(-2, 2));
        int d0 = hom(m, n, q).dim;
        if (hom(translate(m, 1), translate(n, 1), q).dim != d0 ||
            hom(shift(m, 1), shift(n, 1), q).dim != d0)
            res.fail("hom dims not functor-invariant at " + spot(h, c));
        if (hom_shifted(m, n, q).dim != d0)
            res.fail("hom_shifted disagrees with graded hom at " + spot(h, c));

        // Central charge: additive, odd under shift, zero on trivial pairs.
        CyclotomicInt zm = central_charge(m);
        CyclotomicInt zn = central_charge(n);
        if (!(central_charge(direct_sum({m, n})) == zm + zn))
            res.fail("Z not additive at " + spot(h, c));
        if (!(central_charge(shift(m, 1)) == -zm))
            res.fail("Z([1]) != -Z at " + spot(h, c));
        if (!central_charge(trivial_pair(TrivialKind::FUnit, i, h)).is_zero())
            res.fail("Z of a trivial pair is nonzero at " + spot(h, c));
        HomReport hr = hom(m, n, 0);
        if (hr.dim > 0) {
            GradedMF cn = cone(hr.representatives[0]);
            if (!(central_charge(cn) == zn - zm))
                res.fail("Z(cone) != Z(beta) - Z(alpha) at " + spot(h, c));
        }
    }
    return res;
}

SuiteResult decompose_suite(int h_max, long per_h, std::uint64_t seed) {
    SuiteResult res;
    res.name = "decompose-roundtrip";
    for (int h = 2; h <= h_max; ++h) {
        for (long c = 0; c < per_h; ++c) {
            Rng rng(seed + 1315423911ULL * static_cast<std::uint64_t>(h) +
                    static_cast<std::uint64_t>(c));
            int count = static_cast<int>(rng.below(6)) + 1;
            std::vector<IndecompLabel> labels;
            std::vector<GradedMF> parts;
            for (int s = 0; s < count; ++s) {
                IndecompLabel lab{1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(h - 1))),
                                  static_cast<int>(rng.range(-h, h))};
                labels.push_back(lab);
                parts.push_back(indecomposable(lab, h));
            }
            int trivials = static_cast<int>(rng.below(3));
            for (int s = 0; s < trivials; ++s)
                parts.push_back(trivial_pair(rng.flip() ? TrivialKind::Unit : TrivialKind::FUnit,
                                             static_cast<int>(rng.range(-h, h)), h));
            std::sort(labels.begin(), labels.end());
            GradedMF scrambled = random_base_change(direct_sum(parts), rng,
                                                    4 * static_cast<int>(parts.size()));
            Decomposition dec = decompose(scrambled);
            ++res.checked;
            if (dec.labels != labels)
                res.fail("labels not recovered at " + spot(h, c));
            if (dec.stripped_trivial != trivials)
                res.fail("stripped count wrong at " + spot(h, c));

            // Certificate reassembly: row * q_pm * col is the diagonal and
            // conversely the input blocks are recovered from it.
            const auto& snf = dec.snf;
            if (!(snf.cert.row * scrambled.q_pm * snf.cert.col == snf.diag_pm))
                res.fail("certificate does not diagonalize at " + spot(h, c));
            if (!(snf.cert.row_inv * snf.diag_pm * snf.cert.col_inv == scrambled.q_pm))
                res.fail("certificate does not reassemble at " + spot(h, c));
            if (!(snf.cert.row * snf.cert.row_inv == PolyMat::identity(snf.cert.row.rows(), 1)) ||
                !(snf.cert.col * snf.cert.col_inv == PolyMat::identity(snf.cert.col.rows(), 1)))
                res.fail("certificate factors not inverse at " + spot(h, c));

            // The factors are graded: row maps old odd coordinates to new,
            // col maps the new even basis into the old coordinates.
            auto graded_entry = [](const Poly& e, int target_tag, int source_tag) {
                return e.is_zero() ||
                       (e.is_monomial() && e.monomial_degree() == target_tag - source_tag);
            };
            int nsum = snf.cert.row.rows();
            for (int t = 0; t < nsum; ++t)
                for (int j = 0; j < nsum; ++j) {
                    if (!graded_entry(snf.cert.row.at(t, j), snf.cert.odd_tags[t],
                                      scrambled.obj.odd_tags[j]))
                        res.fail("row factor not graded at " + spot(h, c));
                    if (!graded_entry(snf.cert.row_inv.at(t, j), scrambled.obj.odd_tags[t],
                                      snf.cert.odd_tags[j]))
                        res.fail("row inverse not graded at " + spot(h, c));
                    if (!graded_entry(snf.cert.col.at(t, j), scrambled.obj.even_tags[t],
                                      snf.cert.even_tags[j]))
                        res.fail("col factor not graded at " + spot(h, c));
                    if (!graded_entry(snf.cert.col_inv.at(t, j), snf.cert.even_tags[t],
                                      scrambled.obj.even_tags[j]))
                        res.fail("col inverse not graded at " + spot(h, c));
                }

            // Labels commute with the autoequivalences.
            Decomposition dt = decompose(translate(scrambled, 1));
            std::vector<IndecompLabel> want_t;
            for (auto lab : labels) want_t.push_back(translate_label(lab, 1));
            std::sort(want_t.begin(), want_t.end());
            if (dt.labels != want_t) res.fail("translate labels wrong at " + spot(h, c));
            Decomposition ds = decompose(shift(scrambled, 1));
            std::vector<IndecompLabel> want_s;
            for (auto lab : labels) want_s.push_back(shift_label(lab, 1, h));
            std::sort(want_s.begin(), want_s.end());
            if (ds.labels != want_s) res.fail("shift labels wrong at " + spot(h, c));
        }
    }
    return res;
}

SuiteResult serre_suite(int h_max, int tag_range, bool parallel) {
    SuiteResult res;
    res.name = "serre-duality";
    for (int h = 2; h <= h_max; ++h) {
        SerreDualityReport rep = verify_serre_duality(h, tag_range, parallel);
        res.checked += rep.pairs_checked;
        if (!rep.pass())
            for (const auto& f : rep.failures) res.fail("h=" + std::to_string(h) + ": " + f);
    }
    return res;
}

SuiteResult stability_suite(int h_max, int i_window, int corpus, std::uint64_t seed,
                            bool parallel) {
    SuiteResult res;
    res.name = "bridgeland-axioms";
    for (int h = 2; h <= h_max; ++h) {
        BridgelandReport rep = check_bridgeland(h, i_window, corpus, seed, parallel);
        res.checked += rep.pairs_checked + rep.corpus_size;
        if (!rep.pass())
            for (const auto& f : rep.failures) res.fail("h=" + std::to_string(h) + ": " + f);
    }
    return res;
}

SuiteResult quiver_suite(int h_max, std::uint64_t seed, bool parallel) {
    SuiteResult res;
    res.name = "quiver-lattice";
    for (int h = 2; h <= h_max; ++h) {
        EquivalenceReport rep = equivalence_report(h, parallel);
        ++res.checked;
        if (!rep.pass())
            for (const auto& f : rep.failures) res.fail("h=" + std::to_string(h) + ": " + f);

        EulerData ed = euler_matrix(h, EulerSource::MF);
        if (ed.gram != cartan_matrix_A(h - 1))
            res.fail("gram matrix is not the Cartan matrix at h=" + std::to_string(h));
        IMat cox_pow = imat_identity(h - 1);
        for (int k = 0; k < h; ++k) cox_pow = imat_mul(cox_pow, ed.coxeter);
        if (cox_pow != imat_identity(h - 1))
            res.fail("coxeter matrix order differs from h at h=" + std::to_string(h));

        // K0: basis classes, shift sign, additivity, Serre action, and the
        // central charge factoring through K0.
        Rng rng(seed + static_cast<std::uint64_t>(h));
        for (int k = 1; k <= h - 1; ++k) {
            std::vector<long> e = k0_class(indecomposable(k, 0, h), h);
            for (int t = 0; t < h - 1; ++t)
                if (e[t] != (t == k - 1 ? 1 : 0))
                    res.fail("k0 of a basis object is not a unit vector at h=" +
                             std::to_string(h));
        }
        for (int c = 0; c < 5; ++c) {
            GradedMF m = random_object(h, rng, 3);
            GradedMF n = random_object(h, rng, 2);
            ++res.checked;
            std::vector<long> vm = k0_class(m, h);
            std::vector<long> vn = k0_class(n, h);
            std::vector<long> vs = k0_class(direct_sum({m, n}), h);
            std::vector<long> vshift = k0_class(shift(m, 1), h);
            std::vector<long> vserre = k0_class(serre(m), h);
            for (int t = 0; t < h - 1; ++t) {
                if (vs[t] != vm[t] + vn[t]) res.fail("k0 not additive at h=" + std::to_string(h));
                if (vshift[t] != -vm[t]) res.fail("k0 shift sign wrong at h=" + std::to_string(h));
                long acc = 0;
                for (int u = 0; u < h - 1; ++u) acc += ed.serre_action[t][u] * vm[u];
                if (vserre[t] != acc)
                    res.fail("k0 Serre action differs from A^-1 tA at h=" + std::to_string(h));
            }
            // Z factors through K0 in the group ring.
            CyclotomicInt lhs = central_charge(m);
            CyclotomicInt rhs(h);
            for (int k = 1; k <= h - 1; ++k) {
                CyclotomicInt zk = central_charge(indecomposable(k, 0, h));
                rhs = rhs + zk.scaled(BigInt(vm[k - 1]));
            }
            if (!(lhs == rhs)) res.fail("Z does not factor through K0 at h=" + std::to_string(h));
        }
    }
    return res;
}

std::vector<SuiteResult> run_all_suites(int h_max, std::uint64_t seed, bool parallel) {
    std::vector<SuiteResult> out;
    out.push_back(algebra_suite(seed));
    out.push_back(cdg_suite(std::min(h_max, 6), 300, seed));
    out.push_back(cone_suite(std::min(h_max, 6), 150, seed));
    out.push_back(functor_suite(std::min(h_max, 8), 60, seed));
    out.push_back(decompose_suite(std::min(h_max, 8), 40, seed));
    out.push_back(serre_suite(std::min(h_max, 6), 2, parallel));
    out.push_back(stability_suite(std::min(h_max, 6), 2, 60, seed, parallel));
    out.push_back(quiver_suite(h_max, seed, parallel));
    return out;
}

} // namespace gmf
