#include "gradedmf/decompose.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gmf {

namespace {

void swap_rows(PolyMat& m, int a, int b) {
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(PolyMat& m, int a, int b) {
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[dst] -= f * row[src]
void row_axpy(PolyMat& m, int dst, int src, const Poly& f) {
    for (int j = 0; j < m.cols(); ++j) m.at(dst, j) = m.at(dst, j) - f * m.at(src, j);
}

// col[dst] -= f * col[src]
void col_axpy(PolyMat& m, int dst, int src, const Poly& f) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, dst) = m.at(i, dst) - f * m.at(i, src);
}

void row_scale(PolyMat& m, int r, const Rational& c) {
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = m.at(r, j).scaled(c);
}

void col_scale(PolyMat& m, int c, const Rational& s) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, c) = m.at(i, c).scaled(s);
}

Poly monomial_quotient(const Poly& num, const Poly& den) {
    int d = num.monomial_degree() - den.monomial_degree();
    if (d < 0) throw std::logic_error("graded_snf: pivot does not divide entry");
    return Poly::x_power(num.monomial_coeff() / den.monomial_coeff(), d);
}

} // namespace

SnfResult graded_snf(const GradedMF& m) {
    if (!m.is_univariate())
        throw std::invalid_argument("graded_snf: univariate objects only");
    VerificationReport ver = verify_mf(m);
    if (!ver.pass())
        throw std::invalid_argument("graded_snf: input fails verification");

    const int n = m.obj.even_count();
    SnfResult res;
    res.cert.even_tags = m.obj.even_tags;
    res.cert.odd_tags = m.obj.odd_tags;
    res.cert.row = PolyMat::identity(n, 1);
    res.cert.row_inv = PolyMat::identity(n, 1);
    res.cert.col = PolyMat::identity(n, 1);
    res.cert.col_inv = PolyMat::identity(n, 1);

    PolyMat w = m.q_pm;
    auto& cert = res.cert;

    for (int t = 0; t < n; ++t) {
        // Minimal-degree pivot, ties by smallest (row, col).
        int pr = -1, pc = -1, pd = 0;
        for (int j = t; j < n; ++j)
            for (int i = t; i < n; ++i) {
                const Poly& e = w.at(j, i);
                if (e.is_zero()) continue;
                int d = e.monomial_degree();
                if (pr < 0 || d < pd) { pr = j; pc = i; pd = d; }
            }
        if (pr < 0)
            throw std::logic_error("graded_snf: rank-deficient block (Maurer-Cartan violated)");

        if (pr != t) {
            swap_rows(w, t, pr);
            std::swap(cert.odd_tags[t], cert.odd_tags[pr]);
            swap_rows(cert.row, t, pr);
            swap_cols(cert.row_inv, t, pr);
        }
        if (pc != t) {
            swap_cols(w, t, pc);
            std::swap(cert.even_tags[t], cert.even_tags[pc]);
            swap_cols(cert.col, t, pc);
            swap_rows(cert.col_inv, t, pc);
        }

        const Poly pivot = w.at(t, t);
        for (int j = t + 1; j < n; ++j) {
            if (w.at(j, t).is_zero()) continue;
            Poly f = monomial_quotient(w.at(j, t), pivot);
            row_axpy(w, j, t, f);
            row_axpy(cert.row, j, t, f);
            col_axpy(cert.row_inv, t, j, -f); // right-multiply the inverse by E^-1
        }
        for (int i = t + 1; i < n; ++i) {
            if (w.at(t, i).is_zero()) continue;
            Poly f = monomial_quotient(w.at(t, i), pivot);
            col_axpy(w, i, t, f);
            col_axpy(cert.col, i, t, f);
            row_axpy(cert.col_inv, t, i, -f);
        }
    }

    // Normalize pivots to monic x^d.
    for (int t = 0; t < n; ++t) {
        Rational c = w.at(t, t).monomial_coeff();
        if (c != 1) {
            Rational inv = Rational(1) / c;
            row_scale(w, t, inv);
            row_scale(cert.row, t, inv);
            col_scale(cert.row_inv, t, c);
        }
        res.degrees.push_back(w.at(t, t).monomial_degree());
    }
    res.diag_pm = w;

    // The transported q_mp must come out diagonal with complementary degrees.
    const int h = m.obj.ws.index;
    res.diag_mp = cert.col_inv * m.q_mp * cert.row_inv;
    PolyMat expect(n, n, 1);
    for (int t = 0; t < n; ++t) {
        if (res.degrees[t] < 0 || res.degrees[t] > h)
            throw std::logic_error("graded_snf: diagonal degree out of [0, h]");
        expect.at(t, t) = Poly::x_power(ratio(1), h - res.degrees[t]);
    }
    if (!(res.diag_mp == expect))
        throw std::logic_error("graded_snf: transported q_mp is not the complementary diagonal");
    return res;
}

Decomposition decompose(const GradedMF& m) {
    Decomposition dec;
    dec.snf = graded_snf(m);
    const int h = m.obj.ws.index;
    for (size_t t = 0; t < dec.snf.degrees.size(); ++t) {
        int d = dec.snf.degrees[t];
        if (d == 0 || d == h) {
            dec.stripped_trivial += 1;
        } else {
            dec.labels.push_back(IndecompLabel{d, dec.snf.cert.even_tags[t]});
        }
    }
    std::sort(dec.labels.begin(), dec.labels.end());
    return dec;
}

bool is_isomorphic(const GradedMF& a, const GradedMF& b) {
    return decompose(a).labels == decompose(b).labels;
}

long count_indecomposables_mod2shift(int h) {
    if (h < 2) throw std::invalid_argument("count_indecomposables_mod2shift: need h >= 2");
    std::set<std::pair<int, int>> orbits;
    for (int l = 1; l <= h - 1; ++l)
        for (int i = 0; i < 2 * h; ++i) {
            // Orbit representative of (l, i) under i -> i + h.
            int rep = ((i % h) + h) % h;
            orbits.insert({l, rep});
        }
    return static_cast<long>(orbits.size());
}

ARQuiver ar_quiver(int h, int i_window) {
    if (h < 2) throw std::invalid_argument("ar_quiver: need h >= 2");
    ARQuiver q;
    q.h = h;
    q.i_window = i_window;
    for (int i = -i_window; i <= i_window; ++i)
        for (int l = 1; l <= h - 1; ++l) q.vertices.push_back(IndecompLabel{l, i});

    auto add_arrow = [&](const IndecompLabel& from, const IndecompLabel& to, bool right) {
        GradedMF a = indecomposable(from, h);
        GradedMF b = indecomposable(to, h);
        Morphism phi = Morphism::zero(a, b, 0);
        SlotBasis basis = slot_basis(a, b, 0);
        // diag(1,x): PP slot holds x^0, MM slot x^1; diag(x,1) the reverse.
        for (int s = 0; s < basis.size(); ++s) {
            const Slot& sl = basis.slots[s];
            int want = right ? (sl.block == Block::PP ? 0 : 1)
                             : (sl.block == Block::PP ? 1 : 0);
            if (sl.m == want) phi.coeffs[s] = 1;
        }
        if (!m1(phi).is_zero()) {
            q.failures.push_back("arrow not closed");
            return;
        }
        // Irreducible arrows must represent nonzero classes.
        RatMatrix d_prev = differential_matrix(a, b, -1);
        RatMatrix aug(d_prev.rows(), d_prev.cols() + 1);
        for (int r = 0; r < d_prev.rows(); ++r) {
            for (int c = 0; c < d_prev.cols(); ++c) aug.at(r, c) = d_prev.at(r, c);
            aug.at(r, d_prev.cols()) = phi.coeffs[r];
        }
        if (rat_rank(aug) == rat_rank(d_prev)) {
            q.failures.push_back("arrow class is null-homotopic");
            return;
        }
        q.arrows.push_back(ArArrow{from, to, std::move(phi), right});
    };

    for (const auto& v : q.vertices) {
        if (v.l + 1 <= h - 1) add_arrow(v, IndecompLabel{v.l + 1, v.i}, true);
        if (v.l - 1 >= 1) add_arrow(v, IndecompLabel{v.l - 1, v.i + 1}, false);
    }
    return q;
}

GradedMF random_base_change(const GradedMF& m, Rng& rng, int ops) {
    GradedMF r = m;
    const int p = r.obj.even_count(), n = r.obj.odd_count();
    if (p != n) throw std::invalid_argument("random_base_change: non-square input");
    if (p == 0) return r;

    for (int step = 0; step < ops; ++step) {
        int kind = static_cast<int>(rng.below(4));
        bool even_side = rng.flip();
        if (kind == 0 && p >= 2) {
            // Transvection with the grading-forced monomial degree.
            for (int attempt = 0; attempt < 8; ++attempt) {
                int a = static_cast<int>(rng.below(p)), b = static_cast<int>(rng.below(p));
                if (a == b) continue;
                if (even_side) {
                    int delta = r.obj.even_tags[a] - r.obj.even_tags[b];
                    if (delta < 0) continue;
                    Poly f = Poly::x_power(rng.small_nonzero_rational(), delta);
                    // q_pm . (Id + f e_ab), (Id - f e_ab) . q_mp
                    col_axpy(r.q_pm, b, a, -f);
                    row_axpy(r.q_mp, a, b, f);
                } else {
                    int delta = r.obj.odd_tags[a] - r.obj.odd_tags[b];
                    if (delta < 0) continue;
                    Poly f = Poly::x_power(rng.small_nonzero_rational(), delta);
                    // (Id - f e_ab) . q_pm, q_mp . (Id + f e_ab)
                    row_axpy(r.q_pm, a, b, f);
                    col_axpy(r.q_mp, b, a, -f);
                }
                break;
            }
        } else if (kind == 1) {
            int a = static_cast<int>(rng.below(p));
            Rational c = rng.small_nonzero_rational();
            Rational inv = Rational(1) / c;
            if (even_side) {
                col_scale(r.q_pm, a, c);
                row_scale(r.q_mp, a, inv);
            } else {
                row_scale(r.q_pm, a, c);
                col_scale(r.q_mp, a, inv);
            }
        } else if (p >= 2) {
            int a = static_cast<int>(rng.below(p)), b = static_cast<int>(rng.below(p));
            if (a == b) continue;
            if (even_side) {
                std::swap(r.obj.even_tags[a], r.obj.even_tags[b]);
                swap_cols(r.q_pm, a, b);
                swap_rows(r.q_mp, a, b);
            } else {
                std::swap(r.obj.odd_tags[a], r.obj.odd_tags[b]);
                swap_rows(r.q_pm, a, b);
                swap_cols(r.q_mp, a, b);
            }
        }
    }
    if (!verify_mf(r).pass())
        throw std::logic_error("random_base_change: produced an invalid object");
    return r;
}

} // namespace gmf
