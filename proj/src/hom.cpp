#include "gradedmf/hom.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gradedmf/parallel.hpp"

namespace gmf {

RatMatrix differential_matrix(const GradedMF& alpha, const GradedMF& beta, int q) {
    SlotBasis from = slot_basis(alpha, beta, q);
    SlotBasis to = slot_basis(alpha, beta, q + 1);
    RatMatrix d(to.size(), from.size());
    for (int s = 0; s < from.size(); ++s) {
        Morphism e = Morphism::basis_element(alpha, beta, q, s);
        Morphism de = m1(e);
        for (int r = 0; r < to.size(); ++r) d.at(r, s) = de.coeffs[r];
    }
    return d;
}

HomReport hom(const GradedMF& alpha, const GradedMF& beta, int q) {
    RatMatrix d_cur = differential_matrix(alpha, beta, q);
    RatMatrix d_prev = differential_matrix(alpha, beta, q - 1);

    KernelImage ki = rat_kernel_image(d_cur);
    const int rank_prev = rat_rank(d_prev);

    HomReport rep;
    rep.degree = q;
    rep.dim = static_cast<int>(ki.kernel.size()) - rank_prev;
    if (rep.dim < 0)
        throw std::logic_error("hom: negative cohomology dimension");

    // Representatives: echelon kernel vectors kept greedily whenever they
    // grow the span of the image columns.
    if (rep.dim > 0) {
        const int nslots = d_cur.cols();
        RatMatrix span(nslots, rank_prev + rep.dim);
        int used = 0;
        for (int c = 0; c < d_prev.cols() && used < rank_prev; ++c) {
            // Only image columns that add rank matter; take them all and let
            // the rank tests below sort it out.
            bool nonzero = false;
            for (int r = 0; r < nslots; ++r)
                if (d_prev.at(r, c) != 0) { nonzero = true; break; }
            if (!nonzero) continue;
            RatMatrix trial(nslots, used + 1);
            for (int cc = 0; cc < used; ++cc)
                for (int r = 0; r < nslots; ++r) trial.at(r, cc) = span.at(r, cc);
            for (int r = 0; r < nslots; ++r) trial.at(r, used) = d_prev.at(r, c);
            if (rat_rank(trial) > used) {
                for (int r = 0; r < nslots; ++r) span.at(r, used) = d_prev.at(r, c);
                ++used;
            }
        }
        for (const auto& kv : ki.kernel) {
            if (static_cast<int>(rep.representatives.size()) == rep.dim) break;
            RatMatrix trial(nslots, used + 1);
            for (int cc = 0; cc < used; ++cc)
                for (int r = 0; r < nslots; ++r) trial.at(r, cc) = span.at(r, cc);
            for (int r = 0; r < nslots; ++r) trial.at(r, used) = kv[r];
            if (rat_rank(trial) > used) {
                for (int r = 0; r < nslots; ++r) span.at(r, used) = kv[r];
                ++used;
                Morphism mrep = Morphism::zero(alpha, beta, q);
                mrep.coeffs = kv;
                rep.representatives.push_back(std::move(mrep));
            }
        }
        if (static_cast<int>(rep.representatives.size()) != rep.dim)
            throw std::logic_error("hom: representative extraction failed");
    }
    return rep;
}

HomReport hom_shifted(const GradedMF& alpha, const GradedMF& beta, int m) {
    return hom(alpha, shift(beta, m), 0);
}

long euler_char(const GradedMF& alpha, const GradedMF& beta) {
    int lo = 0, hi = 0;
    bool any = false;
    auto scan = [&](const std::vector<int>& tags) {
        for (int t : tags) {
            if (!any) { lo = hi = t; any = true; }
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
    };
    scan(alpha.obj.even_tags);
    scan(alpha.obj.odd_tags);
    scan(beta.obj.even_tags);
    scan(beta.obj.odd_tags);

    const int h = alpha.obj.ws.index;
    const int window = (any ? hi - lo : 0) + 2 * h;

    long chi = 0;
    for (int m = -window; m <= window; ++m) {
        int d = hom(alpha, beta, m).dim;
        if (d != 0 && (m == -window || m == window))
            throw std::logic_error("euler_char: nonzero dimension at window edge");
        chi += (m % 2 == 0) ? d : -d;
    }
    return chi;
}

Rational serre_trace_raw(const Poly& phi_pm, const Poly& phi_mp, int k, int h) {
    if (k < 1 || k > h - 1) throw std::invalid_argument("serre_trace: need 1 <= k <= h-1");
    Poly str = Poly::x_power(ratio(h - k), h - k - 1) * phi_pm -
               Poly::x_power(ratio(k), k - 1) * phi_mp;
    return residue_div(str, h);
}

Rational serre_trace(const Morphism& phi, int h) {
    const GradedMF& a = phi.source;
    if (a.obj.even_count() != 1 || a.obj.odd_count() != 1)
        throw std::invalid_argument("serre_trace: source must be an indecomposable presentation");
    const int i = a.obj.even_tags[0];
    const int k = a.obj.odd_tags[0] - i;
    if (k < 1 || k > h - 1 || phi.degree != 0)
        throw std::invalid_argument("serre_trace: wrong shape");
    if (phi.target != serre(a))
        throw std::invalid_argument("serre_trace: target is not the Serre twist of the source");

    // Undo the shift identification: (phi_pm, phi_mp) of the odd endomorphism
    // are the PP coefficient and minus the MM coefficient.
    SlotBasis basis = slot_basis(a, phi.target, 0);
    Poly phi_pm(1), phi_mp(1);
    for (int s = 0; s < basis.size(); ++s) {
        const Slot& sl = basis.slots[s];
        if (phi.coeffs[s] == 0) continue;
        if (sl.block == Block::PP)
            phi_pm = phi_pm + Poly::x_power(phi.coeffs[s], sl.m);
        else if (sl.block == Block::MM)
            phi_mp = phi_mp - Poly::x_power(phi.coeffs[s], sl.m);
    }
    return serre_trace_raw(phi_pm, phi_mp, k, h);
}

SerreDualityReport verify_serre_duality(int h, int tag_range, bool parallel) {
    if (h < 2) throw std::invalid_argument("verify_serre_duality: need h >= 2");
    struct Cell { int k, i, l, j; };
    std::vector<Cell> cells;
    for (int k = 1; k <= h - 1; ++k)
        for (int i = -tag_range; i <= tag_range; ++i)
            for (int l = 1; l <= h - 1; ++l)
                for (int j = -tag_range; j <= tag_range; ++j)
                    cells.push_back(Cell{k, i, l, j});

    std::vector<std::string> cell_failures(cells.size());
    table_map(static_cast<int>(cells.size()), parallel, [&](int idx) {
        const Cell& c = cells[idx];
        GradedMF a = indecomposable(c.k, c.i, h);
        GradedMF b = indecomposable(c.l, c.j, h);
        GradedMF sa = serre(a); // = M(k, i-1)[1]

        HomReport fwd = hom(a, b, 0);
        HomReport bwd = hom(b, sa, 0);
        std::ostringstream msg;
        if (fwd.dim != bwd.dim) {
            msg << "dim mismatch at (" << c.k << "," << c.i << ")x(" << c.l << "," << c.j
                << "): " << fwd.dim << " vs " << bwd.dim << ";";
        } else if (fwd.dim > 0) {
            // Pairing matrix from representatives through composition + trace.
            RatMatrix pairing(fwd.dim, bwd.dim);
            for (int s = 0; s < fwd.dim; ++s)
                for (int t = 0; t < bwd.dim; ++t)
                    pairing.at(s, t) =
                        serre_trace(m2(bwd.representatives[t], fwd.representatives[s]), h);
            if (rat_rank(pairing) != fwd.dim)
                msg << "degenerate pairing at (" << c.k << "," << c.i << ")x(" << c.l << ","
                    << c.j << ");";
        }
        cell_failures[idx] = msg.str();
    });

    SerreDualityReport rep;
    rep.pairs_checked = static_cast<int>(cells.size());
    for (const auto& f : cell_failures) {
        if (f.empty()) continue;
        if (f.find("dim mismatch") != std::string::npos) rep.dims_match = false;
        if (f.find("degenerate") != std::string::npos) rep.pairings_nondegenerate = false;
        rep.failures.push_back(f);
    }
    return rep;
}

} // namespace gmf
