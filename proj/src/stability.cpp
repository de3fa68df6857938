#include "gradedmf/stability.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "gradedmf/parallel.hpp"

namespace gmf {

Rational phase(const GradedMF& m) {
    Decomposition dec = decompose(m);
    if (dec.labels.empty())
        throw std::invalid_argument("phase: undefined for objects reducing to zero");
    Rational sum(0);
    for (const auto& lab : dec.labels) sum += label_phase(lab, m.obj.ws.index);
    return sum / Rational(static_cast<long>(dec.labels.size()));
}

CyclotomicInt central_charge(const GradedMF& m) {
    CyclotomicInt z(m.obj.ws.index);
    for (int k : m.obj.even_tags) z.add_root_power(k, 1);
    for (int l : m.obj.odd_tags) z.add_root_power(l, -1);
    return z;
}

MassPhase mass_phase_float(const CyclotomicInt& z) {
    if (z.is_zero()) throw std::invalid_argument("mass_phase_float: zero central charge");
    std::complex<double> c = z.to_complex();
    return MassPhase{std::abs(c), std::arg(c) / std::numbers::pi};
}

double phase_distance_mod2(double a, double b) {
    double d = std::fmod(a - b, 2.0);
    if (d < 0) d += 2.0;
    return std::min(d, 2.0 - d);
}

bool is_semistable(const GradedMF& m) {
    Decomposition dec = decompose(m);
    if (dec.labels.empty()) return true; // zero object sits in every P(phi)
    const int h = m.obj.ws.index;
    Rational phi = label_phase(dec.labels.front(), h);
    for (const auto& lab : dec.labels)
        if (label_phase(lab, h) != phi) return false;
    return true;
}

HNFiltration hn_filtration(const GradedMF& m) {
    const int h = m.obj.ws.index;
    Decomposition dec = decompose(m);
    if (dec.labels.empty())
        throw std::invalid_argument("hn_filtration: object reduces to zero");

    // Group by phase, descending.
    std::map<Rational, std::vector<IndecompLabel>, std::greater<Rational>> groups;
    for (const auto& lab : dec.labels) groups[label_phase(lab, h)].push_back(lab);

    HNFiltration hn;
    std::vector<GradedMF> acc;
    GradedMF prev_partial = GradedMF::zero(m.f, m.obj.ws);
    for (const auto& [phi, labs] : groups) {
        HNStep step;
        step.phase_value = phi;
        step.labels = labs;
        std::vector<GradedMF> piece_parts;
        for (const auto& lab : labs) piece_parts.push_back(indecomposable(lab, h));
        step.piece = direct_sum(m.f, m.obj.ws, piece_parts);
        for (auto& part : piece_parts) acc.push_back(std::move(part));
        step.partial = direct_sum(m.f, m.obj.ws, acc);

        // Split inclusion of the previous partial sum as a prefix of summands.
        Morphism inc = Morphism::zero(prev_partial, step.partial, 0);
        SlotBasis basis = slot_basis(prev_partial, step.partial, 0);
        for (int s = 0; s < basis.size(); ++s) {
            const Slot& sl = basis.slots[s];
            if (sl.i == sl.j && sl.m == 0 &&
                (sl.block == Block::PP || sl.block == Block::MM))
                inc.coeffs[s] = 1;
        }
        if (!m1(inc).is_zero())
            throw std::logic_error("hn_filtration: split inclusion not closed");
        step.inclusion = inc;

        // Triangle check: cone(M_(j-1) -> M_j) must be the new piece.
        GradedMF c = cone(inc);
        if (!is_isomorphic(c, step.piece))
            throw std::logic_error("hn_filtration: cone of inclusion is not the piece");

        prev_partial = step.partial;
        hn.steps.push_back(std::move(step));
    }

    if (!is_isomorphic(hn.steps.back().partial, m))
        throw std::logic_error("hn_filtration: reassembly differs from input");
    return hn;
}

GradedMF random_object(int h, Rng& rng, int max_summands, bool with_trivials) {
    const int count = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_summands))) + 1;
    std::vector<GradedMF> parts;
    for (int s = 0; s < count; ++s) {
        int l = static_cast<int>(rng.below(static_cast<std::uint64_t>(h - 1))) + 1;
        int i = static_cast<int>(rng.range(-h, h));
        parts.push_back(indecomposable(l, i, h));
    }
    if (with_trivials) {
        int extra = static_cast<int>(rng.below(3));
        for (int s = 0; s < extra; ++s) {
            int k = static_cast<int>(rng.range(-h, h));
            parts.push_back(trivial_pair(rng.flip() ? TrivialKind::Unit : TrivialKind::FUnit, k, h));
        }
    }
    GradedMF sum = direct_sum(parts);
    return random_base_change(sum, rng, 3 * static_cast<int>(parts.size()));
}

BridgelandReport check_bridgeland(int h, int i_window, int corpus, std::uint64_t seed,
                                  bool parallel) {
    if (h < 2) throw std::invalid_argument("check_bridgeland: need h >= 2");
    BridgelandReport rep;
    const double tol = 1e-10;

    std::vector<IndecompLabel> window;
    for (int l = 1; l <= h - 1; ++l)
        for (int i = -i_window; i <= i_window; ++i) window.push_back(IndecompLabel{l, i});

    // (i) polar form Z = m exp(i pi phi) with m >= 0, phases matched mod 2.
    for (const auto& lab : window) {
        CyclotomicInt z = central_charge(indecomposable(lab, h));
        MassPhase mp = mass_phase_float(z);
        double exact = label_phase(lab, h).get_d();
        std::complex<double> polar =
            mp.mass * std::exp(std::complex<double>(0.0, std::numbers::pi * exact));
        if (mp.mass < -1e-12 || std::abs(z.to_complex() - polar) > tol ||
            phase_distance_mod2(mp.phase, exact) > tol) {
            rep.polar_form = false;
            std::ostringstream msg;
            msg << "polar form fails at (" << lab.l << "," << lab.i << ")";
            rep.failures.push_back(msg.str());
        }
    }

    // (ii) [1] P(phi) = P(phi+1), exact on labels.
    for (const auto& lab : window) {
        if (label_phase(shift_label(lab, 1, h), h) != label_phase(lab, h) + Rational(1)) {
            rep.shift_phase = false;
            std::ostringstream msg;
            msg << "shift phase fails at (" << lab.l << "," << lab.i << ")";
            rep.failures.push_back(msg.str());
        }
    }

    // (iii) phi_1 > phi_2 forces Hom(M_1, M_2) = 0; exhaustive over the window.
    struct Pair { IndecompLabel a, b; };
    std::vector<Pair> pairs;
    for (const auto& a : window)
        for (const auto& b : window)
            if (label_phase(a, h) > label_phase(b, h)) pairs.push_back(Pair{a, b});
    std::vector<int> dims(pairs.size(), 0);
    table_map(static_cast<int>(pairs.size()), parallel, [&](int idx) {
        dims[idx] = hom(indecomposable(pairs[idx].a, h), indecomposable(pairs[idx].b, h), 0).dim;
    });
    rep.pairs_checked = static_cast<int>(pairs.size());
    for (size_t idx = 0; idx < pairs.size(); ++idx) {
        if (dims[idx] != 0) {
            rep.hom_vanishing = false;
            std::ostringstream msg;
            msg << "hom does not vanish from (" << pairs[idx].a.l << "," << pairs[idx].a.i
                << ") to (" << pairs[idx].b.l << "," << pairs[idx].b.i << ")";
            rep.failures.push_back(msg.str());
        }
    }

    // (iv) HN filtrations on a seeded corpus of base-changed sums.
    rep.corpus_size = corpus;
    std::vector<std::string> errs(corpus);
    table_map(corpus, parallel, [&](int c) {
        Rng rng(seed + 0x9e37'79b9'7f4a'7c15ULL * static_cast<std::uint64_t>(c + 1) +
                static_cast<std::uint64_t>(h));
        GradedMF obj = random_object(h, rng);
        try {
            Decomposition dec = decompose(obj);
            if (dec.labels.empty()) return; // reduced to zero, nothing to filter
            HNFiltration hn = hn_filtration(obj);
            std::vector<IndecompLabel> gathered;
            for (size_t j = 0; j < hn.steps.size(); ++j) {
                if (j > 0 && !(hn.steps[j - 1].phase_value > hn.steps[j].phase_value))
                    throw std::logic_error("phases not strictly decreasing");
                if (!is_semistable(hn.steps[j].piece))
                    throw std::logic_error("piece not semistable");
                for (const auto& lab : hn.steps[j].labels) gathered.push_back(lab);
            }
            std::sort(gathered.begin(), gathered.end());
            if (gathered != dec.labels)
                throw std::logic_error("pieces do not partition the labels");
        } catch (const std::exception& ex) {
            errs[c] = ex.what();
        }
    });
    for (int c = 0; c < corpus; ++c) {
        if (!errs[c].empty()) {
            rep.hn_exists = false;
            std::ostringstream msg;
            msg << "hn corpus item " << c << ": " << errs[c];
            rep.failures.push_back(msg.str());
        }
    }
    return rep;
}

} // namespace gmf
