#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gradedmf/cyclotomic.hpp"
#include "gradedmf/decompose.hpp"

namespace gmf {

// Exact phase (1/2n) Tr S_a - 1/2 of the reduced presentation; trivial pairs
// are stripped first. Throws on objects that reduce to zero.
Rational phase(const GradedMF& m);

// Z(alpha) = sum(w^k_i) - sum(w^l_i) in the group ring; a K0 invariant, so no
// reduction happens first (trivial pairs contribute zero on their own).
CyclotomicInt central_charge(const GradedMF& m);

struct MassPhase {
    double mass = 0.0;
    double phase = 0.0; // (1/pi) arg, in (-1, 1]
};

// Polar rendering of Z at w = exp(2 pi i / h); throws on Z = 0.
MassPhase mass_phase_float(const CyclotomicInt& z);

// |a - b| modulo 2, folded into [0, 1].
double phase_distance_mod2(double a, double b);

// All Krull-Schmidt summands share one phase.
bool is_semistable(const GradedMF& m);

struct HNStep {
    Rational phase_value;
    std::vector<IndecompLabel> labels;
    GradedMF piece;     // N_j, canonical sum of the labels
    GradedMF partial;   // M_j, canonical sum of the first j groups
    Morphism inclusion; // M_(j-1) -> M_j, closed split inclusion
};

struct HNFiltration {
    std::vector<HNStep> steps;
};

// Harder-Narasimhan tower: label groups by phase in strictly descending
// order; each triangle M_(j-1) -> M_j -> N_j is realized by the cone of the
// split inclusion and checked to be isomorphic to N_j.
HNFiltration hn_filtration(const GradedMF& m);

struct BridgelandReport {
    bool polar_form = true;     // (i)  Z = m exp(i pi phi), m >= 0, within 1e-10
    bool shift_phase = true;    // (ii) P(phi)[1] = P(phi+1) on labels, exact
    bool hom_vanishing = true;  // (iii) phi_1 > phi_2 forces Hom = 0, exact
    bool hn_exists = true;      // (iv) filtrations on a seeded corpus
    int pairs_checked = 0;
    int corpus_size = 0;
    std::vector<std::string> failures;

    bool pass() const { return polar_form && shift_phase && hom_vanishing && hn_exists; }
};

BridgelandReport check_bridgeland(int h, int i_window, int corpus = 200,
                                  std::uint64_t seed = 0, bool parallel = true);

// Seeded random object: up to max_summands indecomposables with tags in
// [-h, h], optionally padded with trivial pairs, conjugated by a random
// graded base change.
GradedMF random_object(int h, Rng& rng, int max_summands = 6, bool with_trivials = true);

} // namespace gmf
