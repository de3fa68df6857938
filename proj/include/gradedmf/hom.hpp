#pragma once

#include <string>
#include <vector>

#include "gradedmf/morphism.hpp"
#include "gradedmf/ratmatrix.hpp"

namespace gmf {

// Cohomology of (Tw^*, m1) in one degree: Ker(m1)/Im(m1) with deterministic
// representatives (reduced-echelon kernel vectors not in the image span).
struct HomReport {
    int degree = 0;
    int dim = 0;
    std::vector<Morphism> representatives;
};

HomReport hom(const GradedMF& alpha, const GradedMF& beta, int q);

// Hom(alpha, beta[m]) computed at degree zero after shifting; agrees with
// hom(alpha, beta, m) dimension-wise.
HomReport hom_shifted(const GradedMF& alpha, const GradedMF& beta, int m);

// Matrix of m1: Tw^q -> Tw^(q+1) in the slot bases.
RatMatrix differential_matrix(const GradedMF& alpha, const GradedMF& beta, int q);

// Alternating sum of hom dimensions over a window wide enough to contain all
// of them; the window edges are checked to be zero and the call throws if
// they are not.
long euler_char(const GradedMF& alpha, const GradedMF& beta);

// Residue trace on the odd endomorphism presentation of M(k,i):
// Res[((h-k) x^(h-k-1) phi_pm - k x^(k-1) phi_mp) dx / (h x^(h-1))].
// Normalized so the canonical generator has trace exactly 1.
Rational serre_trace_raw(const Poly& phi_pm, const Poly& phi_mp, int k, int h);

// Same trace applied to a closed degree-0 morphism M(k,i) -> S(M(k,i)),
// which is the shifted presentation of that odd endomorphism space.
Rational serre_trace(const Morphism& phi, int h);

struct SerreDualityReport {
    bool dims_match = true;
    bool pairings_nondegenerate = true;
    std::vector<std::string> failures;
    int pairs_checked = 0;

    bool pass() const { return dims_match && pairings_nondegenerate; }
};

// Checks dim Hom(M(k,i), M(l,j)) = dim Hom(M(l,j), M(k,i-1)[1]) over the full
// grid 1 <= k,l <= h-1, |i|,|j| <= tag_range, and that the trace pairing
// matrices built from representatives have full rank.
SerreDualityReport verify_serre_duality(int h, int tag_range, bool parallel = true);

} // namespace gmf
