#pragma once

#include <vector>

#include "gradedmf/mf.hpp"
#include "gradedmf/rng.hpp"

namespace gmf {

// Block of the morphism supermatrix. Even degrees live in PP/MM, odd degrees
// in PM/MP. Slot enumeration order (PP, MM, PM, MP, row-major inside each
// block) is fixed: representatives and goldens depend on it.
enum class Block { PP, MM, PM, MP };

struct Slot {
    Block block;
    int j; // target component index within its parity part
    int i; // source component index within its parity part
    int m; // monomial exponent forced by the grading

    bool operator==(const Slot&) const = default;
};

struct SlotBasis {
    int degree = 0;
    std::vector<Slot> slots;

    int size() const { return static_cast<int>(slots.size()); }
};

// Legal slots of Tw^q(alpha, beta) for univariate weight-1 objects. For even
// q a slot x^m sits in PP at m = qh/2 + (k'_j - k_i) and in MM at
// m = qh/2 + (l'_j - l_i); for odd q in PM at m = (q-1)h/2 + (l'_j - k_i) and
// MP at m = (q+1)h/2 + (k'_j - l_i). A slot exists iff m >= 0.
SlotBasis slot_basis(const GradedMF& alpha, const GradedMF& beta, int q);

// Element of Tw^q(source, target), coefficients aligned with slot_basis.
struct Morphism {
    GradedMF source;
    GradedMF target;
    int degree = 0;
    std::vector<Rational> coeffs;

    static Morphism zero(const GradedMF& a, const GradedMF& b, int q);
    static Morphism identity(const GradedMF& a);
    static Morphism basis_element(const GradedMF& a, const GradedMF& b, int q, int slot_index);
    static Morphism random(const GradedMF& a, const GradedMF& b, int q, Rng& rng);

    bool is_zero() const;
    Morphism operator+(const Morphism& o) const;
    Morphism operator-(const Morphism& o) const;
    Morphism scaled(const Rational& c) const;
};

// Supermatrix forms. Rows are target components (even part first), columns
// source components.
PolyMat morphism_matrix(const Morphism& phi);
PolyMat q_supermatrix(const GradedMF& m);

// Project a supermatrix onto the slot coefficients of degree q; throws if any
// entry falls outside the legal slots.
Morphism project_to_slots(const GradedMF& a, const GradedMF& b, int q, const PolyMat& mat);

// Differential m1(phi) = Q_b phi - (-1)^q phi Q_a, lands in degree q+1.
Morphism m1(const Morphism& phi);

// Composition m2(psi (x) phi) = (-1)^(|phi|(|psi|+1)) psi . phi; the sign is
// the unique one satisfying the unit axioms and the Leibniz rule together
// with this m1.
Morphism m2(const Morphism& psi, const Morphism& phi);

// Mapping cone on a closed degree-0 morphism. The shifted block keeps its
// sign; the embedded T_pp block is negated, which is what Maurer-Cartan for
// the cone forces once the shift swaps blocks without signs.
GradedMF cone(const Morphism& t);
// Assembly without the closedness check, for the MC <-> closedness tests.
GradedMF cone_unchecked(const Morphism& t);

} // namespace gmf
