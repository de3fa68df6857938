#pragma once

#include <string>
#include <vector>

#include "gradedmf/hom.hpp"
#include "gradedmf/morphism.hpp"
#include "gradedmf/rng.hpp"

namespace gmf {

// Invertible graded base change recorded during elimination:
//   diag = row * q_pm * col,  q_mp transported by col_inv * q_mp * row_inv.
// Tag lists travel with the row/column permutations.
struct GradedBaseChange {
    PolyMat row, row_inv; // odd-side square factors
    PolyMat col, col_inv; // even-side square factors
    std::vector<int> even_tags, odd_tags; // tags in the diagonal basis
};

struct SnfResult {
    PolyMat diag_pm; // diag(x^(d_1), ..., x^(d_n)) in pivot order
    PolyMat diag_mp; // diag(x^(h-d_t)), checked against the transported q_mp
    GradedBaseChange cert;
    std::vector<int> degrees; // d_t per diagonal entry
};

// Graded Smith normal form of q_pm. Homogeneity keeps every intermediate
// entry a monomial, so the minimal-degree pivot always divides its row and
// column. Pivot rule: minimal degree, then lexicographically smallest
// (row, col).
SnfResult graded_snf(const GradedMF& m);

struct Decomposition {
    std::vector<IndecompLabel> labels; // sorted multiset
    int stripped_trivial = 0;
    SnfResult snf;
};

// Krull-Schmidt decomposition over f = x^h: diagonal degree 0 or h is a
// contractible pair (stripped), anything else the summand M(d, even_tag).
Decomposition decompose(const GradedMF& m);

// Label-multiset equality; complete for univariate f.
bool is_isomorphic(const GradedMF& a, const GradedMF& b);

// Orbit count of labels {(l,i)} under [2] : i -> i+h, by enumeration over a
// double fundamental domain rather than the closed formula.
long count_indecomposables_mod2shift(int h);

struct ArArrow {
    IndecompLabel from, to;
    Morphism map;
    bool right; // diag(1,x) raising l, else diag(x,1)
};

struct ARQuiver {
    int h = 0;
    int i_window = 0;
    std::vector<IndecompLabel> vertices;
    std::vector<ArArrow> arrows;
    std::vector<std::string> failures; // arrows that failed closedness/class checks
};

ARQuiver ar_quiver(int h, int i_window);

// Conjugates by a random invertible graded base change built from seeded
// elementary transvections, scalings and summand swaps; the result passes
// verification by construction.
GradedMF random_base_change(const GradedMF& m, Rng& rng, int ops);

} // namespace gmf
