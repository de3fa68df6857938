#pragma once

#include <string>
#include <vector>

#include "gradedmf/polymat.hpp"

namespace gmf {

// Direct sum of twists a{2k/h} (even part) and a{2l/h}[-1] (odd part).
// Tag order is significant: it indexes the rows and columns of the blocks.
struct GradedObject {
    std::vector<int> even_tags; // k_1..k_p
    std::vector<int> odd_tags;  // l_1..l_r
    WeightSystem ws;

    int even_count() const { return static_cast<int>(even_tags.size()); }
    int odd_count() const { return static_cast<int>(odd_tags.size()); }
    bool operator==(const GradedObject& o) const = default;
};

// Graded matrix factorization of f: q_mp * q_pm = f * Id and
// q_pm * q_mp = f * Id, with every block entry homogeneous of the degree
// forced by the tags. q_pm maps the even part to the odd part.
struct GradedMF {
    GradedObject obj;
    Poly f;
    PolyMat q_pm; // odd_count x even_count
    PolyMat q_mp; // even_count x odd_count

    static GradedMF zero(const Poly& f, const WeightSystem& ws);
    bool is_zero_object() const { return obj.even_count() == 0 && obj.odd_count() == 0; }
    bool is_univariate() const { return obj.ws.nvars() == 1; }

    bool operator==(const GradedMF& o) const = default;
};

// Names the indecomposable M(l,i) = (a{2i/h} + a{2(l+i)/h}[-1]; x^l, x^(h-l)).
// i is absolute: M(l,i+h) = M(l,i)[2] is a relation between labels, never a
// reduction applied to them.
struct IndecompLabel {
    int l = 0;
    int i = 0;
    auto operator<=>(const IndecompLabel&) const = default;
};

struct VerificationReport {
    bool square = false;             // even and odd ranks agree
    bool maurer_cartan = false;      // both residual blocks vanish
    bool homogeneous = false;        // every entry has its forced degree
    std::vector<std::string> failures;

    bool pass() const { return square && maurer_cartan && homogeneous; }
};

VerificationReport verify_mf(const GradedMF& m);

// M(l,i) over f = x^h; throws unless 1 <= l <= h-1.
GradedMF indecomposable(int l, int i, int h);
GradedMF indecomposable(const IndecompLabel& lab, int h);

enum class TrivialKind { Unit, FUnit };

// The contractible pairs (1, f) and (f, 1) over f = x^h; the zero object of
// the homotopy category.
GradedMF trivial_pair(TrivialKind kind, int k, int h);

// Translation {2/h}^t: all tags shifted by t, blocks untouched.
GradedMF translate(const GradedMF& m, int t);

// Shift [s]. For s = 1 the even part becomes the old odd part, the odd part
// the old even part with tags raised by h, and the blocks swap with no sign.
GradedMF shift(const GradedMF& m, int s);

// Serre functor {-2/h} o [1]; on labels (l,i) -> (h-l, l+i-1).
GradedMF serre(const GradedMF& m);

GradedMF direct_sum(const std::vector<GradedMF>& ms);
GradedMF direct_sum(const Poly& f, const WeightSystem& ws, const std::vector<GradedMF>& ms);

// Factorization of f + yz over two more variables with weights wt_y, wt_z,
// wt_y + wt_z = h. Tags extend by the unique integer solution keeping every
// block homogeneous; the result is checked before being returned.
GradedMF knorrer_double(const GradedMF& m, int wt_y, int wt_z);

// Label maps of the functors.
IndecompLabel translate_label(const IndecompLabel& lab, int t);
IndecompLabel shift_label(const IndecompLabel& lab, int s, int h);
IndecompLabel serre_label(const IndecompLabel& lab, int h);

// Exact phase (l + 2i)/h - 1/2 of one label.
Rational label_phase(const IndecompLabel& lab, int h);

} // namespace gmf
