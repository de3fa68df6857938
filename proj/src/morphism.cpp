#include "gradedmf/morphism.hpp"

#include <stdexcept>

namespace gmf {

namespace {

void require_univariate_pair(const GradedMF& a, const GradedMF& b) {
    if (!a.is_univariate() || !b.is_univariate())
        throw std::invalid_argument("morphism space: univariate objects only");
    if (a.obj.ws != b.obj.ws || a.f != b.f)
        throw std::invalid_argument("morphism space: mixed weight systems or potentials");
    if (a.obj.ws.weights[0] != 1)
        throw std::invalid_argument("morphism space: weight-1 variable required");
}

void require_same_space(const Morphism& x, const Morphism& y) {
    if (x.source != y.source || x.target != y.target || x.degree != y.degree)
        throw std::invalid_argument("morphism: operands live in different spaces");
}

} // namespace

SlotBasis slot_basis(const GradedMF& alpha, const GradedMF& beta, int q) {
    require_univariate_pair(alpha, beta);
    const int h = alpha.obj.ws.index;
    const auto& ak = alpha.obj.even_tags;
    const auto& al = alpha.obj.odd_tags;
    const auto& bk = beta.obj.even_tags;
    const auto& bl = beta.obj.odd_tags;

    SlotBasis basis;
    basis.degree = q;
    auto add = [&](Block blk, int j, int i, long m) {
        if (m >= 0) basis.slots.push_back(Slot{blk, j, i, static_cast<int>(m)});
    };

    if (q % 2 == 0) {
        const long base = static_cast<long>(q) * h / 2;
        for (size_t j = 0; j < bk.size(); ++j)
            for (size_t i = 0; i < ak.size(); ++i)
                add(Block::PP, static_cast<int>(j), static_cast<int>(i), base + bk[j] - ak[i]);
        for (size_t j = 0; j < bl.size(); ++j)
            for (size_t i = 0; i < al.size(); ++i)
                add(Block::MM, static_cast<int>(j), static_cast<int>(i), base + bl[j] - al[i]);
    } else {
        const long base_pm = static_cast<long>(q - 1) * h / 2;
        const long base_mp = static_cast<long>(q + 1) * h / 2;
        for (size_t j = 0; j < bl.size(); ++j)
            for (size_t i = 0; i < ak.size(); ++i)
                add(Block::PM, static_cast<int>(j), static_cast<int>(i), base_pm + bl[j] - ak[i]);
        for (size_t j = 0; j < bk.size(); ++j)
            for (size_t i = 0; i < al.size(); ++i)
                add(Block::MP, static_cast<int>(j), static_cast<int>(i), base_mp + bk[j] - al[i]);
    }
    return basis;
}

Morphism Morphism::zero(const GradedMF& a, const GradedMF& b, int q) {
    Morphism phi;
    phi.source = a;
    phi.target = b;
    phi.degree = q;
    phi.coeffs.assign(slot_basis(a, b, q).slots.size(), Rational(0));
    return phi;
}

Morphism Morphism::identity(const GradedMF& a) {
    Morphism phi = zero(a, a, 0);
    SlotBasis basis = slot_basis(a, a, 0);
    for (int s = 0; s < basis.size(); ++s) {
        const Slot& sl = basis.slots[s];
        if (sl.i == sl.j && sl.m == 0 && (sl.block == Block::PP || sl.block == Block::MM))
            phi.coeffs[s] = 1;
    }
    return phi;
}

Morphism Morphism::basis_element(const GradedMF& a, const GradedMF& b, int q, int slot_index) {
    Morphism phi = zero(a, b, q);
    phi.coeffs.at(slot_index) = 1;
    return phi;
}

Morphism Morphism::random(const GradedMF& a, const GradedMF& b, int q, Rng& rng) {
    Morphism phi = zero(a, b, q);
    for (auto& c : phi.coeffs) c = rng.small_rational();
    return phi;
}

bool Morphism::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

Morphism Morphism::operator+(const Morphism& o) const {
    require_same_space(*this, o);
    Morphism r = *this;
    for (size_t s = 0; s < coeffs.size(); ++s) r.coeffs[s] += o.coeffs[s];
    return r;
}

Morphism Morphism::operator-(const Morphism& o) const {
    require_same_space(*this, o);
    Morphism r = *this;
    for (size_t s = 0; s < coeffs.size(); ++s) r.coeffs[s] -= o.coeffs[s];
    return r;
}

Morphism Morphism::scaled(const Rational& c) const {
    Morphism r = *this;
    for (auto& v : r.coeffs) v *= c;
    return r;
}

namespace {

// Supermatrix position of a slot: even components first, then odd.
std::pair<int, int> slot_position(const Slot& sl, const GradedMF& a, const GradedMF& b) {
    const int pa = a.obj.even_count();
    const int pb = b.obj.even_count();
    switch (sl.block) {
        case Block::PP: return {sl.j, sl.i};
        case Block::MM: return {pb + sl.j, pa + sl.i};
        case Block::PM: return {pb + sl.j, sl.i};
        case Block::MP: return {sl.j, pa + sl.i};
    }
    throw std::logic_error("slot_position: bad block");
}

} // namespace

PolyMat morphism_matrix(const Morphism& phi) {
    const GradedMF& a = phi.source;
    const GradedMF& b = phi.target;
    SlotBasis basis = slot_basis(a, b, phi.degree);
    PolyMat mat(b.obj.even_count() + b.obj.odd_count(),
                a.obj.even_count() + a.obj.odd_count(), 1);
    for (int s = 0; s < basis.size(); ++s) {
        if (phi.coeffs[s] == 0) continue;
        auto [row, col] = slot_position(basis.slots[s], a, b);
        mat.at(row, col) = mat.at(row, col) + Poly::x_power(phi.coeffs[s], basis.slots[s].m);
    }
    return mat;
}

PolyMat q_supermatrix(const GradedMF& m) {
    const int p = m.obj.even_count(), r = m.obj.odd_count();
    PolyMat q(p + r, p + r, m.f.nvars());
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < p; ++i) q.at(p + j, i) = m.q_pm.at(j, i);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < r; ++j) q.at(i, p + j) = m.q_mp.at(i, j);
    return q;
}

Morphism project_to_slots(const GradedMF& a, const GradedMF& b, int q, const PolyMat& mat) {
    Morphism phi = Morphism::zero(a, b, q);
    SlotBasis basis = slot_basis(a, b, q);
    PolyMat rest = mat;
    for (int s = 0; s < basis.size(); ++s) {
        auto [row, col] = slot_position(basis.slots[s], a, b);
        Rational c = rest.at(row, col).coeff1(basis.slots[s].m);
        if (c != 0) {
            phi.coeffs[s] = c;
            rest.at(row, col) = rest.at(row, col) - Poly::x_power(c, basis.slots[s].m);
        }
    }
    if (!rest.is_zero())
        throw std::logic_error("project_to_slots: matrix has entries outside the legal slots");
    return phi;
}

Morphism m1(const Morphism& phi) {
    const GradedMF& a = phi.source;
    const GradedMF& b = phi.target;
    PolyMat lhs = q_supermatrix(b) * morphism_matrix(phi);
    PolyMat rhs = morphism_matrix(phi) * q_supermatrix(a);
    PolyMat res = (phi.degree % 2 == 0) ? lhs - rhs : lhs + rhs;
    return project_to_slots(a, b, phi.degree + 1, res);
}

Morphism m2(const Morphism& psi, const Morphism& phi) {
    if (phi.target != psi.source)
        throw std::invalid_argument("m2: morphisms are not composable");
    const int sign_exp = (phi.degree & 1) * ((psi.degree & 1) + 1);
    PolyMat prod = morphism_matrix(psi) * morphism_matrix(phi);
    if (sign_exp & 1) prod = -prod;
    return project_to_slots(phi.source, psi.target, phi.degree + psi.degree, prod);
}

GradedMF cone_unchecked(const Morphism& t) {
    const GradedMF& a = t.source;
    const GradedMF& b = t.target;
    GradedMF sa = shift(a, 1);

    // T splits into its even diagonal blocks.
    PolyMat tm = morphism_matrix(t);
    const int pa = a.obj.even_count(), ra = a.obj.odd_count();
    const int pb = b.obj.even_count(), rb = b.obj.odd_count();
    PolyMat t_pp(pb, pa, 1), t_mm(rb, ra, 1);
    for (int j = 0; j < pb; ++j)
        for (int i = 0; i < pa; ++i) t_pp.at(j, i) = tm.at(j, i);
    for (int j = 0; j < rb; ++j)
        for (int i = 0; i < ra; ++i) t_mm.at(j, i) = tm.at(pb + j, pa + i);

    GradedMF c;
    c.obj.ws = a.obj.ws;
    c.f = a.f;
    c.obj.even_tags = sa.obj.even_tags;
    c.obj.even_tags.insert(c.obj.even_tags.end(), b.obj.even_tags.begin(), b.obj.even_tags.end());
    c.obj.odd_tags = sa.obj.odd_tags;
    c.obj.odd_tags.insert(c.obj.odd_tags.end(), b.obj.odd_tags.begin(), b.obj.odd_tags.end());

    PolyMat zero_top(sa.q_pm.rows(), b.q_pm.cols(), 1);
    PolyMat zero_bot(sa.q_mp.rows(), b.q_mp.cols(), 1);
    c.q_pm = PolyMat::block2x2(sa.q_pm, zero_top, t_mm, b.q_pm);
    c.q_mp = PolyMat::block2x2(sa.q_mp, zero_bot, -t_pp, b.q_mp);
    return c;
}

GradedMF cone(const Morphism& t) {
    if (t.degree != 0) throw std::invalid_argument("cone: degree-0 morphism required");
    if (!m1(t).is_zero()) throw std::invalid_argument("cone: morphism is not closed");
    GradedMF c = cone_unchecked(t);
    if (!verify_mf(c).pass())
        throw std::logic_error("cone: assembled object failed verification");
    return c;
}

} // namespace gmf
