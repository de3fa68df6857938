#include "gradedmf/mf.hpp"

#include <sstream>
#include <stdexcept>

namespace gmf {

namespace {

Poly x_to_h(int h) { return Poly::x_power(ratio(1), h); }

WeightSystem univariate_ws(int h) { return WeightSystem{{1}, h}; }

Rational forced_degree_pm(const GradedObject& o, int j, int i) {
    // q_pm[j][i]: a{2k_i/h} -> a{2l_j/h}[-1] carries degree 2(l_j - k_i)/h.
    return ratio(2L * (o.odd_tags[j] - o.even_tags[i]), o.ws.index);
}

Rational forced_degree_mp(const GradedObject& o, int i, int j) {
    // q_mp[i][j]: a{2l_j/h}[-1] -> a{2k_i/h} carries degree 2 + 2(k_i - l_j)/h.
    return ratio(2) + ratio(2L * (o.even_tags[i] - o.odd_tags[j]), o.ws.index);
}

void check_entry(const Poly& e, const Rational& want, const char* block, int i, int j,
                 const WeightSystem& ws, VerificationReport& rep) {
    if (e.is_zero()) return;
    auto deg = weighted_degree(e, ws);
    if (!deg || *deg != want) {
        rep.homogeneous = false;
        std::ostringstream msg;
        msg << block << "[" << i << "][" << j << "] not homogeneous of degree "
            << rational_str(want);
        rep.failures.push_back(msg.str());
    }
}

} // namespace

GradedMF GradedMF::zero(const Poly& f, const WeightSystem& ws) {
    GradedMF m;
    m.obj = GradedObject{{}, {}, ws};
    m.f = f;
    m.q_pm = PolyMat(0, 0, f.nvars());
    m.q_mp = PolyMat(0, 0, f.nvars());
    return m;
}

VerificationReport verify_mf(const GradedMF& m) {
    VerificationReport rep;
    const GradedObject& o = m.obj;
    const int p = o.even_count(), r = o.odd_count();

    rep.square = (p == r);
    if (!rep.square) rep.failures.push_back("even and odd ranks differ");

    if (m.q_pm.rows() != r || m.q_pm.cols() != p || m.q_mp.rows() != p || m.q_mp.cols() != r) {
        rep.failures.push_back("block dimensions do not match tags");
        rep.maurer_cartan = false;
        rep.homogeneous = false;
        return rep;
    }

    PolyMat res_even = m.q_mp * m.q_pm - PolyMat::scalar(p, m.f);
    PolyMat res_odd = m.q_pm * m.q_mp - PolyMat::scalar(r, m.f);
    rep.maurer_cartan = res_even.is_zero() && res_odd.is_zero();
    if (!rep.maurer_cartan) rep.failures.push_back("Maurer-Cartan residual nonzero");

    rep.homogeneous = true;
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < p; ++i)
            check_entry(m.q_pm.at(j, i), forced_degree_pm(o, j, i), "q_pm", j, i, o.ws, rep);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < r; ++j)
            check_entry(m.q_mp.at(i, j), forced_degree_mp(o, i, j), "q_mp", i, j, o.ws, rep);
    return rep;
}

GradedMF indecomposable(int l, int i, int h) {
    if (h < 2) throw std::invalid_argument("indecomposable: need h >= 2");
    if (l < 1 || l > h - 1)
        throw std::invalid_argument("indecomposable: need 1 <= l <= h-1");
    GradedMF m;
    m.obj = GradedObject{{i}, {l + i}, univariate_ws(h)};
    m.f = x_to_h(h);
    m.q_pm = PolyMat(1, 1, 1);
    m.q_pm.at(0, 0) = Poly::x_power(ratio(1), l);
    m.q_mp = PolyMat(1, 1, 1);
    m.q_mp.at(0, 0) = Poly::x_power(ratio(1), h - l);
    return m;
}

GradedMF indecomposable(const IndecompLabel& lab, int h) {
    return indecomposable(lab.l, lab.i, h);
}

GradedMF trivial_pair(TrivialKind kind, int k, int h) {
    if (h < 2) throw std::invalid_argument("trivial_pair: need h >= 2");
    GradedMF m;
    m.f = x_to_h(h);
    m.q_pm = PolyMat(1, 1, 1);
    m.q_mp = PolyMat(1, 1, 1);
    if (kind == TrivialKind::Unit) {
        m.obj = GradedObject{{k}, {k}, univariate_ws(h)};
        m.q_pm.at(0, 0) = Poly::constant(ratio(1), 1);
        m.q_mp.at(0, 0) = m.f;
    } else {
        m.obj = GradedObject{{k}, {k + h}, univariate_ws(h)};
        m.q_pm.at(0, 0) = m.f;
        m.q_mp.at(0, 0) = Poly::constant(ratio(1), 1);
    }
    return m;
}

GradedMF translate(const GradedMF& m, int t) {
    GradedMF r = m;
    for (int& k : r.obj.even_tags) k += t;
    for (int& l : r.obj.odd_tags) l += t;
    return r;
}

GradedMF shift(const GradedMF& m, int s) {
    if (s == 0) return m;
    GradedMF r = m;
    if (s > 0) {
        for (int step = 0; step < s; ++step) {
            GradedObject o;
            o.ws = r.obj.ws;
            o.even_tags = r.obj.odd_tags;
            o.odd_tags = r.obj.even_tags;
            for (int& l : o.odd_tags) l += o.ws.index;
            std::swap(r.q_pm, r.q_mp);
            r.obj = std::move(o);
        }
    } else {
        for (int step = 0; step < -s; ++step) {
            GradedObject o;
            o.ws = r.obj.ws;
            o.even_tags = r.obj.odd_tags;
            for (int& k : o.even_tags) k -= o.ws.index;
            o.odd_tags = r.obj.even_tags;
            std::swap(r.q_pm, r.q_mp);
            r.obj = std::move(o);
        }
    }
    return r;
}

GradedMF serre(const GradedMF& m) {
    return translate(shift(m, 1), -1);
}

GradedMF direct_sum(const std::vector<GradedMF>& ms) {
    if (ms.empty())
        throw std::invalid_argument("direct_sum: empty input needs explicit f (use the overload)");
    return direct_sum(ms.front().f, ms.front().obj.ws, ms);
}

GradedMF direct_sum(const Poly& f, const WeightSystem& ws, const std::vector<GradedMF>& ms) {
    GradedMF r = GradedMF::zero(f, ws);
    int p = 0, rr = 0;
    for (const auto& m : ms) {
        if (m.f != f || m.obj.ws != ws)
            throw std::invalid_argument("direct_sum: mixed f or weight systems");
        p += m.obj.even_count();
        rr += m.obj.odd_count();
    }
    r.q_pm = PolyMat(rr, p, f.nvars());
    r.q_mp = PolyMat(p, rr, f.nvars());
    int po = 0, ro = 0;
    for (const auto& m : ms) {
        for (int k : m.obj.even_tags) r.obj.even_tags.push_back(k);
        for (int l : m.obj.odd_tags) r.obj.odd_tags.push_back(l);
        for (int j = 0; j < m.obj.odd_count(); ++j)
            for (int i = 0; i < m.obj.even_count(); ++i)
                r.q_pm.at(ro + j, po + i) = m.q_pm.at(j, i);
        for (int i = 0; i < m.obj.even_count(); ++i)
            for (int j = 0; j < m.obj.odd_count(); ++j)
                r.q_mp.at(po + i, ro + j) = m.q_mp.at(i, j);
        po += m.obj.even_count();
        ro += m.obj.odd_count();
    }
    return r;
}

GradedMF knorrer_double(const GradedMF& m, int wt_y, int wt_z) {
    const int h = m.obj.ws.index;
    if (wt_y <= 0 || wt_z <= 0 || wt_y + wt_z != h)
        throw std::invalid_argument("knorrer_double: need positive wt_y + wt_z = h");

    const int n = m.f.nvars();
    const int nn = n + 2;
    const int p = m.obj.even_count(), r = m.obj.odd_count();
    if (p != r) throw std::invalid_argument("knorrer_double: non-square input");

    GradedMF d;
    d.obj.ws = m.obj.ws;
    d.obj.ws.weights.push_back(wt_y);
    d.obj.ws.weights.push_back(wt_z);
    validate_weight_system(d.obj.ws);

    Poly y = Poly::variable(n, nn);
    Poly z = Poly::variable(n + 1, nn);
    d.f = m.f.extended(nn) + y * z;

    // New summands sit at the tags that keep the y and z blocks homogeneous:
    // the extra even tags are l_j - wt_y, the extra odd tags k_i + wt_z.
    d.obj.even_tags = m.obj.even_tags;
    for (int l : m.obj.odd_tags) d.obj.even_tags.push_back(l - wt_y);
    d.obj.odd_tags = m.obj.odd_tags;
    for (int k : m.obj.even_tags) d.obj.odd_tags.push_back(k + wt_z);

    PolyMat a = m.q_pm.extended(nn);
    PolyMat b = m.q_mp.extended(nn);
    PolyMat yI = PolyMat::scalar(r, y);
    PolyMat zI = PolyMat::scalar(p, z);
    d.q_pm = PolyMat::block2x2(a, -yI, zI, b);
    d.q_mp = PolyMat::block2x2(b, yI, -zI, a);

    VerificationReport rep = verify_mf(d);
    if (!rep.pass())
        throw std::logic_error("knorrer_double: construction failed verification");
    return d;
}

IndecompLabel translate_label(const IndecompLabel& lab, int t) {
    return IndecompLabel{lab.l, lab.i + t};
}

IndecompLabel shift_label(const IndecompLabel& lab, int s, int h) {
    IndecompLabel r = lab;
    for (int step = 0; step < s; ++step) r = IndecompLabel{h - r.l, r.l + r.i};
    for (int step = 0; step < -s; ++step) r = IndecompLabel{h - r.l, r.i - (h - r.l)};
    return r;
}

IndecompLabel serre_label(const IndecompLabel& lab, int h) {
    return translate_label(shift_label(lab, 1, h), -1);
}

Rational label_phase(const IndecompLabel& lab, int h) {
    return ratio(lab.l + 2L * lab.i, h) - ratio(1, 2);
}

} // namespace gmf
