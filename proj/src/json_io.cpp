#include "gradedmf/json_io.hpp"

#include <stdexcept>

namespace gmf {

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["c"] = rational_str(c);
        term["e"] = e;
        terms.push_back(term);
    }
    return terms;
}

Poly poly_from_json(const Json& j, int nvars) {
    if (!j.is_array()) throw std::invalid_argument("polynomial: expected an array of terms");
    Poly p(nvars);
    for (const auto& term : j) {
        Rational c = parse_rational(term.at("c").get<std::string>());
        Exp e = term.at("e").get<Exp>();
        if (static_cast<int>(e.size()) != nvars)
            throw std::invalid_argument("polynomial: exponent length mismatch");
        p = p + Poly::monomial(c, e);
    }
    return p;
}

namespace {

Json polymat_to_json(const PolyMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

PolyMat polymat_from_json(const Json& j, int rows, int cols, int nvars) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw std::invalid_argument("matrix: wrong row count");
    PolyMat m(rows, cols, nvars);
    for (int i = 0; i < rows; ++i) {
        const Json& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("matrix: wrong column count");
        for (int c = 0; c < cols; ++c) m.at(i, c) = poly_from_json(row[c], nvars);
    }
    return m;
}

} // namespace

Json mf_to_json(const GradedMF& m) {
    Json j;
    j["weights"]["a"] = m.obj.ws.weights;
    j["weights"]["h"] = m.obj.ws.index;
    j["f"] = poly_to_json(m.f);
    j["even"] = m.obj.even_tags;
    j["odd"] = m.obj.odd_tags;
    j["q_pm"] = polymat_to_json(m.q_pm);
    j["q_mp"] = polymat_to_json(m.q_mp);
    return j;
}

GradedMF mf_from_json(const Json& j) {
    GradedMF m;
    m.obj.ws.weights = j.at("weights").at("a").get<std::vector<int>>();
    m.obj.ws.index = j.at("weights").at("h").get<int>();
    validate_weight_system(m.obj.ws);
    const int nvars = m.obj.ws.nvars();
    m.f = poly_from_json(j.at("f"), nvars);
    m.obj.even_tags = j.at("even").get<std::vector<int>>();
    m.obj.odd_tags = j.at("odd").get<std::vector<int>>();
    const int p = m.obj.even_count(), r = m.obj.odd_count();
    m.q_pm = polymat_from_json(j.at("q_pm"), r, p, nvars);
    m.q_mp = polymat_from_json(j.at("q_mp"), p, r, nvars);
    return m;
}

Json verification_to_json(const VerificationReport& rep) {
    Json j;
    j["pass"] = rep.pass();
    j["square"] = rep.square;
    j["maurer_cartan"] = rep.maurer_cartan;
    j["homogeneous"] = rep.homogeneous;
    j["failures"] = rep.failures;
    return j;
}

Json hom_report_to_json(const HomReport& rep) {
    Json j;
    j["degree"] = rep.degree;
    j["dim"] = rep.dim;
    Json reps = Json::array();
    for (const auto& r : rep.representatives) {
        Json coeffs = Json::array();
        for (const auto& c : r.coeffs) coeffs.push_back(rational_str(c));
        reps.push_back(coeffs);
    }
    j["representatives"] = reps;
    return j;
}

Json labels_to_json(const std::vector<IndecompLabel>& labels) {
    Json arr = Json::array();
    for (const auto& lab : labels) arr.push_back(Json::array({lab.l, lab.i}));
    return arr;
}

Json decomposition_to_json(const Decomposition& dec, bool with_certificate) {
    Json j;
    j["labels"] = labels_to_json(dec.labels);
    j["stripped_trivial"] = dec.stripped_trivial;
    if (with_certificate) {
        j["certificate"]["row"] = polymat_to_json(dec.snf.cert.row);
        j["certificate"]["row_inv"] = polymat_to_json(dec.snf.cert.row_inv);
        j["certificate"]["col"] = polymat_to_json(dec.snf.cert.col);
        j["certificate"]["col_inv"] = polymat_to_json(dec.snf.cert.col_inv);
        j["certificate"]["even"] = dec.snf.cert.even_tags;
        j["certificate"]["odd"] = dec.snf.cert.odd_tags;
        j["certificate"]["degrees"] = dec.snf.degrees;
    }
    return j;
}

Json hn_to_json(const HNFiltration& hn) {
    Json arr = Json::array();
    for (const auto& step : hn.steps) {
        Json s;
        s["phase"] = rational_str(step.phase_value);
        s["labels"] = labels_to_json(step.labels);
        arr.push_back(s);
    }
    return arr;
}

Json bridgeland_to_json(const BridgelandReport& rep) {
    Json j;
    j["pass"] = rep.pass();
    j["polar_form"] = rep.polar_form;
    j["shift_phase"] = rep.shift_phase;
    j["hom_vanishing"] = rep.hom_vanishing;
    j["hn_exists"] = rep.hn_exists;
    j["pairs_checked"] = rep.pairs_checked;
    j["corpus_size"] = rep.corpus_size;
    j["failures"] = rep.failures;
    return j;
}

Json serre_report_to_json(const SerreDualityReport& rep) {
    Json j;
    j["pass"] = rep.pass();
    j["dims_match"] = rep.dims_match;
    j["pairings_nondegenerate"] = rep.pairings_nondegenerate;
    j["pairs_checked"] = rep.pairs_checked;
    j["failures"] = rep.failures;
    return j;
}

Json imat_to_json(const IMat& m) {
    Json rows = Json::array();
    for (const auto& row : m) rows.push_back(row);
    return rows;
}

Json equivalence_to_json(const EquivalenceReport& rep) {
    Json j;
    j["pass"] = rep.pass();
    j["hom_tables_match"] = rep.hom_tables_match;
    j["no_higher_exts"] = rep.no_higher_exts;
    j["counts_match"] = rep.counts_match;
    j["euler_match"] = rep.euler_match;
    j["mf_table"] = imat_to_json(rep.mf_table);
    j["quiver_table"] = imat_to_json(rep.quiver_table);
    j["mf_count"] = rep.mf_count;
    j["quiver_count"] = rep.quiver_count;
    j["failures"] = rep.failures;
    return j;
}

} // namespace gmf
