#include "gradedmf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "gradedmf/json_io.hpp"
#include "gradedmf/selftest.hpp"
#include "gradedmf/weights.hpp"

namespace gmf {

namespace {

constexpr int kSchema = 1;

GradedMF load_mf(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j = Json::parse(in); // throws with byte location on malformed input
    return mf_from_json(j);
}

void emit(std::ostream& out, Json j) {
    j["schema"] = kSchema;
    out << j.dump(2) << "\n";
}

struct Options {
    std::string file_a, file_b, out_path;
    int degree = 0;
    bool table = false;
    bool certificate = false;
    int window = 2;
    int range = 2;
    int h = 4;
    int wa = 1, wb = 1, wc = 1;
    std::string source = "both";
    std::uint64_t seed = 0;
    int max_h = 8;
    bool degree_set = false;
};

int cmd_verify(const Options& opt, std::ostream& out) {
    GradedMF m = load_mf(opt.file_a);
    VerificationReport rep = verify_mf(m);
    emit(out, verification_to_json(rep));
    return rep.pass() ? 0 : 1;
}

int cmd_hom(const Options& opt, std::ostream& out) {
    GradedMF a = load_mf(opt.file_a);
    GradedMF b = load_mf(opt.file_b);
    if (opt.table) {
        Json rows = Json::array();
        for (int m = -opt.window; m <= opt.window; ++m) {
            HomReport rep = hom(a, b, m);
            Json row;
            row["degree"] = m;
            row["dim"] = rep.dim;
            rows.push_back(row);
        }
        Json j;
        j["table"] = rows;
        emit(out, j);
    } else {
        emit(out, hom_report_to_json(hom(a, b, opt.degree)));
    }
    return 0;
}

int cmd_decompose(const Options& opt, std::ostream& out) {
    GradedMF m = load_mf(opt.file_a);
    Decomposition dec = decompose(m);
    emit(out, decomposition_to_json(dec, opt.certificate));
    return 0;
}

int cmd_ar(const Options& opt, std::ostream& out) {
    ARQuiver q = ar_quiver(opt.h, opt.window);
    Json j;
    j["h"] = q.h;
    j["window"] = q.i_window;
    j["vertices"] = labels_to_json(q.vertices);
    Json arrows = Json::array();
    for (const auto& a : q.arrows) {
        Json ja;
        ja["from"] = Json::array({a.from.l, a.from.i});
        ja["to"] = Json::array({a.to.l, a.to.i});
        ja["kind"] = a.right ? "diag(1,x)" : "diag(x,1)";
        arrows.push_back(ja);
    }
    j["arrows"] = arrows;
    j["failures"] = q.failures;
    emit(out, j);
    return q.failures.empty() ? 0 : 1;
}

int cmd_euler(const Options& opt, std::ostream& out) {
    Json j;
    bool ok = true;
    if (opt.source == "mf" || opt.source == "both") {
        EulerData d = euler_matrix(opt.h, EulerSource::MF);
        j["mf"]["a"] = imat_to_json(d.a);
        j["mf"]["gram"] = imat_to_json(d.gram);
    }
    if (opt.source == "quiver" || opt.source == "both") {
        EulerData d = euler_matrix(opt.h, EulerSource::Quiver);
        j["quiver"]["a"] = imat_to_json(d.a);
        j["quiver"]["gram"] = imat_to_json(d.gram);
    }
    j["cartan"] = imat_to_json(cartan_matrix_A(opt.h - 1));
    if (opt.source == "both") {
        EulerData mf = euler_matrix(opt.h, EulerSource::MF);
        EulerData qv = euler_matrix(opt.h, EulerSource::Quiver);
        ok = mf.a == qv.a && mf.gram == cartan_matrix_A(opt.h - 1);
        j["verdict"] = ok ? "match" : "mismatch";
    }
    emit(out, j);
    return ok ? 0 : 1;
}

int cmd_serre(const Options& opt, std::ostream& out) {
    SerreDualityReport rep = verify_serre_duality(opt.h, opt.range);
    emit(out, serre_report_to_json(rep));
    return rep.pass() ? 0 : 1;
}

int cmd_stability_hn(const Options& opt, std::ostream& out) {
    GradedMF m = load_mf(opt.file_a);
    HNFiltration hn = hn_filtration(m);
    Json j;
    j["filtration"] = hn_to_json(hn);
    emit(out, j);
    return 0;
}

int cmd_stability_check(const Options& opt, std::ostream& out) {
    BridgelandReport rep = check_bridgeland(opt.h, opt.window, 200, opt.seed);
    emit(out, bridgeland_to_json(rep));
    return rep.pass() ? 0 : 1;
}

int cmd_quiver_compare(const Options& opt, std::ostream& out) {
    EquivalenceReport rep = equivalence_report(opt.h);
    emit(out, equivalence_to_json(rep));
    return rep.pass() ? 0 : 1;
}

int cmd_weights_check(const Options& opt, std::ostream& out) {
    RegularityResult r = is_regular_weight_system(opt.wa, opt.wb, opt.wc, opt.h);
    Json j;
    j["regular"] = r.regular;
    if (r.regular) {
        Json chi = Json::array();
        for (const auto& c : r.chi) chi.push_back(c.get_str());
        j["chi"] = chi;
        Rational mu = milnor_number(opt.wa, opt.wb, opt.wc, opt.h);
        j["milnor"] = rational_str(mu);
        j["milnor_integral"] = is_integer(mu);
        j["chi_at_one"] = zpoly_eval(r.chi, BigInt(1)).get_str();
    } else {
        j["offending_root_order"] = r.offending_root_order;
    }
    emit(out, j);
    return 0;
}

int cmd_report(const Options& opt, std::ostream& out) {
    const int h = opt.h;
    Json j;

    Json hom_table = Json::array();
    for (int k = 1; k <= h - 1; ++k) {
        Json row = Json::array();
        for (int l = 1; l <= h - 1; ++l)
            row.push_back(hom(indecomposable(k, 0, h), indecomposable(l, 0, h), 0).dim);
        hom_table.push_back(row);
    }
    j["hom_table"] = hom_table;

    EulerData mf = euler_matrix(h, EulerSource::MF);
    EulerData qv = euler_matrix(h, EulerSource::Quiver);
    j["euler"]["mf"] = imat_to_json(mf.a);
    j["euler"]["quiver"] = imat_to_json(qv.a);
    j["euler"]["gram"] = imat_to_json(mf.gram);
    j["euler"]["cartan"] = imat_to_json(cartan_matrix_A(h - 1));

    SerreDualityReport serre_rep = verify_serre_duality(h, 2);
    j["serre"] = serre_report_to_json(serre_rep);

    j["counts"]["mf"] = count_indecomposables_mod2shift(h);
    j["counts"]["quiver"] = derived_indec_count_mod2(h);

    BridgelandReport stab = check_bridgeland(h, 2, 200, opt.seed);
    j["stability"] = bridgeland_to_json(stab);

    EquivalenceReport eq = equivalence_report(h);
    j["equivalence"] = equivalence_to_json(eq);

    bool ok = serre_rep.pass() && stab.pass() && eq.pass() && mf.a == qv.a &&
              mf.gram == cartan_matrix_A(h - 1) &&
              count_indecomposables_mod2shift(h) == derived_indec_count_mod2(h);
    j["pass"] = ok;
    j["schema"] = kSchema;

    std::ofstream file(opt.out_path);
    if (!file) throw std::invalid_argument("cannot write '" + opt.out_path + "'");
    file << j.dump(2) << "\n";
    out << (ok ? "pass" : "fail") << " (report written to " << opt.out_path << ")\n";
    return ok ? 0 : 1;
}

int cmd_selftest(const Options& opt, std::ostream& out) {
    std::vector<SuiteResult> results = run_all_suites(opt.max_h, opt.seed);
    bool ok = true;
    for (const auto& r : results) {
        out << (r.pass ? "pass" : "FAIL") << "  " << r.name << "  (" << r.checked
            << " checks)\n";
        for (const auto& f : r.failures) out << "      " << f << "\n";
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graded matrix factorization toolkit"};
    // Our --h option collides with the default -h help short name.
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    Options opt;

    auto* verify = app.add_subcommand("verify", "check a factorization file");
    verify->add_option("file", opt.file_a)->required();

    auto* hom_cmd = app.add_subcommand("hom", "graded hom space between two objects");
    hom_cmd->add_option("fileA", opt.file_a)->required();
    hom_cmd->add_option("fileB", opt.file_b)->required();
    auto* deg_opt = hom_cmd->add_option("--degree", opt.degree, "cohomological degree");
    hom_cmd->add_flag("--table", opt.table, "dimensions over a window of degrees");
    hom_cmd->add_option("--window", opt.window, "half-width of the degree window");
    deg_opt->excludes("--table");

    auto* dec = app.add_subcommand("decompose", "Krull-Schmidt decomposition");
    dec->add_option("file", opt.file_a)->required();
    dec->add_flag("--certificate", opt.certificate, "emit the base-change certificate");

    auto* ar = app.add_subcommand("ar", "Auslander-Reiten quiver");
    ar->add_option("--h", opt.h)->required();
    ar->add_option("--window", opt.window)->required();

    auto* euler = app.add_subcommand("euler", "Euler matrix and lattice data");
    euler->add_option("--h", opt.h)->required();
    euler->add_option("--source", opt.source)
        ->check(CLI::IsMember({"mf", "quiver", "both"}));

    auto* serre_cmd = app.add_subcommand("serre", "Serre duality grid");
    serre_cmd->add_option("--h", opt.h)->required();
    serre_cmd->add_option("--range", opt.range)->required();

    auto* stab = app.add_subcommand("stability", "stability condition");
    stab->require_subcommand(1);
    auto* hn = stab->add_subcommand("hn", "Harder-Narasimhan filtration");
    hn->add_option("file", opt.file_a)->required();
    auto* check = stab->add_subcommand("check", "Bridgeland axiom checks");
    check->add_option("--h", opt.h)->required();
    check->add_option("--window", opt.window)->required();
    check->add_option("--seed", opt.seed);

    auto* quiver = app.add_subcommand("quiver", "quiver representation side");
    quiver->require_subcommand(1);
    auto* compare = quiver->add_subcommand("compare", "equivalence evidence");
    compare->add_option("--h", opt.h)->required();

    auto* weights = app.add_subcommand("weights", "weight systems");
    weights->require_subcommand(1);
    auto* wcheck = weights->add_subcommand("check", "regularity and Milnor number");
    wcheck->add_option("--a", opt.wa)->required();
    wcheck->add_option("--b", opt.wb)->required();
    wcheck->add_option("--c", opt.wc)->required();
    wcheck->add_option("--h", opt.h)->required();

    auto* report = app.add_subcommand("report", "consolidated report for one h");
    report->add_option("--h", opt.h)->required();
    report->add_option("-o,--out", opt.out_path)->required();
    report->add_option("--seed", opt.seed);

    auto* selftest = app.add_subcommand("selftest", "full property suite");
    selftest->add_option("--max-h", opt.max_h);
    selftest->add_option("--seed", opt.seed);

    // Subcommands inherit the -h/--h clash; fix them all.
    auto fix_help = [](CLI::App* a, auto&& self) -> void {
        a->set_help_flag("--help", "print help");
        for (CLI::App* s : a->get_subcommands({})) self(s, self);
    };
    fix_help(&app, fix_help);

    std::vector<char*> argv;
    std::string prog = "gradedmf";
    argv.push_back(prog.data());
    std::vector<std::string> copy = args;
    for (auto& a : copy) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(opt, out);
        if (hom_cmd->parsed()) return cmd_hom(opt, out);
        if (dec->parsed()) return cmd_decompose(opt, out);
        if (ar->parsed()) return cmd_ar(opt, out);
        if (euler->parsed()) return cmd_euler(opt, out);
        if (serre_cmd->parsed()) return cmd_serre(opt, out);
        if (stab->parsed() && hn->parsed()) return cmd_stability_hn(opt, out);
        if (stab->parsed() && check->parsed()) return cmd_stability_check(opt, out);
        if (quiver->parsed() && compare->parsed()) return cmd_quiver_compare(opt, out);
        if (weights->parsed() && wcheck->parsed()) return cmd_weights_check(opt, out);
        if (report->parsed()) return cmd_report(opt, out);
        if (selftest->parsed()) return cmd_selftest(opt, out);
    } catch (const Json::parse_error& e) {
        err << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace gmf
