#include "klrw/serialize.hpp"
#include "klrw/subdivision.hpp"
#include "klrw/tableau.hpp"
#include "klrw/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace klrw;

namespace {

std::vector<long long> parse_ll_list(const std::string& text) {
    std::vector<long long> out;
    for (const std::string& tok : detail::split(text, ',')) {
        std::string t = detail::strip_ws(tok);
        if (t.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
        out.push_back(std::stoll(t));
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (long long v : parse_ll_list(text)) out.push_back(static_cast<int>(v));
    return out;
}

Charge make_charge(const std::string& rho_text, std::optional<std::string> kappa_text, int levels, int n) {
    std::vector<long long> rho = parse_ll_list(rho_text);
    if (static_cast<int>(rho.size()) != levels)
        throw std::invalid_argument("expected " + std::to_string(levels) + " rho entries");
    std::vector<long long> kappa;
    if (kappa_text) {
        kappa = parse_ll_list(*kappa_text);
    } else {
        for (int m = 0; m < levels; ++m) kappa.push_back(static_cast<long long>(m) * (4 * n + 8));
    }
    return Charge(rho, kappa);
}

int emit(const json& payload, const std::string& format, const std::string& text_form,
         const std::string& tikz_form = {}) {
    if (format == "json") {
        std::cout << payload.dump(2) << "\n";
    } else if (format == "tikz") {
        if (tikz_form.empty()) throw std::invalid_argument("tikz output is not available for this command");
        std::cout << tikz_form;
    } else {
        std::cout << text_form;
    }
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    int n_max = 8;
    std::string e_set = "2,3,4";
    int level = 1;
    std::string edges = "0";
    int workers = 0;
    unsigned long long seed = 20240101;
    int trials = 1000;
    int samples = 50;
    std::string report_path;
};

int run_verify(const VerifyArgs& a) {
    std::vector<int> e_set = parse_int_list(a.e_set);
    std::vector<int> edges = parse_int_list(a.edges);
    const int workers = worker_count(a.workers);
    std::vector<VerificationReport> reports;
    auto want = [&](const std::string& name) { return a.suite == "all" || a.suite == name; };

    if (want("equiv"))
        reports.push_back(verify_equivalence_batch(a.n_max, e_set, a.level, edges, workers));
    if (want("general-edge")) reports.push_back(verify_general_edge(a.n_max, e_set, workers));
    if (want("abacus")) reports.push_back(verify_abacus_invariants(a.n_max, e_set, workers));
    if (want("structural")) reports.push_back(verify_structural_laws(a.n_max, e_set, workers));
    if (want("idempotent")) reports.push_back(verify_idempotents(a.n_max, e_set, a.samples, a.seed, workers));
    if (want("degree")) reports.push_back(verify_degrees(std::min(a.n_max, 6), e_set, a.trials, a.seed, workers));
    if (want("sstd")) reports.push_back(verify_sstd(std::min(a.n_max, 5), e_set, workers));
    if (want("normalizer")) reports.push_back(verify_normalizer(a.n_max, e_set, workers));
    if (want("transport")) reports.push_back(verify_transport(std::min(a.n_max, 6), e_set, workers));
    if (reports.empty()) {
        std::cerr << "unknown suite '" << a.suite << "'\n";
        return 2;
    }

    json out = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        std::cout << r.suite << " [" << r.grid << "]: " << r.total << " cases, "
                  << (r.pass() ? "pass" : "FAIL") << "\n";
        for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i)
            std::cout << "  " << r.failures[i].descriptor << ": " << r.failures[i].detail << "\n";
        ok = ok && r.pass();
        out.push_back(to_json(r));
    }
    if (!a.report_path.empty()) {
        std::ofstream f(a.report_path);
        f << out.dump(2) << "\n";
        std::cout << "report written to " << a.report_path << "\n";
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"subdivision combinatorics of weighted KLRW algebras in affine type A"};
    app.require_subcommand(1);
    std::string format = "text";

    // ---- lamplus ----
    auto* lamplus = app.add_subcommand("lamplus", "compute lambda+ by both constructions");
    int lp_e = 3, lp_edge = 0;
    std::string lp_lam, lp_rho = "0";
    lamplus->add_option("--e", lp_e, "quiver parameter e (e+1 vertices)");
    lamplus->add_option("--edge", lp_edge, "subdivided edge");
    lamplus->add_option("--rho", lp_rho, "charge residues, comma separated");
    lamplus->add_option("--lam", lp_lam, "multipartition, components '|' separated")->required();
    lamplus->add_option("--format", format, "text|json");

    // ---- abacus ----
    auto* abacus = app.add_subcommand("abacus", "abacus display of a partition");
    int ab_e = 3;
    std::string ab_lam, ab_rho = "0";
    abacus->add_option("--e", ab_e, "quiver parameter e");
    abacus->add_option("--rho", ab_rho, "integer charge(s)");
    abacus->add_option("--lam", ab_lam, "multipartition")->required();
    long long ab_N_value = 0;
    auto* ab_N_opt = abacus->add_option("--truncation", ab_N_value, "truncation level N (default N0-2)");
    abacus->add_option("--format", format, "text|json");

    // ---- residues ----
    auto* residues = app.add_subcommand("residues", "residue-filled box configuration");
    int re_e = 3;
    std::string re_lam, re_rho = "0";
    residues->add_option("--e", re_e, "quiver parameter e");
    residues->add_option("--rho", re_rho, "charge residues");
    residues->add_option("--lam", re_lam, "multipartition")->required();
    residues->add_option("--format", format, "text|json");

    // ---- strips ----
    auto* strips = app.add_subcommand("strips", "maximal strip decomposition");
    int st_e = 3, st_edge = 0;
    std::string st_lam, st_rho = "0";
    strips->add_option("--e", st_e, "quiver parameter e");
    strips->add_option("--edge", st_edge, "edge residue");
    strips->add_option("--rho", st_rho, "charge residues");
    strips->add_option("--lam", st_lam, "multipartition")->required();
    strips->add_option("--format", format, "text|json");

    // ---- idem ----
    auto* idem = app.add_subcommand("idem", "idempotent loading of a multipartition");
    int id_e = 3;
    std::string id_lam, id_rho = "0", id_kappa;
    idem->add_option("--e", id_e, "quiver parameter e");
    idem->add_option("--rho", id_rho, "charge residues");
    idem->add_option("--kappa", id_kappa, "red string positions (default spread)");
    idem->add_option("--lam", id_lam, "multipartition")->required();
    idem->add_option("--format", format, "text|json|tikz");

    // ---- subdivide ----
    auto* subdiv = app.add_subcommand("subdivide", "subdivision image of an idempotent");
    int su_e = 3, su_edge = 0;
    std::string su_lam, su_rho = "0", su_kappa;
    subdiv->add_option("--e", su_e, "quiver parameter e");
    subdiv->add_option("--edge", su_edge, "subdivided edge");
    subdiv->add_option("--rho", su_rho, "charge residues");
    subdiv->add_option("--kappa", su_kappa, "red string positions");
    subdiv->add_option("--lam", su_lam, "multipartition")->required();
    subdiv->add_option("--format", format, "text|json|tikz");

    // ---- tableaux ----
    auto* tabs = app.add_subcommand("tableaux", "semistandard tableaux and graded dimension");
    int tb_e = 3;
    std::string tb_lam, tb_mu, tb_rho = "0", tb_kappa;
    tabs->add_option("--e", tb_e, "quiver parameter e");
    tabs->add_option("--rho", tb_rho, "charge residues");
    tabs->add_option("--kappa", tb_kappa, "red string positions");
    tabs->add_option("--lam", tb_lam, "shape multipartition")->required();
    tabs->add_option("--mu", tb_mu, "type multipartition (default: all types)");
    tabs->add_option("--format", format, "text|json");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "batch verification sweeps");
    VerifyArgs va;
    verify->add_option("--suite", va.suite,
                       "all|equiv|general-edge|abacus|structural|idempotent|degree|sstd|normalizer|transport");
    verify->add_option("--n-max", va.n_max, "largest partition size");
    verify->add_option("--e-set", va.e_set, "comma separated quiver parameters");
    verify->add_option("--level", va.level, "number of components for the equivalence sweep");
    verify->add_option("--edges", va.edges, "edges for the equivalence sweep");
    verify->add_option("--workers", va.workers, "worker threads (default: KLRW_WORKERS or hardware)");
    verify->add_option("--seed", va.seed, "seed for randomized suites");
    verify->add_option("--trials", va.trials, "random trials for the degree suite");
    verify->add_option("--samples", va.samples, "sampled 2-partition cases for the idempotent suite");
    verify->add_option("--report", va.report_path, "write a JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*lamplus) {
            Multipartition mp = parse_multipartition(lp_lam);
            Charge ch = make_charge(lp_rho, std::nullopt, mp.levels(), mp.size());
            LambdaPlusResult r = lambda_plus(mp, ch, lp_e + 1, lp_edge);
            json j{{"lambda_plus", to_json(r.plus)},
                   {"fill_rho", r.fill_rho},
                   {"charge_right", r.charge_right},
                   {"charge_left", r.charge_left},
                   {"agreement", r.agree}};
            std::ostringstream text;
            text << multipartition_str(r.plus) << "\n";
            text << "fill charge:";
            for (int v : r.fill_rho) text << " " << v;
            text << "\ncharge (right insertion):";
            for (long long v : r.charge_right) text << " " << v;
            text << "\ncharge (left insertion):";
            for (long long v : r.charge_left) text << " " << v;
            text << "\nagreement: " << (r.agree ? "yes" : "NO — " + r.mismatch) << "\n";
            int rc = emit(j, format, text.str());
            return r.agree ? rc : 1;
        }
        if (*abacus) {
            Multipartition mp = parse_multipartition(ab_lam);
            std::vector<long long> rho = parse_ll_list(ab_rho);
            if (static_cast<int>(rho.size()) != mp.levels())
                throw std::invalid_argument("rho entries must match components");
            json comps = json::array();
            std::ostringstream text;
            for (int m = 0; m < mp.levels(); ++m) {
                AbacusConfig a = ab_N_opt->count() ? to_abacus(mp.comps[m], rho[m], ab_e + 1, ab_N_value)
                                                   : to_abacus_default(mp.comps[m], rho[m], ab_e + 1);
                comps.push_back(to_json(a));
                if (mp.levels() > 1) text << "component " << (m + 1) << ":\n";
                text << ascii(a);
            }
            return emit(json{{"components", comps}}, format, text.str());
        }
        if (*residues) {
            Multipartition mp = parse_multipartition(re_lam);
            Charge ch = make_charge(re_rho, std::nullopt, mp.levels(), mp.size());
            ResidueDiagram d = residue_diagram(mp, ch, re_e + 1);
            json rows = json::array();
            for (const auto& comp : d.rows) rows.push_back(comp);
            return emit(json{{"residues", rows}}, format, residue_grid_str(mp, ch, re_e + 1));
        }
        if (*strips) {
            Multipartition mp = parse_multipartition(st_lam);
            Charge ch = make_charge(st_rho, std::nullopt, mp.levels(), mp.size());
            auto list = maximal_strips(mp, ch, st_e + 1, st_edge);
            json arr = json::array();
            for (const auto& s : list) arr.push_back(to_json(s));
            std::ostringstream text;
            text << strip_grid_str(mp, ch, st_e + 1, st_edge);
            for (std::size_t i = 0; i < list.size(); ++i)
                text << "strip " << static_cast<char>('A' + i) << ": type " << list[i].type
                     << (list[i].trivial ? " (trivial)" : "") << "\n";
            return emit(json{{"strips", arr}}, format, text.str());
        }
        if (*idem) {
            Multipartition mp = parse_multipartition(id_lam);
            Charge ch = make_charge(id_rho, id_kappa.empty() ? std::nullopt : std::optional(id_kappa), mp.levels(),
                                    mp.size());
            Loading l = idempotent_loading(mp, ch, Quiver(id_e));
            return emit(to_json(l), format, signature(l) + "\n", tikz(l));
        }
        if (*subdiv) {
            Multipartition mp = parse_multipartition(su_lam);
            Charge ch = make_charge(su_rho, su_kappa.empty() ? std::nullopt : std::optional(su_kappa), mp.levels(),
                                    mp.size());
            Loading l = idempotent_loading(mp, ch, Quiver(su_e));
            Loading sub = subdivide_idempotent(l, default_params(l, su_edge));
            VerificationCase vc = verify_idempotent_correspondence(mp, ch, Quiver(su_e), su_edge);
            json j{{"subdivided", to_json(sub)},
                   {"target", to_json(subdivided_idempotent_target(mp, ch, Quiver(su_e), su_edge))},
                   {"idempotent_correspondence", vc.pass}};
            std::ostringstream text;
            text << "S(1_lam):  " << signature(sub) << "\n";
            text << "1_{lam+}:  " << signature(subdivided_idempotent_target(mp, ch, Quiver(su_e), su_edge)) << "\n";
            text << "idempotent correspondence: " << (vc.pass ? "pass" : "FAIL " + vc.detail) << "\n";
            int rc = emit(j, format, text.str(), tikz(sub));
            return vc.pass ? rc : 1;
        }
        if (*tabs) {
            Multipartition mp = parse_multipartition(tb_lam);
            Charge ch = make_charge(tb_rho, tb_kappa.empty() ? std::nullopt : std::optional(tb_kappa), mp.levels(),
                                    mp.size());
            AffineData aff = affine_extend(ch, mp.size(), tb_e + 1);
            Rat eps = default_eps(aff);
            std::vector<Multipartition> types;
            if (!tb_mu.empty()) {
                types.push_back(parse_multipartition(tb_mu));
            } else {
                for (const auto& m : multipartitions_of(mp.size(), mp.levels())) types.push_back(m);
            }
            json arr = json::array();
            std::ostringstream text;
            long long total = 0;
            for (const auto& mu : types) {
                auto list = enumerate_sstd(mp, mu, ch, aff, eps);
                total += static_cast<long long>(list.size());
                for (const auto& t : list) {
                    long long deg = tableau_degree(t, ch, Quiver(tb_e));
                    json values = json::array();
                    for (const auto& v : t.value) values.push_back(to_json(v));
                    arr.push_back(json{{"type", to_json(mu)}, {"values", values}, {"degree", deg}});
                    text << "type " << multipartition_str(mu) << "  degree " << deg << "\n";
                }
            }
            Laurent dim = graded_cell_dim(mp, ch, Quiver(tb_e));
            text << "tableaux: " << total << "\n";
            text << "graded dimension: " << laurent_str(dim) << "\n";
            return emit(json{{"tableaux", arr}, {"graded_dimension", laurent_str(dim)}}, format, text.str());
        }
        if (*verify) return run_verify(va);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
