// spex: build, search and certify spectral-radius-extremal nonregular graphs.
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spex/analysis.hpp"
#include "spex/canonical.hpp"
#include "spex/certificates.hpp"
#include "spex/config.hpp"
#include "spex/constructions.hpp"
#include "spex/errors.hpp"
#include "spex/graph_io.hpp"
#include "spex/oracle.hpp"
#include "spex/spectral.hpp"
#include "spex/switching.hpp"

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string jstr(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

spex::Config the_config(const std::string& config_path) {
    if (!config_path.empty()) return spex::load_config(config_path);
    return spex::config_from_env();
}

int cmd_construct(int delta, int n, const std::string& family, const std::string& out_path) {
    spex::Graph g;
    if (family == "extremal" || (family == "auto" && (delta == 3 || delta == 4))) {
        g = delta == 3 ? spex::extremal_delta3(n) : spex::extremal_delta4(n);
    } else if (family == "coalescence" || family == "auto") {
        g = spex::h_family(delta, n);
    } else if (family == "spine") {
        g = spex::g_family(spex::FamilySpec::from_order(delta, n));
    } else {
        std::fprintf(stderr, "unknown family %s\n", family.c_str());
        return 2;
    }
    if (out_path.empty())
        std::fputs(spex::to_edge_list(g).c_str(), stdout);
    else
        spex::write_graph_file(g, out_path);
    return 0;
}

int cmd_lambda(const std::string& in_path, const spex::Config& cfg) {
    spex::Graph g = spex::read_graph_file(in_path);
    auto pd = spex::perron_auto(g, cfg.tol, cfg.max_iters);
    auto prof = spex::degree_profile(g);
    std::printf("{\"schema\": 1, \"n\": %d, \"m\": %d, \"max_deg\": %d, \"lambda1\": %s, "
                "\"gap\": %s, \"residual\": %s, \"iterations\": %lld}\n",
                g.n(), g.m(), prof.max_deg, num(pd.lambda1).c_str(),
                num(prof.max_deg - pd.lambda1).c_str(), num(pd.residual).c_str(),
                pd.iterations);
    return 0;
}

int cmd_oracle(int delta, int n, const spex::Config& cfg, bool force) {
    auto rep = spex::enumerate_extremal(n, delta, cfg.threads, force);
    std::printf("{\"schema\": 1, \"n\": %d, \"delta\": %d, \"lambda_max\": %s, "
                "\"count_enumerated\": %lld, \"witnesses\": [",
                rep.n, rep.delta, num(rep.lambda_max).c_str(), rep.count_enumerated);
    for (size_t i = 0; i < rep.witnesses.size(); i++) {
        std::printf("%s{\"graph6\": %s, \"degrees\": [", i ? ", " : "",
                    jstr(spex::to_graph6(rep.witnesses[i])).c_str());
        for (size_t j = 0; j < rep.witness_profiles[i].size(); j++)
            std::printf("%s%d", j ? ", " : "", rep.witness_profiles[i][j]);
        auto pd = spex::perron(rep.witnesses[i], cfg.tol, cfg.max_iters);
        auto audit = spex::verify_structure_lemmas(rep.witnesses[i], pd, delta, cfg.tie_tol);
        std::printf("], \"lemma_audit_ok\": %s}", audit.all_ok() ? "true" : "false");
    }
    std::printf("]}\n");
    return 0;
}

int cmd_limits(int delta, const std::vector<int>& ns, const spex::Config& cfg, bool json) {
    auto verdict = spex::limit_report(delta, ns, cfg.limit_rel_band, 1e-13, cfg.threads);
    std::printf("delta,n,k,lambda1,gap,scaled,normalized,target,rel_err\n");
    for (size_t i = 0; i < verdict.rows.size(); i++) {
        const auto& r = verdict.rows[i];
        std::printf("%d,%d,%d,%s,%s,%s,%s,%s,%s\n", delta, r.n, r.k, num(r.lambda1).c_str(),
                    num(r.gap).c_str(), num(r.scaled_gap).c_str(), num(r.normalized).c_str(),
                    num(verdict.target).c_str(), num(verdict.rel_err[i]).c_str());
    }
    if (json) {
        std::printf("{\"schema\": 1, \"delta\": %d, \"target\": %s, \"last_within_band\": %s, "
                    "\"errors_decreasing\": %s, \"verdict\": %s}\n",
                    delta, num(verdict.target).c_str(),
                    verdict.last_within_band ? "true" : "false",
                    verdict.errors_decreasing ? "true" : "false",
                    verdict.verdict ? "true" : "false");
    }
    return verdict.verdict ? 0 : 1;
}

int cmd_counterexample(int delta, int k, int kmax, const spex::Config& cfg) {
    std::vector<int> ks;
    if (k > 0)
        ks.push_back(k);
    else
        for (int kk = 50; kk <= kmax; kk += 50) ks.push_back(kk);
    for (int kk : ks) {
        auto rep = spex::cioaba_check(delta, kk, 1e-13, cfg.threads);
        std::printf("{\"schema\": 1, \"delta\": %d, \"delta_min\": %d, \"n\": %d, \"k\": %d, "
                    "\"diameter\": %d, \"lambda1\": %s, \"gap\": %s, \"rhs\": %s, "
                    "\"violated\": %s, \"diam_bound_ok\": %s}\n",
                    rep.delta, rep.delta_min, rep.n, rep.k, rep.diam, num(rep.lambda1).c_str(),
                    num(rep.gap).c_str(), num(rep.rhs).c_str(), rep.violated ? "true" : "false",
                    rep.diam_bound_ok ? "true" : "false");
        if (rep.violated) return 0;
    }
    return 1;
}

int cmd_audit(const std::string& in_path, int delta, const spex::Config& cfg) {
    spex::Graph g = spex::read_graph_file(in_path);
    auto violations = spex::audit_forbidden(g, delta);
    auto pd = spex::perron_auto(g, cfg.tol, cfg.max_iters);
    auto audit = spex::verify_structure_lemmas(g, pd, delta, cfg.tie_tol);
    std::printf("{\"schema\": 1, \"n\": %d, \"delta\": %d, \"violations\": [", g.n(), delta);
    for (size_t i = 0; i < violations.size(); i++) {
        std::printf("%s{\"pattern\": %s, \"image\": [", i ? ", " : "",
                    jstr(violations[i].pattern).c_str());
        for (size_t j = 0; j < violations[i].embedding.map.size(); j++)
            std::printf("%s%d", j ? ", " : "", violations[i].embedding.map[j]);
        std::printf("]}");
    }
    std::printf("], \"lemma_audit\": {\"s_is_clique\": %s, \"s_size_ok\": %s, "
                "\"neighborhoods_nested\": %s, \"s_below_t\": %s, \"deletion_connected\": "
                "[%s, %s, %s]}}\n",
                audit.s_is_clique ? "true" : "false", audit.s_size_ok ? "true" : "false",
                audit.neighborhoods_nested ? "true" : "false",
                audit.s_below_t ? "true" : "false",
                audit.deletion_connected[0] ? "true" : "false",
                audit.deletion_connected[1] ? "true" : "false",
                audit.deletion_connected[2] ? "true" : "false");
    return violations.empty() && audit.all_ok() ? 0 : 1;
}

int cmd_polysuite() {
    auto reports = spex::polynomial_suite();
    bool all = true;
    std::printf("{\"schema\": 1, \"claims\": [");
    for (size_t i = 0; i < reports.size(); i++) {
        const auto& r = reports[i];
        all = all && r.claim_holds;
        std::printf("%s{\"polynomial\": %s, \"claim\": %s, \"value\": %s, \"holds\": %s}",
                    i ? ", " : "", jstr(r.polynomial).c_str(), jstr(r.claim).c_str(),
                    num(r.value).c_str(), r.claim_holds ? "true" : "false");
    }
    std::printf("], \"all_hold\": %s}\n", all ? "true" : "false");
    return all ? 0 : 1;
}

int cmd_check_switch(const std::string& in_path, const std::vector<int>& mv,
                     const spex::Config& cfg) {
    spex::Graph g = spex::read_graph_file(in_path);
    spex::SwitchMove m{mv[0], mv[1], mv[2], mv[3]};
    if (!spex::switch_valid(g, m)) {
        std::fprintf(stderr, "move violates the switching preconditions\n");
        return 2;
    }
    auto pd = spex::perron(g, cfg.tol, cfg.max_iters);
    bool proper = spex::is_proper_switch(pd, m, cfg.tie_tol);
    spex::Graph h = spex::local_switch(g, m);
    bool degrees_ok =
        spex::degree_profile(g).sorted_degrees == spex::degree_profile(h).sorted_degrees;
    bool conn = spex::is_connected(h);
    double after =
        conn ? spex::perron(h, cfg.tol, cfg.max_iters).lambda1
             : spex::perron_auto(h, cfg.tol, cfg.max_iters).lambda1;  // unreachable fallback
    std::printf("{\"schema\": 1, \"proper\": %s, \"lambda_before\": %s, \"lambda_after\": %s, "
                "\"degrees_preserved\": %s, \"connected_after\": %s}\n",
                proper ? "true" : "false", num(pd.lambda1).c_str(), num(after).c_str(),
                degrees_ok ? "true" : "false", conn ? "true" : "false");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral-radius extremal graph toolkit"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file");

    int delta = 3, n = 0, k = 0, kmax = 500;
    std::string in_path, out_path, family = "auto";
    std::vector<int> ns, move;
    bool force = false, json = false;
    int threads = 0;

    auto* c_construct = app.add_subcommand("construct", "emit a family member");
    c_construct->add_option("--delta", delta)->required();
    c_construct->add_option("--n", n)->required();
    c_construct->add_option("--family", family)->check(CLI::IsMember({"auto", "extremal", "coalescence", "spine"}));
    c_construct->add_option("--out", out_path);

    auto* c_lambda = app.add_subcommand("lambda", "Perron data of a graph file");
    c_lambda->add_option("--in", in_path)->required();

    auto* c_oracle = app.add_subcommand("oracle", "exhaustive extremal search");
    c_oracle->add_option("--delta", delta)->required();
    c_oracle->add_option("--n", n)->required();
    c_oracle->add_flag("--force", force, "raise the size cap");
    c_oracle->add_option("--threads", threads);

    auto* c_limits = app.add_subcommand("limits", "scaled-gap table and trend verdict");
    c_limits->add_option("--delta", delta)->required();
    c_limits->add_option("--ns", ns, "orders, e.g. --ns 201 401 801 1601")->required();
    c_limits->add_flag("--json", json, "append the verdict as JSON");
    c_limits->add_option("--threads", threads);

    auto* c_cex = app.add_subcommand("counterexample", "gap vs sqrt(D-d)/(nD) scan");
    c_cex->add_option("--delta", delta)->required();
    c_cex->add_option("--k", k, "single spine length (default: scan 50,100,...,kmax)");
    c_cex->add_option("--kmax", kmax);
    c_cex->add_option("--threads", threads);

    auto* c_audit = app.add_subcommand("audit", "forbidden patterns + lemma audit");
    c_audit->add_option("--in", in_path)->required();
    c_audit->add_option("--delta", delta)->required();

    app.add_subcommand("polysuite", "sign suite for the replacement polynomials");

    auto* c_switch = app.add_subcommand("check-switch", "evaluate one local switching");
    c_switch->add_option("--in", in_path)->required();
    c_switch->add_option("--move", move, "s t v u")->expected(4)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        spex::Config cfg = the_config(config_path);
        if (threads > 0) cfg.threads = threads;
        cfg.validate();
        if (c_construct->parsed()) return cmd_construct(delta, n, family, out_path);
        if (c_lambda->parsed()) return cmd_lambda(in_path, cfg);
        if (c_oracle->parsed()) return cmd_oracle(delta, n, cfg, force);
        if (c_limits->parsed()) return cmd_limits(delta, ns, cfg, json);
        if (c_cex->parsed()) return cmd_counterexample(delta, k, kmax, cfg);
        if (c_audit->parsed()) return cmd_audit(in_path, delta, cfg);
        if (app.get_subcommand("polysuite")->parsed()) return cmd_polysuite();
        if (c_switch->parsed()) return cmd_check_switch(in_path, move, cfg);
    } catch (const spex::input_error& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
