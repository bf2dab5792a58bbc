// Command line front end: generation, transformation, and verification with
// JSON output.  Exit codes: 0 success/pass, 1 verification fail, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "kschur/bender_knuth.hpp"
#include "kschur/identities.hpp"
#include "kschur/json_io.hpp"
#include "kschur/suite.hpp"

using namespace kschur;

namespace {

StrictPartition parse_partition_flag(const std::string& flag, const std::string& value) {
    try {
        return parse_strict_partition(value);
    } catch (const std::exception& e) {
        throw CLI::ValidationError(flag, e.what());
    }
}

std::string pretty_poly(const MultiPoly& p) { return p.str(); }

int run(int argc, char** argv) {
    CLI::App app{"exact computations with K-theoretic Schur P/Q functions and their duals"};
    app.require_subcommand(1);
    std::string seed_unused;
    app.add_option("--seed", seed_unused, "reserved; no randomized commands");

    // ---- genfun ------------------------------------------------------------
    auto* cmd_genfun = app.add_subcommand("genfun", "generating polynomial of a family");
    std::string gf_family = "jq", gf_outer, gf_inner = "-", gf_format = "json";
    int gf_vars = 1;
    cmd_genfun->add_option("--family", gf_family, "gp|gq|jp|jq|GP|GQ|GPss|GQss")->required();
    cmd_genfun->add_option("--outer", gf_outer, "outer partition, e.g. 4,2,1")->required();
    cmd_genfun->add_option("--inner", gf_inner, "inner partition, '-' for empty");
    cmd_genfun->add_option("--vars", gf_vars, "number of variables")->check(CLI::PositiveNumber);
    cmd_genfun->add_option("--format", gf_format, "json|pretty")->check(CLI::IsMember({"json", "pretty"}));

    // ---- enumerate ----------------------------------------------------------
    auto* cmd_enum = app.add_subcommand("enumerate", "list tableaux of a family");
    std::string en_family = "btq", en_outer, en_inner = "-";
    int en_max_value = 1;
    bool en_count_only = false;
    cmd_enum->add_option("--family", en_family, "svtp|svtq|ppp|ppq|btp|btq")->required();
    cmd_enum->add_option("--outer", en_outer)->required();
    cmd_enum->add_option("--inner", en_inner);
    cmd_enum->add_option("--max-value", en_max_value)->check(CLI::PositiveNumber);
    cmd_enum->add_flag("--count-only", en_count_only);

    // ---- bk ----------------------------------------------------------------
    auto* cmd_bk = app.add_subcommand("bk", "Bender-Knuth operations on a bar tableau");
    std::string bk_op, bk_in;
    int bk_k = 1;
    bool bk_trace = false;
    cmd_bk->add_option("op", bk_op, "swap|unswap|reverse-weight|tau")->required();
    cmd_bk->add_option("--in", bk_in, "tableau JSON file, or '-' for stdin")->required();
    cmd_bk->add_option("--k", bk_k)->check(CLI::PositiveNumber);
    cmd_bk->add_flag("--trace", bk_trace);

    // ---- verify ------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "identity verification");
    auto* cmd_cauchy = cmd_verify->add_subcommand("cauchy", "Cauchy identity residual");
    std::string vc_kind = "qp", vc_mu = "-", vc_nu = "-";
    int vc_nx = 1, vc_ny = 1, vc_deg = 4;
    cmd_cauchy->add_option("--kind", vc_kind, "qp|pq|skewp|skewq")
        ->check(CLI::IsMember({"qp", "pq", "skewp", "skewq"}));
    cmd_cauchy->add_option("--nx", vc_nx)->check(CLI::PositiveNumber);
    cmd_cauchy->add_option("--ny", vc_ny)->check(CLI::PositiveNumber);
    cmd_cauchy->add_option("--max-deg", vc_deg)->check(CLI::NonNegativeNumber);
    cmd_cauchy->add_option("--mu", vc_mu);
    cmd_cauchy->add_option("--nu", vc_nu);

    auto* cmd_suite = cmd_verify->add_subcommand("suite", "full verification battery");
    int vs_max_size = 0, vs_vars = 0;
    int vs_criterion = 0;
    cmd_suite->add_option("--max-size", vs_max_size, "cap all sweep sizes");
    cmd_suite->add_option("--vars", vs_vars, "cap variable counts");
    cmd_suite->add_option("--criterion", vs_criterion, "run a single criterion 1..11");

    // ---- pieri -------------------------------------------------------------
    auto* cmd_pieri = app.add_subcommand("pieri", "ribbon Pieri coefficients");
    std::string pi_kind = "bhat", pi_lambda, pi_nu;
    int pi_n = -1;
    bool pi_oracle = false;
    cmd_pieri->add_option("--kind", pi_kind, "bhat|chat")->check(CLI::IsMember({"bhat", "chat"}));
    cmd_pieri->add_option("--lambda", pi_lambda)->required();
    cmd_pieri->add_option("--nu", pi_nu)->required();
    cmd_pieri->add_option("--n", pi_n);
    cmd_pieri->add_flag("--oracle", pi_oracle);

    // ---- coeffs ------------------------------------------------------------
    auto* cmd_coeffs = app.add_subcommand("coeffs", "coefficient tables");
    std::string co_kind, co_outer = "-", co_inner = "-", co_lambda = "-", co_mu = "-";
    int co_cap = -1;
    cmd_coeffs->add_option("--kind", co_kind, "y|z|ahat|bhat|chat|a|b")->required();
    cmd_coeffs->add_option("--outer", co_outer, "Lambda for y|z");
    cmd_coeffs->add_option("--inner", co_inner, "Psi for y|z");
    cmd_coeffs->add_option("--lambda", co_lambda);
    cmd_coeffs->add_option("--mu", co_mu);
    cmd_coeffs->add_option("--cap", co_cap);

    // ---- ops ---------------------------------------------------------------
    auto* cmd_ops = app.add_subcommand("ops", "operator relations");
    std::string op_kind = "inverse";
    int op_size_cap = 5, op_deg_cap = 3;
    cmd_ops->add_option("--kind", op_kind, "inverse|commute")->check(CLI::IsMember({"inverse", "commute"}));
    cmd_ops->add_option("--size-cap", op_size_cap)->check(CLI::PositiveNumber);
    cmd_ops->add_option("--deg-cap", op_deg_cap)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cmd_genfun->parsed()) {
        Family fam = parse_family(gf_family);
        StrictPartition outer = parse_partition_flag("--outer", gf_outer);
        StrictPartition inner = parse_partition_flag("--inner", gf_inner);
        MultiPoly p = genfun(fam, outer, inner, gf_vars);
        if (gf_format == "json") std::cout << poly_to_json(p).dump() << "\n";
        else std::cout << pretty_poly(p) << "\n";
        return 0;
    }

    if (cmd_enum->parsed()) {
        StrictPartition outer = parse_partition_flag("--outer", en_outer);
        StrictPartition inner = parse_partition_flag("--inner", en_inner);
        SkewShape shape = shifted_diagram(outer, inner);
        DiagonalFamily fam = en_family == "svtp" || en_family == "ppp" || en_family == "btp"
                                 ? DiagonalFamily::P
                                 : DiagonalFamily::Q;
        if (en_family == "svtp" || en_family == "svtq") {
            auto all = all_svt(shape, fam, en_max_value);
            if (en_count_only) std::cout << all.size() << "\n";
            else for (const auto& t : all) std::cout << svt_to_json(t).dump() << "\n";
        } else if (en_family == "ppp" || en_family == "ppq") {
            auto all = all_pp(shape, fam, en_max_value);
            if (en_count_only) std::cout << all.size() << "\n";
            else for (const auto& t : all) std::cout << pp_to_json(t).dump() << "\n";
        } else if (en_family == "btp" || en_family == "btq") {
            auto all = all_bt(shape, fam, en_max_value);
            if (en_count_only) std::cout << all.size() << "\n";
            else for (const auto& t : all) std::cout << bt_to_json(t).dump() << "\n";
        } else {
            throw CLI::ValidationError("--family", "unknown family " + en_family);
        }
        return 0;
    }

    if (cmd_bk->parsed()) {
        Json input;
        if (bk_in == "-") {
            std::cin >> input;
        } else {
            std::ifstream in(bk_in);
            if (!in) throw CLI::ValidationError("--in", "cannot open " + bk_in);
            in >> input;
        }
        BarTableau t = bt_from_json(input);
        std::vector<BarTableau> trace;
        BarTableau out;
        if (bk_op == "swap") out = swap_all(t, bk_trace ? &trace : nullptr);
        else if (bk_op == "unswap") out = unswap_all(t, bk_trace ? &trace : nullptr);
        else if (bk_op == "reverse-weight") out = reverse_weight(t);
        else if (bk_op == "tau") out = tau(t, bk_k);
        else throw CLI::ValidationError("op", "unknown operation " + bk_op);
        if (bk_trace) {
            Json steps = Json::array();
            for (const auto& step : trace) steps.push_back(bt_to_json(step));
            std::cout << Json{{"result", bt_to_json(out)}, {"trace", steps}}.dump() << "\n";
        } else {
            std::cout << bt_to_json(out).dump() << "\n";
        }
        return 0;
    }

    if (cmd_cauchy->parsed()) {
        CauchyKind kind = vc_kind == "qp" ? CauchyKind::QP
                        : vc_kind == "pq" ? CauchyKind::PQ
                        : vc_kind == "skewp" ? CauchyKind::skewP
                                             : CauchyKind::skewQ;
        StrictPartition mu = parse_partition_flag("--mu", vc_mu);
        StrictPartition nu = parse_partition_flag("--nu", vc_nu);
        Residual r = verify_cauchy(kind, vc_nx, vc_ny, vc_deg, mu, nu);
        Json params{{"kind", vc_kind}, {"nx", vc_nx},          {"ny", vc_ny},
                    {"max_deg", vc_deg}, {"mu", partition_str(mu)}, {"nu", partition_str(nu)}};
        std::cout << residual_report("cauchy", params, r).dump() << "\n";
        return r.passed() ? 0 : 1;
    }

    if (cmd_suite->parsed()) {
        SuiteParams params;
        if (vs_max_size > 0) params.cap_sizes(vs_max_size);
        if (vs_vars > 0) params.cap_vars(vs_vars);
        std::vector<CriterionResult> results;
        if (vs_criterion > 0) results.push_back(run_criterion(vs_criterion, params));
        else results = run_suite(params);
        bool all_pass = true;
        for (const auto& r : results) {
            const char* status = r.pass ? "PASS" : r.inconclusive ? "INCONCLUSIVE" : "FAIL";
            std::printf("%-4s criterion %2d: %-48s (%s, %lld ms)\n", status, r.id, r.name.c_str(),
                        r.detail.c_str(), r.millis);
            all_pass &= r.pass;
        }
        return all_pass ? 0 : 1;
    }

    if (cmd_pieri->parsed()) {
        PieriKind kind = pi_kind == "bhat" ? PieriKind::bhat : PieriKind::chat;
        StrictPartition lambda = parse_partition_flag("--lambda", pi_lambda);
        StrictPartition nu = parse_partition_flag("--nu", pi_nu);
        Json out;
        if (pi_n >= 0) {
            Int v = pi_oracle ? pieri_coeff_oracle(kind, lambda, nu, pi_n)
                              : pieri_coeff(kind, lambda, nu, pi_n);
            out = Json{{"kind", pi_kind}, {"lambda", partition_str(lambda)}, {"nu", partition_str(nu)},
                       {"n", pi_n},       {"value", v.str()}};
        } else {
            Json values = Json::object();
            int bound = partition_size(nu) + static_cast<int>(nu.size()) + 1;
            for (int n = 0; n <= bound; ++n) {
                Int v = pi_oracle ? pieri_coeff_oracle(kind, lambda, nu, n)
                                  : pieri_coeff(kind, lambda, nu, n);
                if (v != 0) values[std::to_string(n)] = v.str();
            }
            out = Json{{"kind", pi_kind}, {"lambda", partition_str(lambda)}, {"nu", partition_str(nu)},
                       {"values", values}};
        }
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (cmd_coeffs->parsed()) {
        Json out;
        if (co_kind == "y" || co_kind == "z") {
            StrictPartition outer = parse_partition_flag("--outer", co_outer);
            StrictPartition inner = parse_partition_flag("--inner", co_inner);
            auto tab = expansion_table(co_kind == "y" ? ExpansionKind::y : ExpansionKind::z, outer, inner);
            Json values = Json::object();
            for (const auto& [n, v] : tab) values[std::to_string(n)] = Rat(v).str();
            out = Json{{"kind", co_kind}, {"outer", partition_str(outer)}, {"inner", partition_str(inner)},
                       {"values", values}};
        } else {
            StrictPartition lambda = parse_partition_flag("--lambda", co_lambda);
            StrictPartition mu = parse_partition_flag("--mu", co_mu);
            StructKind kind;
            if (co_kind == "ahat") kind = StructKind::ahat;
            else if (co_kind == "bhat") kind = StructKind::bhat_full;
            else if (co_kind == "chat") kind = StructKind::chat_full;
            else if (co_kind == "a") kind = StructKind::a;
            else if (co_kind == "b") kind = StructKind::b;
            else throw CLI::ValidationError("--kind", "unknown kind " + co_kind);
            int degree = partition_size(lambda) + partition_size(mu);
            int cap = co_cap >= 0 ? co_cap : degree;
            StructTable tab = structure_constants(kind, lambda, mu, cap);
            Json values = Json::object();
            for (const auto& [nu, v] : tab.values) values[partition_str(nu)] = v.str();
            out = Json{{"kind", co_kind},   {"lambda", partition_str(lambda)}, {"mu", partition_str(mu)},
                       {"cap", tab.cap},    {"partial", tab.partial},          {"values", values}};
        }
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (cmd_ops->parsed()) {
        OperatorKind kind = op_kind == "inverse" ? OperatorKind::inverse : OperatorKind::commute;
        Residual r = operator_check(kind, op_size_cap, op_deg_cap);
        Json params{{"kind", op_kind}, {"size_cap", op_size_cap}, {"deg_cap", op_deg_cap}};
        std::cout << residual_report("ops", params, r).dump() << "\n";
        return r.passed() ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
