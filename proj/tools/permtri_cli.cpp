// Copyright 2026 The permtri authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "permtri/bridge.hpp"
#include "permtri/classify.hpp"
#include "permtri/report.hpp"

namespace {

using namespace permtri;
using gf::u64;

// "5", "0:3" and "0..3" all accepted
std::pair<u64, u64> parse_range(const std::string& text) {
    auto sep = text.find(':');
    std::size_t skip = 1;
    if (sep == std::string::npos) {
        sep = text.find("..");
        skip = 2;
    }
    if (sep == std::string::npos) {
        u64 v = std::stoull(text);
        return {v, v};
    }
    return {std::stoull(text.substr(0, sep)), std::stoull(text.substr(sep + skip))};
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

nlohmann::json verdict_json(const classify::Verdict& v) {
    report::ReportRow row = report::row_from_verdict(v);
    nlohmann::json j{{"p", row.p},     {"t", row.t},
                     {"s", row.s},     {"r", row.r},
                     {"lambdaIndex", row.lambda}, {"d", row.d},
                     {"applicable", row.applicable}, {"isPp", row.is_pp}};
    j["predicted"] = row.predicted ? nlohmann::json(*row.predicted) : nlohmann::json(nullptr);
    j["agrees"] = row.agrees ? nlohmann::json(*row.agrees) : nlohmann::json(nullptr);
    return j;
}

int cmd_verify_theorem(const report::GridSpec& grid, const std::string& out_path,
                       const std::string& format) {
    auto t0 = std::chrono::steady_clock::now();
    report::GridReport rep = report::run_grid(grid);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "verify-theorem: " << rep.rows.size() << " rows, " << rep.pps_found
              << " PPs, " << rep.applicable_rows << " applicable, " << rep.disagreements
              << " disagreements, " << rep.sporadic_pps << " sporadic PPs (" << ms << " ms)\n";
    std::ofstream file;
    std::ostream& os = open_out(out_path, file);
    if (format == "csv")
        report::write_csv(os, rep);
    else
        report::write_json(os, rep);
    if (rep.disagreements > 0) {
        for (auto& r : rep.rows)
            if (r.agrees && !*r.agrees)
                std::cerr << "DISAGREEMENT p=" << r.p << " t=" << r.t << " s=" << r.s
                          << " r=" << r.r << " lambda=" << r.lambda << " is_pp=" << r.is_pp
                          << '\n';
        return 1;
    }
    return 0;
}

int cmd_check(u64 p, unsigned t, unsigned s, u64 r, u64 lambda) {
    gf::FieldPtr field = gf::make_field(p, t);
    poly::TrinomialParams params = poly::make_params(field, s, r, lambda);
    classify::Verdict v;
    v.params = params;
    auto [d, m] = classify::reduced_degree(p, s, r);
    v.d = d;
    v.applicable = classify::theorem_applicable(params);
    v.is_pp = permcheck::is_pp(poly::build_f(params));
    if (v.applicable) {
        v.predicted = classify::theorem_predict(params);
        v.agrees = (v.is_pp == *v.predicted);
    }
    nlohmann::json j = verdict_json(v);
    classify::NormalizedParams n = classify::normalize(params);
    j["normalized"] = {{"s", n.s2}, {"r", n.r2}, {"lambdaIndex", n.lambda2}, {"m", n.m}, {"d", n.d}};
    if (r == 1 && s == 0 && p > 2) {
        classify::CubicAnalysis a = classify::cubic_diff_quotient_analysis(field, lambda);
        const char* kind = a.kind == classify::CubicSplit::splits_over_base
                               ? "splits_over_base"
                               : a.kind == classify::CubicSplit::splits_over_quadratic_ext_only
                                     ? "splits_over_quadratic_ext_only"
                                     : "no_linear_split";
        j["cubicDiffQuotient"] = kind;
        if (a.factors) {
            j["cubicFactors"] = {{"fieldSize", a.factor_field->size()},
                                 {"factor1", {a.factors->first.a, a.factors->first.b}},
                                 {"factor2", {a.factors->second.a, a.factors->second.b}}};
        }
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_bridge(u64 p, unsigned t, unsigned s, std::optional<u64> lambda, bool all_lambda) {
    if (p == 2) throw std::invalid_argument("characteristic 2 unsupported in bridge");
    gf::FieldPtr field = gf::make_field(p, t);
    std::vector<u64> lambdas;
    if (all_lambda) {
        for (u64 l = 0; l < field->size(); ++l) lambdas.push_back(l);
    } else if (lambda) {
        lambdas.push_back(*lambda);
    } else {
        throw std::invalid_argument("bridge: give a lambda index or --all-lambda");
    }
    nlohmann::json rows = nlohmann::json::array();
    bool all_agree = true;
    for (u64 l : lambdas) {
        bridge::QuadLift lift = bridge::lift_quadratic(field, s, l);
        nlohmann::json row{{"p", p}, {"t", t}, {"s", s}, {"lambdaIndex", l},
                           {"irreducible", lift.irreducible}};
        if (lift.irreducible) {
            auto [lhs, rhs] = bridge::nr_binomial_is_pp(lift);
            auto [binom_pp, monom_cpp] = bridge::cpp_monomial_check(lift);
            row["lhs"] = lhs;
            row["rhs"] = rhs;
            row["agree"] = (lhs == rhs);
            row["monomialCpp"] = monom_cpp;
            if (lhs != rhs || binom_pp != monom_cpp) all_agree = false;
        }
        rows.push_back(row);
    }
    std::cout << rows.dump(2) << '\n';
    return all_agree ? 0 : 1;
}

int cmd_dickson(u64 q, u64 n, u64 a) {
    auto factors = gf::factorize(q);
    if (factors.size() != 1) throw std::invalid_argument("dickson: field size must be a prime power");
    gf::FieldPtr field = gf::make_field(factors[0].first, unsigned(factors[0].second));
    poly::Poly d = poly::dickson(field, n, a);
    permcheck::PreimageHistogram h = permcheck::preimage_counts(d);
    nlohmann::json j;
    j["polynomial"] = nlohmann::json::parse(report::poly_to_json(d));
    j["isPp"] = h.is_permutation(q);
    nlohmann::json hist = nlohmann::json::object();
    for (auto& [k, cnt] : h.counts) hist[std::to_string(k)] = cnt;
    j["preimageHistogram"] = hist;
    bool z_ok = true;
    for (auto& [k, cnt] : h.counts)
        if (k != 0 && k != 1 && k != n && (n % 2 != 0 || k != n / 2) && k != (n + 1) / 2)
            z_ok = false;
    j["zSetClaim"] = z_ok;
    std::cout << j.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation trinomial verification harness"};
    app.require_subcommand(1);

    unsigned default_workers = std::max(1u, std::thread::hardware_concurrency());

    // verify-theorem
    auto* verify = app.add_subcommand("verify-theorem", "sweep a grid and check the classification");
    u64 max_q = 1024;
    std::string s_range = "0", r_range = "1", out_path, format = "json";
    bool require_applicable = false;
    unsigned workers = default_workers;
    verify->add_option("--max-q", max_q, "largest field size q = p^t");
    verify->add_option("--s", s_range, "s value or range lo:hi");
    verify->add_option("--r", r_range, "r value or range lo:hi");
    verify->add_flag("--require-applicable", require_applicable, "only cells with d^4 < q");
    verify->add_option("--workers", workers, "worker threads");
    verify->add_option("--out", out_path, "output file ('-' for stdout)");
    verify->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // check
    auto* check = app.add_subcommand("check", "single (p, t, s, r, lambda) verdict");
    u64 cp = 2, cr = 1, clambda = 1;
    unsigned ct = 1, cs = 0;
    check->add_option("p", cp)->required();
    check->add_option("t", ct)->required();
    check->add_option("s", cs)->required();
    check->add_option("r", cr)->required();
    check->add_option("lambda", clambda)->required();

    // bridge
    auto* br = app.add_subcommand("bridge", "Niederreiter-Robinson binomial check");
    u64 bp = 3;
    unsigned bt = 1, bs = 1;
    std::optional<u64> blambda;
    bool all_lambda = false;
    u64 blambda_raw = 0;
    br->add_option("p", bp)->required();
    br->add_option("t", bt)->required();
    br->add_option("s", bs)->required();
    auto* lam_opt = br->add_option("--lambda", blambda_raw, "lambda index");
    br->add_flag("--all-lambda", all_lambda, "sweep every lambda");

    // dickson
    auto* dk = app.add_subcommand("dickson", "Dickson polynomial preimage report");
    u64 dq = 9, dn = 5, da = 1;
    dk->add_option("q", dq)->required();
    dk->add_option("n", dn)->required();
    dk->add_option("a", da)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            report::GridSpec grid;
            grid.max_q = max_q;
            std::tie(grid.s_lo, grid.s_hi) = [&] {
                auto [lo, hi] = parse_range(s_range);
                return std::pair<unsigned, unsigned>{unsigned(lo), unsigned(hi)};
            }();
            std::tie(grid.r_lo, grid.r_hi) = parse_range(r_range);
            grid.require_applicable = require_applicable;
            grid.workers = workers;
            return cmd_verify_theorem(grid, out_path, format);
        }
        if (*check) return cmd_check(cp, ct, cs, cr, clambda);
        if (*br) {
            if (lam_opt->count() > 0) blambda = blambda_raw;
            return cmd_bridge(bp, bt, bs, blambda, all_lambda);
        }
        if (*dk) return cmd_dickson(dq, dn, da);
    } catch (const gf::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
