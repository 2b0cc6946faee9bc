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

#include "permtri/report.hpp"

#include <algorithm>
#include <ostream>

#include <json.hpp>

namespace permtri::report {

std::vector<std::pair<u64, unsigned>> prime_powers_upto(u64 max_q) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p <= max_q; ++p) {
        if (!gf::is_prime(p)) continue;
        gf::u128 q = p;
        unsigned t = 1;
        while (q <= max_q) {
            out.emplace_back(p, t);
            q *= p;
            ++t;
        }
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
        gf::u128 qa = 1, qb = 1;
        for (unsigned i = 0; i < a.second; ++i) qa *= a.first;
        for (unsigned i = 0; i < b.second; ++i) qb *= b.first;
        return std::tie(qa, a.first) < std::tie(qb, b.first);
    });
    return out;
}

ReportRow row_from_verdict(const classify::Verdict& v) {
    ReportRow row;
    row.p = v.params.p();
    row.t = v.params.t();
    row.s = v.params.s;
    row.r = v.params.r;
    row.lambda = v.params.lambda;
    row.d = v.d;
    row.applicable = v.applicable;
    row.is_pp = v.is_pp;
    row.predicted = v.predicted;
    row.agrees = v.agrees;
    return row;
}

GridReport run_grid(const GridSpec& grid) {
    if (grid.max_q > gf::enumeration_cap())
        throw gf::CapExceeded("run_grid: max_q exceeds enumeration cap");
    if (grid.s_lo > grid.s_hi || grid.r_lo > grid.r_hi)
        throw std::invalid_argument("run_grid: empty range");
    GridReport report;
    for (auto& [p, t] : prime_powers_upto(grid.max_q)) {
        gf::FieldPtr field;  // built lazily, some (p, t) may have no cells
        for (unsigned s = grid.s_lo; s <= grid.s_hi; ++s) {
            for (u64 r = grid.r_lo; r <= grid.r_hi; ++r) {
                if (grid.require_applicable) {
                    auto [d, m] = classify::reduced_degree(p, s, r);
                    gf::u128 d4 = gf::u128(d) * d;
                    d4 *= d4;
                    gf::u128 q = 1;
                    for (unsigned i = 0; i < t; ++i) q *= p;
                    if (d4 >= q) continue;
                }
                if (!field) field = gf::make_field(p, t);
                for (auto& v : classify::scan_lambda(field, s, r, grid.workers)) {
                    ReportRow row = row_from_verdict(v);
                    if (row.is_pp) ++report.pps_found;
                    if (row.applicable) {
                        ++report.applicable_rows;
                        if (row.agrees && !*row.agrees) ++report.disagreements;
                    } else if (row.is_pp) {
                        ++report.sporadic_pps;
                    }
                    report.rows.push_back(row);
                }
            }
        }
    }
    // scan order already yields (q, p, s, r, lambda); reports are keyed by
    // (p, t, s, r, lambda) so re-sort
    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [](const ReportRow& a, const ReportRow& b) {
                         return std::tie(a.p, a.t, a.s, a.r, a.lambda) <
                                std::tie(b.p, b.t, b.s, b.r, b.lambda);
                     });
    return report;
}

namespace {

nlohmann::json row_json(const ReportRow& r) {
    nlohmann::json j{{"p", r.p},         {"t", r.t},
                     {"s", r.s},         {"r", r.r},
                     {"lambdaIndex", r.lambda}, {"d", r.d},
                     {"applicable", r.applicable}, {"isPp", r.is_pp}};
    j["predicted"] = r.predicted ? nlohmann::json(*r.predicted) : nlohmann::json(nullptr);
    j["agrees"] = r.agrees ? nlohmann::json(*r.agrees) : nlohmann::json(nullptr);
    return j;
}

}  // namespace

void write_json(std::ostream& os, const GridReport& report) {
    nlohmann::json j;
    j["summary"] = {{"rows", report.rows.size()},
                    {"ppsFound", report.pps_found},
                    {"applicableRows", report.applicable_rows},
                    {"disagreements", report.disagreements},
                    {"sporadicPps", report.sporadic_pps}};
    j["rows"] = nlohmann::json::array();
    for (auto& r : report.rows) j["rows"].push_back(row_json(r));
    os << j.dump(2) << '\n';
}

void write_csv(std::ostream& os, const GridReport& report) {
    os << "p,t,s,r,lambda,d,applicable,is_pp,predicted,agrees\n";
    auto tri = [](const std::optional<bool>& v) {
        return v ? (*v ? "true" : "false") : "";
    };
    for (auto& r : report.rows) {
        os << r.p << ',' << r.t << ',' << r.s << ',' << r.r << ',' << r.lambda << ',' << r.d
           << ',' << (r.applicable ? "true" : "false") << ',' << (r.is_pp ? "true" : "false")
           << ',' << tri(r.predicted) << ',' << tri(r.agrees) << '\n';
    }
}

std::string poly_to_json(const poly::Poly& f) {
    nlohmann::json j;
    j["field"] = {{"p", f.field->characteristic()}, {"t", f.field->abs_degree()}};
    j["terms"] = nlohmann::json::array();
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it)
        j["terms"].push_back({it->first, it->second});
    return j.dump();
}

}  // namespace permtri::report
