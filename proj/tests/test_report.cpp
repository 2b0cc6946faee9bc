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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "permtri/report.hpp"

using namespace permtri;
using gf::u64;

TEST_CASE("prime powers enumeration") {
    auto pps = report::prime_powers_upto(32);
    std::vector<std::pair<u64, unsigned>> expect{
        {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1},
        {13, 1}, {2, 4}, {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}, {29, 1},
        {31, 1}, {2, 5}};
    CHECK(pps == expect);
    CHECK(report::prime_powers_upto(1).empty());
}

TEST_CASE("grid rows are sorted and counted") {
    report::GridSpec spec;
    spec.max_q = 16;
    spec.s_lo = 0;
    spec.s_hi = 1;
    spec.r_lo = 0;
    spec.r_hi = 2;
    auto rep = report::run_grid(spec);
    REQUIRE(!rep.rows.empty());
    // one row per (q, s, r, lambda)
    u64 expected_rows = 0;
    for (auto [p, t] : report::prime_powers_upto(16)) {
        u64 q = 1;
        for (unsigned i = 0; i < t; ++i) q *= p;
        expected_rows += 2 * 3 * q;
    }
    CHECK(rep.rows.size() == expected_rows);
    for (std::size_t i = 1; i < rep.rows.size(); ++i) {
        const auto& a = rep.rows[i - 1];
        const auto& b = rep.rows[i];
        CHECK(std::tie(a.p, a.t, a.s, a.r, a.lambda) <
              std::tie(b.p, b.t, b.s, b.r, b.lambda));
    }
    // summary counters recompute from the rows
    u64 pps = 0, app = 0, dis = 0, spor = 0;
    for (const auto& row : rep.rows) {
        if (row.is_pp) ++pps;
        if (row.applicable) ++app;
        if (row.agrees && !*row.agrees) ++dis;
        if (row.is_pp && !row.applicable) ++spor;
    }
    CHECK(rep.pps_found == pps);
    CHECK(rep.applicable_rows == app);
    CHECK(rep.disagreements == dis);
    CHECK(rep.sporadic_pps == spor);
    CHECK(rep.disagreements == 0);
}

TEST_CASE("require_applicable filters rows") {
    report::GridSpec spec;
    spec.max_q = 256;
    spec.require_applicable = true;  // default cell s = 0, r = 1 has d = 3
    auto rep = report::run_grid(spec);
    CHECK(!rep.rows.empty());
    for (const auto& row : rep.rows) {
        CHECK(row.applicable);
        u64 q = 1;
        for (unsigned i = 0; i < row.t; ++i) q *= row.p;
        CHECK(q > 81);  // 3^4 < q is the d = 3 hypothesis
    }
}

TEST_CASE("output is deterministic across worker counts") {
    for (auto format : {0, 1}) {
        std::string out[3];
        int i = 0;
        for (unsigned workers : {1u, 2u, 5u}) {
            report::GridSpec spec;
            spec.max_q = 64;
            spec.s_hi = 1;
            spec.r_lo = 0;
            spec.r_hi = 2;
            spec.workers = workers;
            auto rep = report::run_grid(spec);
            std::ostringstream os;
            if (format == 0)
                report::write_json(os, rep);
            else
                report::write_csv(os, rep);
            out[i++] = os.str();
        }
        CHECK(out[0] == out[1]);
        CHECK(out[0] == out[2]);
        CHECK(!out[0].empty());
    }
}

TEST_CASE("csv layout") {
    report::GridSpec spec;
    spec.max_q = 4;
    auto rep = report::run_grid(spec);
    std::ostringstream os;
    report::write_csv(os, rep);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "p,t,s,r,lambda,d,applicable,is_pp,predicted,agrees");
    std::string line;
    u64 lines = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++lines;
    CHECK(lines == rep.rows.size());
}

TEST_CASE("json layout parses and matches the summary") {
    report::GridSpec spec;
    spec.max_q = 16;
    auto rep = report::run_grid(spec);
    std::ostringstream os;
    report::write_json(os, rep);
    auto j = nlohmann::json::parse(os.str());
    REQUIRE(j.contains("summary"));
    CHECK(j["summary"]["ppsFound"] == rep.pps_found);
    CHECK(j["summary"]["applicableRows"] == rep.applicable_rows);
    CHECK(j["summary"]["disagreements"] == rep.disagreements);
    CHECK(j["summary"]["sporadicPps"] == rep.sporadic_pps);
    REQUIRE(j.contains("rows"));
    REQUIRE(j["rows"].size() == rep.rows.size());
    // rows outside the hypothesis carry null prediction fields
    bool saw_null = false;
    for (const auto& row : j["rows"]) {
        if (row["predicted"].is_null()) {
            CHECK(row["agrees"].is_null());
            saw_null = true;
        }
    }
    CHECK(saw_null);  // q <= 16 < 3^4 is never applicable at s = 0, r = 1
}

TEST_CASE("poly_to_json lists terms in descending exponent order") {
    auto f5 = gf::make_prime_field(5);
    auto f = poly::make_poly(f5, {{3, 1}, {2, 1}, {1, 2}});
    auto j = nlohmann::json::parse(report::poly_to_json(f));
    CHECK(j["field"]["p"] == 5);
    CHECK(j["field"]["t"] == 1);
    REQUIRE(j["terms"].size() == 3);
    CHECK(j["terms"][0] == nlohmann::json::array({3, 1}));
    CHECK(j["terms"][1] == nlohmann::json::array({2, 1}));
    CHECK(j["terms"][2] == nlohmann::json::array({1, 2}));
}
