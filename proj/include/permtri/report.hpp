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

#ifndef PERMTRI_REPORT_HPP
#define PERMTRI_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "permtri/classify.hpp"

namespace permtri::report {

using gf::u64;

struct GridSpec {
    u64 max_q = 1024;
    unsigned s_lo = 0, s_hi = 0;
    u64 r_lo = 1, r_hi = 1;
    bool require_applicable = false;
    unsigned workers = 1;
};

struct ReportRow {
    u64 p = 0;
    unsigned t = 0;
    unsigned s = 0;
    u64 r = 0;
    u64 lambda = 0;
    u64 d = 0;
    bool applicable = false;
    bool is_pp = false;
    std::optional<bool> predicted;
    std::optional<bool> agrees;
};

struct GridReport {
    std::vector<ReportRow> rows;
    u64 pps_found = 0;
    u64 applicable_rows = 0;
    u64 disagreements = 0;
    u64 sporadic_pps = 0;  // is_pp true outside the hypothesis
};

/// All prime powers q <= max_q as (p, t), sorted by (q, p).
std::vector<std::pair<u64, unsigned>> prime_powers_upto(u64 max_q);

ReportRow row_from_verdict(const classify::Verdict& v);

/// Run scan_lambda over every (field, s, r) cell of the grid; rows come out
/// sorted by (p, t, s, r, lambda).
GridReport run_grid(const GridSpec& grid);

void write_json(std::ostream& os, const GridReport& report);
void write_csv(std::ostream& os, const GridReport& report);

std::string poly_to_json(const poly::Poly& f);

}  // namespace permtri::report

#endif
