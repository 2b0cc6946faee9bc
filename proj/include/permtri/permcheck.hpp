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

#ifndef PERMTRI_PERMCHECK_HPP
#define PERMTRI_PERMCHECK_HPP

#include <map>

#include "permtri/poly.hpp"

namespace permtri::permcheck {

using gf::FieldPtr;
using gf::u64;
using poly::Poly;
using poly::TrinomialParams;

/// Histogram of preimage counts: counts[k] = number of field elements with
/// exactly k preimages under the map. f is a PP iff counts == {1: q}.
struct PreimageHistogram {
    std::map<u64, u64> counts;
    bool is_permutation(u64 q) const {
        auto it = counts.find(1);
        return counts.size() == 1 && it != counts.end() && it->second == q;
    }
};

/// Brute-force permutation test: occupancy scan over all q values with an
/// early exit on the first collision.
bool is_pp(const Poly& f);

PreimageHistogram preimage_counts(const Poly& f);

/// Complete permutation test: is_pp(f) and is_pp(f + x).
bool is_cpp(const Poly& f);

/// Independent cross-check through the difference-quotient curve: true iff
/// phi(x, y) = (f(x) - f(y))/(x - y) has no zero with x != y. Each term of
/// phi is evaluated through its geometric-sum expansion, so the scan is an
/// all-pairs walk rather than an occupancy scan.
bool is_pp_via_curve(const Poly& f, u64 pair_cap = u64(1) << 20);

/// Fast lambda sweep for f_lambda over a fixed (field, s, r): precomputes
/// x^(e2) + x^(e1) and x^(e0) for all x once, then tests each lambda in
/// O(q). Returns one verdict per lambda in canonical index order; the
/// result is independent of the worker count.
std::vector<char> sweep_lambda_is_pp(const FieldPtr& field, unsigned s, u64 r,
                                     unsigned workers = 1);

/// Curve-side lambda sweep: for each pair (x, y) the unique lambda that
/// puts (x, y) on the curve is marked bad, giving the per-lambda curve
/// verdicts in O(q^2) total.
std::vector<char> sweep_lambda_curve(const FieldPtr& field, unsigned s, u64 r);

}  // namespace permtri::permcheck

#endif
