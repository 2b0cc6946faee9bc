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

#ifndef PERMTRI_CLASSIFY_HPP
#define PERMTRI_CLASSIFY_HPP

#include <optional>

#include "permtri/permcheck.hpp"
#include "permtri/poly.hpp"

namespace permtri::classify {

using gf::FieldPtr;
using gf::u64;
using poly::Poly;
using poly::TrinomialParams;

/// Frobenius-normalized parameters: f_lambda = (f'_{lambda'})^(p^m) where
/// f' has parameters (s', r'), and d is the reduced degree (2p^s + r)/p^m.
struct NormalizedParams {
    unsigned s2 = 0;
    u64 r2 = 0;
    u64 lambda2 = 0;
    unsigned m = 0;
    u64 d = 0;
};

/// (d, m) with m the largest n such that p^n divides all three exponents
/// and d = (2p^s + r)/p^m; r = 0 gives d = 0, m = s. Both the closed form
/// through (u, v) and the divisibility definition are computed and checked
/// against each other.
std::pair<u64, unsigned> reduced_degree(u64 p, unsigned s, u64 r);

/// Extract the Frobenius power: s' = s - m, r' = r/p^m, lambda' the m-fold
/// p-th root of lambda. The polynomial identity f_lambda = (f'_{lambda'})^(p^m)
/// is verified symbolically before returning.
NormalizedParams normalize(const TrinomialParams& params);

/// The hypothesis d^4 < p^t, in exact integer arithmetic.
bool theorem_applicable(const TrinomialParams& params);

/// The classification predicate, evaluated on the normalized parameters:
/// true iff [p = 2, t odd, r' = 1, lambda' = 1, s' in {0, 1}] or
/// [p = 2 (mod 3), t odd, s' = 0, r' = 1, lambda' = 1/3].
/// Only meaningful under theorem_applicable.
bool theorem_predict(const TrinomialParams& params);

/// Per-lambda record from a sweep.
struct Verdict {
    TrinomialParams params;
    u64 d = 0;
    bool applicable = false;
    bool is_pp = false;
    std::optional<bool> predicted;  // present iff applicable
    std::optional<bool> agrees;
    bool disagrees() const { return agrees.has_value() && !*agrees; }
};

/// One Verdict per lambda in F_q, in index order, using the fast sweep.
std::vector<Verdict> scan_lambda(const FieldPtr& field, unsigned s, u64 r,
                                 unsigned workers = 1);

/// For r = 0: verifies the symbolic identity f_lambda(x) = f_lambda(-x-1)
/// (so f_lambda cannot permute), and for enumerable fields additionally
/// checks that the brute-force test agrees.
bool r0_symmetry_check(const TrinomialParams& params);

enum class CubicSplit { no_linear_split, splits_over_base, splits_over_quadratic_ext_only };

/// A monic-in-x linear form x + a y + b over factor_field.
struct LinearFactor {
    u64 a = 0;
    u64 b = 0;
};

struct CubicAnalysis {
    CubicSplit kind = CubicSplit::no_linear_split;
    FieldPtr factor_field;  // set when the curve splits
    std::optional<std::pair<LinearFactor, LinearFactor>> factors;
};

/// The r = 1, s = 0, p > 2 case: x^2 + xy + y^2 + x + y + lambda splits
/// into two linear components iff p != 3 and lambda = 1/3; when it does,
/// the two factors are built from the closed formula with sqrt(-3), the
/// product identity is verified, and the field of definition is reported.
CubicAnalysis cubic_diff_quotient_analysis(const FieldPtr& field, u64 lambda);

/// (lhs, rhs) of the equivalence "-3 is a non-square in F_{p^t} iff t odd
/// and p = 2 (mod 3)"; returned unasserted so tests can compare the sides.
std::pair<bool, bool> minus3_square_iff(u64 p, unsigned t);

}  // namespace permtri::classify

#endif
