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

#ifndef PERMTRI_BRIDGE_HPP
#define PERMTRI_BRIDGE_HPP

#include "permtri/permcheck.hpp"
#include "permtri/poly.hpp"

namespace permtri::bridge {

using gf::FieldPtr;
using gf::u64;

/// The pair (mu, b) with mu^(p^s) = lambda and b a root of x^2 + x + mu:
/// when the quadratic is irreducible, F_{q^2} is built with that very
/// modulus so b is the extension generator (index q).
struct QuadLift {
    FieldPtr base;  // F_q, q = p^t
    unsigned s = 0;
    u64 lambda = 0;
    u64 mu = 0;
    bool irreducible = false;
    FieldPtr quad;  // F_{q^2} with modulus x^2 + x + mu; null when reducible
    u64 b = 0;      // root of x^2 + x + mu in quad
};

/// Compute the lift for odd p. Irreducibility of x^2 + x + mu is decided
/// by the discriminant 1 - 4mu being a non-square.
QuadLift lift_quadratic(const FieldPtr& base, unsigned s, u64 lambda);

/// The (p, t, s) triples whose bridge field q^(2p^s) fits under the cap.
struct BridgeGridPoint {
    u64 p;
    unsigned t;
    unsigned s;
};
std::vector<BridgeGridPoint> bridge_grid(u64 cap);

/// lhs = is_pp(f_lambda over F_q); rhs = is_pp(x^e + bx over F_{q^n}) with
/// n = 2p^s and e = (q^n - 1)/(q - 1) + 1, b embedded as a root of
/// x^2 + x + mu in the canonical F_{q^n}. The two sides are returned
/// unasserted; their equivalence is a tested invariant.
std::pair<bool, bool> nr_binomial_is_pp(const QuadLift& lift);

/// binomial_pp = is_pp(x^e + bx); monomial_cpp = is_cpp(b^-1 x^e) over the
/// same F_{q^n}. The two agree because the maps differ by the bijection
/// y -> b^-1 y.
std::pair<bool, bool> cpp_monomial_check(const QuadLift& lift);

/// Preimage-count claim for the Dickson polynomial D_n(x, a) over F_Q,
/// n odd and coprime to the characteristic, a != 0: every nonzero preimage
/// count must lie in {1, n, (n+1)/2} (the n/2 slot is vacuous for odd n).
/// When n divides neither Q+1 nor Q-1, D_n must additionally be a PP.
bool dickson_preimage_claim_check(const FieldPtr& field, u64 n, u64 a);

}  // namespace permtri::bridge

#endif
