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

#include "permtri/bridge.hpp"

#include <algorithm>

namespace permtri::bridge {

namespace {

u64 ipow_checked(u64 b, u64 e, u64 cap) {
    gf::u128 r = 1;
    for (u64 i = 0; i < e; ++i) {
        r *= b;
        if (r > cap) return 0;  // overflow marker
    }
    return u64(r);
}

// m-fold inverse Frobenius in F_{p^t}
u64 ps_root(const gf::Field& F, u64 a, unsigned s) {
    u64 e = 1;
    for (unsigned i = 0; i + 1 < F.abs_degree(); ++i) e *= F.characteristic();
    for (unsigned i = 0; i < s; ++i) a = F.pow(a, e);
    return a;
}

}  // namespace

QuadLift lift_quadratic(const FieldPtr& base, unsigned s, u64 lambda) {
    const gf::Field& F = *base;
    if (F.characteristic() == 2)
        throw std::invalid_argument("lift_quadratic: characteristic 2 unsupported");
    if (lambda >= F.size()) throw std::invalid_argument("lift_quadratic: lambda out of range");
    QuadLift lift;
    lift.base = base;
    lift.s = s;
    lift.lambda = lambda;
    lift.mu = ps_root(F, lambda, s);
    u64 disc = F.sub(1, F.mul(4 % F.characteristic(), lift.mu));
    lift.irreducible = !F.is_square(disc);
    if (lift.irreducible) {
        // modulus x^2 + x + mu makes b the canonical extension generator
        lift.quad = gf::extend_with(base, {lift.mu, 1, 1}, /*skip=*/true);
        lift.b = F.size();  // coefficient vector (0, 1)
    }
    return lift;
}

std::vector<BridgeGridPoint> bridge_grid(u64 cap) {
    std::vector<BridgeGridPoint> out;
    for (u64 p = 3; ipow_checked(p, 2 * p, cap) != 0; p += 2) {
        if (!gf::is_prime(p)) continue;
        u64 ps = p;
        for (unsigned s = 1; ipow_checked(p, 2 * ps, cap) != 0; ++s, ps *= p) {
            for (unsigned t = 1; ipow_checked(p, u64(t) * 2 * ps, cap) != 0; ++t)
                out.push_back({p, t, s});
        }
    }
    std::sort(out.begin(), out.end(), [](const BridgeGridPoint& a, const BridgeGridPoint& b) {
        return std::tie(a.p, a.t, a.s) < std::tie(b.p, b.t, b.s);
    });
    return out;
}

std::pair<bool, bool> nr_binomial_is_pp(const QuadLift& lift) {
    if (!lift.irreducible)
        throw std::invalid_argument("nr_binomial_is_pp: lift is reducible");
    const gf::Field& F = *lift.base;
    const u64 q = F.size();
    const u64 n = 2 * [&] {
        u64 ps = 1;
        for (unsigned i = 0; i < lift.s; ++i) ps *= F.characteristic();
        return ps;
    }();
    const u64 qn = ipow_checked(q, n, gf::enumeration_cap());
    if (qn == 0) throw gf::CapExceeded("nr_binomial_is_pp: q^(2p^s) exceeds cap");

    FieldPtr ext = gf::extend(lift.base, unsigned(n));
    const gf::Field& E = *ext;
    // embed b: solve x^2 + x + mu = 0 by the quadratic formula (odd p)
    u64 disc = E.sub(1, E.mul(4 % E.characteristic(), lift.mu));
    auto root = E.sqrt(disc);
    if (!root) throw std::logic_error("nr_binomial_is_pp: discriminant not a square in F_{q^n}");
    u64 inv2 = E.inv(2);
    u64 b1 = E.mul(E.sub(*root, 1), inv2);
    u64 b2 = E.mul(E.sub(E.neg(*root), 1), inv2);
    u64 b = std::min(b1, b2);  // either root gives the same verdict

    poly::TrinomialParams params = poly::make_params(lift.base, lift.s, 1, lift.lambda);
    bool lhs = permcheck::is_pp(poly::build_f(params));

    const u64 e = (qn - 1) / (q - 1) + 1;
    poly::Poly binom{ext, {}};
    binom.set(e, 1);
    binom.set(1, b);
    bool rhs = permcheck::is_pp(binom);
    return {lhs, rhs};
}

std::pair<bool, bool> cpp_monomial_check(const QuadLift& lift) {
    if (!lift.irreducible)
        throw std::invalid_argument("cpp_monomial_check: lift is reducible");
    const gf::Field& F = *lift.base;
    const u64 q = F.size();
    u64 ps = 1;
    for (unsigned i = 0; i < lift.s; ++i) ps *= F.characteristic();
    const u64 n = 2 * ps;
    const u64 qn = ipow_checked(q, n, gf::enumeration_cap());
    if (qn == 0) throw gf::CapExceeded("cpp_monomial_check: q^(2p^s) exceeds cap");

    FieldPtr ext = gf::extend(lift.base, unsigned(n));
    const gf::Field& E = *ext;
    u64 disc = E.sub(1, E.mul(4 % E.characteristic(), lift.mu));
    auto root = E.sqrt(disc);
    if (!root) throw std::logic_error("cpp_monomial_check: discriminant not a square in F_{q^n}");
    u64 inv2 = E.inv(2);
    u64 b = std::min(E.mul(E.sub(*root, 1), inv2), E.mul(E.sub(E.neg(*root), 1), inv2));

    const u64 e = (qn - 1) / (q - 1) + 1;
    poly::Poly binom{ext, {}};
    binom.set(e, 1);
    binom.set(1, b);
    bool binomial_pp = permcheck::is_pp(binom);

    poly::Poly monom{ext, {}};
    monom.set(e, E.inv(b));
    bool monomial_cpp = permcheck::is_cpp(monom);
    return {binomial_pp, monomial_cpp};
}

bool dickson_preimage_claim_check(const FieldPtr& field, u64 n, u64 a) {
    const gf::Field& F = *field;
    if (a == 0 || a >= F.size())
        throw std::invalid_argument("dickson_preimage_claim_check: a must be a nonzero element");
    if (n % F.characteristic() == 0)
        throw std::invalid_argument("dickson_preimage_claim_check: n must be coprime to p");
    if (n % 2 == 0) throw std::invalid_argument("dickson_preimage_claim_check: n must be odd");
    const u64 Q = F.size();
    permcheck::PreimageHistogram h = permcheck::preimage_counts(poly::dickson(field, n, a));
    for (auto& [k, cnt] : h.counts) {
        if (k == 0) continue;
        if (k != 1 && k != n && k != (n + 1) / 2) return false;
    }
    if ((Q + 1) % n != 0 && (Q - 1) % n != 0 && !h.is_permutation(Q)) return false;
    return true;
}

}  // namespace permtri::bridge
