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

#include "permtri/poly.hpp"

#include <algorithm>

namespace permtri::poly {

namespace {
// dense work is capped so high-degree sparse trinomials never blow up
constexpr u64 kMaxDenseDegree = 1 << 20;
}

u64 TrinomialParams::ps() const {
    u64 v = 1;
    for (unsigned i = 0; i < s; ++i) v *= p();
    return v;
}

TrinomialParams make_params(const FieldPtr& field, unsigned s, u64 r, u64 lambda) {
    if (lambda >= field->size()) throw std::invalid_argument("make_params: lambda out of range");
    TrinomialParams params{field, s, r, lambda};
    // overflow guard on the top exponent
    gf::u128 top = gf::u128(2) * params.ps() + r;
    if (top > (gf::u128(1) << 62)) throw std::invalid_argument("make_params: exponent overflow");
    return params;
}

Poly make_poly(const FieldPtr& field, std::initializer_list<std::pair<u64, u64>> terms) {
    Poly f{field, {}};
    for (auto& [e, c] : terms) f.set(e, field->add(f.coeff(e), c));
    return f;
}

Poly add(const Poly& a, const Poly& b) {
    if (a.field != b.field) throw std::invalid_argument("poly add: field mismatch");
    Poly out = a;
    for (auto& [e, c] : b.terms) out.set(e, a.field->add(out.coeff(e), c));
    return out;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.field != b.field) throw std::invalid_argument("poly mul: field mismatch");
    Poly out{a.field, {}};
    for (auto& [ea, ca] : a.terms)
        for (auto& [eb, cb] : b.terms)
            out.set(ea + eb, a.field->add(out.coeff(ea + eb), a.field->mul(ca, cb)));
    return out;
}

Poly scale(const Poly& a, u64 c) {
    Poly out{a.field, {}};
    if (c == 0) return out;
    for (auto& [e, co] : a.terms) out.set(e, a.field->mul(co, c));
    return out;
}

u64 eval(const Poly& f, u64 x) {
    const gf::Field& F = *f.field;
    u64 acc = 0;
    for (auto& [e, c] : f.terms) acc = F.add(acc, F.mul(c, F.pow(x, e)));
    return acc;
}

u64 eval_in(const Poly& f, const FieldPtr& ext, u64 x) {
    // the canonical index embedding keeps subfield coefficients unchanged
    for (FieldPtr walk = ext; walk != f.field; walk = walk->base())
        if (!walk) throw std::invalid_argument("eval_in: ext is not an extension of f.field");
    const gf::Field& F = *ext;
    u64 acc = 0;
    for (auto& [e, c] : f.terms) acc = F.add(acc, F.mul(c, F.pow(x, e)));
    return acc;
}

Poly build_f(const TrinomialParams& params) {
    Poly f{params.field, {}};
    f.set(params.e2(), 1);
    f.set(params.e1(), params.field->add(f.coeff(params.e1()), 1));
    f.set(params.e0(), params.field->add(f.coeff(params.e0()), params.lambda));
    return f;
}

Poly build_g(const FieldPtr& field, unsigned s, u64 r, u64 alpha, u64 beta) {
    if (alpha == 0) throw std::invalid_argument("build_g: alpha must be nonzero");
    TrinomialParams base = make_params(field, s, r, 0);
    Poly g{field, {}};
    g.set(base.e2(), 1);
    g.set(base.e1(), field->add(g.coeff(base.e1()), alpha));
    g.set(base.e0(), field->add(g.coeff(base.e0()), beta));
    return g;
}

GeneralReduction reduce_general_trinomial(const FieldPtr& field, unsigned s, u64 r,
                                          u64 alpha, u64 beta) {
    if (alpha == 0) throw std::invalid_argument("reduce_general_trinomial: alpha must be nonzero");
    const gf::Field& F = *field;
    const unsigned t = F.abs_degree();
    // the unique p^s-th root: s-fold inverse Frobenius a -> a^(p^(t-1))
    u64 proot_exp = 1;
    for (unsigned i = 0; i + 1 < t; ++i) proot_exp *= F.characteristic();
    u64 gamma = alpha;
    for (unsigned i = 0; i < s; ++i) gamma = F.pow(gamma, proot_exp);
    u64 lambda = F.mul(beta, F.inv(F.mul(alpha, alpha)));

    // verify gamma^-(2p^s+r) * g(gamma x) = f_lambda coefficient by coefficient
    TrinomialParams params = make_params(field, s, r, lambda);
    Poly g = build_g(field, s, r, alpha, beta);
    Poly substituted{field, {}};
    for (auto& [e, c] : g.terms) substituted.set(e, F.mul(c, F.pow(gamma, e)));
    u64 scale_c = F.inv(F.pow(gamma, params.e2()));
    Poly lhs = scale(substituted, scale_c);
    if (!(lhs == build_f(params)))
        throw std::logic_error("reduce_general_trinomial: reduction identity failed");
    return {gamma, lambda};
}

Poly dickson(const FieldPtr& field, u64 n, u64 a) {
    Poly d0 = make_poly(field, {{0, field->add(1, 1)}});  // constant 2
    Poly d1 = make_poly(field, {{1, 1}});
    if (n == 0) return d0;
    if (n == 1) return d1;
    Poly x = d1;
    for (u64 k = 2; k <= n; ++k) {
        Poly next = add(mul(x, d1), scale(d0, field->neg(a)));
        d0 = std::move(d1);
        d1 = std::move(next);
    }
    return d1;
}

u64 BiPoly::total_degree() const {
    u64 d = 0;
    for (auto& [ij, c] : terms) d = std::max(d, ij.first + ij.second);
    return d;
}

BiPoly difference_quotient(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("difference_quotient: deg f must be >= 1");
    if (f.degree() > 4096)
        throw std::invalid_argument("difference_quotient: degree too large to expand");
    BiPoly phi{f.field, {}};
    const gf::Field& F = *f.field;
    for (auto& [e, c] : f.terms) {
        // x^e - y^e = (x - y) (x^(e-1) + x^(e-2) y + ... + y^(e-1))
        for (u64 i = 0; i < e; ++i) {
            auto key = std::make_pair(e - 1 - i, i);
            phi.set(key.first, key.second, F.add(phi.terms.count(key) ? phi.terms[key] : 0, c));
        }
    }
    return phi;
}

u64 eval_bi(const BiPoly& phi, u64 x, u64 y) {
    const gf::Field& F = *phi.field;
    u64 acc = 0;
    for (auto& [ij, c] : phi.terms)
        acc = F.add(acc, F.mul(c, F.mul(F.pow(x, ij.first), F.pow(y, ij.second))));
    return acc;
}

BiPoly bi_mul(const BiPoly& a, const BiPoly& b) {
    if (a.field != b.field) throw std::invalid_argument("bi_mul: field mismatch");
    BiPoly out{a.field, {}};
    const gf::Field& F = *a.field;
    for (auto& [ia, ca] : a.terms)
        for (auto& [ib, cb] : b.terms) {
            auto key = std::make_pair(ia.first + ib.first, ia.second + ib.second);
            u64 prev = out.terms.count(key) ? out.terms[key] : 0;
            out.set(key.first, key.second, F.add(prev, F.mul(ca, cb)));
        }
    return out;
}

std::vector<std::pair<u64, unsigned>> roots_with_multiplicity(const Poly& f, unsigned n) {
    if (f.is_zero()) throw std::invalid_argument("roots_with_multiplicity: zero polynomial");
    if (f.degree() > kMaxDenseDegree)
        throw std::invalid_argument("roots_with_multiplicity: degree too large");
    FieldPtr ext = gf::extend(f.field, n);
    if (ext->size() > gf::enumeration_cap())
        throw gf::CapExceeded("roots_with_multiplicity: extension exceeds cap");
    const gf::Field& F = *ext;
    // dense coefficients over the extension (index embedding is identity)
    std::vector<u64> dense(f.degree() + 1, 0);
    for (auto& [e, c] : f.terms) dense[e] = c;

    std::vector<std::pair<u64, unsigned>> out;
    for (u64 x = 0; x < F.size(); ++x) {
        // Horner
        u64 acc = 0;
        for (std::size_t i = dense.size(); i-- > 0;) acc = F.add(F.mul(acc, x), dense[i]);
        if (acc != 0) continue;
        // multiplicity by repeated synthetic division by (X - x)
        std::vector<u64> work = dense;
        unsigned mult = 0;
        for (;;) {
            // divide work by (X - x); remainder must be zero to count
            std::vector<u64> quot(work.size() - 1, 0);
            u64 carry = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                u64 v = F.add(work[i], F.mul(carry, x));
                if (i == 0) {
                    carry = v;  // remainder
                } else {
                    quot[i - 1] = v;
                    carry = v;
                }
            }
            if (carry != 0) break;
            ++mult;
            work = std::move(quot);
            if (work.size() <= 1) break;
        }
        out.emplace_back(x, mult);
    }
    return out;
}

}  // namespace permtri::poly
