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

#include "permtri/classify.hpp"

namespace permtri::classify {

namespace {

u64 ipow(u64 b, unsigned e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

// m-fold inverse Frobenius: a -> a^(p^(t-1)), applied m times
u64 inverse_frobenius(const gf::Field& F, u64 a, unsigned m) {
    u64 e = 1;
    for (unsigned i = 0; i + 1 < F.abs_degree(); ++i) e *= F.characteristic();
    for (unsigned i = 0; i < m; ++i) a = F.pow(a, e);
    return a;
}

// term-wise p^m-th power of a sparse polynomial (valid in characteristic p)
Poly frobenius_power(const Poly& f, unsigned m) {
    const gf::Field& F = *f.field;
    u64 pm = 1;
    for (unsigned i = 0; i < m; ++i) pm *= F.characteristic();
    Poly out{f.field, {}};
    for (auto& [e, c] : f.terms) out.set(e * pm, F.pow(c, pm));
    return out;
}

}  // namespace

std::pair<u64, unsigned> reduced_degree(u64 p, unsigned s, u64 r) {
    u64 ps = ipow(p, s);
    u64 d_closed;
    unsigned m_closed;
    if (r == 0) {
        d_closed = 0;
        m_closed = s;
    } else {
        unsigned u = 0;
        u64 v = r;
        while (v % p == 0) {
            v /= p;
            ++u;
        }
        if (u <= s) {
            d_closed = 2 * ipow(p, s - u) + v;
            m_closed = u;
        } else {
            d_closed = 2 + ipow(p, u - s) * v;
            m_closed = s;
        }
    }
    // cross-check against the divisibility definition of m
    u64 e2 = 2 * ps + r, e1 = ps + r;
    unsigned m_div = 0;
    u64 pm = p;
    while (e2 % pm == 0 && e1 % pm == 0 && (r == 0 || r % pm == 0)) {
        ++m_div;
        if (pm > e2 / p) break;
        pm *= p;
    }
    if (m_div != m_closed || (r != 0 && d_closed != e2 / ipow(p, m_closed)))
        throw std::logic_error("reduced_degree: closed form disagrees with definition");
    return {d_closed, m_closed};
}

NormalizedParams normalize(const TrinomialParams& params) {
    const gf::Field& F = *params.field;
    const u64 p = params.p();
    auto [d, m] = reduced_degree(p, params.s, params.r);
    NormalizedParams out;
    out.d = d;
    out.m = m;
    out.s2 = params.s - m;
    out.r2 = (params.r == 0) ? 0 : params.r / ipow(p, m);
    out.lambda2 = inverse_frobenius(F, params.lambda, m);

    // f_lambda must equal (f'_{lambda'})^(p^m) exactly
    TrinomialParams reduced = poly::make_params(params.field, out.s2, out.r2, out.lambda2);
    if (!(frobenius_power(poly::build_f(reduced), m) == poly::build_f(params)))
        throw std::logic_error("normalize: Frobenius identity failed");
    return out;
}

bool theorem_applicable(const TrinomialParams& params) {
    auto [d, m] = reduced_degree(params.p(), params.s, params.r);
    gf::u128 d4 = gf::u128(d) * d;
    d4 *= d4;
    return d4 < gf::u128(params.field->size());
}

bool theorem_predict(const TrinomialParams& params) {
    if (!theorem_applicable(params))
        throw std::invalid_argument("theorem_predict: hypothesis d^4 < p^t does not hold");
    const gf::Field& F = *params.field;
    const u64 p = params.p();
    const bool t_odd = params.t() % 2 == 1;
    NormalizedParams n = normalize(params);
    if (p == 2 && t_odd && n.r2 == 1 && n.lambda2 == 1 && (n.s2 == 0 || n.s2 == 1)) return true;
    if (p % 3 == 2 && t_odd && n.s2 == 0 && n.r2 == 1 && n.lambda2 == F.inv(3 % p)) return true;
    return false;
}

std::vector<Verdict> scan_lambda(const FieldPtr& field, unsigned s, u64 r, unsigned workers) {
    std::vector<char> pp = permcheck::sweep_lambda_is_pp(field, s, r, workers);
    const u64 q = field->size();
    std::vector<Verdict> out;
    out.reserve(q);
    for (u64 lam = 0; lam < q; ++lam) {
        Verdict v;
        v.params = poly::make_params(field, s, r, lam);
        auto [d, m] = reduced_degree(field->characteristic(), s, r);
        v.d = d;
        v.applicable = theorem_applicable(v.params);
        v.is_pp = pp[lam] != 0;
        if (v.applicable) {
            v.predicted = theorem_predict(v.params);
            v.agrees = (v.is_pp == *v.predicted);
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool r0_symmetry_check(const TrinomialParams& params) {
    if (params.r != 0) throw std::invalid_argument("r0_symmetry_check: r must be 0");
    const gf::Field& F = *params.field;
    // f = Y^2 + Y + lambda with Y = x^(p^s); in characteristic p,
    // (-x-1)^(p^s) = eps * (x^(p^s) + 1) with eps = (-1)^(p^s)
    const u64 eps = (F.characteristic() == 2) ? 1 : F.neg(1);
    Poly w{params.field, {}};
    w.set(params.ps(), eps);
    w.set(0, eps);
    Poly reflected = poly::add(poly::add(poly::mul(w, w), w),
                               poly::make_poly(params.field, {{0, params.lambda}}));
    bool identity = (reflected == poly::build_f(params));
    if (identity && F.size() <= gf::enumeration_cap()) {
        if (permcheck::is_pp(poly::build_f(params)))
            throw std::logic_error("r0_symmetry_check: symmetric trinomial permutes");
    }
    return identity;
}

CubicAnalysis cubic_diff_quotient_analysis(const FieldPtr& field, u64 lambda) {
    const gf::Field& F = *field;
    const u64 p = F.characteristic();
    if (p == 2) throw std::invalid_argument("cubic_diff_quotient_analysis: p must be odd");
    CubicAnalysis out;
    if (p == 3) return out;  // 1/3 does not exist, never splits
    if (lambda != F.inv(3 % p)) return out;

    const u64 minus3 = F.neg(3 % p);
    FieldPtr K = field;
    std::optional<u64> s3 = F.sqrt(minus3);
    if (s3) {
        out.kind = CubicSplit::splits_over_base;
    } else {
        K = gf::extend(field, 2);
        s3 = K->sqrt(minus3);  // every base element is a square in F_{q^2}
        if (!s3) throw std::logic_error("cubic_diff_quotient_analysis: sqrt(-3) missing in F_{q^2}");
        out.kind = CubicSplit::splits_over_quadratic_ext_only;
    }
    const gf::Field& E = *K;
    const u64 inv2 = E.inv(2);
    const u64 inv6 = E.inv(6 % p);
    LinearFactor f1{E.mul(E.add(1, *s3), inv2), E.add(inv2, E.mul(*s3, inv6))};
    LinearFactor f2{E.mul(E.sub(1, *s3), inv2), E.sub(inv2, E.mul(*s3, inv6))};

    // product must reproduce x^2 + xy + y^2 + x + y + lambda
    auto form = [&](const LinearFactor& lf) {
        poly::BiPoly b{K, {}};
        b.set(1, 0, 1);
        b.set(0, 1, lf.a);
        b.set(0, 0, lf.b);
        return b;
    };
    poly::BiPoly expect{K, {}};
    expect.set(2, 0, 1);
    expect.set(1, 1, 1);
    expect.set(0, 2, 1);
    expect.set(1, 0, 1);
    expect.set(0, 1, 1);
    expect.set(0, 0, lambda);
    if (!(poly::bi_mul(form(f1), form(f2)) == expect))
        throw std::logic_error("cubic_diff_quotient_analysis: factor product mismatch");

    out.factor_field = K;
    out.factors = std::make_pair(f1, f2);
    return out;
}

std::pair<bool, bool> minus3_square_iff(u64 p, unsigned t) {
    if (p == 3) throw std::invalid_argument("minus3_square_iff: p = 3 excluded");
    FieldPtr field = gf::make_field(p, t);
    bool lhs = !field->is_square(field->neg(3 % p));
    bool rhs = (t % 2 == 1) && (p % 3 == 2);
    return {lhs, rhs};
}

}  // namespace permtri::classify
