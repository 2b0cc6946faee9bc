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

#ifndef PERMTRI_POLY_HPP
#define PERMTRI_POLY_HPP

#include <map>
#include <utility>
#include <vector>

#include "permtri/gf.hpp"

namespace permtri::poly {

using gf::FieldPtr;
using gf::u64;

/// Univariate polynomial over a field, sparse exponent -> coefficient map
/// (all stored coefficients nonzero; the zero polynomial has empty support).
struct Poly {
    FieldPtr field;
    std::map<u64, u64> terms;

    /// Degree; the zero polynomial reports 0.
    u64 degree() const { return terms.empty() ? 0 : terms.rbegin()->first; }
    bool is_zero() const { return terms.empty(); }
    void set(u64 exponent, u64 coeff) {
        if (coeff == 0)
            terms.erase(exponent);
        else
            terms[exponent] = coeff;
    }
    u64 coeff(u64 exponent) const {
        auto it = terms.find(exponent);
        return it == terms.end() ? 0 : it->second;
    }
    bool operator==(const Poly& o) const { return terms == o.terms; }
};

/// Bivariate polynomial, support map (i, j) -> nonzero coefficient.
struct BiPoly {
    FieldPtr field;
    std::map<std::pair<u64, u64>, u64> terms;

    u64 total_degree() const;
    void set(u64 i, u64 j, u64 coeff) {
        if (coeff == 0)
            terms.erase({i, j});
        else
            terms[{i, j}] = coeff;
    }
    bool operator==(const BiPoly& o) const { return terms == o.terms; }
};

/// The tuple (p, t, s, r, lambda) defining the trinomial
/// x^(2p^s+r) + x^(p^s+r) + lambda x^r over F_{p^t}.
struct TrinomialParams {
    FieldPtr field;  // F_{p^t}
    unsigned s = 0;
    u64 r = 0;
    u64 lambda = 0;

    u64 p() const { return field->characteristic(); }
    unsigned t() const { return field->abs_degree(); }
    u64 ps() const;   // p^s
    u64 e2() const { return 2 * ps() + r; }
    u64 e1() const { return ps() + r; }
    u64 e0() const { return r; }
};

TrinomialParams make_params(const FieldPtr& field, unsigned s, u64 r, u64 lambda);

Poly make_poly(const FieldPtr& field, std::initializer_list<std::pair<u64, u64>> terms);
Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, u64 c);

u64 eval(const Poly& f, u64 x);
/// Evaluate with the coefficients embedded into an extension built over
/// f.field (canonical indices are preserved by the embedding).
u64 eval_in(const Poly& f, const FieldPtr& ext, u64 x);

/// f_lambda = x^(2p^s+r) + x^(p^s+r) + lambda x^r.
Poly build_f(const TrinomialParams& params);

/// g_{alpha,beta} = x^(2p^s+r) + alpha x^(p^s+r) + beta x^r; alpha != 0.
Poly build_g(const FieldPtr& field, unsigned s, u64 r, u64 alpha, u64 beta);

/// The substitution that turns g_{alpha,beta} into an f_lambda: gamma with
/// gamma^(p^s) = alpha, and lambda = beta / alpha^2. The identity
/// gamma^-(2p^s+r) * g(gamma x) = f_lambda(x) is verified coefficient by
/// coefficient before returning.
struct GeneralReduction {
    u64 gamma;
    u64 lambda;
};
GeneralReduction reduce_general_trinomial(const FieldPtr& field, unsigned s, u64 r,
                                          u64 alpha, u64 beta);

/// Dickson polynomial D_n(x, a): D_0 = 2, D_1 = x, D_k = x D_{k-1} - a D_{k-2}.
Poly dickson(const FieldPtr& field, u64 n, u64 a);

/// phi(x, y) with (x - y) phi(x, y) = f(x) - f(y); total degree deg f - 1.
BiPoly difference_quotient(const Poly& f);

u64 eval_bi(const BiPoly& phi, u64 x, u64 y);
BiPoly bi_mul(const BiPoly& a, const BiPoly& b);

/// All roots of f in the canonical degree-n extension of f.field, with
/// multiplicities, found by exhaustive evaluation plus synthetic division.
std::vector<std::pair<u64, unsigned>> roots_with_multiplicity(const Poly& f, unsigned n);

}  // namespace permtri::poly

#endif
