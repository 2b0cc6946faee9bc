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

#include "permtri/permcheck.hpp"

#include <thread>

namespace permtri::permcheck {

namespace {

struct Bitset {
    std::vector<u64> words;
    explicit Bitset(u64 bits) : words((bits + 63) / 64, 0) {}
    // returns true if the bit was already set
    bool test_and_set(u64 i) {
        u64& w = words[i >> 6];
        u64 m = u64(1) << (i & 63);
        if (w & m) return true;
        w |= m;
        return false;
    }
};

void check_cap(const FieldPtr& field, const char* who) {
    if (field->size() > gf::enumeration_cap())
        throw gf::CapExceeded(std::string(who) + ": field size exceeds enumeration cap");
}

// Visit f(x) for every x, constant term first (x = 0), then multiplicatively
// g^0, g^1, ... keeping one running power per term. Visitor returns false to
// stop early.
template <class Visit>
void for_each_value(const Poly& f, Visit&& visit) {
    const gf::Field& F = *f.field;
    const u64 q = F.size();
    if (!visit(u64(0), f.coeff(0))) return;
    if (q == 1) return;
    const u64 g = F.generator();
    std::vector<u64> coeff, powg, cur;
    for (auto& [e, c] : f.terms) {
        coeff.push_back(c);
        powg.push_back(F.pow(g, e));
        cur.push_back(1);
    }
    const std::size_t k = coeff.size();
    u64 x = 1;
    for (u64 i = 0; i < q - 1; ++i) {
        u64 v = 0;
        for (std::size_t j = 0; j < k; ++j) v = F.add(v, F.mul(coeff[j], cur[j]));
        if (!visit(x, v)) return;
        x = F.mul(x, g);
        for (std::size_t j = 0; j < k; ++j) cur[j] = F.mul(cur[j], powg[j]);
    }
}

}  // namespace

bool is_pp(const Poly& f) {
    check_cap(f.field, "is_pp");
    const u64 q = f.field->size();
    Bitset seen(q);
    bool ok = true;
    for_each_value(f, [&](u64, u64 v) {
        if (seen.test_and_set(v)) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

PreimageHistogram preimage_counts(const Poly& f) {
    check_cap(f.field, "preimage_counts");
    const u64 q = f.field->size();
    std::vector<std::uint32_t> counts(q, 0);
    for_each_value(f, [&](u64, u64 v) {
        ++counts[v];
        return true;
    });
    PreimageHistogram h;
    for (u64 v = 0; v < q; ++v) ++h.counts[counts[v]];
    return h;
}

bool is_cpp(const Poly& f) {
    if (!is_pp(f)) return false;
    Poly shifted = poly::add(f, poly::make_poly(f.field, {{1, 1}}));
    return is_pp(shifted);
}

bool is_pp_via_curve(const Poly& f, u64 pair_cap) {
    const gf::Field& F = *f.field;
    const u64 q = F.size();
    if (gf::u128(q) * q > pair_cap) throw gf::CapExceeded("is_pp_via_curve: q^2 exceeds cap");
    // per-term power tables and an inverse table
    std::vector<std::vector<u64>> P;
    std::vector<u64> C;
    for (auto& [e, c] : f.terms) {
        P.push_back(gf::powers_of_all(f.field, e));
        C.push_back(c);
    }
    std::vector<u64> invtab(q, 0);
    for (u64 v = 1; v < q; ++v) invtab[v] = F.inv(v);

    const std::size_t k = C.size();
    for (u64 x = 0; x < q; ++x) {
        for (u64 y = x + 1; y < q; ++y) {
            const u64 inv_diff = invtab[F.sub(x, y)];
            u64 phi = 0;
            for (std::size_t j = 0; j < k; ++j) {
                // geometric sum x^(e-1) + ... + y^(e-1) = (x^e - y^e)/(x - y)
                u64 s = F.mul(F.sub(P[j][x], P[j][y]), inv_diff);
                phi = F.add(phi, F.mul(C[j], s));
            }
            if (phi == 0) return false;
        }
    }
    return true;
}

std::vector<char> sweep_lambda_is_pp(const FieldPtr& field, unsigned s, u64 r,
                                     unsigned workers) {
    check_cap(field, "sweep_lambda_is_pp");
    const gf::Field& F = *field;
    const u64 q = F.size();
    TrinomialParams base = poly::make_params(field, s, r, 0);
    std::vector<u64> pw2 = gf::powers_of_all(field, base.e2());
    std::vector<u64> pw1 = gf::powers_of_all(field, base.e1());
    std::vector<u64> pw0 = gf::powers_of_all(field, base.e0());
    std::vector<u64> head(q);  // x^(e2) + x^(e1)
    for (u64 x = 0; x < q; ++x) head[x] = F.add(pw2[x], pw1[x]);

    std::vector<char> out(q, 0);
    auto run = [&](u64 lo, u64 hi) {
        std::vector<std::uint32_t> stamp(q, 0);
        std::uint32_t epoch = 0;
        for (u64 lam = lo; lam < hi; ++lam) {
            ++epoch;
            bool pp = true;
            for (u64 x = 0; x < q; ++x) {
                u64 v = F.add(head[x], F.mul(lam, pw0[x]));
                if (stamp[v] == epoch) {
                    pp = false;
                    break;
                }
                stamp[v] = epoch;
            }
            out[lam] = pp ? 1 : 0;
        }
    };
    if (workers <= 1 || q < 64) {
        run(0, q);
    } else {
        std::vector<std::thread> pool;
        u64 chunk = (q + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            u64 lo = w * chunk, hi = std::min(q, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return out;
}

std::vector<char> sweep_lambda_curve(const FieldPtr& field, unsigned s, u64 r) {
    const gf::Field& F = *field;
    const u64 q = F.size();
    if (gf::u128(q) * q > (gf::u128(1) << 32))
        throw gf::CapExceeded("sweep_lambda_curve: q^2 too large");
    TrinomialParams base = poly::make_params(field, s, r, 0);
    std::vector<u64> pw2 = gf::powers_of_all(field, base.e2());
    std::vector<u64> pw1 = gf::powers_of_all(field, base.e1());
    std::vector<u64> pw0 = gf::powers_of_all(field, base.e0());
    std::vector<u64> invtab(q, 0);
    for (u64 v = 1; v < q; ++v) invtab[v] = F.inv(v);

    std::vector<char> ok(q, 1);
    for (u64 x = 0; x < q; ++x) {
        for (u64 y = x + 1; y < q; ++y) {
            const u64 inv_diff = invtab[F.sub(x, y)];
            u64 s21 = F.mul(F.add(F.sub(pw2[x], pw2[y]), F.sub(pw1[x], pw1[y])), inv_diff);
            u64 s0 = F.mul(F.sub(pw0[x], pw0[y]), inv_diff);
            if (s0 == 0) {
                if (s21 == 0) return std::vector<char>(q, 0);  // on the curve for every lambda
                continue;
            }
            // phi = s21 + lambda * s0 vanishes at exactly one lambda
            ok[F.mul(F.neg(s21), F.inv(s0))] = 0;
        }
    }
    return ok;
}

}  // namespace permtri::permcheck
