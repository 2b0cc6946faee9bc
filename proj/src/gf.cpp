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

#include "permtri/gf.hpp"

#include <algorithm>
#include <cstdlib>

namespace permtri::gf {

u64 enumeration_cap() {
    static const u64 cap = [] {
        if (const char* env = std::getenv("PERMTRI_CAP")) {
            char* end = nullptr;
            u64 v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v >= 2) return v;
        }
        return u64(1) << 24;
    }();
    return cap;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d : {2ull, 3ull, 5ull}) {
        if (n % d == 0) return n == d;
    }
    // wheel over 6k +- 1
    for (u64 d = 7; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 4) == 0) return false;
    }
    return true;
}

std::vector<std::pair<u64, u64>> factorize(u64 n) {
    std::vector<std::pair<u64, u64>> out;
    for (u64 d = 2; d * d <= n; d += (d == 2) ? 1 : 2) {
        if (n % d == 0) {
            u64 e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

namespace {

u64 mulmod(u64 a, u64 b, u64 p) { return u64(u128(a) * b % p); }

// ---- dense polynomial helpers over an arbitrary Field (used for
// irreducibility testing; coefficients are element indices, little-endian)

using PolyVec = std::vector<u64>;

void trim(PolyVec& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// a * b mod m, with m monic of degree n
PolyVec pv_mulmod(const Field& F, const PolyVec& a, const PolyVec& b, const PolyVec& m) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = m.size() - 1;
    PolyVec prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
        }
    }
    for (std::size_t i = prod.size(); i-- > n;) {
        u64 c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (m[j] != 0) prod[i - n + j] = F.sub(prod[i - n + j], F.mul(c, m[j]));
        }
    }
    prod.resize(n);
    trim(prod);
    return prod;
}

PolyVec pv_powmod(const Field& F, PolyVec base, u64 e, const PolyVec& m) {
    PolyVec r{1};
    while (e) {
        if (e & 1) r = pv_mulmod(F, r, base, m);
        e >>= 1;
        if (e) base = pv_mulmod(F, base, base, m);
    }
    return r;
}

PolyVec pv_mod(const Field& F, PolyVec a, const PolyVec& m) {
    std::size_t n = m.size() - 1;
    u64 lead_inv = F.inv(m.back());
    trim(a);
    while (a.size() > n) {
        u64 c = F.mul(a.back(), lead_inv);
        std::size_t off = a.size() - m.size();
        for (std::size_t j = 0; j + 1 < m.size(); ++j)
            if (m[j] != 0) a[off + j] = F.sub(a[off + j], F.mul(c, m[j]));
        a.pop_back();
        trim(a);
    }
    return a;
}

PolyVec pv_gcd(const Field& F, PolyVec a, PolyVec b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyVec r = pv_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

bool poly_is_irreducible(const FieldPtr& base, const std::vector<u64>& f) {
    if (f.empty() || f.back() != 1)
        throw std::invalid_argument("poly_is_irreducible: polynomial must be monic");
    const Field& F = *base;
    std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    const u64 q = F.size();
    // h_k = x^(q^k) mod f, via k successive q-th powers
    PolyVec h{0, 1};
    std::vector<u64> prime_divs;
    for (auto& [pr, e] : factorize(u64(n))) prime_divs.push_back(pr);
    for (std::size_t k = 1; k <= n; ++k) {
        h = pv_powmod(F, h, q, f);
        if (k < n && n % k == 0 && std::find(prime_divs.begin(), prime_divs.end(), n / k) !=
                                       prime_divs.end()) {
            // gcd(x^(q^k) - x, f) must be trivial for k = n/ell
            PolyVec diff = h;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = F.sub(diff[1], 1);
            trim(diff);
            PolyVec g = pv_gcd(F, f, diff);
            if (g.size() != 1) return false;
        }
    }
    return h.size() == 2 && h[0] == 0 && h[1] == 1;
}

std::vector<u64> find_irreducible(const FieldPtr& base, unsigned n) {
    if (n == 0) throw std::invalid_argument("find_irreducible: degree must be >= 1");
    const u64 q = base->size();
    u128 total = 1;
    for (unsigned i = 0; i < n; ++i) total *= q;
    std::vector<u64> f(n + 1, 0);
    f[n] = 1;
    for (u128 c = 0; c < total; ++c) {
        u128 v = c;
        for (unsigned i = 0; i < n; ++i) {
            f[i] = u64(v % q);
            v /= q;
        }
        if (poly_is_irreducible(base, f)) return f;
    }
    throw std::logic_error("find_irreducible: no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// Field

FieldPtr make_prime_field(u64 p) {
    if (!is_prime(p)) throw std::invalid_argument("make_prime_field: p is not prime");
    if (p > kMaxFieldSize) throw std::invalid_argument("make_prime_field: p too large");
    auto F = std::shared_ptr<Field>(new Field());
    F->p_ = p;
    F->q_ = p;
    F->deg_ = 1;
    F->abs_deg_ = 1;
    for (auto& [pr, e] : factorize(p - 1)) F->unit_factors_.push_back(pr);
    F->build_tables();
    F->generator_ = F->find_generator();
    return F;
}

FieldPtr extend_with(const FieldPtr& base, std::vector<u64> modulus,
                     bool skip_irreducibility_check) {
    if (!base) throw std::invalid_argument("extend_with: null base field");
    if (modulus.size() < 2 || modulus.back() != 1)
        throw std::invalid_argument("extend_with: modulus must be monic of degree >= 1");
    for (u64 c : modulus)
        if (c >= base->size()) throw std::invalid_argument("extend_with: modulus coefficient out of range");
    if (!skip_irreducibility_check && !poly_is_irreducible(base, modulus))
        throw std::invalid_argument("extend_with: modulus is reducible");
    unsigned n = unsigned(modulus.size() - 1);
    u128 q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= base->size();
        if (q > kMaxFieldSize) throw std::invalid_argument("extend_with: field too large");
    }
    auto F = std::shared_ptr<Field>(new Field());
    F->p_ = base->characteristic();
    F->q_ = u64(q);
    F->deg_ = n;
    F->abs_deg_ = n * base->abs_degree();
    F->base_ = base;
    F->modulus_ = std::move(modulus);
    for (auto& [pr, e] : factorize(F->q_ - 1)) F->unit_factors_.push_back(pr);
    F->build_tables();
    F->generator_ = F->find_generator();
    return F;
}

FieldPtr extend(const FieldPtr& base, unsigned n) {
    if (n == 1) {
        // a degree-1 "extension" is the field itself
        return base;
    }
    return extend_with(base, find_irreducible(base, n), /*skip=*/true);
}

FieldPtr make_field(u64 p, unsigned t) {
    if (t == 0) throw std::invalid_argument("make_field: t must be >= 1");
    auto prime = make_prime_field(p);
    if (t == 1) return prime;
    return extend(prime, t);
}

std::vector<u64> Field::coeffs(u64 idx) const {
    check(idx);
    std::vector<u64> c(deg_, 0);
    if (base_) {
        const u64 bq = base_->size();
        for (unsigned i = 0; i < deg_; ++i) {
            c[i] = idx % bq;
            idx /= bq;
        }
    } else {
        c[0] = idx;
    }
    return c;
}

u64 Field::from_coeffs(const std::vector<u64>& c) const {
    if (c.size() > deg_) throw std::invalid_argument("from_coeffs: too many coefficients");
    const u64 bq = base_ ? base_->size() : q_;
    u64 idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= bq) throw std::invalid_argument("from_coeffs: coefficient out of range");
        idx = idx * bq + c[i];
    }
    return idx;
}

u64 Field::add(u64 a, u64 b) const {
    check(a);
    check(b);
    if (!base_) {
        u64 s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    if (p_ == 2) return a ^ b;
    const u64 bq = base_->size();
    u64 out = 0, mult = 1;
    for (unsigned i = 0; i < deg_; ++i) {
        out += base_->add(a % bq, b % bq) * mult;
        a /= bq;
        b /= bq;
        mult *= bq;
    }
    return out;
}

u64 Field::neg(u64 a) const {
    check(a);
    if (!base_) return a == 0 ? 0 : q_ - a;
    if (p_ == 2) return a;
    const u64 bq = base_->size();
    u64 out = 0, mult = 1;
    for (unsigned i = 0; i < deg_; ++i) {
        out += base_->neg(a % bq) * mult;
        a /= bq;
        mult *= bq;
    }
    return out;
}

u64 Field::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 Field::generic_mul(u64 a, u64 b) const {
    if (!base_) return mulmod(a, b, q_);
    if (a == 0 || b == 0) return 0;
    if (deg_ > 48) throw std::logic_error("generic_mul: degree out of range");
    const Field& B = *base_;
    const u64 bq = B.size();
    u64 da[64], db[64], buf[128];
    for (unsigned i = 0; i < deg_; ++i) {
        da[i] = a % bq;
        a /= bq;
        db[i] = b % bq;
        b /= bq;
    }
    unsigned plen = 2 * deg_ - 1;
    for (unsigned i = 0; i < plen; ++i) buf[i] = 0;
    for (unsigned i = 0; i < deg_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < deg_; ++j) {
            if (db[j] == 0) continue;
            buf[i + j] = B.add(buf[i + j], B.mul(da[i], db[j]));
        }
    }
    for (unsigned i = plen; i-- > deg_;) {
        u64 c = buf[i];
        if (c == 0) continue;
        buf[i] = 0;
        for (unsigned j = 0; j < deg_; ++j) {
            if (modulus_[j] != 0)
                buf[i - deg_ + j] = B.sub(buf[i - deg_ + j], B.mul(c, modulus_[j]));
        }
    }
    u64 out = 0;
    for (unsigned i = deg_; i-- > 0;) out = out * bq + buf[i];
    return out;
}

u64 Field::mul(u64 a, u64 b) const {
    check(a);
    check(b);
    if (!exp_.empty()) return table_mul(a, b);
    return generic_mul(a, b);
}

u64 Field::pow(u64 a, u64 e) const {
    check(a);
    if (a == 0) return e == 0 ? 1 : 0;
    if (!exp_.empty()) {
        u64 l = mulmod(log_[a], e % (q_ - 1), q_ - 1);
        return exp_[l];
    }
    if (e >= q_ - 1) e %= q_ - 1;
    u64 r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return r;
}

u64 Field::inv(u64 a) const {
    check(a);
    if (a == 0) throw std::domain_error("inv: division by zero");
    if (!exp_.empty()) {
        u64 l = log_[a];
        return exp_[l == 0 ? 0 : q_ - 1 - l];
    }
    return pow(a, q_ - 2);
}

bool Field::is_square(u64 a) const {
    check(a);
    if (p_ == 2 || a == 0) return true;
    return pow(a, (q_ - 1) / 2) == 1;
}

std::optional<u64> Field::sqrt_scan(u64 a) const {
    for (u64 r = 0; r < q_; ++r)
        if (mul(r, r) == a) return r;
    return std::nullopt;
}

std::optional<u64> Field::sqrt_tonelli(u64 a) const {
    // odd q, a a nonzero square
    u64 m = q_ - 1;
    unsigned z = 0;
    while ((m & 1) == 0) {
        m >>= 1;
        ++z;
    }
    if (z == 1) {
        u64 r = pow(a, (q_ + 1) / 4);
        return r;
    }
    u64 nonsq = 2;
    while (nonsq < q_ && is_square(nonsq)) ++nonsq;
    u64 c = pow(nonsq, m);
    u64 t = pow(a, m);
    u64 r = pow(a, (m + 1) / 2);
    unsigned mm = z;
    while (t != 1) {
        u64 tt = t;
        unsigned i = 0;
        while (tt != 1) {
            tt = mul(tt, tt);
            ++i;
        }
        u64 b = c;
        for (unsigned j = 0; j + i + 1 < mm; ++j) b = mul(b, b);
        r = mul(r, b);
        c = mul(b, b);
        t = mul(t, c);
        mm = i;
    }
    return r;
}

std::optional<u64> Field::sqrt(u64 a) const {
    check(a);
    if (a == 0) return u64(0);
    if (p_ == 2) return pow(a, q_ / 2);  // squaring is a bijection in char 2
    if (!is_square(a)) return std::nullopt;
    std::optional<u64> r = (q_ <= (u64(1) << 12)) ? sqrt_scan(a) : sqrt_tonelli(a);
    if (!r) return r;
    return std::min(*r, neg(*r));
}

u64 Field::mult_order(u64 a) const {
    check(a);
    if (a == 0) throw std::domain_error("mult_order: zero has no multiplicative order");
    u64 k = q_ - 1;
    for (u64 f : unit_factors_) {
        while (k % f == 0 && pow(a, k / f) == 1) k /= f;
    }
    return k;
}

u64 Field::find_generator() const {
    if (q_ == 2) return 1;
    for (u64 g = 2; g < q_; ++g) {
        bool ok = true;
        for (u64 f : unit_factors_) {
            if (pow(g, (q_ - 1) / f) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("find_generator: no generator (unit group not cyclic?)");
}

void Field::build_tables() {
    if (q_ > (u64(1) << 16) || q_ < 3) return;
    // need a generator before the tables exist; search with generic ops
    u64 g = 0;
    for (u64 cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (u64 f : unit_factors_) {
            u64 e = (q_ - 1) / f, r = 1, b = cand;
            while (e) {
                if (e & 1) r = generic_mul(r, b);
                e >>= 1;
                if (e) b = generic_mul(b, b);
            }
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = cand;
            break;
        }
    }
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    u64 x = 1;
    for (u64 i = 0; i < q_ - 1; ++i) {
        exp_[i] = std::uint32_t(x);
        log_[x] = std::uint32_t(i);
        x = generic_mul(x, g);
    }
    if (x != 1) throw std::logic_error("build_tables: generator order mismatch");
}

u64 order_mod(u64 q, u64 n) {
    if (n <= 1) throw std::invalid_argument("order_mod: modulus must be > 1");
    q %= n;
    u64 a = q, b = n;
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    if (a != 1) throw std::invalid_argument("order_mod: arguments not coprime");
    u64 v = q % n, k = 1;
    while (v != 1) {
        v = mulmod(v, q, n);
        ++k;
        if (k > n) throw std::logic_error("order_mod: order not found");
    }
    return k;
}

std::vector<u64> enumerate(const FieldPtr& field) {
    if (field->size() > enumeration_cap())
        throw CapExceeded("enumerate: field size exceeds enumeration cap");
    std::vector<u64> out(field->size());
    for (u64 i = 0; i < field->size(); ++i) out[i] = i;
    return out;
}

std::vector<u64> powers_of_all(const FieldPtr& field, u64 e) {
    const Field& F = *field;
    const u64 q = F.size();
    if (q > enumeration_cap()) throw CapExceeded("powers_of_all: field size exceeds cap");
    std::vector<u64> out(q);
    out[0] = (e == 0) ? 1 : 0;  // 0^0 = 1 by convention
    if (q == 1) return out;
    const u64 g = F.generator();
    const u64 ge = F.pow(g, e);
    u64 x = 1, y = 1;
    for (u64 i = 0; i < q - 1; ++i) {
        out[x] = y;
        x = F.mul(x, g);
        y = F.mul(y, ge);
    }
    return out;
}

}  // namespace permtri::gf
