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

#ifndef PERMTRI_GF_HPP
#define PERMTRI_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace permtri::gf {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Thrown when an operation would require enumerating a field larger than
/// the configured cap (exit code 3 at the CLI level).
class CapExceeded : public std::runtime_error {
  public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration cap: default 2^24, overridable via the PERMTRI_CAP
/// environment variable (read once per process).
u64 enumeration_cap();

/// Largest field cardinality for which plain arithmetic is supported.
inline constexpr u64 kMaxFieldSize = u64(1) << 48;

bool is_prime(u64 n);

/// Prime factorization by trial division, pairs (prime, exponent).
std::vector<std::pair<u64, u64>> factorize(u64 n);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An explicit finite field, either a prime field F_p or an extension of
/// another Field by a monic irreducible modulus polynomial.
///
/// Elements are referred to by their canonical index in [0, q): the
/// little-endian base-|base| encoding of the coefficient vector in the
/// modulus root. Index 0 is the additive identity, index 1 the
/// multiplicative identity, and the prime subfield embeds as indices
/// 0..p-1. All operations are pure; a Field is immutable after
/// construction and may be shared across threads.
class Field {
  public:
    u64 characteristic() const { return p_; }
    u64 size() const { return q_; }
    /// Degree over the immediate base field (t for a field built on F_p).
    unsigned degree() const { return deg_; }
    /// Degree over the prime subfield.
    unsigned abs_degree() const { return abs_deg_; }
    /// Immediate base field; null for a prime field.
    const FieldPtr& base() const { return base_; }
    /// Monic modulus over the base field as element indices, length
    /// degree()+1; empty for a prime field.
    const std::vector<u64>& modulus() const { return modulus_; }

    u64 add(u64 a, u64 b) const;
    u64 sub(u64 a, u64 b) const;
    u64 neg(u64 a) const;
    u64 mul(u64 a, u64 b) const;
    u64 inv(u64 a) const;
    /// a^e with the convention pow(0, 0) = 1.
    u64 pow(u64 a, u64 e) const;

    bool is_square(u64 a) const;
    /// Square root when one exists; of the two roots the one with the
    /// smaller canonical index is returned.
    std::optional<u64> sqrt(u64 a) const;

    /// Order of a in the multiplicative group; a must be nonzero.
    u64 mult_order(u64 a) const;

    /// A fixed primitive element (generator of the unit group).
    u64 generator() const { return generator_; }

    /// Prime factors of q-1, without multiplicity.
    const std::vector<u64>& unit_order_factors() const { return unit_factors_; }

    /// Coefficient vector over the base field (little-endian), length degree().
    std::vector<u64> coeffs(u64 idx) const;
    u64 from_coeffs(const std::vector<u64>& c) const;

    bool has_log_tables() const { return !exp_.empty(); }

    /// Fast-path multiplication through the discrete-log tables; only
    /// valid when has_log_tables().
    u64 table_mul(u64 a, u64 b) const {
        if (a == 0 || b == 0) return 0;
        u64 s = u64(log_[a]) + u64(log_[b]);
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }

    ~Field() = default;
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    Field() = default;
    friend FieldPtr make_prime_field(u64 p);
    friend FieldPtr extend_with(const FieldPtr& base, std::vector<u64> modulus,
                                bool skip_irreducibility_check);

    void check(u64 a) const {
        if (a >= q_) throw std::invalid_argument("element index out of range");
    }
    u64 generic_mul(u64 a, u64 b) const;
    void build_tables();
    u64 find_generator() const;
    std::optional<u64> sqrt_scan(u64 a) const;
    std::optional<u64> sqrt_tonelli(u64 a) const;

    u64 p_ = 0;
    u64 q_ = 0;
    unsigned deg_ = 1;
    unsigned abs_deg_ = 1;
    FieldPtr base_;
    std::vector<u64> modulus_;
    std::vector<u64> unit_factors_;
    u64 generator_ = 0;
    std::vector<std::uint32_t> log_, exp_;  // q <= 2^16 only
};

FieldPtr make_prime_field(u64 p);

/// F_{p^t} with the canonical (lexicographically smallest irreducible)
/// modulus over F_p; t = 1 yields the prime field itself.
FieldPtr make_field(u64 p, unsigned t);

/// Degree-n extension of `base` with the canonical modulus.
FieldPtr extend(const FieldPtr& base, unsigned n);

/// Extension by an explicit monic modulus (element indices over `base`,
/// little-endian, length n+1); the modulus is checked irreducible.
FieldPtr extend_with(const FieldPtr& base, std::vector<u64> modulus,
                     bool skip_irreducibility_check = false);

/// Lexicographically smallest monic irreducible of degree n over `base`,
/// comparing coefficient tuples (c0..c_{n-1}) as base-q integers. Returned
/// with the leading 1, length n+1.
std::vector<u64> find_irreducible(const FieldPtr& base, unsigned n);

/// Irreducibility of a monic polynomial over `base` (dense little-endian
/// coefficients as element indices, leading coefficient 1).
bool poly_is_irreducible(const FieldPtr& base, const std::vector<u64>& f);

/// Smallest k >= 1 with q^k = 1 (mod n); requires gcd(q, n) = 1, n > 1.
u64 order_mod(u64 q, u64 n);

/// All q element indices in canonical order; throws CapExceeded past the cap.
std::vector<u64> enumerate(const FieldPtr& field);

/// x^e for every x in the field, indexed by canonical element index,
/// computed by one multiplicative walk (O(q) multiplications).
std::vector<u64> powers_of_all(const FieldPtr& field, u64 e);

}  // namespace permtri::gf

#endif
