// Exact number types: arbitrary-precision integers and rationals (GMP-backed).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace balis {

using BigInt = mpz_class;
using Rat = mpq_class;   // always canonical: denominator > 0, lowest terms

inline int sign(const BigInt& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sign(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

inline Rat make_rat(const BigInt& num, const BigInt& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Serialized form is always "num/den", even for integers.
inline std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "num", "num/den", optional leading '-'.
std::optional<Rat> parse_rat(const std::string& text);

std::optional<BigInt> parse_bigint(const std::string& text);

// FNV-style hash over the limbs, suitable for hash maps keyed by exact values.
std::size_t hash_bigint(const BigInt& v);
std::size_t hash_rat(const Rat& v);

}  // namespace balis
