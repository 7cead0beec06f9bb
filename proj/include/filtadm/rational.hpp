#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace filtadm {

using Rat = mpq_class;
using Int = mpz_class;

// Always "num/den", also for integers.
std::string to_string(const Rat& q);

// Accepts "a/b", "a", optionally signed. Throws std::invalid_argument.
Rat parse_rational(std::string_view text);

// Exponent of the prime p in a nonzero rational. Throws on zero.
long valuation(const Rat& q, long p);

bool is_prime(long n);

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace filtadm
