#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace lazcad {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;
}

inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline int rat_sign(const Rat& a) { return sgn(a); }

// Largest integer <= a.
inline Int rat_floor(const Rat& a) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    return q;
}

inline Int rat_ceil(const Rat& a) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    return q;
}

// Parses "123", "-4/5". Returns nullopt on malformed input or zero denominator.
std::optional<Rat> rat_from_string(const std::string& text);

std::string rat_to_string(const Rat& a);

// Decimal approximation with the given number of fraction digits, truncated
// toward zero, e.g. 0.7548 for digits=4. Exact when the rational terminates.
std::string rat_to_decimal(const Rat& a, unsigned digits);

// Simplest rational in an interval: minimal denominator, ties broken by
// minimal |numerator|. Endpoints participate unless the corresponding side
// is open. Requires lo < hi, or lo == hi with both sides closed.
Rat simplest_rational_between(const Rat& lo, bool lo_open, const Rat& hi, bool hi_open);

}  // namespace lazcad
