#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace sepbip {

// Exact rational arithmetic everywhere a density or probability is compared.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Serialized form is always "num/den" with den >= 1, gcd(num, den) = 1.
std::string to_frac_string(const Rational& r);

// Accepts "num/den" or a bare integer "num".
Rational parse_frac(const std::string& s);

double to_double(const Rational& r);

// floor(x^(1/k) * 2^32) for integer x >= 1, exact integer root.
BigInt scaled_root(const BigInt& x, unsigned long k);

// Rational approximation of n^(-a/b) with relative error < 2^-32,
// deterministic across platforms (integer roots only).
Rational neg_power(unsigned long n, unsigned long a, unsigned long b);

// Certified enclosure lo <= ln(x) <= hi with rational endpoints.
struct LnInterval {
    Rational lo;
    Rational hi;
};

// d >= 1; width of the returned interval is below `tol` (default 1e-9).
LnInterval ln_interval(unsigned long d, const Rational& tol = Rational(1, 1000000000));

} // namespace sepbip
