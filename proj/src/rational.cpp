#include "sepbip/rational.hpp"

#include "sepbip/error.hpp"

namespace sepbip {

std::string to_frac_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_frac(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            BigInt num(s);
            return Rational(num);
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) fail(ErrorCode::BadParameter, "zero denominator in '" + s + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(ErrorCode::BadParameter, "not a rational: '" + s + "'");
    }
}

double to_double(const Rational& r) {
    return r.get_d();
}

BigInt scaled_root(const BigInt& x, unsigned long k) {
    if (x <= 0 || k == 0) fail(ErrorCode::BadParameter, "scaled_root domain");
    BigInt scaled = x;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 32 * k);
    BigInt root;
    mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), k);
    return root;
}

Rational neg_power(unsigned long n, unsigned long a, unsigned long b) {
    if (n == 0 || b == 0) fail(ErrorCode::BadParameter, "neg_power domain");
    // n^(-a/b) = (n^a)^(-1/b); root = floor(n^(a/b) * 2^32).
    BigInt pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), n, a);
    BigInt root = scaled_root(pow, b);
    Rational r(BigInt(1) << 32, root);
    r.canonicalize();
    return r;
}

namespace {

// 2*atanh(z) = ln((1+z)/(1-z)) via the odd power series, tail bounded by the
// geometric series: remainder after the z^(2J+1) term is at most
// 2*z^(2J+3) / ((2J+3)*(1-z^2)).
LnInterval atanh_series(const Rational& z, const Rational& tol) {
    Rational z2 = z * z;
    Rational term = z;     // z^(2j+1)
    Rational sum = 0;
    unsigned j = 0;
    while (true) {
        sum += 2 * term / (2 * j + 1);
        Rational next = term * z2;
        Rational tail = 2 * next * z2 / ((2 * j + 5) * (1 - z2));
        // one more look-ahead term keeps the bound simple: after adding the
        // (j+1)-th term the remainder is <= tail
        if (tail < tol) {
            sum += 2 * next / (2 * j + 3);
            return {sum, sum + tail};
        }
        term = next;
        ++j;
    }
}

const LnInterval& ln2_interval() {
    // ln 2 = 2*atanh(1/3), cached to 1e-15.
    static const LnInterval iv =
        atanh_series(Rational(1, 3), Rational(1, BigInt("1000000000000000")));
    return iv;
}

} // namespace

LnInterval ln_interval(unsigned long d, const Rational& tol) {
    if (d < 1) fail(ErrorCode::BadParameter, "ln_interval needs d >= 1");
    if (d == 1) return {Rational(0), Rational(0)};
    unsigned long shift = 0;
    unsigned long m = d;
    while (m >= 2) {
        m >>= 1;
        ++shift;
    }
    // d = mant * 2^shift with mant = d / 2^shift in [1, 2)
    Rational mant(d, BigInt(1) << shift);
    mant.canonicalize();
    Rational z = (mant - 1) / (mant + 1); // in [0, 1/3)
    LnInterval mpart = atanh_series(z, tol / 2);
    const LnInterval& l2 = ln2_interval();
    return {mpart.lo + static_cast<long>(shift) * l2.lo,
            mpart.hi + static_cast<long>(shift) * l2.hi};
}

} // namespace sepbip
