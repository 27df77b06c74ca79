#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgmod/errors.hpp"
#include "pgmod/fields.hpp"

namespace pgmod {

// Exact rational with small operands; used as the valuation scale (val(p) = 1)
// and as the independent oracle for p-adic digit arithmetic.
struct Fraction {
    long long num = 0;
    long long den = 1; // > 0, gcd(num, den) = 1

    Fraction() = default;
    Fraction(long long n, long long d = 1);

    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Fraction& o) const { return !(*this == o); }
    bool operator<(const Fraction& o) const;
    bool operator<=(const Fraction& o) const { return *this < o || *this == o; }
    bool operator>(const Fraction& o) const { return o < *this; }
    bool operator>=(const Fraction& o) const { return o <= *this; }

    std::string str() const;
    static Fraction parse(const std::string& s); // "3", "-1", "3/2"
};

// p-adic valuation of a nonzero rational, in units val(p) = 1.
long long rational_valuation(long long num, long long den, int p);

// Element of Z_p known modulo p^len, stored as base-p digits (least
// significant first). Doubles as the digit-list argument of the substitution
// operators (1+X)^z and gamma_a.
struct ZpDigits {
    int p = 0;
    std::vector<std::uint8_t> d;

    static ZpDigits from_int(int p, long long v, std::size_t len);
    static ZpDigits zero(int p, std::size_t len) { return from_int(p, 0, len); }
    static ZpDigits one(int p, std::size_t len) { return from_int(p, 1, len); }

    std::size_t length() const { return d.size(); }
    bool is_unit() const { return !d.empty() && d[0] != 0; }
    bool all_zero() const;
    int mod_p() const { return d.empty() ? 0 : d[0]; }

    ZpDigits truncated(std::size_t len) const;
    ZpDigits shifted(std::size_t k) const; // multiply by p^k (length grows by k)
    ZpDigits add(const ZpDigits& o) const; // mod p^min(len)
    ZpDigits mul(const ZpDigits& o) const; // mod p^min(len)
    ZpDigits negated() const;
    ZpDigits inverse() const; // requires unit; mod p^len

    // Value mod p^k as an integer (k small enough to fit).
    long long value_mod(std::size_t k) const;

    std::string str() const; // "d0,d1,..."
    static ZpDigits parse(int p, const std::string& s);
};

// C(a, n) mod p for a in Z_p, computed digit-by-digit (Lucas). Requires the
// digit list to cover every base-p digit of n.
FieldElement lucas_binomial(const ZpDigits& a, long long n);

// Nonzero element of Q_p^x in the form p^val * unit, or zero.
struct QpElement {
    int p = 0;
    bool zero = true;
    int val = 0;
    ZpDigits unit; // first digit nonzero when !zero

    static QpElement make(int p, int val, ZpDigits unit);
    static QpElement zero_of(int p) { return QpElement{p, true, 0, ZpDigits{p, {}}}; }
    static QpElement from_int(int p, long long v, std::size_t len);
    static QpElement from_rational(int p, long long num, long long den, std::size_t len);
    static QpElement one(int p, std::size_t len) { return from_int(p, 1, len); }

    bool is_unit() const { return !zero && val == 0; }
    QpElement mul(const QpElement& o) const;
    QpElement inverse() const;
    int residue_mod_p() const { return zero ? 0 : (val == 0 ? unit.mod_p() : 0); }
};

// Finite-precision element of Q_p(pi) with pi^e = p, e in {1, 2}.
// Digits dg[i] sit at pi^(ord+i); the value is known modulo pi^prec.
// Valuations are reported in units val(p) = 1, i.e. as (position)/e.
struct PadicScalar {
    int p = 0;
    int e = 1;
    int ord = 0;
    int prec = 0; // window is [ord, prec), prec >= ord
    std::vector<std::uint8_t> dg;
    bool exact = false; // digits are the complete expansion (trailing zeros)

    static PadicScalar zero(int p, int e, int prec);
    static PadicScalar from_rational(int p, int e, long long num, long long den, int prec);
    static PadicScalar from_pi_digits(int p, int e, int ord,
                                      const std::vector<std::uint8_t>& digits, int prec,
                                      bool exact = false);
    static PadicScalar from_qp(const QpElement& x, int prec); // e = 1

    int effective_prec() const;
    // Position of the first nonzero digit, or nullopt when the window shows
    // only zeros (exact zero or undetermined).
    std::optional<int> first_nonzero() const;
    bool is_exact_zero() const { return exact && !first_nonzero().has_value(); }

    Fraction valuation() const; // throws insufficient_precision when uncertified
    FieldElement residue() const; // F_p image; requires valuation 0

    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const;
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar operator/(const PadicScalar& o) const;

    std::string str() const;
};

} // namespace pgmod
