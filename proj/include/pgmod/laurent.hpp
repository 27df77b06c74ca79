#pragma once

#include <vector>

#include "pgmod/fields.hpp"
#include "pgmod/padic.hpp"

namespace pgmod {

// Truncated Laurent series over F_{p^m}: coefficients are exact for every
// exponent in the window [ord, prec) and zero below ord; exponents >= prec
// are unknown. Carrier of the mod-p operators phi, psi, gamma_a and res.
struct LaurentSeries {
    int p = 0;
    int m = 1;
    int ord = 0;
    int prec = 1;
    std::vector<FieldElement> c; // c[i] = coefficient of X^(ord+i), size prec-ord

    static LaurentSeries zero(int p, int m, int ord, int prec);
    static LaurentSeries constant(const FieldElement& v, int prec);
    static LaurentSeries monomial(const FieldElement& v, int exp, int prec);

    bool same_ring(const LaurentSeries& o) const { return p == o.p && m == o.m; }
    int size() const { return prec - ord; }
    FieldElement at(int exp) const; // 0 below ord; throws window_miss at/above prec
    void set(int exp, const FieldElement& v);
    bool is_zero() const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries scaled(const FieldElement& s) const;
    LaurentSeries shifted(int k) const; // multiply by X^k
    LaurentSeries truncated(int new_prec) const;
    // Re-window to a lower start (padding known zeros below ord).
    LaurentSeries widened(int new_ord) const;

    bool equals_on_overlap(const LaurentSeries& o) const;
    std::string str() const;
};

// phi(f)(X) = f(X^p): in characteristic p, (1+X)^p - 1 = X^p.
// Output window [p*ord, p*(prec-1)+1).
LaurentSeries frobenius_phi(const LaurentSeries& f);

// The canonical left inverse of phi: psi(f) = y_0 in the decomposition
// f = sum_{i=0}^{p-1} (1+X)^i phi(y_i). Poles are cleared through
// psi(f) = X^(-s) psi(X^(ps) f); power-series blocks [pm, pm+p-1] are
// independent triangular systems with matrix C(i, r).
// Output precision floor((prec - (p-1))/p), shifted by -s after clearing.
LaurentSeries psi(const LaurentSeries& f);

// sum_{n < prec} C(z, n) X^n for z in Z_p given by digits.
LaurentSeries one_plus_x_pow(const ZpDigits& z, int m, int prec);

// gamma_a(f) = f((1+X)^a - 1) for a unit a in Z_p^x. Precision preserved;
// poles of order ord < 0 go through the inverse of the unit ((1+X)^a - 1)/X.
LaurentSeries gamma_act(const ZpDigits& a, const LaurentSeries& f);

// Coefficient of X^(-1). Exactly 0 when the window starts above -1 (the
// series has no pole); WindowMiss when prec <= -1, i.e. the coefficient is
// outside the known window.
FieldElement residue(const LaurentSeries& f);

// Inverse of a unit power series (ord 0, nonzero constant term), same window.
LaurentSeries invert_unit(const LaurentSeries& f);

// Substitution f(g) for g with ord >= 1, truncated to f's window. Used by
// gamma_act and exposed for tests.
LaurentSeries compose(const LaurentSeries& f, const LaurentSeries& g);

// A preimage h of `target` under psi with h in X^j * k[[X]], found by a
// linear solve over the coefficient field; throws when the system has no
// solution within the search space.
LaurentSeries psi_preimage_in(int j, const LaurentSeries& target);

} // namespace pgmod
