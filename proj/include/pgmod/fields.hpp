#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "pgmod/errors.hpp"

namespace pgmod {

// Element of F_p (m = 1) or F_{p^2} (m = 2), written c0 + c1*t on the fixed
// basis {1, t}. The defining polynomial of the quadratic extension is pinned
// so that serialized elements are reproducible: t^2 = n with n the least
// quadratic non-residue mod p for odd p, and t^2 = t + 1 for p = 2.
struct FieldElement {
    int p = 0;
    int m = 1;
    int c0 = 0;
    int c1 = 0;

    static FieldElement zero(int p, int m = 1) { return make(p, m, 0, 0); }
    static FieldElement one(int p, int m = 1) { return make(p, m, 1, 0); }
    static FieldElement gen(int p); // the basis element t of F_{p^2}
    static FieldElement from_int(int p, int m, long long v);
    static FieldElement make(int p, int m, int c0, int c1);

    bool is_zero() const { return c0 == 0 && c1 == 0; }
    bool same_field(const FieldElement& o) const { return p == o.p && m == o.m; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const {
        return p == o.p && m == o.m && c0 == o.c0 && c1 == o.c1;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inv() const;
    FieldElement pow(long long n) const;
    FieldElement frobenius() const; // x -> x^p
    FieldElement scaled(long long k) const { return *this * from_int(p, m, k); }

    // Embedding F_p -> F_{p^2}; identity when already quadratic.
    FieldElement embedded() const { return make(p, 2, c0, c1); }
    bool in_prime_field() const { return c1 == 0; }

    std::string str() const;
    static FieldElement parse(int p, int m, const std::string& s);
};

// Least quadratic non-residue mod an odd prime.
int least_nonresidue(int p);

// The two roots (with multiplicity) of x^2 - c*x + 1 = 0 over F_{p^2},
// for c in the prime field. Roots are returned in canonical order and
// satisfy r1 * r2 = 1, r1 + r2 = c.
std::pair<FieldElement, FieldElement> solve_unit_quadratic(const FieldElement& c);

} // namespace pgmod
