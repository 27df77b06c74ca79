#pragma once

#include <string>

#include "pgmod/fields.hpp"
#include "pgmod/padic.hpp"

namespace pgmod {

// Smooth character of Q_p^x with values in k_L = F_{p^2}, written
// omega^twist * mu_unit: it sends p to `unit` and a unit u to (u mod p)^twist.
// Galois characters are identified with these through the class-field
// normalization sending p to the inverse of arithmetic Frobenius.
struct MulCharacter {
    int p = 0;
    int twist = 0;      // reduced mod p-1
    FieldElement unit;  // in F_{p^2}, nonzero

    static MulCharacter trivial(int p);
    static MulCharacter omega(int p, int r = 1);
    static MulCharacter mu(const FieldElement& y); // y nonzero, embedded into F_{p^2}
    static MulCharacter make(int p, int twist, const FieldElement& y);

    MulCharacter operator*(const MulCharacter& o) const;
    MulCharacter inverse() const;
    MulCharacter pow(int n) const;
    bool operator==(const MulCharacter& o) const {
        return p == o.p && twist == o.twist && unit == o.unit;
    }
    bool operator!=(const MulCharacter& o) const { return !(*this == o); }
    bool operator<(const MulCharacter& o) const; // canonical order

    bool is_trivial() const { return twist == 0 && unit == FieldElement::one(p, 2); }

    FieldElement value_at_p() const { return unit; }
    FieldElement value_at_unit(const ZpDigits& u) const;
    FieldElement value_at(const QpElement& x) const;

    std::string str() const;                          // "1", "w^2", "mu(3)", "w^1*mu(1+2*t)"
    static MulCharacter parse(int p, const std::string& s);
};

// Character chi1 (x) chi2 of the upper-triangular Borel, acting on
// (a b; 0 d) by chi1(a) chi2(d).
struct BCharacter {
    MulCharacter left;
    MulCharacter right;

    bool operator==(const BCharacter& o) const { return left == o.left && right == o.right; }
    bool operator!=(const BCharacter& o) const { return !(*this == o); }
    bool operator<(const BCharacter& o) const {
        if (left != o.left) return left < o.left;
        return right < o.right;
    }
    std::string str() const { return left.str() + " (x) " + right.str(); }
};

} // namespace pgmod
