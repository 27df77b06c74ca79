#include "pgmod/characters.hpp"

namespace pgmod {

namespace {

int mod_twist(int t, int p) {
    int n = p - 1;
    if (n <= 0) return 0;
    int r = t % n;
    return r < 0 ? r + n : r;
}

} // namespace

MulCharacter MulCharacter::make(int p, int twist, const FieldElement& y) {
    if (y.p != p) fail(errc::mismatched_field, "character unit over the wrong prime");
    FieldElement u = y.m == 2 ? y : y.embedded();
    if (u.is_zero()) fail(errc::bad_input, "character unit must be nonzero");
    MulCharacter c;
    c.p = p;
    c.twist = mod_twist(twist, p);
    c.unit = u;
    return c;
}

MulCharacter MulCharacter::trivial(int p) { return make(p, 0, FieldElement::one(p, 2)); }
MulCharacter MulCharacter::omega(int p, int r) { return make(p, r, FieldElement::one(p, 2)); }
MulCharacter MulCharacter::mu(const FieldElement& y) { return make(y.p, 0, y); }

MulCharacter MulCharacter::operator*(const MulCharacter& o) const {
    if (p != o.p) fail(errc::mismatched_field, "characters over different primes");
    return make(p, twist + o.twist, unit * o.unit);
}

MulCharacter MulCharacter::inverse() const { return make(p, -twist, unit.inv()); }

MulCharacter MulCharacter::pow(int n) const {
    return make(p, twist * n, unit.pow(n));
}

bool MulCharacter::operator<(const MulCharacter& o) const {
    if (twist != o.twist) return twist < o.twist;
    if (unit.c0 != o.unit.c0) return unit.c0 < o.unit.c0;
    return unit.c1 < o.unit.c1;
}

FieldElement MulCharacter::value_at_unit(const ZpDigits& u) const {
    if (u.p != p) fail(errc::mismatched_field, "unit digits over the wrong prime");
    if (!u.is_unit()) fail(errc::not_a_unit, "character evaluated at a non-unit");
    return FieldElement::from_int(p, 2, u.mod_p()).pow(twist);
}

FieldElement MulCharacter::value_at(const QpElement& x) const {
    if (x.zero) fail(errc::bad_input, "character evaluated at zero");
    return unit.pow(x.val) * value_at_unit(x.unit);
}

std::string MulCharacter::str() const {
    std::string s;
    if (twist != 0) s += "w^" + std::to_string(twist);
    if (!(unit == FieldElement::one(p, 2))) {
        if (!s.empty()) s += "*";
        s += "mu(" + unit.str() + ")";
    }
    return s.empty() ? "1" : s;
}

MulCharacter MulCharacter::parse(int p, const std::string& s) {
    if (s.empty()) fail(errc::bad_input, "empty character string");
    if (s == "1") return trivial(p);
    int twist = 0;
    FieldElement unit = FieldElement::one(p, 2);
    std::size_t i = 0;
    if (s[i] == 'w') {
        ++i;
        if (i < s.size() && s[i] == '^') {
            ++i;
            std::size_t start = i;
            if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (start == i) fail(errc::bad_input, "bad omega exponent in '" + s + "'");
            twist = std::atoi(s.substr(start, i - start).c_str());
        } else {
            twist = 1;
        }
        if (i < s.size()) {
            if (s[i] != '*') fail(errc::bad_input, "cannot parse character '" + s + "'");
            ++i;
        }
    }
    if (i < s.size()) {
        if (s.compare(i, 3, "mu(") != 0 || s.back() != ')')
            fail(errc::bad_input, "cannot parse character '" + s + "'");
        std::string inner = s.substr(i + 3, s.size() - i - 4);
        unit = FieldElement::parse(p, 2, inner).embedded();
    }
    return make(p, twist, unit);
}

} // namespace pgmod
