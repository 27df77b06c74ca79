#include "pgmod/fields.hpp"

#include <cstdlib>
#include <vector>

namespace pgmod {

namespace {

int mod(long long v, int p) {
    int r = static_cast<int>(v % p);
    return r < 0 ? r + p : r;
}

void check_same(const FieldElement& a, const FieldElement& b) {
    if (!a.same_field(b))
        fail(errc::mismatched_field, "operands live in different fields (p=" +
                                         std::to_string(a.p) + ",m=" + std::to_string(a.m) +
                                         ") vs (p=" + std::to_string(b.p) +
                                         ",m=" + std::to_string(b.m) + ")");
}

} // namespace

namespace {

int compute_least_nonresidue(int p) {
    std::vector<bool> is_square(p, false);
    for (int x = 1; x < p; ++x) is_square[(x * x) % p] = true;
    for (int n = 2; n < p; ++n)
        if (!is_square[n]) return n;
    fail(errc::bad_input, "no quadratic non-residue mod " + std::to_string(p));
}

} // namespace

int least_nonresidue(int p) {
    // Cached: this sits inside the F_{p^2} multiplication inner loop. The
    // table is built once under the usual static-initialization guarantee.
    static const std::vector<int> table = [] {
        std::vector<int> t(256, 0);
        for (int q = 3; q < 256; q += 2) {
            bool prime = true;
            for (int d = 3; d * d <= q; d += 2)
                if (q % d == 0) prime = false;
            if (prime) t[static_cast<std::size_t>(q)] = compute_least_nonresidue(q);
        }
        return t;
    }();
    if (p >= 3 && p < 256 && table[static_cast<std::size_t>(p)] != 0)
        return table[static_cast<std::size_t>(p)];
    return compute_least_nonresidue(p);
}

FieldElement FieldElement::make(int p, int m, int c0, int c1) {
    if (p < 2 || (m != 1 && m != 2)) fail(errc::bad_input, "field parameters out of range");
    FieldElement x;
    x.p = p;
    x.m = m;
    x.c0 = mod(c0, p);
    x.c1 = m == 2 ? mod(c1, p) : 0;
    if (m == 1 && mod(c1, p) != 0) fail(errc::bad_input, "prime-field element with t-component");
    return x;
}

FieldElement FieldElement::gen(int p) { return make(p, 2, 0, 1); }

FieldElement FieldElement::from_int(int p, int m, long long v) { return make(p, m, mod(v, p), 0); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(*this, o);
    return make(p, m, mod(c0 + o.c0, p), mod(c1 + o.c1, p));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(*this, o);
    return make(p, m, mod(c0 - o.c0, p), mod(c1 - o.c1, p));
}

FieldElement FieldElement::operator-() const { return make(p, m, mod(-c0, p), mod(-c1, p)); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(*this, o);
    if (m == 1) return make(p, 1, mod(1LL * c0 * o.c0, p), 0);
    long long a0 = c0, a1 = c1, b0 = o.c0, b1 = o.c1;
    long long cross = a0 * b1 + a1 * b0;
    long long sq = a1 * b1; // coefficient of t^2
    if (p == 2) {
        // t^2 = t + 1
        return make(p, 2, mod(a0 * b0 + sq, p), mod(cross + sq, p));
    }
    long long n = least_nonresidue(p); // t^2 = n
    return make(p, 2, mod(a0 * b0 + n * sq, p), mod(cross, p));
}

FieldElement FieldElement::frobenius() const {
    if (m == 1) return *this;
    if (p == 2) return make(p, 2, mod(c0 + c1, p), c1); // t^2 = t + 1
    // For odd p, t^p = -t since t^2 is a non-residue.
    return make(p, 2, c0, mod(-c1, p));
}

FieldElement FieldElement::inv() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero in F_{p^m}");
    if (m == 1) {
        for (int x = 1; x < p; ++x)
            if (mod(1LL * c0 * x, p) == 1) return make(p, 1, x, 0);
        fail(errc::bad_input, "unreachable: no inverse mod prime");
    }
    FieldElement conj = frobenius();
    FieldElement nrm = *this * conj; // lands in F_p
    FieldElement nrm_inv = make(p, 1, nrm.c0, 0).inv();
    return conj * make(p, 2, nrm_inv.c0, 0);
}

FieldElement FieldElement::pow(long long n) const {
    if (n < 0) return inv().pow(-n);
    FieldElement acc = one(p, m);
    FieldElement base = *this;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string FieldElement::str() const {
    if (c1 == 0) return std::to_string(c0);
    return std::to_string(c0) + "+" + std::to_string(c1) + "*t";
}

FieldElement FieldElement::parse(int p, int m, const std::string& s) {
    // Accepts "c0", "c0+c1*t", "c1*t", "t".
    int c0 = 0, c1 = 0;
    std::size_t i = 0;
    auto read_int = [&](void) -> int {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail(errc::bad_input, "cannot parse field element '" + s + "'");
        return std::atoi(s.substr(start, i - start).c_str());
    };
    if (s.empty()) fail(errc::bad_input, "empty field element string");
    if (s == "t") return make(p, 2, 0, 1);
    int first = read_int();
    if (i == s.size()) {
        c0 = first;
    } else if (s[i] == '*') {
        if (s.substr(i) != "*t") fail(errc::bad_input, "cannot parse field element '" + s + "'");
        c1 = first;
    } else if (s[i] == '+') {
        c0 = first;
        ++i;
        if (i < s.size() && s[i] == 't' && i + 1 == s.size()) {
            c1 = 1;
        } else {
            c1 = read_int();
            if (s.substr(i) != "*t") fail(errc::bad_input, "cannot parse field element '" + s + "'");
        }
    } else {
        fail(errc::bad_input, "cannot parse field element '" + s + "'");
    }
    int mm = (c1 != 0) ? 2 : m;
    return make(p, mm, c0, c1);
}

std::pair<FieldElement, FieldElement> solve_unit_quadratic(const FieldElement& c) {
    if (c.m != 1 && !c.in_prime_field())
        fail(errc::bad_input, "quadratic coefficient must lie in the prime field");
    const int p = c.p;
    FieldElement cc = FieldElement::make(p, 2, c.c0, 0);
    std::vector<FieldElement> roots;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            FieldElement x = FieldElement::make(p, 2, a, b);
            if ((x * x - cc * x + FieldElement::one(p, 2)).is_zero()) roots.push_back(x);
        }
    if (roots.size() == 1) return {roots[0], roots[0]}; // double root
    if (roots.size() == 2) return {roots[0], roots[1]};
    fail(errc::bad_input, "unit quadratic did not have two roots over F_{p^2}");
}

} // namespace pgmod
