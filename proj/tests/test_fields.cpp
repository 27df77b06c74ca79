#include <doctest.h>

#include "pgmod/fields.hpp"

using namespace pgmod;

namespace {

// brute-force power, the oracle for frobenius
FieldElement pow_by_mult(FieldElement x, int n) {
    FieldElement acc = FieldElement::one(x.p, x.m);
    for (int i = 0; i < n; ++i) acc *= x;
    return acc;
}

} // namespace

TEST_CASE("prime field arithmetic") {
    FieldElement two = FieldElement::from_int(5, 1, 2);
    FieldElement three = FieldElement::from_int(5, 1, 3);
    CHECK(two * three == FieldElement::one(5, 1)); // 6 mod 5
    CHECK((two + three).is_zero());
    CHECK(two.inv() == three);
}

TEST_CASE("quadratic extension uses the least non-residue") {
    CHECK(least_nonresidue(5) == 2);
    CHECK(least_nonresidue(7) == 3);
    FieldElement t = FieldElement::gen(5);
    CHECK(t * t == FieldElement::from_int(5, 2, 2)); // t^2 = 2 over F_5
}

TEST_CASE("frobenius is the p-th power map") {
    for (int p : {2, 3, 5, 7}) {
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                FieldElement x = FieldElement::make(p, 2, a, b);
                CHECK(x.frobenius() == pow_by_mult(x, p));
                CHECK(x.frobenius().frobenius() == x);
            }
    }
    // t^5 = 4t over F_25 since t^2 = 2 and 2^2 = 4
    FieldElement t = FieldElement::gen(5);
    CHECK(t.frobenius() == FieldElement::make(5, 2, 0, 4));
}

TEST_CASE("field inverses and division") {
    for (int p : {2, 3, 5, 7})
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                FieldElement x = FieldElement::make(p, 2, a, b);
                if (x.is_zero()) {
                    CHECK_THROWS_AS((void)x.inv(), error);
                    continue;
                }
                CHECK(x * x.inv() == FieldElement::one(p, 2));
            }
}

TEST_CASE("mismatched fields are rejected") {
    FieldElement a = FieldElement::one(5, 1);
    FieldElement b = FieldElement::one(7, 1);
    CHECK_THROWS_AS((void)(a * b), error);
    FieldElement c = FieldElement::one(5, 2);
    CHECK_THROWS_AS((void)(a + c), error);
    CHECK(a.embedded() + c == FieldElement::make(5, 2, 2, 0));
}

TEST_CASE("unit quadratic roots") {
    // x^2 + 1 over F_5: 2^2 = 4 = -1
    auto [r1, r2] = solve_unit_quadratic(FieldElement::from_int(5, 1, 0));
    CHECK(((r1 == FieldElement::from_int(5, 2, 2) && r2 == FieldElement::from_int(5, 2, 3)) ||
           (r1 == FieldElement::from_int(5, 2, 3) && r2 == FieldElement::from_int(5, 2, 2))));
    // (x-1)^2 at c = 2
    auto [s1, s2] = solve_unit_quadratic(FieldElement::from_int(5, 1, 2));
    CHECK(s1 == FieldElement::one(5, 2));
    CHECK(s2 == FieldElement::one(5, 2));
    // c = 1: discriminant -3 = 2 is a non-residue mod 5, so the roots are
    // conjugate and lie outside the prime field
    auto [q1, q2] = solve_unit_quadratic(FieldElement::from_int(5, 1, 1));
    CHECK_FALSE(q1.in_prime_field());
    CHECK(q1.frobenius() == q2);
    CHECK(q1 * q2 == FieldElement::one(5, 2));
    // p = 2 special polynomial t^2 + t + 1
    auto [u1, u2] = solve_unit_quadratic(FieldElement::from_int(2, 1, 1));
    CHECK(u1 * u2 == FieldElement::one(2, 2));
    CHECK_FALSE(u1.in_prime_field());
}

TEST_CASE("serialization round trip") {
    for (int p : {2, 3, 5, 7})
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                FieldElement x = FieldElement::make(p, 2, a, b);
                CHECK(FieldElement::parse(p, 2, x.str()).embedded() == x);
            }
    CHECK(FieldElement::parse(5, 2, "t") == FieldElement::gen(5));
    CHECK(FieldElement::parse(5, 2, "3+2*t") == FieldElement::make(5, 2, 3, 2));
    CHECK(FieldElement::parse(5, 1, "4") == FieldElement::from_int(5, 1, 4));
    CHECK_THROWS_AS((void)FieldElement::parse(5, 2, "x"), error);
}
