#include <doctest.h>

#include <random>

#include "pgmod/padic.hpp"

using namespace pgmod;

TEST_CASE("fraction arithmetic and parsing") {
    CHECK(Fraction(3, 2) + Fraction(1, 2) == Fraction(2));
    CHECK(Fraction(1, 3) * Fraction(3, 2) == Fraction(1, 2));
    CHECK(Fraction(-4, -8) == Fraction(1, 2));
    CHECK(Fraction(1, 2) < Fraction(3, 4));
    CHECK(Fraction::parse("3/2") == Fraction(3, 2));
    CHECK(Fraction::parse("-1") == Fraction(-1));
    CHECK_THROWS_AS((void)Fraction(1, 0), error);
}

TEST_CASE("digit lists") {
    ZpDigits neg = ZpDigits::from_int(5, -1, 6);
    for (auto d : neg.d) CHECK(d == 4);
    ZpDigits a = ZpDigits::from_int(7, 1234, 8);
    CHECK(a.value_mod(8) == 1234);
    // unit inverse: a * a^-1 = 1 mod p^len
    for (int p : {2, 3, 5, 7}) {
        for (long long v : {1, 2, 12, 1000, 77}) {
            if (v % p == 0) continue;
            ZpDigits u = ZpDigits::from_int(p, v, 10);
            ZpDigits w = u.inverse();
            CHECK(u.mul(w).value_mod(10) == 1);
        }
    }
    CHECK_THROWS_AS((void)ZpDigits::from_int(5, 10, 4).inverse(), error);
}

TEST_CASE("lucas binomials against direct values") {
    // C(a, 0) = 1 for any digit list
    CHECK(lucas_binomial(ZpDigits::from_int(5, 377, 6), 0) == FieldElement::one(5, 1));
    // C(4, 2) = 6 = 0 mod 3; digits of 4 are (1, 1)
    CHECK(lucas_binomial(ZpDigits::from_int(3, 4, 4), 2).is_zero());
    // a = 2 + 3*5 = 17: C(17, 7) = 19448 = 3 mod 5 (the digit product C(2,2) C(3,1))
    CHECK(lucas_binomial(ZpDigits::from_int(5, 17, 4), 7) == FieldElement::from_int(5, 1, 3));
    // digit list too short for the index
    ZpDigits short_a = ZpDigits::from_int(5, 2, 1);
    CHECK_THROWS_AS((void)lucas_binomial(short_a, 7), error);
}

TEST_CASE("rational valuations") {
    PadicScalar x = PadicScalar::from_rational(5, 1, 25, 3, 20);
    CHECK(x.valuation() == Fraction(2));
    // the quotient (a_p^2 + p)/(2 p a_p) at a_p = 5 is 30/50 = 3/5: valuation -1
    CHECK(rational_valuation(30, 50, 5) == -1);
    PadicScalar q = PadicScalar::from_rational(5, 1, 30, 50, 20);
    CHECK(q.valuation() == Fraction(-1));
    // digit arithmetic agrees: 30/50 = (25+5)/(2*5*5) computed in Z_5
    PadicScalar ap = PadicScalar::from_rational(5, 1, 5, 1, 20);
    PadicScalar p5 = PadicScalar::from_rational(5, 1, 5, 1, 20);
    PadicScalar two = PadicScalar::from_rational(5, 1, 2, 1, 20);
    PadicScalar num = ap * ap + p5;
    PadicScalar den = two * p5 * ap;
    PadicScalar quot = num / den;
    CHECK(quot.valuation() == Fraction(-1));
    // unit part of 3/5 is 3
    PadicScalar shifted = quot;
    shifted.ord += 1;
    shifted.prec += 1;
    CHECK(shifted.residue() == FieldElement::from_int(5, 1, 3));
}

TEST_CASE("eisenstein digits with pi^2 = p") {
    // val(pi^3 + 5) = 1 since 5 = pi^2
    PadicScalar pi3 = PadicScalar::from_pi_digits(5, 2, 3, {1}, 12);
    PadicScalar five = PadicScalar::from_rational(5, 2, 5, 1, 12);
    CHECK(five.valuation() == Fraction(1));
    CHECK((pi3 + five).valuation() == Fraction(1));
    CHECK((pi3 * pi3).valuation() == Fraction(3));
    // pi^2 carries into p: (pi + pi) for p = 2 has an actual carry
    PadicScalar pi = PadicScalar::from_pi_digits(2, 2, 1, {1}, 10);
    PadicScalar sum = pi + pi; // 2 pi = pi^3
    CHECK(sum.valuation() == Fraction(3, 2));
}

TEST_CASE("residue reduction") {
    CHECK(PadicScalar::from_rational(5, 1, 6, 1, 10).residue() == FieldElement::one(5, 1));
    // 3/5 is not a unit
    CHECK_THROWS_AS((void)PadicScalar::from_rational(5, 1, 5, 3, 10).residue(), error);
    // 3 * 5^-1 = 3 * 3 = 2 mod 7
    CHECK(PadicScalar::from_rational(7, 1, 3, 5, 10).residue() == FieldElement::from_int(7, 1, 2));
}

TEST_CASE("precision propagation") {
    PadicScalar x = PadicScalar::from_rational(5, 1, 1, 3, 10);
    PadicScalar y = PadicScalar::from_rational(5, 1, -1, 3, 4);
    PadicScalar s = x + y; // exact zero value, but only known mod 5^4
    CHECK(s.prec == 4);
    CHECK_THROWS_AS((void)s.valuation(), error);
    // division shifts the window by the divisor's valuation
    PadicScalar z = PadicScalar::from_rational(5, 1, 1, 1, 10) /
                    PadicScalar::from_rational(5, 1, 25, 1, 10);
    CHECK(z.valuation() == Fraction(-2));
}

TEST_CASE("division multiplies back") {
    std::mt19937_64 rng(23);
    for (int p : {2, 3, 5, 7})
        for (int e : {1, 2})
            for (int s = 0; s < 60; ++s) {
                auto rand_scalar = [&](bool unit_lead) {
                    int ord = static_cast<int>(rng() % 5) - 2;
                    std::vector<std::uint8_t> dg(14);
                    for (auto& d : dg) d = static_cast<std::uint8_t>(rng() % p);
                    if (unit_lead && dg[0] == 0) dg[0] = 1;
                    return PadicScalar::from_pi_digits(p, e, ord, dg,
                                                       ord + static_cast<int>(dg.size()));
                };
                PadicScalar x = rand_scalar(false);
                PadicScalar y = rand_scalar(true);
                PadicScalar q = x / y;
                // q y = x modulo pi^(q.prec + val_pi(y))
                PadicScalar r = q * y - x;
                int certify = std::min(r.prec, q.prec + y.ord);
                bool ok = true;
                for (std::size_t i = 0; i < r.dg.size(); ++i)
                    if (r.ord + static_cast<int>(i) < certify && r.dg[i] != 0) ok = false;
                CHECK(ok);
            }
}

TEST_CASE("q_p elements") {
    QpElement x = QpElement::from_rational(5, 10, 3, 12);
    CHECK(x.val == 1);
    CHECK(x.unit.is_unit());
    QpElement inv = x.inverse();
    QpElement prod = x.mul(inv);
    CHECK(prod.val == 0);
    CHECK(prod.unit.value_mod(12) == 1);
    CHECK(QpElement::from_int(5, 0, 10).zero);
}
