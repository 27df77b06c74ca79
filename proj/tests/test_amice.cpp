#include <doctest.h>

#include "pgmod/amice.hpp"

using namespace pgmod;

namespace {

Tower plus_tower(int p, int r, int y, const MulCharacter& chi, int depth, int prec) {
    CharModel model =
        CharModel::make(p, 2, r, FieldElement::from_int(p, 2, y), CharModel::Flavor::plus);
    return plus_standard_tower(model, chi, depth, prec);
}

} // namespace

TEST_CASE("amice transform of basic measures") {
    for (int p : {2, 3, 5}) {
        FieldElement one = FieldElement::one(p, 2);
        // Dirac at 0 -> 1, Dirac at 1 -> 1 + X
        CHECK(amice_transform(MeasureZp::dirac(p, 2, 2, 0))
                  .equals_on_overlap(LaurentSeries::constant(one, p * p)));
        LaurentSeries want = LaurentSeries::zero(p, 2, 0, p * p);
        want.set(0, one);
        want.set(1, one);
        CHECK(amice_transform(MeasureZp::dirac(p, 2, 2, 1)).equals_on_overlap(want));
        // all-ones at level 1: the sum of (1+X)^a over a mod p is X^(p-1),
        // cross-checked against the geometric-series oracle
        MeasureZp uniform = MeasureZp::zero(p, 2, 1);
        for (auto& v : uniform.v) v = one;
        LaurentSeries direct = LaurentSeries::zero(p, 2, 0, p);
        for (int a = 0; a < p; ++a) {
            LaurentSeries term = one_plus_x_pow(ZpDigits::from_int(p, a, 4), 2, p);
            direct = direct + term;
        }
        CHECK(amice_transform(uniform).equals_on_overlap(direct));
        CHECK(direct.equals_on_overlap(LaurentSeries::monomial(one, p - 1, p)));
    }
}

TEST_CASE("amice transform is bijective") {
    std::mt19937_64 rng(3);
    for (int p : {2, 3}) {
        for (int level = 0; level <= 3; ++level) {
            long sz = 1;
            for (int i = 0; i < level; ++i) sz *= p;
            for (long a = 0; a < sz; ++a) {
                MeasureZp d = MeasureZp::dirac(p, 2, level, a);
                CHECK(amice_inverse(amice_transform(d), level) == d);
            }
        }
    }
    // random round trips at p = 5
    for (int s = 0; s < 20; ++s) {
        MeasureZp nu = MeasureZp::zero(5, 2, 2);
        for (auto& v : nu.v)
            v = FieldElement::make(5, 2, static_cast<int>(rng() % 5), static_cast<int>(rng() % 5));
        CHECK(amice_inverse(amice_transform(nu), 2) == nu);
    }
}

TEST_CASE("measure psi") {
    for (int p : {2, 3, 5}) {
        CHECK(measure_psi(MeasureZp::dirac(p, 2, 1, 0)) == MeasureZp::dirac(p, 2, 0, 0));
        CHECK(measure_psi(MeasureZp::dirac(p, 2, 2, 1)) == MeasureZp::zero(p, 2, 1));
        // A(psi nu) = psi(A nu) on random measures, with the series operator
        // as the independent route
        std::mt19937_64 rng(11);
        for (int s = 0; s < 10; ++s) {
            MeasureZp nu = MeasureZp::zero(p, 2, 2);
            for (auto& v : nu.v)
                v = FieldElement::make(p, 2, static_cast<int>(rng() % p),
                                       static_cast<int>(rng() % p));
            CHECK(amice_transform(measure_psi(nu))
                      .equals_on_overlap(psi(amice_transform(nu))));
        }
    }
}

TEST_CASE("towers define compactly supported measures") {
    const int p = 5;
    MulCharacter chi = MulCharacter::trivial(p);
    // constant entries lambda^n: the level-0 transform is the constant 1,
    // i.e. the measure is the Dirac at 0 at every level
    Tower t = plus_tower(p, 1, 2, chi, 4, 130);
    MeasureQp nu = tower_to_measure(t, 1, 2);
    for (long a = 0; a < nu.base.size(); ++a)
        CHECK(nu.base.at(a) == (a == 0 ? FieldElement::one(p, 2) : FieldElement::zero(p, 2)));
    // integral against the indicator of Z_p
    StepFunction ind = StepFunction::indicator_zp(p, 2, 1);
    CHECK(pair_integrate(ind, nu) == FieldElement::one(p, 2));
    // support-exponent independence on the same tower
    MeasureQp nu2 = tower_to_measure(t, 2, 3);
    CHECK(pair_integrate(ind, nu) == pair_integrate(ind, nu2));
}

TEST_CASE("pairing requires a fine enough measure") {
    const int p = 3;
    Tower t = plus_tower(p, 0, 1, MulCharacter::trivial(p), 4, 90);
    MeasureQp nu = tower_to_measure(t, 1, 2);
    StepFunction f = StepFunction::zero(p, 2, 1, 3); // needs level 1 + 3 > 2
    CHECK_THROWS_AS((void)pair_integrate(f, nu), error);
    StepFunction g = StepFunction::zero(p, 2, 2, 1); // support exceeds the datum
    CHECK_THROWS_AS((void)pair_integrate(g, nu), error);
}

TEST_CASE("step actions") {
    const int p = 5;
    BCharacter triv{MulCharacter::trivial(p), MulCharacter::trivial(p)};
    std::mt19937_64 rng(5);
    StepFunction f = StepFunction::zero(p, 2, 1, 2);
    for (auto& v : f.v)
        v = FieldElement::make(p, 2, static_cast<int>(rng() % p), static_cast<int>(rng() % p));
    // identity
    StepFunction same = step_action(QpElement::one(p, 40), QpElement::zero_of(p),
                                    QpElement::one(p, 40), f, triv);
    for (long u = 0; u < f.size(); ++u) {
        PadicScalar x = PadicScalar::from_rational(p, 1, u, 25, 20);
        CHECK(same.value_at(x) == f.value_at(x));
    }
    // diag(1, d) with d a unit sends f to chi1(d) f(d x)
    BCharacter chars{MulCharacter::omega(p, 1) * MulCharacter::mu(FieldElement::from_int(p, 2, 2)),
                     MulCharacter::mu(FieldElement::from_int(p, 2, 3))};
    QpElement d = QpElement::from_int(p, 7, 40);
    StepFunction acted = step_action(QpElement::one(p, 40), QpElement::zero_of(p), d, f, chars);
    PadicScalar ds = PadicScalar::from_rational(p, 1, 7, 1, 24);
    for (long u = 0; u < f.size(); ++u) {
        PadicScalar x = PadicScalar::from_rational(p, 1, u, 25, 20);
        FieldElement lhs = acted.value_at(x);
        FieldElement rhs = chars.left.value_at(d) * f.value_at(ds * x);
        CHECK(lhs == rhs);
    }
    // upper(1, b) translates the argument
    QpElement b = QpElement::from_int(p, 2, 40);
    StepFunction shifted = step_action(QpElement::one(p, 40), b, QpElement::one(p, 40), f, triv);
    PadicScalar bs = PadicScalar::from_rational(p, 1, 2, 1, 24);
    for (long u = 0; u < f.size(); ++u) {
        PadicScalar x = PadicScalar::from_rational(p, 1, u, 25, 20);
        CHECK(shifted.value_at(x) == f.value_at(x - bs));
    }
}

TEST_CASE("pairing is bilinear") {
    const int p = 3;
    std::mt19937_64 rng(17);
    Tower t = plus_tower(p, 1, 2, MulCharacter::trivial(p), 4, 90);
    MeasureQp nu = tower_to_measure(t, 1, 3);
    StepFunction f = StepFunction::zero(p, 2, 1, 2);
    StepFunction g = StepFunction::zero(p, 2, 1, 2);
    for (long u = 0; u < f.size(); ++u) {
        f.v[static_cast<std::size_t>(u)] =
            FieldElement::make(p, 2, static_cast<int>(rng() % p), static_cast<int>(rng() % p));
        g.v[static_cast<std::size_t>(u)] =
            FieldElement::make(p, 2, static_cast<int>(rng() % p), static_cast<int>(rng() % p));
    }
    StepFunction fg = f;
    for (long u = 0; u < f.size(); ++u)
        fg.v[static_cast<std::size_t>(u)] =
            f.v[static_cast<std::size_t>(u)] + g.v[static_cast<std::size_t>(u)];
    CHECK(pair_integrate(fg, nu) == pair_integrate(f, nu) + pair_integrate(g, nu));
}
