#include <doctest.h>

#include "pgmod/reps.hpp"
#include "pgmod/tower.hpp"

using namespace pgmod;

namespace {

CharModel sharp_model(int p, int r, int y) {
    return CharModel::make(p, 2, r, FieldElement::from_int(p, 2, y), CharModel::Flavor::sharp);
}

BorelElement id_elt(int p) {
    BorelElement g;
    g.x = QpElement::one(p, 40);
    g.j = 0;
    g.a = ZpDigits::one(p, 40);
    g.z = QpElement::zero_of(p);
    return g;
}

} // namespace

TEST_CASE("module psi twists by the frobenius eigenvalue") {
    CharModel model = sharp_model(5, 1, 2);
    FieldElement lam = model.y;
    // psi_D(lambda^n X^-1) = lambda^(n-1) X^-1
    for (int n = 1; n < 4; ++n) {
        LaurentSeries v = LaurentSeries::monomial(lam.pow(n), -1, 30);
        CHECK(module_psi(model, v).equals_on_overlap(
            LaurentSeries::monomial(lam.pow(n - 1), -1, 30)));
    }
    // section identity: psi_D(phi(f) * y) = f
    LaurentSeries f = LaurentSeries::monomial(FieldElement::from_int(5, 2, 3), 2, 6);
    CHECK(module_psi(model, frobenius_phi(f).scaled(model.y)).equals_on_overlap(f));
    // y = 1 reduces to the plain operator
    CharModel unit_model = sharp_model(5, 1, 1);
    LaurentSeries g = LaurentSeries::monomial(FieldElement::one(5, 2), -1, 20);
    CHECK(module_psi(unit_model, g).equals_on_overlap(psi(g)));
    // lattice bound enforced
    LaurentSeries deep = LaurentSeries::monomial(FieldElement::one(5, 2), -2, 20);
    CHECK_THROWS_AS((void)module_psi(model, deep), error);
}

TEST_CASE("standard tower") {
    CharModel model = sharp_model(5, 0, 2);
    Tower t = standard_tower(model, MulCharacter::trivial(5), 3, 30);
    REQUIRE(t.depth() == 3);
    CHECK(t.entries[0].at(-1) == FieldElement::from_int(5, 2, 1));
    CHECK(t.entries[1].at(-1) == FieldElement::from_int(5, 2, 2));
    CHECK(t.entries[2].at(-1) == FieldElement::from_int(5, 2, 4));
    CHECK(tower_residue(t) == FieldElement::one(5, 2));
    CHECK(tower_is_valid(t));
    // pole-free towers have residue zero
    Tower plus = plus_standard_tower(model, MulCharacter::trivial(5), 3, 30);
    CHECK(tower_is_valid(plus));
    CHECK(tower_residue(plus).is_zero());
}

TEST_CASE("star action displayed values") {
    const int p = 5;
    for (int r = 0; r < p - 1; ++r)
        for (int yv = 1; yv < p; ++yv) {
            CharModel model = sharp_model(p, r, yv);
            MulCharacter chi = MulCharacter::omega(p, 1) *
                               MulCharacter::mu(FieldElement::from_int(p, 2, 3));
            Tower t = standard_tower(model, chi, 6, 60);
            // identity acts trivially
            Tower same = star_action(id_elt(p), t, 4);
            for (int i = 0; i < 4; ++i)
                CHECK(same.entries[i].equals_on_overlap(t.entries[i]));
            // diag(1, p) scales by lambda^-1
            BorelElement g = id_elt(p);
            g.j = 1;
            Tower moved = star_action(g, t, 3);
            for (int i = 0; i < 3; ++i)
                CHECK(moved.entries[i].equals_on_overlap(
                    t.entries[i].scaled(model.y.inv())));
            // diag(1, a) sends the residue to a^(1-r)
            g = id_elt(p);
            g.a = ZpDigits::from_int(p, 3 + p, 40);
            FieldElement got = tower_residue(star_action(g, t, 1));
            CHECK(got == FieldElement::from_int(p, 2, 3).pow(1 - r));
            // upper(1, z) preserves the residue
            g = id_elt(p);
            g.z = QpElement::from_rational(p, 7, 1, 40);
            CHECK(tower_residue(star_action(g, t, 1)) == FieldElement::one(p, 2));
        }
}

TEST_CASE("residue character") {
    CharModel model = sharp_model(5, 2, 2);
    MulCharacter chi = MulCharacter::trivial(5);
    auto [tower_side, dual_side] = residue_character(model, chi);
    // at diag(1,p): the second component evaluates to lambda^-1
    BorelElement g = id_elt(5);
    g.j = 1;
    CHECK(bchar_value(tower_side, g) == model.y.inv());
    // at diag(1,a): a^(1-r)
    g = id_elt(5);
    g.a = ZpDigits::from_int(5, 2, 40);
    CHECK(bchar_value(tower_side, g) == FieldElement::from_int(5, 2, 2).pow(1 - model.r));
    // W = 1, chi = 1: the residue transforms by w^-1 (x) w on the tower side
    // (the inverse of the dual-side character w (x) w^-1); in particular
    // diag(1, a) scales the residue by a = a^(1-r) with r = 0
    CharModel triv = sharp_model(5, 0, 1);
    auto [ts, ds] = residue_character(triv, chi);
    CHECK(ts.left == MulCharacter::omega(5, 1).inverse());
    CHECK(ts.right == MulCharacter::omega(5, 1));
    CHECK(ds.left == MulCharacter::omega(5, 1));
    CHECK(ds.right == MulCharacter::omega(5, 1).inverse());
    BorelElement u = id_elt(5);
    u.a = ZpDigits::from_int(5, 3, 40);
    CHECK(bchar_value(ts, u) == FieldElement::from_int(5, 2, 3));
}

TEST_CASE("exact sequence report") {
    CharModel model = sharp_model(5, 1, 2);
    auto rep = check_exact_sequence(model, MulCharacter::trivial(5), 6, 60, 25, 42);
    CHECK(rep.surjective);
    CHECK(rep.kernel_matches_plus);
    CHECK(rep.equivariance_violations == 0);
    CHECK(rep.equivariance_checked == 100);
}

TEST_CASE("borel factored composition") {
    // diag(1,p) * upper(1,1) = (1 1; 0 p): x = 1, j = 1, a = 1, z = 1
    BorelElement g = id_elt(5);
    g.j = 1;
    BorelElement h = id_elt(5);
    h.z = QpElement::one(5, 40);
    BorelElement gh = borel_compose(g, h);
    CHECK(gh.j == 1);
    CHECK(gh.x.val == 0);
    CHECK(gh.x.unit.value_mod(5) == 1);
    CHECK(gh.a.value_mod(5) == 1);
    CHECK_FALSE(gh.z.zero);
    CHECK(gh.z.val == 0);
    CHECK(gh.z.unit.value_mod(5) == 1);
    // upper(1,1) * diag(1,p) = (1 p; 0 p): z picks up a valuation
    BorelElement hg = borel_compose(h, g);
    CHECK(hg.j == 1);
    CHECK_FALSE(hg.z.zero);
    CHECK(hg.z.val == 1);
}

TEST_CASE("depth budgets fail loudly") {
    CharModel model = sharp_model(5, 0, 1);
    Tower t = standard_tower(model, MulCharacter::trivial(5), 3, 40);
    BorelElement g = id_elt(5);
    g.j = -3;
    CHECK_THROWS_AS((void)star_action(g, t, 1), error);
    g = id_elt(5);
    g.z = QpElement::from_rational(5, 1, 125, 40); // val -3
    CHECK_THROWS_AS((void)star_action(g, t, 1), error);
    // within budget both succeed
    g.z = QpElement::from_rational(5, 1, 5, 40); // val -1
    CHECK(tower_residue(star_action(g, t, 1)) == FieldElement::one(5, 2));
}

TEST_CASE("ghost profile matches the residue character") {
    // the one-dimensional piece of the dual tower profile is exactly the
    // character by which res transforms, inverted to the dual side
    for (int r = 0; r < 4; ++r)
        for (int yv = 1; yv < 5; ++yv) {
            CharModel model = sharp_model(5, r, yv);
            MulCharacter chi =
                MulCharacter::omega(5, 2) * MulCharacter::mu(FieldElement::from_int(5, 2, 2));
            auto [tower_side, dual_side] = residue_character(model, chi);
            auto profiles = ghost_identities(model.eta(), chi);
            bool found = false;
            for (const auto& a : profiles.second)
                if (a.kind == BAtom::Kind::b_char && a.chi1 == dual_side.left &&
                    a.chi2 == dual_side.right)
                    found = true;
            CHECK(found);
            // and the dual side is the inverse of the tower side
            CHECK(dual_side.left == tower_side.left.inverse());
            CHECK(dual_side.right == tower_side.right.inverse());
        }
}

TEST_CASE("random towers are valid and star preserves validity") {
    std::mt19937_64 rng(7);
    for (int p : {2, 3, 5}) {
        CharModel model = sharp_model(p, p > 2 ? 1 : 0, p - 1);
        MulCharacter chi = MulCharacter::trivial(p);
        Tower t = random_tower(model, chi, 6, 50, rng);
        CHECK(tower_is_valid(t));
        BorelElement g = id_elt(p);
        g.j = 1;
        g.z = QpElement::from_rational(p, 1, p, 40);
        Tower moved = star_action(g, t, 2);
        CHECK(tower_is_valid(moved));
    }
}
