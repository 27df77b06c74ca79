#include <doctest.h>

#include "pgmod/reps.hpp"

using namespace pgmod;

namespace {

MulCharacter mu(int p, int u) { return MulCharacter::mu(FieldElement::from_int(p, 2, u)); }

} // namespace

TEST_CASE("character operations") {
    // (w mu_2)(w^(p-2) mu_3) = mu_6 at p = 7
    MulCharacter a = MulCharacter::omega(7, 1) * mu(7, 2);
    MulCharacter b = MulCharacter::omega(7, 5) * mu(7, 3);
    CHECK(a * b == mu(7, 6));
    CHECK(mu(5, 3).value_at_p() == FieldElement::from_int(5, 2, 3));
    // w^3 at the unit 2 over F_5: 8 = 3
    CHECK(MulCharacter::omega(5, 3).value_at_unit(ZpDigits::from_int(5, 2, 4)) ==
          FieldElement::from_int(5, 2, 3));
    CHECK(MulCharacter::parse(5, "w^1*mu(2)") == MulCharacter::omega(5, 1) * mu(5, 2));
    CHECK(MulCharacter::parse(5, "1") == MulCharacter::trivial(5));
    CHECK(MulCharacter::parse(5, "mu(1+2*t)") ==
          MulCharacter::mu(FieldElement::make(5, 2, 1, 2)));
    CHECK(MulCharacter::parse(5, "w") == MulCharacter::omega(5, 1));
}

TEST_CASE("canonical rho") {
    // rho(3, w) = rho(1, 1) via the intertwining rho(p-1-r, chi w^r)
    GaloisRep a = canonical_rho(5, 3, MulCharacter::omega(5, 1));
    GaloisRep b = canonical_rho(5, 1, MulCharacter::trivial(5));
    CHECK(a == b);
    CHECK(a.r == 1);
    // idempotence
    CHECK(canonical_rho(5, a.r, a.chi) == a);
    // orbit of (2, mu_2) has size 4
    CHECK(intertwining_orbit(5, 2, mu(5, 2)).size() == 4);
}

TEST_CASE("induction from the level-2 fundamental character") {
    for (int r = 0; r <= 4; ++r)
        CHECK(ind_omega2(5, r + 1, MulCharacter::trivial(5)) ==
              canonical_rho(5, r, MulCharacter::trivial(5)));
    // h = p + 3 = 8: subtracting p+1 twists by omega
    CHECK(ind_omega2(5, 8, MulCharacter::trivial(5)) ==
          canonical_rho(5, 1, MulCharacter::omega(5, 1)));
    CHECK_THROWS_AS((void)ind_omega2(5, 6, MulCharacter::trivial(5)), error);
    CHECK_THROWS_AS((void)ind_omega2(5, 12, MulCharacter::trivial(5)), error);
}

TEST_CASE("canonical pi") {
    // pi(0, 1, 1) semisimplifies to the trivial character plus the special
    GSS boundary = canonical_pi(5, 0, FieldElement::one(5, 2), MulCharacter::trivial(5));
    REQUIRE(boundary.size() == 2);
    CHECK(boundary[0].kind == GAtom::Kind::one_dim);
    CHECK(boundary[1].kind == GAtom::Kind::special_twist);
    CHECK(boundary[0].chi1 == MulCharacter::trivial(5));
    // supersingular intertwining: pi(1,0,chi) = pi(3,0,chi w)
    MulCharacter chi = mu(5, 2);
    CHECK(canonical_pi(5, 1, FieldElement::zero(5, 2), chi) ==
          canonical_pi(5, 3, FieldElement::zero(5, 2), chi * MulCharacter::omega(5, 1)));
    // pi(2, 2, 1) is the principal series mu_3 (x) mu_2 w^2 (2^-1 = 3 mod 5)
    GSS ps = canonical_pi(5, 2, FieldElement::from_int(5, 2, 2), MulCharacter::trivial(5));
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].kind == GAtom::Kind::principal_series);
    CHECK(ps[0].chi1 == mu(5, 3));
    CHECK(ps[0].chi2 == mu(5, 2) * MulCharacter::omega(5, 2));
}

TEST_CASE("borel restriction profiles") {
    MulCharacter chi = mu(5, 2) * MulCharacter::omega(5, 1);
    // a character restricts to chi (x) chi
    BSS prof = restrict_to_borel({GAtom::one_dim(chi)});
    REQUIRE(prof.size() == 1);
    CHECK(prof[0].kind == BAtom::Kind::b_char);
    CHECK(prof[0].chi1 == chi);
    CHECK(prof[0].chi2 == chi);
    // a principal series contributes its character and the induction label
    MulCharacter c2 = mu(5, 3);
    prof = restrict_to_borel({GAtom::principal_series(BCharacter{chi, c2})});
    REQUIRE(prof.size() == 2);
    bool has_bchar = false, has_omega = false;
    for (const auto& a : prof) {
        if (a.kind == BAtom::Kind::b_char) has_bchar = a.chi1 == chi && a.chi2 == c2;
        if (a.kind == BAtom::Kind::omega_dim1) has_omega = a.chi1 == chi * c2 && a.chi2 == chi;
    }
    CHECK(has_bchar);
    CHECK(has_omega);
    // a supersingular label restricts irreducibly with central w^r chi^2
    prof = restrict_to_borel({GAtom::supersingular(1, chi)});
    REQUIRE(prof.size() == 1);
    CHECK(prof[0].kind == BAtom::Kind::omega_dim2);
    CHECK(prof[0].chi1 == MulCharacter::omega(5, 1) * chi * chi);
}

TEST_CASE("reconstruction from profiles") {
    MulCharacter chi = mu(5, 2);
    // lone dim-1 label with central chi^2 is a twisted special
    BSS lone = {BAtom::omega_dim1(chi * chi, chi)};
    GSS back = reconstruct_from_borel(lone);
    REQUIRE(back.size() == 1);
    CHECK(back[0].kind == GAtom::Kind::special_twist);
    // character + special twist is distinguished from any principal series
    GSS sum = {GAtom::one_dim(chi), GAtom::special_twist(chi)};
    normalize(sum);
    CHECK(reconstruct_from_borel(restrict_to_borel(sum)) == sum);
    // inconsistent profile: PS character without its induction label
    BSS broken = {BAtom::b_char(BCharacter{chi, mu(5, 3)})};
    CHECK_THROWS_AS((void)reconstruct_from_borel(broken), error);
    // there is no principal series with equal inducing characters, which is
    // what keeps character + special twist unambiguous
    CHECK_THROWS_AS((void)GAtom::principal_series(BCharacter{chi, chi}), error);
}

TEST_CASE("ghost crossing of the reducible profiles") {
    auto [ind_side, tower_side] = ghost_identities(MulCharacter::trivial(5),
                                                   MulCharacter::trivial(5));
    // both profiles share the label, and the tower side carries w (x) w^-1
    MulCharacter om = MulCharacter::omega(5, 1);
    bool found = false;
    for (const auto& a : tower_side)
        if (a.kind == BAtom::Kind::b_char && a.chi1 == om && a.chi2 == om.inverse()) found = true;
    CHECK(found);
    BAtom label1 = ind_side[0].kind == BAtom::Kind::omega_dim1 ? ind_side[0] : ind_side[1];
    BAtom label2 = tower_side[0].kind == BAtom::Kind::omega_dim1 ? tower_side[0] : tower_side[1];
    CHECK(label1 == label2);
}
