#include "pgmod/corresp.hpp"

#include <algorithm>

namespace pgmod {

int bracket(int p, long long n) {
    int mod = p - 1;
    if (mod <= 0) return 0;
    long long r = ((n % mod) + mod) % mod;
    return static_cast<int>(r);
}

namespace {

// lambda in F_{p^2} with lambda^2 = s, if one exists.
std::optional<FieldElement> sqrt_in_kl(const FieldElement& s) {
    const int p = s.p;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            FieldElement x = FieldElement::make(p, 2, a, b);
            if (x * x == s) return x;
        }
    return std::nullopt;
}

} // namespace

GSS galois_to_gl2(const GaloisRep& v) {
    const int p = v.p();
    if (v.kind == GaloisRep::Kind::irred) return canonical_pi(p, v.r, FieldElement::zero(p, 2), v.chi);
    // Factor {c1, c2} as (mu_lambda omega^(r+1) chi, mu_(lambda^-1) chi).
    const MulCharacter& c1 = v.c2; // use the larger as the omega^(r+1) side; any
    const MulCharacter& c2 = v.c1; // choice gives the same multiset (swap identity)
    int r = bracket(p, static_cast<long long>(c1.twist) - c2.twist - 1);
    FieldElement ratio = c1.unit * c2.unit.inv();
    auto lam = sqrt_in_kl(ratio);
    if (!lam)
        fail(errc::not_in_image,
             "split sum is outside the parametrized family over F_{p^2} (unit ratio " +
                 ratio.str() + " is not a square)");
    MulCharacter chi = MulCharacter::make(p, c2.twist, lam->operator*(c2.unit));
    GSS out = canonical_pi(p, r, *lam, chi);
    GSS second = canonical_pi(p, bracket(p, p - 3 - r), lam->inv(),
                              MulCharacter::omega(p, r + 1) * chi);
    return merged(std::move(out), second);
}

GaloisRep gl2_to_galois(const GSS& pi_ss) {
    if (pi_ss.empty()) fail(errc::not_in_image, "empty inventory");
    const int p = pi_ss.front().chi1.p;
    if (pi_ss.size() == 1 && pi_ss.front().kind == GAtom::Kind::supersingular) {
        const GAtom& a = pi_ss.front();
        GaloisRep v = canonical_rho(p, a.r, a.chi1);
        return v;
    }
    BSS profile = restrict_to_borel(pi_ss);
    MulCharacter om = MulCharacter::omega(p, 1);
    std::optional<GaloisRep> candidate;
    for (const BAtom& b : profile) {
        if (b.kind != BAtom::Kind::b_char) continue;
        // The Galois pair is the omega-twist of the finite-dimensional part.
        GaloisRep guess = GaloisRep::split(om * b.chi2, b.chi1);
        if (candidate && !(*candidate == guess))
            fail(errc::not_in_image, "finite-dimensional B-characters disagree");
        candidate = guess;
    }
    if (!candidate)
        fail(errc::not_in_image, "no finite-dimensional part in the Borel restriction");
    // Confirm by running the forward map.
    GSS forward = galois_to_gl2(*candidate);
    GSS sorted = pi_ss;
    normalize(sorted);
    if (!(forward == sorted))
        fail(errc::not_in_image, "inventory is not the reduction of any two-dimensional datum");
    return *candidate;
}

// ---------------------------------------------------------------------------
// Reduction table

CrystallineParams CrystallineParams::with_ap(int p, long long k, PadicScalar ap) {
    CrystallineParams c;
    c.p = p;
    c.k = k;
    c.ap = std::move(ap);
    return c;
}

CrystallineParams CrystallineParams::with_zero_ap(int p, long long k) {
    CrystallineParams c;
    c.p = p;
    c.k = k;
    c.ap_is_zero = true;
    return c;
}

CrystallineParams CrystallineParams::with_val(int p, long long k, Fraction val,
                                              std::optional<int> unit_residue) {
    CrystallineParams c;
    c.p = p;
    c.k = k;
    c.ap_val = val;
    c.ap_unit_residue = unit_residue;
    return c;
}

namespace {

Fraction ap_valuation(const CrystallineParams& c) {
    if (c.ap_val) return *c.ap_val;
    if (c.ap) {
        try {
            return c.ap->valuation();
        } catch (const error& e) {
            if (e.code() == errc::insufficient_precision)
                fail(errc::undetermined_valuation, "a_p digits do not certify its valuation");
            throw;
        }
    }
    fail(errc::bad_input, "no a_p data");
}

// Residue of a_p / p^val when val(a_p) has denominator 1 or 2 matching the
// supplied representation.
FieldElement unit_residue(const CrystallineParams& c) {
    if (c.ap) {
        Fraction v = c.ap->valuation();
        // shift so the unit part starts at pi^0
        PadicScalar shifted = *c.ap;
        int pi_shift = static_cast<int>(v.num * (c.ap->e / v.den));
        shifted.ord -= pi_shift;
        shifted.prec -= pi_shift;
        return shifted.residue();
    }
    if (c.ap_unit_residue) return FieldElement::from_int(c.p, 1, *c.ap_unit_residue);
    fail(errc::undetermined_valuation,
         "branch needs the residue of the unit part of a_p, which was not supplied");
}

// Residue of a_p / p: zero when val(a_p) > 1, the unit residue when val = 1.
FieldElement red_ap_over_p(const CrystallineParams& c) {
    Fraction v = ap_valuation(c);
    if (v > Fraction(1)) return FieldElement::zero(c.p, 1);
    if (v == Fraction(1)) return unit_residue(c);
    fail(errc::bad_input, "a_p/p is not integral here");
}

ReductionResult make_result(const GaloisRep& g, std::string label, std::vector<std::string> notes) {
    ReductionResult r;
    r.galois = g;
    r.gl2 = galois_to_gl2(g);
    r.case_label = std::move(label);
    r.notes = std::move(notes);
    return r;
}

GaloisRep split_omega_pair(int p, const FieldElement& l1, const FieldElement& l2) {
    MulCharacter om = MulCharacter::omega(p, 1);
    return GaloisRep::split(om * MulCharacter::mu(l1), om * MulCharacter::mu(l2));
}

} // namespace

ReductionResult reduce_crystalline(const CrystallineParams& c) {
    const int p = c.p;
    const long long k = c.k;
    MulCharacter triv = MulCharacter::trivial(p);
    if (k < 2) fail(errc::out_of_table_range, "weight k must be at least 2");
    if (c.ap_is_zero) {
        if (k <= p + 1) return make_result(ind_omega2(p, k - 1, triv), "1", {});
        fail(errc::out_of_table_range, "a_p = 0 is only covered for 2 <= k <= p+1");
    }
    // Everything below requires val(a_p) > 0.
    Fraction val = ap_valuation(c);
    if (!(val > Fraction(0))) fail(errc::bad_input, "a_p must lie in the maximal ideal");

    if (k <= p + 1) return make_result(ind_omega2(p, k - 1, triv), "1", {});

    if (k == p + 2) {
        if (val < Fraction(1)) return make_result(ind_omega2(p, 2, triv), "2a", {});
        FieldElement cbar = red_ap_over_p(c);
        auto roots = solve_unit_quadratic(cbar);
        return make_result(split_omega_pair(p, roots.first, roots.second), "2b", {});
    }

    if (k >= p + 3 && k <= 2 * p) {
        if (val < Fraction(1)) return make_result(ind_omega2(p, k - p, triv), "3a", {});
        if (val == Fraction(1)) {
            FieldElement lam = unit_residue(c).scaled(k - 1);
            GaloisRep g = GaloisRep::split(
                MulCharacter::omega(p, static_cast<int>(k - 2)) * MulCharacter::mu(lam),
                MulCharacter::omega(p, 1) * MulCharacter::mu(lam.inv()));
            std::vector<std::string> notes;
            FieldElement one = FieldElement::one(p, 1);
            if (k == p + 3 && (lam == one || lam == -one))
                notes.push_back(
                    "a lattice realizes a non-split extension of the trivial character by "
                    "omega, twisted by omega*mu(" + lam.str() + "), with peu-ramifie class");
            return make_result(g, "3b", std::move(notes));
        }
        return make_result(ind_omega2(p, k - 1, triv), "3c", {});
    }

    if (k == 2 * p + 1) {
        if (p == 2) fail(errc::out_of_table_range, "k = 2p+1 is not covered for p = 2");
        // val(a_p^2 + p): decided by val(a_p) unless val = 1/2.
        if (c.ap) {
            PadicScalar t = (*c.ap) * (*c.ap) +
                            PadicScalar::from_rational(p, c.ap->e, p, 1, c.ap->prec + 2 * c.ap->e);
            Fraction vt = [&] {
                try {
                    return t.valuation();
                } catch (const error& e) {
                    if (e.code() == errc::insufficient_precision)
                        fail(errc::undetermined_valuation,
                             "a_p digits do not certify val(a_p^2 + p)");
                    throw;
                }
            }();
            if (vt < Fraction(3, 2)) return make_result(ind_omega2(p, 2, triv), "4a", {});
            PadicScalar denom = PadicScalar::from_rational(p, c.ap->e, 2 * p, 1,
                                                           c.ap->prec + 2 * c.ap->e) *
                                (*c.ap);
            PadicScalar q = t / denom;
            Fraction vq = q.valuation();
            FieldElement cbar =
                vq > Fraction(0) ? FieldElement::zero(p, 1) : q.residue();
            auto roots = solve_unit_quadratic(cbar);
            return make_result(split_omega_pair(p, roots.first, roots.second), "4b", {});
        }
        // symbolic mode
        if (val != Fraction(1, 2)) return make_result(ind_omega2(p, 2, triv), "4a", {});
        if (!c.ap_unit_residue)
            fail(errc::undetermined_valuation,
                 "val(a_p) = 1/2: val(a_p^2 + p) depends on the unit part of a_p");
        int rbar = *c.ap_unit_residue % p;
        if ((rbar * rbar + 1) % p != 0) return make_result(ind_omega2(p, 2, triv), "4a", {});
        fail(errc::undetermined_valuation,
             "val(a_p^2 + p) >= 3/2: the root datum needs more digits of a_p");
    }

    // k >= 2p + 2
    long long bound = (k - 2) / (p - 1);
    if (!(val > Fraction(bound)))
        fail(errc::out_of_table_range,
             "k >= 2p+2 requires val(a_p) > floor((k-2)/(p-1)) = " + std::to_string(bound));
    if ((k - 1) % (p + 1) != 0)
        return make_result(ind_omega2(p, k - 1, triv), "5a", {});
    auto roots = solve_unit_quadratic(FieldElement::zero(p, 1)); // lambda^2 + 1 = 0
    int s = bracket(p, (k - 1) / (p + 1));
    MulCharacter om_s = MulCharacter::omega(p, s);
    GaloisRep g = GaloisRep::split(om_s * MulCharacter::mu(roots.first),
                                   om_s * MulCharacter::mu(roots.second));
    return make_result(g, "5b", {});
}

GSS breuil_modp_datum(int p, long long k) {
    if (k < 2 || k > p + 1)
        fail(errc::out_of_table_range, "the a_p = 0 datum covers 2 <= k <= p+1");
    return canonical_pi(p, static_cast<int>(k - 2), FieldElement::zero(p, 2),
                        MulCharacter::trivial(p));
}

} // namespace pgmod
