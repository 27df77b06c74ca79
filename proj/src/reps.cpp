#include "pgmod/reps.hpp"

#include <algorithm>
#include <map>

namespace pgmod {

namespace {

MulCharacter mu_minus_one(int p) {
    return MulCharacter::mu(FieldElement::from_int(p, 2, -1));
}

bool tuple_less(const std::pair<int, MulCharacter>& a, const std::pair<int, MulCharacter>& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
}

} // namespace

std::vector<std::pair<int, MulCharacter>> intertwining_orbit(int p, int r,
                                                             const MulCharacter& chi) {
    if (r < 0 || r > p - 1) fail(errc::bad_input, "twist parameter r out of {0..p-1}");
    MulCharacter m1 = mu_minus_one(p);
    MulCharacter om_r = MulCharacter::omega(p, r);
    std::vector<std::pair<int, MulCharacter>> orbit = {
        {r, chi},
        {r, chi * m1},
        {p - 1 - r, chi * om_r},
        {p - 1 - r, chi * om_r * m1},
    };
    std::sort(orbit.begin(), orbit.end(), tuple_less);
    orbit.erase(std::unique(orbit.begin(), orbit.end(),
                            [](const auto& a, const auto& b) {
                                return a.first == b.first && a.second == b.second;
                            }),
                orbit.end());
    return orbit;
}

// ---------------------------------------------------------------------------
// GaloisRep

GaloisRep GaloisRep::irred(int r, const MulCharacter& chi) {
    return canonical_rho(chi.p, r, chi);
}

GaloisRep GaloisRep::split(const MulCharacter& a, const MulCharacter& b) {
    GaloisRep v;
    v.kind = Kind::split;
    v.chi = a; // unused placeholder keeps the struct fully initialized
    if (b < a) {
        v.c1 = b;
        v.c2 = a;
    } else {
        v.c1 = a;
        v.c2 = b;
    }
    return v;
}

MulCharacter GaloisRep::det() const {
    if (kind == Kind::irred) return MulCharacter::omega(chi.p, r + 1) * chi * chi;
    return c1 * c2;
}

bool GaloisRep::operator==(const GaloisRep& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::irred) return r == o.r && chi == o.chi;
    return c1 == o.c1 && c2 == o.c2;
}

std::string GaloisRep::str() const {
    if (kind == Kind::irred)
        return "rho(" + std::to_string(r) + ", " + chi.str() + ")";
    return "(" + c1.str() + ") + (" + c2.str() + ")";
}

GaloisRep canonical_rho(int p, int r, const MulCharacter& chi) {
    auto orbit = intertwining_orbit(p, r, chi);
    GaloisRep v;
    v.kind = GaloisRep::Kind::irred;
    v.r = orbit.front().first;
    v.chi = orbit.front().second;
    v.c1 = v.c2 = v.chi;
    return v;
}

GaloisRep ind_omega2(int p, long long h, const MulCharacter& twist) {
    long long n = p + 1;
    if (((h % n) + n) % n == 0)
        fail(errc::reducible_induction, "ind(omega_2^h) is reducible when (p+1) | h");
    long long order = static_cast<long long>(p) * p - 1;
    long long hh = ((h % order) + order) % order; // omega_2 has order p^2 - 1
    int r = static_cast<int>(hh % n) - 1;         // h = (r+1) + (p+1) s
    long long s = (hh - (r + 1)) / n;
    return canonical_rho(p, r, MulCharacter::omega(p, static_cast<int>(s % (p - 1))) * twist);
}

// ---------------------------------------------------------------------------
// GAtom / GSS

GAtom GAtom::one_dim(const MulCharacter& chi) {
    GAtom a;
    a.kind = Kind::one_dim;
    a.chi1 = a.chi2 = chi;
    return a;
}

GAtom GAtom::special_twist(const MulCharacter& chi) {
    GAtom a;
    a.kind = Kind::special_twist;
    a.chi1 = a.chi2 = chi;
    return a;
}

GAtom GAtom::principal_series(const BCharacter& b) {
    if (b.left == b.right)
        fail(errc::bad_input, "principal series requires distinct inducing characters");
    GAtom a;
    a.kind = Kind::principal_series;
    a.chi1 = b.left;
    a.chi2 = b.right;
    return a;
}

GAtom GAtom::supersingular(int r, const MulCharacter& chi) {
    auto orbit = intertwining_orbit(chi.p, r, chi);
    GAtom a;
    a.kind = Kind::supersingular;
    a.r = orbit.front().first;
    a.chi1 = a.chi2 = orbit.front().second;
    return a;
}

MulCharacter GAtom::central() const {
    switch (kind) {
        case Kind::one_dim:
        case Kind::special_twist:
            return chi1 * chi1;
        case Kind::principal_series:
            return chi1 * chi2;
        case Kind::supersingular:
            return MulCharacter::omega(chi1.p, r) * chi1 * chi1;
    }
    fail(errc::bad_input, "corrupt atom");
}

bool GAtom::operator==(const GAtom& o) const {
    return kind == o.kind && r == o.r && chi1 == o.chi1 && chi2 == o.chi2;
}

bool GAtom::operator<(const GAtom& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    if (r != o.r) return r < o.r;
    if (chi1 != o.chi1) return chi1 < o.chi1;
    return chi2 < o.chi2;
}

std::string GAtom::str() const {
    switch (kind) {
        case Kind::one_dim:
            return "char(" + chi1.str() + ")";
        case Kind::special_twist:
            return "Sp(x)(" + chi1.str() + ")";
        case Kind::principal_series:
            return "PS(" + chi1.str() + " (x) " + chi2.str() + ")";
        case Kind::supersingular:
            return "ss(" + std::to_string(r) + ", " + chi1.str() + ")";
    }
    return "?";
}

void normalize(GSS& s) { std::sort(s.begin(), s.end()); }
void normalize(BSS& s) { std::sort(s.begin(), s.end()); }

GSS merged(GSS a, const GSS& b) {
    a.insert(a.end(), b.begin(), b.end());
    normalize(a);
    return a;
}

GSS canonical_pi(int p, int r, const FieldElement& lambda, const MulCharacter& chi) {
    if (r < 0 || r > p - 1) fail(errc::bad_input, "weight parameter r out of {0..p-1}");
    FieldElement lam = lambda.m == 2 ? lambda : lambda.embedded();
    GSS out;
    if (lam.is_zero()) {
        out.push_back(GAtom::supersingular(r, chi));
        return out;
    }
    FieldElement one = FieldElement::one(p, 2);
    bool lambda_pm1 = (lam == one) || (lam == -one);
    bool boundary = lambda_pm1 && (r == 0 || r == p - 1);
    if (boundary) {
        MulCharacter tw = chi * MulCharacter::mu(lam);
        out.push_back(GAtom::one_dim(tw));
        out.push_back(GAtom::special_twist(tw));
        normalize(out);
        return out;
    }
    BCharacter b{chi * MulCharacter::mu(lam.inv()),
                 chi * MulCharacter::mu(lam) * MulCharacter::omega(p, r)};
    out.push_back(GAtom::principal_series(b));
    return out;
}

// ---------------------------------------------------------------------------
// BAtom / BSS

BAtom BAtom::b_char(const BCharacter& b) {
    BAtom a;
    a.kind = Kind::b_char;
    a.chi1 = b.left;
    a.chi2 = b.right;
    return a;
}

BAtom BAtom::omega_dim1(const MulCharacter& central, const MulCharacter& eta) {
    BAtom a;
    a.kind = Kind::omega_dim1;
    a.chi1 = central;
    a.chi2 = eta;
    return a;
}

BAtom BAtom::omega_dim2(const MulCharacter& central, int r, const MulCharacter& chi) {
    auto orbit = intertwining_orbit(chi.p, r, chi);
    BAtom a;
    a.kind = Kind::omega_dim2;
    a.chi1 = central;
    a.r = orbit.front().first;
    a.chi2 = orbit.front().second;
    return a;
}

bool BAtom::operator==(const BAtom& o) const {
    return kind == o.kind && r == o.r && chi1 == o.chi1 && chi2 == o.chi2;
}

bool BAtom::operator<(const BAtom& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    if (r != o.r) return r < o.r;
    if (chi1 != o.chi1) return chi1 < o.chi1;
    return chi2 < o.chi2;
}

std::string BAtom::str() const {
    switch (kind) {
        case Kind::b_char:
            return "bchar(" + chi1.str() + " (x) " + chi2.str() + ")";
        case Kind::omega_dim1:
            return "omega[" + chi1.str() + "; " + chi2.str() + "]";
        case Kind::omega_dim2:
            return "omega[" + chi1.str() + "; rho(" + std::to_string(r) + ", " + chi2.str() +
                   ")]";
    }
    return "?";
}

BSS restrict_to_borel(const GSS& reps) {
    BSS out;
    for (const GAtom& a : reps) {
        switch (a.kind) {
            case GAtom::Kind::one_dim:
                out.push_back(BAtom::b_char(BCharacter{a.chi1, a.chi1}));
                break;
            case GAtom::Kind::special_twist:
                out.push_back(BAtom::omega_dim1(a.chi1 * a.chi1, a.chi1));
                break;
            case GAtom::Kind::principal_series:
                out.push_back(BAtom::omega_dim1(a.chi1 * a.chi2, a.chi1));
                out.push_back(BAtom::b_char(BCharacter{a.chi1, a.chi2}));
                break;
            case GAtom::Kind::supersingular:
                out.push_back(BAtom::omega_dim2(
                    MulCharacter::omega(a.chi1.p, a.r) * a.chi1 * a.chi1, a.r, a.chi1));
                break;
        }
    }
    normalize(out);
    return out;
}

GSS reconstruct_from_borel(const BSS& profile) {
    GSS out;
    std::vector<BAtom> omegas1;
    std::vector<BAtom> bchars;
    for (const BAtom& a : profile) {
        switch (a.kind) {
            case BAtom::Kind::omega_dim2: {
                MulCharacter expect =
                    MulCharacter::omega(a.chi2.p, a.r) * a.chi2 * a.chi2;
                if (!(expect == a.chi1))
                    fail(errc::inconsistent_profile,
                         "dim-2 label central character does not match its parameters");
                out.push_back(GAtom::supersingular(a.r, a.chi2));
                break;
            }
            case BAtom::Kind::omega_dim1:
                omegas1.push_back(a);
                break;
            case BAtom::Kind::b_char:
                bchars.push_back(a);
                break;
        }
    }
    // Each B-character with distinct components pairs with the label of the
    // infinite-dimensional part of the same induction; equal components come
    // from a one-dimensional representation.
    for (const BAtom& b : bchars) {
        if (b.chi1 == b.chi2) {
            out.push_back(GAtom::one_dim(b.chi1));
            continue;
        }
        MulCharacter want_central = b.chi1 * b.chi2;
        auto it = std::find_if(omegas1.begin(), omegas1.end(), [&](const BAtom& w) {
            return w.chi1 == want_central && w.chi2 == b.chi1;
        });
        if (it == omegas1.end())
            fail(errc::inconsistent_profile,
                 "principal-series character without its induction label: " + b.str());
        omegas1.erase(it);
        out.push_back(GAtom::principal_series(BCharacter{b.chi1, b.chi2}));
    }
    // Remaining dim-1 labels are twists of the special representation.
    for (const BAtom& w : omegas1) {
        if (!(w.chi1 == w.chi2 * w.chi2))
            fail(errc::inconsistent_profile,
                 "unpaired dim-1 label is not a special twist: " + w.str());
        out.push_back(GAtom::special_twist(w.chi2));
    }
    normalize(out);
    return out;
}

std::pair<BSS, BSS> ghost_identities(const MulCharacter& W, const MulCharacter& chi) {
    const int p = W.p;
    MulCharacter om = MulCharacter::omega(p, 1);
    BSS ind_side = {BAtom::omega_dim1(chi, W), BAtom::b_char(BCharacter{W, chi * W.inverse()})};
    BSS tower_side = {BAtom::omega_dim1(chi, W),
                      BAtom::b_char(BCharacter{chi * om * W.inverse(), om.inverse() * W})};
    normalize(ind_side);
    normalize(tower_side);
    return {ind_side, tower_side};
}

} // namespace pgmod
