#pragma once

#include <vector>

#include "pgmod/characters.hpp"

namespace pgmod {

// Semisimple mod-p Galois representation of dimension 2: either the
// irreducible rho(r, chi) induced from the level-2 fundamental character,
// stored in canonical form, or a split sum of two characters (unordered).
struct GaloisRep {
    enum class Kind { irred, split };
    Kind kind = Kind::irred;
    int r = 0;           // irred only, in {0..p-1}
    MulCharacter chi;    // irred only
    MulCharacter c1, c2; // split only, c1 <= c2 canonically

    static GaloisRep irred(int r, const MulCharacter& chi); // canonicalizes
    static GaloisRep split(const MulCharacter& a, const MulCharacter& b);

    int p() const { return kind == Kind::irred ? chi.p : c1.p; }
    MulCharacter det() const; // omega^(r+1) chi^2, resp. c1*c2
    bool operator==(const GaloisRep& o) const;
    std::string str() const;
};

// Irreducible smooth GL_2(Q_p) representation with a central character,
// recorded as a semantic label.
struct GAtom {
    enum class Kind { one_dim, special_twist, principal_series, supersingular };
    Kind kind = Kind::one_dim;
    MulCharacter chi1; // one_dim/special_twist: the twist; PS: left; ss: chi
    MulCharacter chi2; // PS only: right
    int r = 0;         // ss only

    static GAtom one_dim(const MulCharacter& chi);
    static GAtom special_twist(const MulCharacter& chi);
    static GAtom principal_series(const BCharacter& b); // requires left != right
    static GAtom supersingular(int r, const MulCharacter& chi); // canonicalizes

    MulCharacter central() const;
    bool operator==(const GAtom& o) const;
    bool operator<(const GAtom& o) const;
    std::string str() const;
};

using GSS = std::vector<GAtom>; // multiset, kept sorted

// Irreducible smooth Borel representation label: a character of B, or an
// infinite-dimensional representation determined by its central character
// and a Galois representation W of dimension 1 or 2.
struct BAtom {
    enum class Kind { b_char, omega_dim1, omega_dim2 };
    Kind kind = Kind::b_char;
    MulCharacter chi1; // b_char: left;  omega: central character
    MulCharacter chi2; // b_char: right; omega_dim1: eta_W; omega_dim2: chi of rho(r, chi)
    int r = 0;         // omega_dim2 only

    static BAtom b_char(const BCharacter& b);
    static BAtom omega_dim1(const MulCharacter& central, const MulCharacter& eta);
    static BAtom omega_dim2(const MulCharacter& central, int r, const MulCharacter& chi);

    bool operator==(const BAtom& o) const;
    bool operator<(const BAtom& o) const;
    std::string str() const;
};

using BSS = std::vector<BAtom>; // multiset, kept sorted

void normalize(GSS& s);
void normalize(BSS& s);
GSS merged(GSS a, const GSS& b);

// Orbit of (r, chi) under the intertwinings
// rho(r,chi) ~ rho(r,chi mu_-1) ~ rho(p-1-r, chi omega^r) ~ ...,
// shared by the supersingular labels pi(r,0,chi).
std::vector<std::pair<int, MulCharacter>> intertwining_orbit(int p, int r,
                                                             const MulCharacter& chi);

GaloisRep canonical_rho(int p, int r, const MulCharacter& chi);

// ind(omega_2^h) tensor twist, normalized to rho(r, chi) through
// omega_2^(p+1) = omega. Throws reducible_induction when (p+1) | h.
GaloisRep ind_omega2(int p, long long h, const MulCharacter& twist);

// Semisimplification of pi(r, lambda, chi) as a multiset of atoms:
// lambda = 0 -> supersingular; boundary (r, lambda) in {(0,±1),(p-1,±1)} ->
// character + twisted special; otherwise an irreducible principal series.
GSS canonical_pi(int p, int r, const FieldElement& lambda, const MulCharacter& chi);

// Borel restriction profile (semisimplified) of a semisimple GL_2 inventory.
BSS restrict_to_borel(const GSS& reps);

// Inverse of restrict_to_borel on profiles that arise from a GSS.
GSS reconstruct_from_borel(const BSS& profile);

// The two Borel profiles that share the label Omega_chi(W) for dim-1 W:
// the parabolic induction Ind(eta_W (x) chi eta_W^-1) and the dual of the
// psi-tower of the sharp lattice.
std::pair<BSS, BSS> ghost_identities(const MulCharacter& W, const MulCharacter& chi);

} // namespace pgmod
