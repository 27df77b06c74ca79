#pragma once

#include <optional>
#include <random>
#include <vector>

#include "pgmod/characters.hpp"
#include "pgmod/laurent.hpp"

namespace pgmod {

// One-dimensional coefficient datum W = omega^r mu_y on the fixed basis e
// with phi(e) = y e and gamma(e) = omega^r(gamma) e, together with the
// choice of lattice: sharp = X^-1 k[[X]] e, plus = k[[X]] e.
struct CharModel {
    enum class Flavor { plus, sharp };
    int p = 0;
    int m = 2;
    int r = 0;
    FieldElement y; // nonzero, in k_L
    Flavor flavor = Flavor::sharp;

    static CharModel make(int p, int m, int r, const FieldElement& y, Flavor flavor);
    int min_ord() const { return flavor == Flavor::sharp ? -1 : 0; }
    MulCharacter eta() const { return MulCharacter::make(p, r, y); }
};

// Finite-depth element of the psi-inverse-limit of the lattice: entries
// v_0..v_{d-1} (coefficient series of e) with psi_D(v_{i+1}) = v_i within
// precision, where psi_D(f e) = y^-1 psi(f) e.
struct Tower {
    CharModel model;
    MulCharacter central; // chi, fixing the center's action
    std::vector<LaurentSeries> entries;

    int depth() const { return static_cast<int>(entries.size()); }
};

// Upper-triangular element in the factored form
// diag(x,x) * diag(1,p^j) * diag(1,a) * upper(1,z).
struct BorelElement {
    QpElement x; // Q_p^x
    int j = 0;
    ZpDigits a;  // Z_p^x
    QpElement z; // Q_p, possibly zero

    QpElement entry_a() const { return x; }
    QpElement entry_d() const; // x * p^j * a
    QpElement entry_b() const; // x * z
};

// chi1(A) chi2(D) for the matrix (A B; 0 D) underlying g.
FieldElement bchar_value(const BCharacter& ch, const BorelElement& g);

// Compose two factored Borel elements (matrix product, re-factored).
BorelElement borel_compose(const BorelElement& g, const BorelElement& h, int digit_len = 40);

// psi_D on coefficient series: y^-1 psi(f); the lattice's pole bound is
// preserved and enforced on the input.
LaurentSeries module_psi(const CharModel& model, const LaurentSeries& f);

// The explicit element (y^n X^-1 e)_n of the sharp tower; res = 1.
Tower standard_tower(const CharModel& model, const MulCharacter& central, int depth, int prec);
// Its plus-lattice analogue (y^n e)_n, the seed for measure tests.
Tower plus_standard_tower(const CharModel& model, const MulCharacter& central, int depth,
                          int prec);

// Validity: psi_D(v_{i+1}) = v_i on overlapping windows for all i.
bool tower_is_valid(const Tower& t);

// Generator actions. Each returns a new tower; depth/precision budgets are
// consumed as documented and DepthExhausted/EmptyWindow raised when spent.
Tower star_center(const QpElement& x, const Tower& t);
Tower star_p_power(int j, const Tower& t);
Tower star_gamma(const ZpDigits& a, const Tower& t);
Tower star_unipotent(const QpElement& z, const Tower& t, std::optional<int> j_choice = {});

// Full action of a factored element, truncated to target_depth.
Tower star_action(const BorelElement& g, const Tower& t, int target_depth);

// res of the depth-0 entry (sharp flavor).
FieldElement tower_residue(const Tower& t);

// The B-character by which res transforms on the tower side,
// chi^-1 omega^(r-1) mu_y (x) omega^(1-r) mu_(y^-1), and the character of
// the corresponding one-dimensional piece on the dual side.
std::pair<BCharacter, BCharacter> residue_character(const CharModel& model,
                                                    const MulCharacter& central);

// Random valid tower, built upward with psi-preimages plus kernel noise.
Tower random_tower(const CharModel& model, const MulCharacter& central, int depth, int prec,
                   std::mt19937_64& rng);

struct ExactSequenceReport {
    bool surjective = false;
    bool kernel_matches_plus = true;
    long equivariance_checked = 0;
    long equivariance_violations = 0;
    std::vector<std::string> details;
    bool ok() const {
        return surjective && kernel_matches_plus && equivariance_violations == 0;
    }
};

// Finite-depth check of the residue exact sequence: surjectivity of res,
// kernel = plus-lattice towers, and res(g * v) = character(g) res(v).
ExactSequenceReport check_exact_sequence(const CharModel& model, const MulCharacter& central,
                                         int depth, int prec, int samples, std::uint64_t seed);

} // namespace pgmod
