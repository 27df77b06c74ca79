#pragma once

#include <optional>

#include "pgmod/padic.hpp"
#include "pgmod/reps.hpp"

namespace pgmod {

// Representative of n mod (p-1) in {0..p-2}.
int bracket(int p, long long n);

// The semisimple GL_2 inventory attached to a semisimple Galois datum:
// rho(r, chi) -> pi(r, 0, chi), and a split sum of characters factored as
// (mu_lambda omega^(r+1) chi, mu_(lambda^-1) chi) ->
// pi(r, lambda, chi) + pi([p-3-r], lambda^-1, omega^(r+1) chi).
GSS galois_to_gl2(const GaloisRep& v);

// Inverse on canonical forms, reading the split case off the Borel profile:
// each finite-dimensional B-character chi1 (x) chi2 recovers the Galois
// pair as (omega chi2, chi1). Throws not_in_image otherwise.
GaloisRep gl2_to_galois(const GSS& pi_ss);

// Crystalline parameter (k, a_p) with val(a_p) > 0, or just its valuation
// (optionally with the residue of the unit part a_p / p^val).
struct CrystallineParams {
    int p = 0;
    long long k = 0;
    std::optional<PadicScalar> ap;       // exact digits mode
    bool ap_is_zero = false;             // a_p = 0 (accepted for the first table row only)
    std::optional<Fraction> ap_val;      // symbolic mode
    std::optional<int> ap_unit_residue;  // symbolic mode: residue of a_p / p^val

    static CrystallineParams with_ap(int p, long long k, PadicScalar ap);
    static CrystallineParams with_zero_ap(int p, long long k);
    static CrystallineParams with_val(int p, long long k, Fraction val,
                                      std::optional<int> unit_residue = {});
};

struct ReductionResult {
    GaloisRep galois;
    GSS gl2;
    std::string case_label; // "1", "2a", "2b", "3a", "3b", "3c", "4a", "4b", "5a", "5b"
    std::vector<std::string> notes;
};

// The complete reduction table for V_{k, a_p}:
//   (1)  2 <= k <= p+1:        ind(omega_2^(k-1))
//   (2)  k = p+2:              val < 1 -> ind(omega_2^2); val >= 1 -> split,
//        lambda^2 - red(a_p/p) lambda + 1 = 0
//   (3)  p+3 <= k <= 2p:       val < 1 -> ind(omega_2^(k-p)); val = 1 ->
//        split with lambda = red(a_p/p)(k-1); val > 1 -> ind(omega_2^(k-1))
//   (4)  k = 2p+1 (p odd):     val(a_p^2+p) < 3/2 -> ind(omega_2^2); else
//        split, lambda^2 - red((a_p^2+p)/(2 p a_p)) lambda + 1 = 0
//   (5)  k >= 2p+2, val > floor((k-2)/(p-1)): ind(omega_2^(k-1)) unless
//        (p+1) | k-1, in which case (mu_i + mu_-i) tensor omega^((k-1)/(p+1))
ReductionResult reduce_crystalline(const CrystallineParams& params);

// pi(k-2, 0, 1) for 2 <= k <= p+1; the a_p = 0 limit of the first table row.
GSS breuil_modp_datum(int p, long long k);

} // namespace pgmod
