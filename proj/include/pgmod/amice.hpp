#pragma once

#include "pgmod/laurent.hpp"
#include "pgmod/tower.hpp"

namespace pgmod {

// Finite-level measure on Z_p: the value on each coset a + p^n Z_p.
struct MeasureZp {
    int p = 0;
    int m = 2;
    int level = 0;
    std::vector<FieldElement> v; // size p^level, indexed by a in {0..p^n-1}

    static MeasureZp zero(int p, int m, int level);
    static MeasureZp dirac(int p, int m, int level, long a);
    long size() const { return static_cast<long>(v.size()); }
    FieldElement at(long a) const { return v[static_cast<std::size_t>(a)]; }

    // Restriction to the coarser level n-1: values sum over fibers.
    MeasureZp restricted() const;
    bool operator==(const MeasureZp& o) const;
};

// A(nu) = nu(z -> (1+X)^z) = sum_a nu(a) (1+X)^a mod X^(p^n); a bijection
// onto polynomials of degree < p^n since (1+X)^(p^n) = 1 + X^(p^n).
LaurentSeries amice_transform(const MeasureZp& nu);
MeasureZp amice_inverse(const LaurentSeries& poly, int level);

// psi(nu)(a + p^(n-1) Z_p) = nu(pa + p^n Z_p); satisfies A(psi nu) = psi(A nu).
MeasureZp measure_psi(const MeasureZp& nu);

// Compactly supported measure on Q_p: integrates f supported in p^-i Z_p
// through int f(p^-i z) d(base).
struct MeasureQp {
    int support = 0; // support contained in p^-support Z_p
    MeasureZp base;
};

// Locally constant compactly supported function: supported in p^-shift Z_p,
// constant on cosets of p^level Z_p; value index u encodes x = p^-shift u.
struct StepFunction {
    int p = 0;
    int m = 2;
    int shift = 0;
    int level = 1;
    std::vector<FieldElement> v; // size p^(shift+level)

    static StepFunction zero(int p, int m, int shift, int level);
    static StepFunction indicator_zp(int p, int m, int level); // 1 on Z_p
    long size() const { return static_cast<long>(v.size()); }

    // Value at an exact rational point (throws nothing: outside support = 0).
    FieldElement value_at(const PadicScalar& x) const;
};

// The measure nu_y attached to a plus-lattice tower: A(nu_{y,i}) = y^-i f_i,
// represented at the requested support exponent and level.
MeasureQp tower_to_measure(const Tower& t, int support, int level);

// int f d(nu): requires the measure level to resolve f's cosets.
FieldElement pair_integrate(const StepFunction& f, const MeasureQp& nu);

// The right action of an upper-triangular (a b; 0 d) on the step-function
// model of the induced representation:
// (g * f)(x) = chi1(d) chi2(a) f((d x - b)/a).
StepFunction step_action(const QpElement& a, const QpElement& b, const QpElement& d,
                         const StepFunction& f, const BCharacter& chars);

} // namespace pgmod
