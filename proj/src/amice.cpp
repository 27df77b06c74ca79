#include "pgmod/amice.hpp"

#include <algorithm>

namespace pgmod {

namespace {

long pow_long(int p, int n) {
    long r = 1;
    for (int i = 0; i < n; ++i) r *= p;
    return r;
}

// C(a, k) mod p for small nonnegative integers via digit product.
FieldElement int_binom(int p, int m, long a, long k) {
    ZpDigits ad = ZpDigits::from_int(p, a, 24);
    FieldElement b = lucas_binomial(ad, k);
    return m == 2 ? b.embedded() : b;
}

} // namespace

MeasureZp MeasureZp::zero(int p, int m, int level) {
    if (level < 0) fail(errc::bad_input, "negative measure level");
    MeasureZp nu;
    nu.p = p;
    nu.m = m;
    nu.level = level;
    nu.v.assign(static_cast<std::size_t>(pow_long(p, level)), FieldElement::zero(p, m));
    return nu;
}

MeasureZp MeasureZp::dirac(int p, int m, int level, long a) {
    MeasureZp nu = zero(p, m, level);
    nu.v[static_cast<std::size_t>(a % pow_long(p, level))] = FieldElement::one(p, m);
    return nu;
}

MeasureZp MeasureZp::restricted() const {
    if (level == 0) fail(errc::level_exhausted, "cannot restrict below level 0");
    MeasureZp out = zero(p, m, level - 1);
    long sz = out.size();
    for (long a = 0; a < sz; ++a) {
        FieldElement acc = FieldElement::zero(p, m);
        for (int c = 0; c < p; ++c) acc += at(a + c * sz);
        out.v[static_cast<std::size_t>(a)] = acc;
    }
    return out;
}

bool MeasureZp::operator==(const MeasureZp& o) const {
    return p == o.p && m == o.m && level == o.level && v == o.v;
}

LaurentSeries amice_transform(const MeasureZp& nu) {
    long sz = nu.size();
    LaurentSeries out = LaurentSeries::zero(nu.p, nu.m, 0, static_cast<int>(sz));
    for (long a = 0; a < sz; ++a) {
        if (nu.at(a).is_zero()) continue;
        for (long k = 0; k <= a; ++k) {
            FieldElement b = int_binom(nu.p, nu.m, a, k);
            if (!b.is_zero()) out.set(static_cast<int>(k), out.at(static_cast<int>(k)) + nu.at(a) * b);
        }
    }
    return out;
}

MeasureZp amice_inverse(const LaurentSeries& poly, int level) {
    const int p = poly.p;
    long sz = pow_long(p, level);
    if (poly.prec < sz)
        fail(errc::insufficient_precision, "polynomial window shorter than the level requires");
    MeasureZp nu = MeasureZp::zero(p, poly.m, level);
    // f_k = sum_{a >= k} nu(a) C(a, k): unitriangular, solve top down.
    for (long a = sz - 1; a >= 0; --a) {
        FieldElement acc = poly.at(static_cast<int>(a));
        for (long a2 = a + 1; a2 < sz; ++a2) {
            FieldElement b = int_binom(p, poly.m, a2, a);
            if (!b.is_zero()) acc -= nu.at(a2) * b;
        }
        nu.v[static_cast<std::size_t>(a)] = acc;
    }
    return nu;
}

MeasureZp measure_psi(const MeasureZp& nu) {
    if (nu.level < 1) fail(errc::level_exhausted, "psi needs level >= 1");
    MeasureZp out = MeasureZp::zero(nu.p, nu.m, nu.level - 1);
    for (long a = 0; a < out.size(); ++a)
        out.v[static_cast<std::size_t>(a)] = nu.at(nu.p * a);
    return out;
}

StepFunction StepFunction::zero(int p, int m, int shift, int level) {
    if (shift < 0 || level < 0) fail(errc::bad_input, "step function window out of range");
    if (pow_long(p, shift + level) > 2'000'000)
        fail(errc::bad_input, "step-function table too large");
    StepFunction f;
    f.p = p;
    f.m = m;
    f.shift = shift;
    f.level = level;
    f.v.assign(static_cast<std::size_t>(pow_long(p, shift + level)), FieldElement::zero(p, m));
    return f;
}

StepFunction StepFunction::indicator_zp(int p, int m, int level) {
    StepFunction f = zero(p, m, 0, level);
    std::fill(f.v.begin(), f.v.end(), FieldElement::one(p, m));
    return f;
}

FieldElement StepFunction::value_at(const PadicScalar& x) const {
    if (x.e != 1 || x.p != p) fail(errc::mismatched_field, "point in the wrong field");
    // Need the digits of x on [-shift, level) certified.
    if (x.prec < level)
        fail(errc::insufficient_digits, "point known to too little precision for this level");
    // Any nonzero digit below -shift puts x outside the support.
    for (int pos = x.ord; pos < -shift && pos < x.prec; ++pos)
        if (x.dg[static_cast<std::size_t>(pos - x.ord)] != 0) return FieldElement::zero(p, m);
    long u = 0, pw = 1;
    for (int pos = -shift; pos < level; ++pos) {
        int digit = 0;
        if (pos >= x.ord && pos < x.prec) digit = x.dg[static_cast<std::size_t>(pos - x.ord)];
        u += pw * digit;
        pw *= p;
    }
    return v[static_cast<std::size_t>(u)];
}

MeasureQp tower_to_measure(const Tower& t, int support, int level) {
    if (t.model.flavor != CharModel::Flavor::plus)
        fail(errc::bad_input, "measures come from plus-lattice towers");
    if (support >= t.depth())
        fail(errc::depth_exhausted, "support exponent exceeds the tower depth");
    const LaurentSeries& f = t.entries[static_cast<std::size_t>(support)];
    long need = pow_long(t.model.p, level);
    if (f.prec < need)
        fail(errc::insufficient_precision, "entry precision below p^level");
    LaurentSeries s = f.scaled(t.model.y.pow(-support)).truncated(static_cast<int>(need));
    MeasureQp nu;
    nu.support = support;
    nu.base = amice_inverse(s.widened(0), level);
    return nu;
}

FieldElement pair_integrate(const StepFunction& f, const MeasureQp& nu) {
    const int p = f.p;
    const int i = nu.support;
    const int n = nu.base.level;
    if (f.p != nu.base.p || f.m != nu.base.m)
        fail(errc::mismatched_field, "pairing across different coefficient fields");
    // The datum at support exponent i only integrates functions supported in
    // p^-i Z_p, and only down to cosets of p^(n-i) Z_p.
    if (f.shift > i)
        fail(errc::level_mismatch, "function support exceeds the measure's support exponent");
    if (n - i < f.level)
        fail(errc::level_mismatch, "measure level too coarse for the function's level");
    FieldElement acc = FieldElement::zero(p, f.m);
    long sz = nu.base.size();
    long shift_gap = pow_long(p, i - f.shift);
    long table_mod = pow_long(p, f.shift + f.level);
    for (long a = 0; a < sz; ++a) {
        const FieldElement& w = nu.base.at(a);
        if (w.is_zero()) continue;
        // x = p^-i a lies in the support iff p^(i - shift) divides a
        if (a % shift_gap != 0) continue;
        long u = (a / shift_gap) % table_mod;
        acc += f.v[static_cast<std::size_t>(u)] * w;
    }
    return acc;
}

StepFunction step_action(const QpElement& a, const QpElement& b, const QpElement& d,
                         const StepFunction& f, const BCharacter& chars) {
    const int p = f.p;
    if (a.zero || d.zero) fail(errc::bad_input, "diagonal entries must be invertible");
    FieldElement factor = chars.left.value_at(d) * chars.right.value_at(a);
    int new_shift = f.shift + d.val - a.val;
    if (!b.zero) new_shift = std::max(new_shift, d.val - b.val);
    new_shift = std::max(new_shift, 0);
    int new_level = std::max(f.level + a.val - d.val, 0);
    StepFunction out = StepFunction::zero(p, f.m, new_shift, new_level);
    const int work_prec = f.level + 8;
    PadicScalar as = PadicScalar::from_qp(a, a.val + static_cast<int>(a.unit.length()));
    PadicScalar ds = PadicScalar::from_qp(d, d.val + static_cast<int>(d.unit.length()));
    PadicScalar bs = b.zero ? PadicScalar::zero(p, 1, work_prec)
                            : PadicScalar::from_qp(b, b.val + static_cast<int>(b.unit.length()));
    long denom = pow_long(p, new_shift);
    for (long u = 0; u < out.size(); ++u) {
        PadicScalar x = PadicScalar::from_rational(p, 1, u, denom, work_prec + new_shift);
        PadicScalar arg = (ds * x - bs) / as;
        out.v[static_cast<std::size_t>(u)] = factor * f.value_at(arg);
    }
    return out;
}

} // namespace pgmod
