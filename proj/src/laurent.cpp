#include "pgmod/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace pgmod {

namespace {

void check_ring(const LaurentSeries& a, const LaurentSeries& b) {
    if (!a.same_ring(b)) fail(errc::mismatched_field, "series over different coefficient fields");
}

void check_window(int ord, int prec) {
    if (prec <= ord) fail(errc::empty_window, "series window [" + std::to_string(ord) + ", " +
                                                  std::to_string(prec) + ") is empty");
}

// C(i, r) mod p for 0 <= r, i < p.
int small_binom(int i, int r) {
    if (r < 0 || r > i) return 0;
    long long c = 1;
    for (int j = 0; j < r; ++j) c = c * (i - j) / (j + 1);
    return static_cast<int>(c);
}

} // namespace

LaurentSeries LaurentSeries::zero(int p, int m, int ord, int prec) {
    check_window(ord, prec);
    LaurentSeries f;
    f.p = p;
    f.m = m;
    f.ord = ord;
    f.prec = prec;
    f.c.assign(static_cast<std::size_t>(prec - ord), FieldElement::zero(p, m));
    return f;
}

LaurentSeries LaurentSeries::constant(const FieldElement& v, int prec) {
    LaurentSeries f = zero(v.p, v.m, 0, prec);
    f.c[0] = v;
    return f;
}

LaurentSeries LaurentSeries::monomial(const FieldElement& v, int exp, int prec) {
    LaurentSeries f = zero(v.p, v.m, std::min(exp, prec - 1), prec);
    f.set(exp, v);
    return f;
}

FieldElement LaurentSeries::at(int exp) const {
    if (exp < ord) return FieldElement::zero(p, m);
    if (exp >= prec)
        fail(errc::window_miss, "coefficient of X^" + std::to_string(exp) +
                                    " outside window ending at " + std::to_string(prec));
    return c[static_cast<std::size_t>(exp - ord)];
}

void LaurentSeries::set(int exp, const FieldElement& v) {
    if (exp < ord || exp >= prec) fail(errc::window_miss, "set outside window");
    c[static_cast<std::size_t>(exp - ord)] = v;
}

bool LaurentSeries::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const FieldElement& x) { return x.is_zero(); });
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    check_ring(*this, o);
    int r_ord = std::min(ord, o.ord);
    int r_prec = std::min(prec, o.prec);
    LaurentSeries r = zero(p, m, r_ord, r_prec);
    for (int e = r_ord; e < r_prec; ++e) r.set(e, at(e) + o.at(e));
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
    check_ring(*this, o);
    int r_ord = std::min(ord, o.ord);
    int r_prec = std::min(prec, o.prec);
    LaurentSeries r = zero(p, m, r_ord, r_prec);
    for (int e = r_ord; e < r_prec; ++e) r.set(e, at(e) - o.at(e));
    return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    check_ring(*this, o);
    int r_ord = ord + o.ord;
    int r_prec = std::min(ord + o.prec, o.ord + prec);
    LaurentSeries r = zero(p, m, r_ord, r_prec);
    const int n1 = size(), n2 = o.size();
    for (int i = 0; i < n1; ++i) {
        if (c[static_cast<std::size_t>(i)].is_zero()) continue;
        const FieldElement& a = c[static_cast<std::size_t>(i)];
        int base = ord + i + o.ord - r_ord;
        int jmax = std::min(n2, r_prec - r_ord - base);
        for (int j = 0; j < jmax; ++j) {
            if (o.c[static_cast<std::size_t>(j)].is_zero()) continue;
            r.c[static_cast<std::size_t>(base + j)] += a * o.c[static_cast<std::size_t>(j)];
        }
    }
    return r;
}

LaurentSeries LaurentSeries::scaled(const FieldElement& s) const {
    LaurentSeries r = *this;
    for (auto& x : r.c) x *= s;
    return r;
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries r = *this;
    r.ord += k;
    r.prec += k;
    return r;
}

LaurentSeries LaurentSeries::truncated(int new_prec) const {
    check_window(ord, new_prec);
    LaurentSeries r = *this;
    if (new_prec < prec) {
        r.prec = new_prec;
        r.c.resize(static_cast<std::size_t>(new_prec - ord));
    }
    return r;
}

LaurentSeries LaurentSeries::widened(int new_ord) const {
    if (new_ord >= ord) return *this;
    LaurentSeries r = zero(p, m, new_ord, prec);
    std::copy(c.begin(), c.end(), r.c.begin() + (ord - new_ord));
    return r;
}

bool LaurentSeries::equals_on_overlap(const LaurentSeries& o) const {
    int lo = std::min(ord, o.ord);
    int hi = std::min(prec, o.prec);
    for (int e = lo; e < hi; ++e)
        if (at(e) != o.at(e)) return false;
    return true;
}

std::string LaurentSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int e = ord; e < prec; ++e) {
        FieldElement v = at(e);
        if (v.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << v.str() << ")*X^" << e;
        first = false;
    }
    if (first) os << "0";
    os << " + O(X^" << prec << ")";
    return os.str();
}

LaurentSeries frobenius_phi(const LaurentSeries& f) {
    const int p = f.p;
    LaurentSeries r = LaurentSeries::zero(p, f.m, p * f.ord, p * (f.prec - 1) + 1);
    for (int e = f.ord; e < f.prec; ++e) r.set(p * e, f.at(e));
    return r;
}

namespace {

int floor_div(int a, int b) {
    int q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

// psi on a power-series window (ord >= 0). Output precision follows the
// conservative contract floor((prec - (p-1))/p).
LaurentSeries psi_power_part(const LaurentSeries& f) {
    const int p = f.p;
    int out_prec = floor_div(f.prec - (p - 1), p);
    int out_ord = floor_div(f.ord, p);
    check_window(out_ord, out_prec);
    LaurentSeries y0 = LaurentSeries::zero(p, f.m, out_ord, out_prec);
    std::vector<FieldElement> blk(static_cast<std::size_t>(p), FieldElement::zero(p, f.m));
    for (int mm = out_ord; mm < out_prec; ++mm) {
        // gather f coefficients on the block [pm, pm+p-1]
        for (int r = 0; r < p; ++r) blk[static_cast<std::size_t>(r)] = f.at(p * mm + r);
        // back-substitute the triangular system f_r = sum_{i>=r} C(i,r) y_i
        std::vector<FieldElement> y(blk);
        for (int i = p - 2; i >= 0; --i) {
            FieldElement acc = blk[static_cast<std::size_t>(i)];
            for (int i2 = i + 1; i2 < p; ++i2)
                acc -= y[static_cast<std::size_t>(i2)].scaled(small_binom(i2, i));
            y[static_cast<std::size_t>(i)] = acc;
        }
        y0.set(mm, y[0]);
    }
    return y0;
}

} // namespace

LaurentSeries psi(const LaurentSeries& f) {
    const int p = f.p;
    if (f.ord >= 0) return psi_power_part(f);
    // Clear the pole: psi(f) = X^(-s) psi(X^(ps) f), minimal s.
    int s = (-f.ord + p - 1) / p;
    LaurentSeries g = f.shifted(p * s);
    return psi_power_part(g).shifted(-s);
}

LaurentSeries one_plus_x_pow(const ZpDigits& z, int m, int prec) {
    const int p = z.p;
    LaurentSeries r = LaurentSeries::zero(p, m, 0, prec);
    for (int n = 0; n < prec; ++n) {
        FieldElement b = lucas_binomial(z, n);
        r.set(n, m == 2 ? b.embedded() : b);
    }
    return r;
}

LaurentSeries invert_unit(const LaurentSeries& f) {
    if (f.ord != 0 || f.at(0).is_zero())
        fail(errc::not_a_unit, "series inverse requires a unit with window starting at 0");
    LaurentSeries r = LaurentSeries::zero(f.p, f.m, 0, f.prec);
    FieldElement a0_inv = f.at(0).inv();
    r.set(0, a0_inv);
    for (int n = 1; n < f.prec; ++n) {
        FieldElement acc = FieldElement::zero(f.p, f.m);
        for (int k = 1; k <= n; ++k) acc += f.at(k) * r.at(n - k);
        r.set(n, -(a0_inv * acc));
    }
    return r;
}

LaurentSeries compose(const LaurentSeries& f, const LaurentSeries& g) {
    check_ring(f, g);
    if (g.ord < 1) fail(errc::bad_input, "substitution series must vanish at 0");
    const int prec = f.prec;
    int acc_ord = std::min(f.ord, prec - 1);
    LaurentSeries acc = LaurentSeries::zero(f.p, f.m, std::min(acc_ord, 0), prec);
    // Nonnegative part: power table g^k, ord(g^k) >= k so the table shrinks.
    if (prec > 0) {
        LaurentSeries pw = LaurentSeries::constant(FieldElement::one(f.p, f.m), prec);
        for (int k = 0; k < prec; ++k) {
            if (k >= f.ord) {
                FieldElement fk = f.at(k);
                if (!fk.is_zero()) acc = acc + pw.scaled(fk);
            }
            if (k + 1 >= prec || pw.ord + g.ord >= prec) break;
            pw = (pw * g).truncated(prec);
        }
    }
    // Pole part: g^(-1) = X^(-1) * u^(-1) with u = g / X a unit series.
    if (f.ord < 0) {
        if (prec < 0)
            fail(errc::empty_window, "cannot substitute into a pole-only window");
        int upr = prec - f.ord; // u-precision needed so X^k u^k covers the window
        if (g.prec - 1 < upr)
            fail(errc::insufficient_precision, "substitution series too short for pole part");
        LaurentSeries u = LaurentSeries::zero(f.p, f.m, 0, upr);
        for (int e = 0; e < upr; ++e) u.set(e, g.at(e + 1));
        LaurentSeries u_inv = invert_unit(u);
        LaurentSeries u_pow = u_inv;
        for (int k = -1; k >= f.ord; --k) {
            FieldElement fk = f.at(k);
            if (!fk.is_zero()) acc = acc + u_pow.shifted(k).truncated(prec).scaled(fk);
            if (k - 1 >= f.ord) u_pow = (u_pow * u_inv).truncated(upr);
        }
    }
    // Exact on f's window.
    LaurentSeries out = LaurentSeries::zero(f.p, f.m, f.ord, f.prec);
    for (int e = f.ord; e < f.prec; ++e) out.set(e, acc.at(e));
    return out;
}

LaurentSeries gamma_act(const ZpDigits& a, const LaurentSeries& f) {
    if (!a.is_unit()) fail(errc::not_a_unit, "gamma_a requires a unit exponent");
    bool is_one = a.d[0] == 1 &&
                  std::all_of(a.d.begin() + 1, a.d.end(), [](std::uint8_t x) { return x == 0; });
    if (is_one) return f;
    // g = (1+X)^a - 1, with enough terms for both the power table and the
    // unit inverse used by the pole part.
    int need = f.prec - std::min(f.ord, 0) + 1;
    LaurentSeries pows = one_plus_x_pow(a, f.m, need);
    LaurentSeries g = LaurentSeries::zero(f.p, f.m, 1, need);
    for (int e = 1; e < need; ++e) g.set(e, pows.at(e));
    return compose(f, g);
}

FieldElement residue(const LaurentSeries& f) {
    if (f.prec <= -1) fail(errc::window_miss, "window ends before X^-1");
    return f.at(-1);
}

LaurentSeries psi_preimage_in(int j, const LaurentSeries& target) {
    const int p = target.p;
    if (j < 0 || target.ord < 0) fail(errc::bad_input, "preimage search is for power series");
    // Unknowns: coefficients of h = sum_{n=j}^{j+K-1} c_n X^n. psi is linear
    // and psi(X^n) has window down to floor(n/p), so K = p * rows is enough.
    const int rows = target.prec; // match coefficients of X^0..X^(prec-1)
    const int K = p * (rows + 1) + p;
    // Build the matrix column by column: column n-j = coefficients of psi(X^n).
    std::vector<std::vector<FieldElement>> M(
        static_cast<std::size_t>(rows),
        std::vector<FieldElement>(static_cast<std::size_t>(K), FieldElement::zero(p, target.m)));
    for (int col = 0; col < K; ++col) {
        LaurentSeries mono =
            LaurentSeries::monomial(FieldElement::one(p, target.m), j + col, j + col + p * rows + p);
        LaurentSeries im = psi(mono);
        for (int r = 0; r < rows; ++r) {
            if (r < im.prec) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = im.at(r);
        }
    }
    std::vector<FieldElement> rhs(static_cast<std::size_t>(rows), FieldElement::zero(p, target.m));
    for (int r = 0; r < rows; ++r) rhs[static_cast<std::size_t>(r)] = target.at(r);
    // Gaussian elimination.
    std::vector<int> pivot_col(static_cast<std::size_t>(rows), -1);
    int rank = 0;
    for (int col = 0; col < K && rank < rows; ++col) {
        int sel = -1;
        for (int r = rank; r < rows; ++r)
            if (!M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(M[static_cast<std::size_t>(sel)], M[static_cast<std::size_t>(rank)]);
        std::swap(rhs[static_cast<std::size_t>(sel)], rhs[static_cast<std::size_t>(rank)]);
        FieldElement inv = M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)].inv();
        for (int cc = col; cc < K; ++cc)
            M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)] *= inv;
        rhs[static_cast<std::size_t>(rank)] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            FieldElement fct = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (fct.is_zero()) continue;
            for (int cc = col; cc < K; ++cc)
                M[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
                    fct * M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)];
            rhs[static_cast<std::size_t>(r)] -= fct * rhs[static_cast<std::size_t>(rank)];
        }
        pivot_col[static_cast<std::size_t>(rank)] = col;
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (!rhs[static_cast<std::size_t>(r)].is_zero())
            fail(errc::bad_input, "no psi-preimage in X^" + std::to_string(j) + "*k[[X]]");
    LaurentSeries h = LaurentSeries::zero(p, target.m, j, j + K);
    for (int r = 0; r < rank; ++r) h.set(j + pivot_col[static_cast<std::size_t>(r)],
                                         rhs[static_cast<std::size_t>(r)]);
    return h;
}

} // namespace pgmod
