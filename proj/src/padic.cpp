#include "pgmod/padic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pgmod {

namespace {

long long llgcd(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int umod(long long v, int p) {
    int r = static_cast<int>(v % p);
    return r < 0 ? r + p : r;
}

} // namespace

Fraction::Fraction(long long n, long long d) {
    if (d == 0) fail(errc::division_by_zero, "fraction with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = llgcd(n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Fraction Fraction::operator+(const Fraction& o) const {
    return Fraction(num * o.den + o.num * den, den * o.den);
}
Fraction Fraction::operator-(const Fraction& o) const {
    return Fraction(num * o.den - o.num * den, den * o.den);
}
Fraction Fraction::operator*(const Fraction& o) const { return Fraction(num * o.num, den * o.den); }
bool Fraction::operator<(const Fraction& o) const { return num * o.den < o.num * den; }

std::string Fraction::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Fraction Fraction::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Fraction(std::stoll(s));
        return Fraction(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        fail(errc::bad_input, "cannot parse rational '" + s + "'");
    }
}

long long rational_valuation(long long num, long long den, int p) {
    if (num == 0) fail(errc::bad_input, "valuation of zero");
    long long v = 0;
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    return v;
}

// ---------------------------------------------------------------------------
// ZpDigits

ZpDigits ZpDigits::from_int(int p, long long v, std::size_t len) {
    ZpDigits z;
    z.p = p;
    z.d.resize(len);
    long long r = v;
    for (std::size_t i = 0; i < len; ++i) {
        int digit = umod(r, p);
        z.d[i] = static_cast<std::uint8_t>(digit);
        r = (r - digit) / p;
    }
    return z;
}

bool ZpDigits::all_zero() const {
    return std::all_of(d.begin(), d.end(), [](std::uint8_t x) { return x == 0; });
}

ZpDigits ZpDigits::truncated(std::size_t len) const {
    ZpDigits z = *this;
    if (z.d.size() > len) z.d.resize(len);
    return z;
}

ZpDigits ZpDigits::shifted(std::size_t k) const {
    ZpDigits z;
    z.p = p;
    z.d.assign(k, 0);
    z.d.insert(z.d.end(), d.begin(), d.end());
    return z;
}

ZpDigits ZpDigits::add(const ZpDigits& o) const {
    std::size_t len = std::min(d.size(), o.d.size());
    ZpDigits z;
    z.p = p;
    z.d.resize(len);
    int carry = 0;
    for (std::size_t i = 0; i < len; ++i) {
        int s = d[i] + o.d[i] + carry;
        z.d[i] = static_cast<std::uint8_t>(s % p);
        carry = s / p;
    }
    return z;
}

ZpDigits ZpDigits::mul(const ZpDigits& o) const {
    std::size_t len = std::min(d.size(), o.d.size());
    ZpDigits z;
    z.p = p;
    z.d.resize(len);
    std::vector<long long> acc(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        if (d[i] == 0) continue;
        for (std::size_t j = 0; i + j < len && j < o.d.size(); ++j)
            acc[i + j] += static_cast<long long>(d[i]) * o.d[j];
    }
    long long carry = 0;
    for (std::size_t i = 0; i < len; ++i) {
        long long s = acc[i] + carry;
        z.d[i] = static_cast<std::uint8_t>(s % p);
        carry = s / p;
    }
    return z;
}

ZpDigits ZpDigits::negated() const {
    ZpDigits z;
    z.p = p;
    z.d.resize(d.size());
    int borrow = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        int s = -static_cast<int>(d[i]) - borrow;
        borrow = 0;
        while (s < 0) {
            s += p;
            ++borrow;
        }
        z.d[i] = static_cast<std::uint8_t>(s);
    }
    return z;
}

ZpDigits ZpDigits::inverse() const {
    if (!is_unit()) fail(errc::not_a_unit, "inverse of a non-unit digit list");
    const std::size_t len = d.size();
    int inv0 = 0;
    for (int x = 1; x < p; ++x)
        if (d[0] * x % p == 1) inv0 = x;
    ZpDigits q;
    q.p = p;
    q.d.assign(len, 0);
    // Long division: maintain r = 1 - q*this, clearing one digit per step.
    std::vector<long long> r(len, 0);
    r[0] = 1;
    for (std::size_t i = 0; i < len; ++i) {
        int qi = umod(r[i], p) * inv0 % p;
        q.d[i] = static_cast<std::uint8_t>(qi);
        if (qi != 0)
            for (std::size_t j = 0; i + j < len; ++j) r[i + j] -= static_cast<long long>(qi) * d[j];
        // r[i] is now divisible by p; push the multiple upward
        if (i + 1 < len) r[i + 1] += r[i] / p;
        r[i] = 0;
    }
    return q;
}

long long ZpDigits::value_mod(std::size_t k) const {
    long long v = 0, pw = 1;
    for (std::size_t i = 0; i < k && i < d.size(); ++i) {
        v += pw * d[i];
        pw *= p;
    }
    return v;
}

std::string ZpDigits::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) os << ",";
        os << static_cast<int>(d[i]);
    }
    return os.str();
}

ZpDigits ZpDigits::parse(int p, const std::string& s) {
    ZpDigits z;
    z.p = p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = std::atoi(tok.c_str());
        if (v < 0 || v >= p) fail(errc::bad_input, "digit out of range in '" + s + "'");
        z.d.push_back(static_cast<std::uint8_t>(v));
    }
    return z;
}

FieldElement lucas_binomial(const ZpDigits& a, long long n) {
    const int p = a.p;
    if (n < 0) fail(errc::bad_input, "binomial with negative lower index");
    // Count the base-p digits of n.
    std::size_t need = 1;
    for (long long t = n; t >= p; t /= p) ++need;
    if (a.length() < need)
        fail(errc::insufficient_digits, "digit list too short for binomial index " +
                                            std::to_string(n));
    long long acc = 1;
    long long rest = n;
    for (std::size_t i = 0; i < need; ++i) {
        int ni = static_cast<int>(rest % p);
        rest /= p;
        int ai = a.d[i];
        // C(ai, ni) mod p with 0 <= ai, ni < p
        long long c = 1;
        if (ni > ai) {
            c = 0;
        } else {
            for (int j = 0; j < ni; ++j) c = c * (ai - j) / (j + 1);
        }
        acc = acc * (c % p) % p;
        if (acc == 0) break;
    }
    return FieldElement::from_int(p, 1, acc);
}

// ---------------------------------------------------------------------------
// QpElement

QpElement QpElement::make(int p, int val, ZpDigits unit) {
    if (!unit.is_unit()) fail(errc::not_a_unit, "QpElement unit part must have nonzero first digit");
    QpElement x;
    x.p = p;
    x.zero = false;
    x.val = val;
    x.unit = std::move(unit);
    return x;
}

QpElement QpElement::from_int(int p, long long v, std::size_t len) {
    return from_rational(p, v, 1, len);
}

QpElement QpElement::from_rational(int p, long long num, long long den, std::size_t len) {
    if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
    if (num == 0) return zero_of(p);
    int val = static_cast<int>(rational_valuation(num, den, p));
    while (num % p == 0) num /= p;
    while (den % p == 0) den /= p;
    ZpDigits n = ZpDigits::from_int(p, num, len);
    ZpDigits d = ZpDigits::from_int(p, den, len);
    return make(p, val, n.mul(d.inverse()));
}

QpElement QpElement::mul(const QpElement& o) const {
    if (zero || o.zero) return zero_of(p);
    return make(p, val + o.val, unit.mul(o.unit));
}

QpElement QpElement::inverse() const {
    if (zero) fail(errc::division_by_zero, "inverse of zero in Q_p");
    return make(p, -val, unit.inverse());
}

// ---------------------------------------------------------------------------
// PadicScalar

PadicScalar PadicScalar::zero(int p, int e, int prec) {
    PadicScalar x;
    x.p = p;
    x.e = e;
    x.ord = 0;
    x.prec = prec;
    x.dg.assign(static_cast<std::size_t>(std::max(0, prec)), 0);
    x.exact = true;
    return x;
}

PadicScalar PadicScalar::from_pi_digits(int p, int e, int ord,
                                        const std::vector<std::uint8_t>& digits, int prec,
                                        bool exact) {
    if (e != 1 && e != 2) fail(errc::bad_input, "ramification index must be 1 or 2");
    if (prec < ord) fail(errc::bad_input, "precision below window start");
    PadicScalar x;
    x.p = p;
    x.e = e;
    x.ord = ord;
    x.prec = prec;
    x.dg = digits;
    x.dg.resize(static_cast<std::size_t>(prec - ord), 0);
    x.exact = exact;
    for (auto v : x.dg)
        if (v >= p) fail(errc::bad_input, "pi-digit out of range");
    return x;
}

PadicScalar PadicScalar::from_rational(int p, int e, long long num, long long den, int prec) {
    if (e != 1 && e != 2) fail(errc::bad_input, "ramification index must be 1 or 2");
    if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
    if (num == 0) return zero(p, e, prec);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = llgcd(num, den);
    num /= g;
    den /= g;
    long long v = rational_valuation(num, den, p); // p-units
    long long pi_ord = v * e;
    while (num % p == 0) num /= p;
    while (den % p == 0) den /= p;
    // Base-p digits of the unit part num/den, placed at stride e from pi_ord.
    std::size_t base_len = static_cast<std::size_t>(std::max<long long>(1, (prec - pi_ord) / e + 2));
    ZpDigits n = ZpDigits::from_int(p, num, base_len + 2);
    ZpDigits d = ZpDigits::from_int(p, den, base_len + 2);
    ZpDigits u = n.mul(d.inverse());
    PadicScalar x;
    x.p = p;
    x.e = e;
    x.ord = static_cast<int>(pi_ord);
    x.prec = prec;
    if (x.prec < x.ord) x.prec = x.ord;
    x.dg.assign(static_cast<std::size_t>(x.prec - x.ord), 0);
    bool truncated = false;
    for (std::size_t i = 0; i < u.d.size(); ++i) {
        long long pos = pi_ord + static_cast<long long>(i) * e;
        if (pos >= x.prec) {
            if (u.d[i] != 0) truncated = true;
            continue;
        }
        x.dg[static_cast<std::size_t>(pos - x.ord)] = u.d[i];
    }
    // Exact when the expansion terminates inside the window, i.e. num/den is
    // a nonnegative integer times a power of p whose digits all fit.
    x.exact = (den == 1) && (num > 0) && !truncated;
    if (x.exact) {
        ZpDigits full = ZpDigits::from_int(p, num, std::max<std::size_t>(base_len + 8, 72));
        for (std::size_t i = 0; i < full.d.size(); ++i) {
            long long pos = pi_ord + static_cast<long long>(i) * e;
            if (pos >= x.prec && full.d[i] != 0) x.exact = false;
        }
    }
    return x;
}

PadicScalar PadicScalar::from_qp(const QpElement& q, int prec) {
    if (q.zero) return zero(q.p, 1, prec);
    PadicScalar x;
    x.p = q.p;
    x.e = 1;
    x.ord = q.val;
    x.prec = std::max(prec, q.val);
    x.dg.assign(static_cast<std::size_t>(x.prec - x.ord), 0);
    for (std::size_t i = 0; i < q.unit.d.size() && i < x.dg.size(); ++i) x.dg[i] = q.unit.d[i];
    // Known only to the digits supplied by the unit part.
    int supplied = q.val + static_cast<int>(q.unit.d.size());
    if (supplied < x.prec) {
        x.prec = supplied;
        x.dg.resize(static_cast<std::size_t>(x.prec - x.ord));
    }
    x.exact = false;
    return x;
}

int PadicScalar::effective_prec() const { return exact ? (1 << 28) : prec; }

std::optional<int> PadicScalar::first_nonzero() const {
    for (std::size_t i = 0; i < dg.size(); ++i)
        if (dg[i] != 0) return ord + static_cast<int>(i);
    return std::nullopt;
}

Fraction PadicScalar::valuation() const {
    auto fz = first_nonzero();
    if (!fz) {
        if (exact) fail(errc::bad_input, "valuation of exact zero");
        fail(errc::insufficient_precision, "valuation not certified by the precision window");
    }
    return Fraction(*fz, e);
}

FieldElement PadicScalar::residue() const {
    Fraction v = valuation();
    if (v != Fraction(0)) fail(errc::not_a_unit, "residue of an element with valuation " + v.str());
    // first nonzero digit is at pi^0
    return FieldElement::from_int(p, 1, dg[static_cast<std::size_t>(-ord)]);
}

namespace {

// Canonicalize an accumulator of (possibly out-of-range) digit values over the
// window [ord, prec): carries move p * pi^i -> pi^(i+e).
PadicScalar canonicalize(int p, int e, int ord, int prec, std::vector<long long> acc, bool exact) {
    PadicScalar x;
    x.p = p;
    x.e = e;
    x.ord = ord;
    x.prec = std::max(prec, ord);
    acc.resize(static_cast<std::size_t>(x.prec - ord), 0);
    x.dg.assign(acc.size(), 0);
    bool dropped_carry = false;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        long long v = acc[i];
        long long r = ((v % p) + p) % p;
        long long carry = (v - r) / p;
        x.dg[i] = static_cast<std::uint8_t>(r);
        if (carry != 0) {
            if (i + e < acc.size())
                acc[i + e] += carry;
            else
                dropped_carry = true;
        }
    }
    // A carry past the window only loses exactness; the digits below prec
    // are still the correct residue mod pi^prec.
    x.exact = exact && !dropped_carry;
    return x;
}

void check_compat(const PadicScalar& a, const PadicScalar& b) {
    if (a.p != b.p || a.e != b.e)
        fail(errc::mismatched_field, "p-adic operands with different (p, e)");
}

} // namespace

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    check_compat(*this, o);
    bool ex = exact && o.exact;
    int r_ord = std::min(ord, o.ord);
    int r_prec = std::min(effective_prec(), o.effective_prec());
    if (ex) r_prec = std::max(prec, o.prec);
    std::vector<long long> acc(static_cast<std::size_t>(std::max(0, r_prec - r_ord)) + 2 * e, 0);
    for (std::size_t i = 0; i < dg.size(); ++i) {
        long long pos = ord + static_cast<long long>(i) - r_ord;
        if (pos >= 0 && pos < static_cast<long long>(acc.size())) acc[pos] += dg[i];
    }
    for (std::size_t i = 0; i < o.dg.size(); ++i) {
        long long pos = o.ord + static_cast<long long>(i) - r_ord;
        if (pos >= 0 && pos < static_cast<long long>(acc.size())) acc[pos] += o.dg[i];
    }
    if (ex) r_prec += 2 * e; // room for the final carry of an exact sum
    return canonicalize(p, e, r_ord, r_prec, std::move(acc), ex);
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const {
    check_compat(*this, o);
    bool ex = exact && o.exact;
    int r_ord = std::min(ord, o.ord);
    int r_prec = std::min(effective_prec(), o.effective_prec());
    if (ex) r_prec = std::max(prec, o.prec) + 2 * e;
    std::vector<long long> acc(static_cast<std::size_t>(std::max(0, r_prec - r_ord)), 0);
    for (std::size_t i = 0; i < dg.size(); ++i) {
        long long pos = ord + static_cast<long long>(i) - r_ord;
        if (pos >= 0 && pos < static_cast<long long>(acc.size())) acc[pos] += dg[i];
    }
    for (std::size_t i = 0; i < o.dg.size(); ++i) {
        long long pos = o.ord + static_cast<long long>(i) - r_ord;
        if (pos >= 0 && pos < static_cast<long long>(acc.size())) acc[pos] -= o.dg[i];
    }
    return canonicalize(p, e, r_ord, r_prec, std::move(acc), ex);
}

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    check_compat(*this, o);
    if (is_exact_zero() || o.is_exact_zero()) return zero(p, e, std::min(prec, o.prec));
    bool ex = exact && o.exact;
    // Lower bound on each valuation: first nonzero digit, else the precision.
    int v1 = first_nonzero().value_or(effective_prec());
    int v2 = o.first_nonzero().value_or(o.effective_prec());
    int r_ord = ord + o.ord;
    long long r_prec = std::min<long long>(static_cast<long long>(v1) + o.effective_prec(),
                                           static_cast<long long>(v2) + effective_prec());
    if (ex) r_prec = static_cast<long long>(prec) + o.prec + 2 * e;
    r_prec = std::min<long long>(r_prec, 1 << 27);
    std::vector<long long> acc(static_cast<std::size_t>(std::max<long long>(0, r_prec - r_ord)), 0);
    for (std::size_t i = 0; i < dg.size(); ++i) {
        if (dg[i] == 0) continue;
        for (std::size_t j = 0; j < o.dg.size(); ++j) {
            std::size_t k = i + j;
            if (k < acc.size()) acc[k] += static_cast<long long>(dg[i]) * o.dg[j];
        }
    }
    return canonicalize(p, e, r_ord, static_cast<int>(r_prec), std::move(acc), ex);
}

PadicScalar PadicScalar::operator/(const PadicScalar& o) const {
    check_compat(*this, o);
    if (o.is_exact_zero()) fail(errc::division_by_zero, "division by exact zero");
    auto v2 = o.first_nonzero();
    if (!v2) fail(errc::insufficient_precision, "divisor not certified nonzero at this precision");
    if (is_exact_zero()) return zero(p, e, prec - *v2);
    int v1 = first_nonzero().value_or(effective_prec());
    // Relative precisions
    long long k1 = static_cast<long long>(effective_prec()) - v1;
    long long k2 = static_cast<long long>(o.effective_prec()) - *v2;
    long long K = std::min({k1, k2, static_cast<long long>(1 << 20)});
    int q_ord = v1 - *v2;
    if (K <= 0) return from_pi_digits(p, e, q_ord, {}, q_ord);
    // Divide unit parts: x = pi^v1 * ux, y = pi^v2 * uy, q = pi^(v1-v2) ux/uy.
    std::vector<long long> r(static_cast<std::size_t>(K) + 2 * e, 0);
    for (std::size_t i = 0; i < dg.size(); ++i) {
        long long pos = ord + static_cast<long long>(i) - v1;
        if (pos >= 0 && pos < static_cast<long long>(r.size())) r[pos] += dg[i];
    }
    std::vector<int> u(static_cast<std::size_t>(K) + 2 * e, 0);
    for (std::size_t i = 0; i < o.dg.size(); ++i) {
        long long pos = o.ord + static_cast<long long>(i) - *v2;
        if (pos >= 0 && pos < static_cast<long long>(u.size())) u[pos] = o.dg[i];
    }
    int inv0 = 0;
    for (int x = 1; x < p; ++x)
        if (u[0] * x % p == 1) inv0 = x;
    std::vector<std::uint8_t> q(static_cast<std::size_t>(K), 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        long long cur = ((r[i] % p) + p) % p;
        int qi = static_cast<int>(cur * inv0 % p);
        q[i] = static_cast<std::uint8_t>(qi);
        if (qi != 0)
            for (std::size_t j = 0; i + j < r.size() && j < u.size(); ++j)
                r[i + j] -= static_cast<long long>(qi) * u[j];
        // r[i] is now divisible by p; carry it to position i + e
        if (i + e < r.size()) r[i + e] += r[i] / p;
        r[i] = 0;
    }
    return from_pi_digits(p, e, q_ord, q, q_ord + static_cast<int>(K), false);
}

std::string PadicScalar::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dg.size(); ++i) {
        if (dg[i] == 0) continue;
        if (!first) os << " + ";
        os << static_cast<int>(dg[i]) << "*pi^" << (ord + static_cast<int>(i));
        first = false;
    }
    if (first) os << "0";
    os << " + O(pi^" << prec << ")";
    if (e == 1) {
        // positions are powers of p
    }
    return os.str();
}

} // namespace pgmod
