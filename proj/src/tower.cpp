#include "pgmod/tower.hpp"

#include <algorithm>

namespace pgmod {

CharModel CharModel::make(int p, int m, int r, const FieldElement& y, Flavor flavor) {
    if (y.is_zero()) fail(errc::bad_input, "model unit must be nonzero");
    if (y.p != p) fail(errc::mismatched_field, "model unit over the wrong prime");
    const int n = p - 1 > 0 ? p - 1 : 1; // omega has order p-1 (trivial for p=2)
    CharModel mod;
    mod.p = p;
    mod.m = m;
    mod.r = ((r % n) + n) % n;
    mod.y = (m == 2 && y.m == 1) ? y.embedded() : y;
    mod.flavor = flavor;
    if (mod.y.m != m) fail(errc::mismatched_field, "model unit has the wrong extension degree");
    return mod;
}

QpElement BorelElement::entry_d() const {
    QpElement d = x;
    d.val += j;
    d.unit = d.unit.mul(a);
    return d;
}

QpElement BorelElement::entry_b() const {
    if (z.zero) return QpElement::zero_of(x.p);
    return x.mul(z);
}

FieldElement bchar_value(const BCharacter& ch, const BorelElement& g) {
    return ch.left.value_at(g.entry_a()) * ch.right.value_at(g.entry_d());
}

namespace {

QpElement qp_from_scalar(const PadicScalar& s) {
    auto fz = s.first_nonzero();
    if (!fz) {
        if (s.exact) return QpElement::zero_of(s.p);
        fail(errc::insufficient_precision, "matrix entry not certified nonzero");
    }
    ZpDigits u;
    u.p = s.p;
    for (int pos = *fz; pos < s.prec; ++pos)
        u.d.push_back(s.dg[static_cast<std::size_t>(pos - s.ord)]);
    return QpElement::make(s.p, *fz, u);
}

PadicScalar scalar_from_qp(const QpElement& q, int prec) { return PadicScalar::from_qp(q, prec); }

} // namespace

BorelElement borel_compose(const BorelElement& g, const BorelElement& h, int digit_len) {
    const int p = g.x.p;
    // Matrix entries (A, B, D) of the product, then re-factor.
    QpElement A = g.entry_a().mul(h.entry_a());
    QpElement D = g.entry_d().mul(h.entry_d());
    QpElement B;
    QpElement b1 = g.entry_a().mul(h.entry_b());
    QpElement b2 = g.entry_b().mul(h.entry_d());
    if (b1.zero && b2.zero) {
        B = QpElement::zero_of(p);
    } else if (b1.zero) {
        B = b2;
    } else if (b2.zero) {
        B = b1;
    } else {
        int prec = std::min(b1.val + static_cast<int>(b1.unit.length()),
                            b2.val + static_cast<int>(b2.unit.length()));
        PadicScalar sum = scalar_from_qp(b1, prec) + scalar_from_qp(b2, prec);
        B = qp_from_scalar(sum);
    }
    BorelElement out;
    out.x = A;
    out.j = D.val - A.val;
    out.a = D.unit.mul(A.unit.inverse()).truncated(static_cast<std::size_t>(digit_len));
    if (B.zero) {
        out.z = QpElement::zero_of(p);
    } else {
        out.z = QpElement::make(p, B.val - A.val,
                                B.unit.mul(A.unit.inverse()).truncated(
                                    static_cast<std::size_t>(digit_len)));
    }
    return out;
}

LaurentSeries module_psi(const CharModel& model, const LaurentSeries& f) {
    if (f.ord < model.min_ord())
        fail(errc::bad_input, "series pole exceeds the lattice bound");
    return psi(f).scaled(model.y.inv());
}

Tower standard_tower(const CharModel& model, const MulCharacter& central, int depth, int prec) {
    if (model.flavor != CharModel::Flavor::sharp)
        fail(errc::bad_input, "standard tower lives in the sharp lattice");
    Tower t;
    t.model = model;
    t.central = central;
    FieldElement pw = FieldElement::one(model.p, model.m);
    for (int n = 0; n < depth; ++n) {
        t.entries.push_back(LaurentSeries::monomial(pw, -1, prec));
        pw *= model.y;
    }
    return t;
}

Tower plus_standard_tower(const CharModel& model, const MulCharacter& central, int depth,
                          int prec) {
    Tower t;
    t.model = model;
    t.central = central;
    CharModel plus = model;
    plus.flavor = CharModel::Flavor::plus;
    t.model = plus;
    FieldElement pw = FieldElement::one(model.p, model.m);
    for (int n = 0; n < depth; ++n) {
        t.entries.push_back(LaurentSeries::constant(pw, prec));
        pw *= model.y;
    }
    return t;
}

bool tower_is_valid(const Tower& t) {
    for (int i = 0; i + 1 < t.depth(); ++i) {
        try {
            LaurentSeries down = module_psi(t.model, t.entries[static_cast<std::size_t>(i + 1)]);
            if (!down.equals_on_overlap(t.entries[static_cast<std::size_t>(i)])) return false;
        } catch (const error& e) {
            // Windows too small to compute psi cannot falsify compatibility.
            if (e.code() != errc::empty_window) throw;
        }
    }
    return true;
}

Tower star_center(const QpElement& x, const Tower& t) {
    FieldElement factor = t.central.value_at(x).inv();
    Tower out = t;
    for (auto& v : out.entries) v = v.scaled(factor);
    return out;
}

Tower star_p_power(int j, const Tower& t) {
    Tower out;
    out.model = t.model;
    out.central = t.central;
    if (j >= 0) {
        out.entries = t.entries;
        for (int step = 0; step < j; ++step)
            for (auto& v : out.entries) v = module_psi(t.model, v);
        return out;
    }
    int shift = -j;
    if (t.depth() <= shift)
        fail(errc::depth_exhausted, "index shift needs depth > " + std::to_string(shift));
    out.entries.assign(t.entries.begin() + shift, t.entries.end());
    return out;
}

Tower star_gamma(const ZpDigits& a, const Tower& t) {
    if (!a.is_unit()) fail(errc::not_a_unit, "diag(1,a) requires a unit");
    ZpDigits a_inv = a.inverse();
    // e-twist: gamma_{a^-1}(e) = omega^r(a^-1) e
    FieldElement twist =
        FieldElement::from_int(t.model.p, t.model.m, a.mod_p()).pow(-t.model.r);
    Tower out = t;
    for (auto& v : out.entries) v = gamma_act(a_inv, v).scaled(twist);
    return out;
}

Tower star_unipotent(const QpElement& z, const Tower& t, std::optional<int> j_choice) {
    if (z.zero) return t;
    int j_min = std::max(0, -z.val);
    int j = j_choice.value_or(j_min);
    if (j < j_min) fail(errc::bad_input, "inadmissible unipotent index choice");
    if (t.depth() <= j) fail(errc::depth_exhausted, "unipotent action needs more entries");
    Tower out;
    out.model = t.model;
    out.central = t.central;
    const int m = t.model.m;
    for (int i = 0; i + j < t.depth(); ++i) {
        const LaurentSeries& v = t.entries[static_cast<std::size_t>(i + j)];
        // (1+X)^(p^(i+j) z) with p^(i+j) z in Z_p
        ZpDigits w = z.unit.shifted(static_cast<std::size_t>(i + j + z.val));
        LaurentSeries pow = one_plus_x_pow(w, m, v.prec - t.model.min_ord());
        LaurentSeries prod = v * pow;
        for (int step = 0; step < j; ++step) prod = module_psi(t.model, prod);
        out.entries.push_back(prod);
    }
    return out;
}

Tower star_action(const BorelElement& g, const Tower& t, int target_depth) {
    if (target_depth < 1) fail(errc::bad_input, "target depth must be positive");
    // Only the first (target_depth + consumed) entries matter; drop the rest
    // up front so the entrywise operators do no dead work.
    int consumed = std::max(0, -g.j) + (g.z.zero ? 0 : std::max(0, -g.z.val));
    Tower cur = t;
    if (cur.depth() > target_depth + consumed)
        cur.entries.resize(static_cast<std::size_t>(target_depth + consumed));
    cur = star_unipotent(g.z, cur);
    cur = star_gamma(g.a, cur);
    cur = star_p_power(g.j, cur);
    cur = star_center(g.x, cur);
    if (cur.depth() < target_depth)
        fail(errc::depth_exhausted, "action consumed more depth than the target allows");
    cur.entries.resize(static_cast<std::size_t>(target_depth));
    return cur;
}

FieldElement tower_residue(const Tower& t) {
    if (t.depth() == 0) fail(errc::depth_exhausted, "residue of an empty tower");
    return residue(t.entries.front());
}

std::pair<BCharacter, BCharacter> residue_character(const CharModel& model,
                                                    const MulCharacter& central) {
    const int p = model.p;
    MulCharacter mu_y = MulCharacter::mu(model.y);
    MulCharacter mu_y_inv = MulCharacter::mu(model.y.inv());
    BCharacter tower_side{central.inverse() * MulCharacter::omega(p, model.r - 1) * mu_y,
                          MulCharacter::omega(p, 1 - model.r) * mu_y_inv};
    BCharacter dual_side{central * MulCharacter::omega(p, 1 - model.r) * mu_y_inv,
                         MulCharacter::omega(p, model.r - 1) * mu_y};
    return {tower_side, dual_side};
}

Tower random_tower(const CharModel& model, const MulCharacter& central, int depth, int prec,
                   std::mt19937_64& rng) {
    const int p = model.p, m = model.m;
    auto rand_elt = [&]() {
        return FieldElement::make(p, m, static_cast<int>(rng() % p),
                                  m == 2 ? static_cast<int>(rng() % p) : 0);
    };
    auto rand_series = [&](int ord) {
        LaurentSeries f = LaurentSeries::zero(p, m, ord, prec);
        for (int e = ord; e < prec; ++e) f.set(e, rand_elt());
        return f;
    };
    Tower t;
    t.model = model;
    t.central = central;
    LaurentSeries v = rand_series(model.min_ord());
    t.entries.push_back(v);
    for (int i = 1; i < depth; ++i) {
        LaurentSeries g = t.entries.back().scaled(model.y);
        FieldElement pole = g.ord <= -1 ? g.at(-1) : FieldElement::zero(p, m);
        LaurentSeries reg = LaurentSeries::zero(p, m, 0, g.prec);
        for (int e = 0; e < g.prec; ++e) reg.set(e, g.at(e));
        LaurentSeries next = frobenius_phi(reg).truncated(prec).widened(model.min_ord());
        if (model.min_ord() == -1) next.set(-1, pole);
        // kernel noise: (1+X)^u phi(h) with 1 <= u <= p-1
        if (p > 1) {
            int u = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, p - 1)));
            LaurentSeries h = rand_series(0);
            LaurentSeries noise =
                (one_plus_x_pow(ZpDigits::from_int(p, u, 8), m, prec) * frobenius_phi(h))
                    .truncated(prec);
            next = (next + noise.widened(model.min_ord())).truncated(prec);
        }
        t.entries.push_back(next);
    }
    return t;
}

ExactSequenceReport check_exact_sequence(const CharModel& model, const MulCharacter& central,
                                         int depth, int prec, int samples, std::uint64_t seed) {
    ExactSequenceReport rep;
    if (model.flavor != CharModel::Flavor::sharp)
        fail(errc::bad_input, "the exact-sequence check runs in the sharp lattice");
    std::mt19937_64 rng(seed);
    const int p = model.p;
    // (i) surjectivity of res: scalings of the standard tower hit all of k_L.
    Tower std_t = standard_tower(model, central, depth, prec);
    rep.surjective = tower_residue(std_t) == FieldElement::one(p, model.m);
    for (int a = 0; a < p && rep.surjective; ++a)
        for (int b = 0; b < (model.m == 2 ? p : 1); ++b) {
            FieldElement c = FieldElement::make(p, model.m, a, b);
            Tower scaled = std_t;
            for (auto& v : scaled.entries) v = v.scaled(c);
            if (!(tower_residue(scaled) == c)) {
                rep.surjective = false;
                rep.details.push_back("res(c * standard) != c at c = " + c.str());
            }
        }
    // (ii) kernel: res = 0 iff every entry lies in the plus lattice.
    for (int s = 0; s < samples; ++s) {
        Tower t = random_tower(model, central, depth, prec, rng);
        bool res_zero = tower_residue(t).is_zero();
        bool all_plus = true;
        for (const auto& v : t.entries)
            if (!v.at(-1).is_zero()) all_plus = false;
        if (res_zero != all_plus) {
            rep.kernel_matches_plus = false;
            rep.details.push_back("kernel mismatch on sample " + std::to_string(s));
        }
    }
    // (iii) equivariance over the four generator classes.
    auto rand_unit_digits = [&](int len) {
        ZpDigits u;
        u.p = p;
        u.d.resize(static_cast<std::size_t>(len));
        for (auto& dd : u.d) dd = static_cast<std::uint8_t>(rng() % p);
        if (u.d[0] == 0) u.d[0] = 1 + static_cast<std::uint8_t>(rng() % (p - 1));
        return u;
    };
    auto check_one = [&](const BorelElement& g, const Tower& t) {
        FieldElement before = tower_residue(t);
        Tower moved = star_action(g, t, 1);
        FieldElement after = tower_residue(moved);
        FieldElement expect = bchar_value(residue_character(model, central).first, g) * before;
        ++rep.equivariance_checked;
        if (!(after == expect)) {
            ++rep.equivariance_violations;
            if (rep.details.size() < 8)
                rep.details.push_back("equivariance failed on sample " +
                                      std::to_string(rep.equivariance_checked));
        }
    };
    BorelElement id;
    id.x = QpElement::one(p, 40);
    id.j = 0;
    id.a = ZpDigits::one(p, 40);
    id.z = QpElement::zero_of(p);
    for (int s = 0; s < samples; ++s) {
        Tower t = random_tower(model, central, depth, prec, rng);
        // central class
        BorelElement g = id;
        g.x = QpElement::make(p, static_cast<int>(rng() % 5) - 2, rand_unit_digits(40));
        check_one(g, t);
        // p-power class
        g = id;
        g.j = static_cast<int>(rng() % 5) - 2;
        check_one(g, t);
        // torus unit class
        g = id;
        g.a = rand_unit_digits(40);
        check_one(g, t);
        // unipotent class
        g = id;
        if (rng() % 8 == 0)
            g.z = QpElement::zero_of(p);
        else
            g.z = QpElement::make(p, static_cast<int>(rng() % 5) - 2, rand_unit_digits(40));
        check_one(g, t);
    }
    return rep;
}

} // namespace pgmod
