#include "pgmod/json_io.hpp"

namespace pgmod {

namespace {

json qp_to_json(const QpElement& x) {
    if (x.zero) return nullptr;
    return json{{"val", x.val}, {"unit", x.unit.str()}};
}

QpElement qp_from_json(int p, const json& j) {
    if (j.is_null()) return QpElement::zero_of(p);
    return QpElement::make(p, j.at("val").get<int>(),
                           ZpDigits::parse(p, j.at("unit").get<std::string>()));
}

} // namespace

json char_to_json(const MulCharacter& c) {
    return json{{"twist", c.twist}, {"unit", c.unit.str()}};
}

MulCharacter char_from_json(int p, const json& j) {
    return MulCharacter::make(p, j.at("twist").get<int>(),
                              FieldElement::parse(p, 2, j.at("unit").get<std::string>()).embedded());
}

json galois_to_json(const GaloisRep& v) {
    json j;
    j["schema"] = kGaloisSchema;
    j["p"] = v.p();
    if (v.kind == GaloisRep::Kind::irred) {
        j["kind"] = "irred";
        j["r"] = v.r;
        j["chi"] = char_to_json(v.chi);
    } else {
        j["kind"] = "split";
        j["chars"] = json::array({char_to_json(v.c1), char_to_json(v.c2)});
    }
    return j;
}

GaloisRep galois_from_json(const json& j) {
    int p = j.at("p").get<int>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "irred")
        return canonical_rho(p, j.at("r").get<int>(), char_from_json(p, j.at("chi")));
    if (kind == "split") {
        const json& cs = j.at("chars");
        if (cs.size() != 2) fail(errc::bad_input, "split datum needs exactly two characters");
        return GaloisRep::split(char_from_json(p, cs[0]), char_from_json(p, cs[1]));
    }
    fail(errc::bad_input, "unknown galois kind '" + kind + "'");
}

namespace {

json gatom_to_json(const GAtom& a) {
    json j;
    switch (a.kind) {
        case GAtom::Kind::one_dim:
            j["kind"] = "one-dim";
            j["chi"] = char_to_json(a.chi1);
            break;
        case GAtom::Kind::special_twist:
            j["kind"] = "special-twist";
            j["chi"] = char_to_json(a.chi1);
            break;
        case GAtom::Kind::principal_series:
            j["kind"] = "principal-series";
            j["chi1"] = char_to_json(a.chi1);
            j["chi2"] = char_to_json(a.chi2);
            break;
        case GAtom::Kind::supersingular:
            j["kind"] = "supersingular";
            j["r"] = a.r;
            j["chi"] = char_to_json(a.chi1);
            break;
    }
    return j;
}

GAtom gatom_from_json(int p, const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "one-dim") return GAtom::one_dim(char_from_json(p, j.at("chi")));
    if (kind == "special-twist") return GAtom::special_twist(char_from_json(p, j.at("chi")));
    if (kind == "principal-series")
        return GAtom::principal_series(
            BCharacter{char_from_json(p, j.at("chi1")), char_from_json(p, j.at("chi2"))});
    if (kind == "supersingular")
        return GAtom::supersingular(j.at("r").get<int>(), char_from_json(p, j.at("chi")));
    fail(errc::bad_input, "unknown atom kind '" + kind + "'");
}

json batom_to_json(const BAtom& a) {
    json j;
    switch (a.kind) {
        case BAtom::Kind::b_char:
            j["kind"] = "b-char";
            j["chi1"] = char_to_json(a.chi1);
            j["chi2"] = char_to_json(a.chi2);
            break;
        case BAtom::Kind::omega_dim1:
            j["kind"] = "omega";
            j["central"] = char_to_json(a.chi1);
            j["w"] = json{{"dim", 1}, {"eta", char_to_json(a.chi2)}};
            break;
        case BAtom::Kind::omega_dim2:
            j["kind"] = "omega";
            j["central"] = char_to_json(a.chi1);
            j["w"] = json{{"dim", 2}, {"r", a.r}, {"chi", char_to_json(a.chi2)}};
            break;
    }
    return j;
}

BAtom batom_from_json(int p, const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "b-char")
        return BAtom::b_char(
            BCharacter{char_from_json(p, j.at("chi1")), char_from_json(p, j.at("chi2"))});
    if (kind == "omega") {
        const json& w = j.at("w");
        MulCharacter central = char_from_json(p, j.at("central"));
        if (w.at("dim").get<int>() == 1)
            return BAtom::omega_dim1(central, char_from_json(p, w.at("eta")));
        return BAtom::omega_dim2(central, w.at("r").get<int>(), char_from_json(p, w.at("chi")));
    }
    fail(errc::bad_input, "unknown B-atom kind '" + kind + "'");
}

} // namespace

json gss_to_json(int p, const GSS& s) {
    GSS sorted = s;
    normalize(sorted);
    json atoms = json::array();
    for (const GAtom& a : sorted) atoms.push_back(gatom_to_json(a));
    return json{{"schema", kGl2Schema}, {"p", p}, {"atoms", atoms}};
}

GSS gss_from_json(const json& j) {
    int p = j.at("p").get<int>();
    GSS out;
    for (const json& a : j.at("atoms")) out.push_back(gatom_from_json(p, a));
    normalize(out);
    return out;
}

json bss_to_json(int p, const BSS& s) {
    BSS sorted = s;
    normalize(sorted);
    json atoms = json::array();
    for (const BAtom& a : sorted) atoms.push_back(batom_to_json(a));
    return json{{"schema", kBorelSchema}, {"p", p}, {"atoms", atoms}};
}

BSS bss_from_json(const json& j) {
    int p = j.at("p").get<int>();
    BSS out;
    for (const json& a : j.at("atoms")) out.push_back(batom_from_json(p, a));
    normalize(out);
    return out;
}

json series_to_json(const LaurentSeries& f) {
    json coeffs = json::array();
    for (int e = f.ord; e < f.prec; ++e) {
        FieldElement v = f.at(e);
        if (!v.is_zero()) coeffs.push_back(json::array({e, v.str()}));
    }
    return json{{"p", f.p}, {"m", f.m}, {"ord", f.ord}, {"prec", f.prec}, {"coeffs", coeffs}};
}

LaurentSeries series_from_json(const json& j) {
    LaurentSeries f = LaurentSeries::zero(j.at("p").get<int>(), j.at("m").get<int>(),
                                          j.at("ord").get<int>(), j.at("prec").get<int>());
    for (const json& c : j.at("coeffs"))
        f.set(c[0].get<int>(), FieldElement::parse(f.p, f.m, c[1].get<std::string>()));
    return f;
}

json scalar_to_json(const PadicScalar& x) {
    json digits = json::array();
    for (std::size_t i = 0; i < x.dg.size(); ++i)
        if (x.dg[i] != 0)
            digits.push_back(json::array({x.ord + static_cast<int>(i), static_cast<int>(x.dg[i])}));
    return json{{"p", x.p}, {"e", x.e}, {"digits", digits}, {"prec", x.prec}};
}

PadicScalar scalar_from_json(const json& j) {
    int p = j.at("p").get<int>();
    int e = j.at("e").get<int>();
    int prec = j.at("prec").get<int>();
    int ord = prec;
    for (const json& d : j.at("digits")) ord = std::min(ord, d[0].get<int>());
    PadicScalar x = PadicScalar::from_pi_digits(p, e, std::min(ord, 0), {}, prec);
    for (const json& d : j.at("digits")) {
        int pos = d[0].get<int>();
        if (pos < x.ord || pos >= x.prec) fail(errc::bad_input, "digit outside window");
        x.dg[static_cast<std::size_t>(pos - x.ord)] = static_cast<std::uint8_t>(d[1].get<int>());
    }
    return x;
}

json tower_to_json(const Tower& t) {
    json entries = json::array();
    for (const auto& v : t.entries) entries.push_back(series_to_json(v));
    return json{{"schema", kTowerSchema},
                {"p", t.model.p},
                {"m", t.model.m},
                {"r", t.model.r},
                {"y", t.model.y.str()},
                {"flavor", t.model.flavor == CharModel::Flavor::sharp ? "sharp" : "plus"},
                {"central", char_to_json(t.central)},
                {"depth", t.depth()},
                {"entries", entries}};
}

Tower tower_from_json(const json& j) {
    int p = j.at("p").get<int>();
    int m = j.at("m").get<int>();
    std::string flavor = j.at("flavor").get<std::string>();
    CharModel model = CharModel::make(
        p, m, j.at("r").get<int>(), FieldElement::parse(p, m, j.at("y").get<std::string>()),
        flavor == "sharp" ? CharModel::Flavor::sharp : CharModel::Flavor::plus);
    Tower t;
    t.model = model;
    t.central = char_from_json(p, j.at("central"));
    for (const json& s : j.at("entries")) t.entries.push_back(series_from_json(s));
    return t;
}

json borel_to_json(const BorelElement& g) {
    return json{{"x", qp_to_json(g.x)}, {"j", g.j}, {"a", g.a.str()}, {"z", qp_to_json(g.z)}};
}

BorelElement borel_from_json(int p, const json& j) {
    BorelElement g;
    g.x = qp_from_json(p, j.at("x"));
    g.j = j.at("j").get<int>();
    g.a = ZpDigits::parse(p, j.at("a").get<std::string>());
    g.z = qp_from_json(p, j.at("z"));
    return g;
}

json measure_to_json(const MeasureZp& nu) {
    json values = json::object();
    for (long a = 0; a < nu.size(); ++a)
        if (!nu.at(a).is_zero()) values[std::to_string(a)] = nu.at(a).str();
    return json{{"p", nu.p}, {"m", nu.m}, {"level", nu.level}, {"values", values}};
}

json step_to_json(const StepFunction& f) {
    json values = json::object();
    for (long u = 0; u < f.size(); ++u)
        if (!f.v[static_cast<std::size_t>(u)].is_zero())
            values[std::to_string(u)] = f.v[static_cast<std::size_t>(u)].str();
    return json{{"p", f.p}, {"m", f.m},      {"shift", f.shift},
                {"level", f.level}, {"values", values}};
}

json reduction_to_json(int p, long long k, const ReductionResult& r) {
    return json{{"schema", kReductionSchema},
                {"p", p},
                {"k", k},
                {"case", r.case_label},
                {"galois", galois_to_json(r.galois)},
                {"gl2", gss_to_json(p, r.gl2)},
                {"notes", r.notes}};
}

} // namespace pgmod
