#include "pgmod/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pgmod/checks.hpp"
#include "pgmod/json_io.hpp"

namespace pgmod {

namespace {

PadicScalar parse_ap(int p, int e, const std::string& s, int prec) {
    if (s.rfind("pi:", 0) == 0) {
        // "pi:<ord>:<d0,d1,...>" with digits at pi^(ord), pi^(ord+1), ...
        auto second = s.find(':', 3);
        if (second == std::string::npos) fail(errc::bad_input, "expected pi:<ord>:<digits>");
        int ord = std::atoi(s.substr(3, second - 3).c_str());
        ZpDigits digits = ZpDigits::parse(p, s.substr(second + 1));
        return PadicScalar::from_pi_digits(p, e, ord, digits.d,
                                           ord + static_cast<int>(digits.d.size()));
    }
    Fraction q = Fraction::parse(s);
    return PadicScalar::from_rational(p, e, q.num, q.den, prec);
}

std::string read_input_arg(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) fail(errc::bad_input, "cannot open input file '" + arg.substr(1) + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

json orbit_json(int p, int r, const MulCharacter& chi) {
    json orbit = json::array();
    for (const auto& [ro, co] : intertwining_orbit(p, r, chi))
        orbit.push_back(json::array({ro, co.str()}));
    return orbit;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mod-p local Langlands companion: reductions, Borel restrictions, psi-towers"};
    app.require_subcommand(1);

    // ---- reduce
    auto* reduce = app.add_subcommand("reduce", "reduce a crystalline datum (k, a_p) mod p");
    int r_p = 5, r_e = 1, r_prec = 40;
    long long r_k = 2;
    std::string r_ap, r_val;
    int r_residue = -1;
    bool r_val_only = false;
    reduce->add_option("--p", r_p, "prime")->required();
    reduce->add_option("--k", r_k, "weight k >= 2")->required();
    reduce->add_option("--ap", r_ap, "a_p as a rational (n or n/d) or pi:<ord>:<digits>");
    reduce->add_option("--e", r_e, "ramification index of the coefficient field (1 or 2)");
    reduce->add_flag("--val-only", r_val_only, "use only the valuation of a_p");
    reduce->add_option("--val", r_val, "val(a_p) as a rational, with --val-only");
    reduce->add_option("--residue", r_residue,
                       "residue of a_p / p^val in {1..p-1}, with --val-only");
    reduce->add_option("--prec", r_prec, "working pi-adic precision");

    // ---- correspond
    auto* corr = app.add_subcommand("correspond", "Galois <-> GL2 on canonical forms");
    std::string c_dir, c_input;
    corr->add_option("--dir", c_dir, "g2p or p2g")->required();
    corr->add_option("--input", c_input, "JSON (inline, @file, or - for stdin)")->required();

    // ---- canonicalize
    auto* canon = app.add_subcommand("canonicalize", "canonical labels and intertwining orbits");
    canon->set_help_flag("--help", "print help"); // frees -h for the --h option below
    std::string k_kind, k_chi = "1", k_lambda = "0", k_twist = "1";
    int k_p = 5, k_r = 0;
    long long k_h = 1;
    canon->add_option("--kind", k_kind, "rho, pi, or ind-omega2")->required();
    canon->add_option("--p", k_p, "prime")->required();
    canon->add_option("--r", k_r, "weight parameter");
    canon->add_option("--chi", k_chi, "character, e.g. w^1*mu(2)");
    canon->add_option("--lambda", k_lambda, "eigenvalue (field element string, 0 for supersingular)");
    canon->add_option("--h", k_h, "exponent of the level-2 fundamental character");
    canon->add_option("--twist", k_twist, "twisting character for ind-omega2");

    // ---- check
    auto* check = app.add_subcommand("check", "run property suites");
    std::string s_suite = "all";
    CheckConfig cfg;
    check->add_option("--suite", s_suite, "series|tower|amice|reps|corresp|all");
    check->add_option("--p", cfg.p, "prime");
    check->add_option("--precision", cfg.precision, "series precision window");
    check->add_option("--depth", cfg.depth, "tower depth");
    check->add_option("--level", cfg.level, "measure level bound");
    check->add_option("--seed", cfg.seed, "random seed");
    check->add_option("--samples", cfg.samples, "samples per randomized property");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (reduce->parsed()) {
        CrystallineParams params;
        if (r_val_only) {
            if (r_val.empty()) fail(errc::bad_input, "--val-only requires --val");
            params = CrystallineParams::with_val(
                r_p, r_k, Fraction::parse(r_val),
                r_residue >= 0 ? std::optional<int>(r_residue) : std::nullopt);
        } else {
            if (r_ap.empty()) fail(errc::bad_input, "reduce needs --ap or --val-only");
            if (r_ap == "0")
                params = CrystallineParams::with_zero_ap(r_p, r_k);
            else
                params = CrystallineParams::with_ap(r_p, r_k, parse_ap(r_p, r_e, r_ap, r_prec));
        }
        ReductionResult res = reduce_crystalline(params);
        out << reduction_to_json(r_p, r_k, res).dump(2) << "\n";
        return 0;
    }

    if (corr->parsed()) {
        json input = json::parse(read_input_arg(c_input));
        if (c_dir == "g2p") {
            GaloisRep v = galois_from_json(input);
            out << gss_to_json(v.p(), galois_to_gl2(v)).dump(2) << "\n";
            return 0;
        }
        if (c_dir == "p2g") {
            GSS s = gss_from_json(input);
            out << galois_to_json(gl2_to_galois(s)).dump(2) << "\n";
            return 0;
        }
        fail(errc::bad_input, "--dir must be g2p or p2g");
    }

    if (canon->parsed()) {
        if (k_kind == "rho") {
            MulCharacter chi = MulCharacter::parse(k_p, k_chi);
            GaloisRep v = canonical_rho(k_p, k_r, chi);
            json j{{"canonical", galois_to_json(v)}, {"orbit", orbit_json(k_p, k_r, chi)}};
            out << j.dump(2) << "\n";
            return 0;
        }
        if (k_kind == "pi") {
            MulCharacter chi = MulCharacter::parse(k_p, k_chi);
            FieldElement lam = FieldElement::parse(k_p, 2, k_lambda).embedded();
            GSS s = canonical_pi(k_p, k_r, lam, chi);
            json j{{"canonical", gss_to_json(k_p, s)}};
            if (lam.is_zero()) j["orbit"] = orbit_json(k_p, k_r, chi);
            out << j.dump(2) << "\n";
            return 0;
        }
        if (k_kind == "ind-omega2") {
            MulCharacter twist = MulCharacter::parse(k_p, k_twist);
            GaloisRep v = ind_omega2(k_p, k_h, twist);
            json j{{"canonical", galois_to_json(v)}, {"orbit", orbit_json(k_p, v.r, v.chi)}};
            out << j.dump(2) << "\n";
            return 0;
        }
        fail(errc::bad_input, "--kind must be rho, pi, or ind-omega2");
    }

    if (check->parsed()) {
        auto reports = run_suites(s_suite, cfg);
        json j = json::array();
        bool ok = true;
        for (const auto& rep : reports) {
            j.push_back(report_to_json(rep));
            ok = ok && rep.ok();
        }
        out << j.dump(2) << "\n";
        return ok ? 0 : 2;
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const error& e) {
        err << e.what() << "\n";
        return e.code() == errc::undetermined_valuation ? 3 : 2;
    } catch (const json::exception& e) {
        err << "json error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace pgmod
