// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is exact (finite-field arithmetic); runtime
// bounds are part of the criteria and enforced.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "pgmod/checks.hpp"

using namespace pgmod;

namespace {

struct Criterion {
    std::string name;
    bool pass = true;
    long checks = 0;
    long violations = 0;
    double seconds = 0.0;
    double budget = 0.0;
    std::vector<std::string> details;
};

int failures = 0;

void report(const Criterion& c) {
    bool ok = c.pass && c.violations == 0 && (c.budget <= 0 || c.seconds < c.budget);
    std::printf("[%s] %s: %ld checks, %ld violations, %.2fs", ok ? "PASS" : "FAIL",
                c.name.c_str(), c.checks, c.violations, c.seconds);
    if (c.budget > 0) std::printf(" (budget %.0fs)", c.budget);
    std::printf("\n");
    for (const auto& d : c.details) std::printf("         %s\n", d.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void absorb(Criterion& c, const std::vector<PropertyResult>& props) {
    for (const auto& pr : props) {
        c.checks += pr.samples;
        c.violations += pr.violations;
        for (const auto& f : pr.failures)
            if (c.details.size() < 8) c.details.push_back(pr.name + ": " + f);
    }
}

void criterion_residue_equivariance() {
    Criterion c;
    c.name = "residue-equivariance (all W, 100 elements per class, depth 8)";
    c.budget = 20.0;
    auto t0 = std::chrono::steady_clock::now();
    for (int p : {2, 3, 5, 7}) {
        CheckConfig cfg;
        cfg.p = p;
        cfg.precision = 60;
        cfg.depth = 8;
        cfg.samples = 100;
        cfg.seed = 1000 + p;
        std::vector<PropertyResult> props;
        props::tower_residue_suite(cfg, /*with_quadratic=*/p == 5, props);
        absorb(c, props);
    }
    c.seconds = seconds_since(t0);
    report(c);
}

void criterion_psi_structure() {
    Criterion c;
    c.name = "psi-structure (identities + surjectivity witnesses)";
    c.budget = 5.0;
    auto t0 = std::chrono::steady_clock::now();
    for (int p : {2, 3, 5, 7}) {
        std::mt19937_64 rng(2000 + p);
        std::vector<PropertyResult> props(3);
        props[0].name = "psi-structure";
        props[1].name = "psi-ideal-surjectivity";
        props[2].name = "psi-pole-surjectivity";
        props::psi_structure(p, 60, 25, rng, props[0]);
        props::psi_ideal_surjectivity(p, props[1]);
        props::psi_pole_surjectivity(p, 60, 25, rng, props[2]);
        absorb(c, props);
    }
    c.seconds = seconds_since(t0);
    report(c);
}

void criterion_amice() {
    Criterion c;
    c.name = "amice/induction (bijectivity, action formulas, pairing invariance)";
    c.budget = 15.0;
    auto t0 = std::chrono::steady_clock::now();
    for (int p : {2, 3, 5}) {
        CheckConfig cfg;
        cfg.p = p;
        cfg.level = 3;
        cfg.depth = 8;
        cfg.samples = 100; // 2x samples = 200 invariance triples
        cfg.seed = 3000 + p;
        std::vector<PropertyResult> props;
        props::amice_suite(cfg, props);
        absorb(c, props);
    }
    c.seconds = seconds_since(t0);
    report(c);
}

void criterion_profile_injectivity() {
    Criterion c;
    c.name = "borel-profiles-distinguish (inventories of length <= 2, p = 5)";
    c.budget = 10.0;
    auto t0 = std::chrono::steady_clock::now();
    CheckConfig cfg;
    cfg.p = 5;
    cfg.seed = 4005;
    PropertyResult inj{"borel-profile-injective"};
    PropertyResult rec{"borel-reconstruction"};
    props::borel_distinguishes(cfg, inj, rec);
    absorb(c, {inj, rec});
    c.seconds = seconds_since(t0);
    report(c);
}

void criterion_correspondence() {
    Criterion c;
    c.name = "correspondence (round trip, swap invariance, central characters, p = 5)";
    c.budget = 10.0;
    auto t0 = std::chrono::steady_clock::now();
    CheckConfig cfg;
    cfg.p = 5;
    cfg.seed = 5005;
    PropertyResult roundtrip{"correspondence-roundtrip"};
    PropertyResult swap{"splitsum-swap-invariance"};
    PropertyResult central{"central-character-vs-determinant"};
    props::correspondence_roundtrips(cfg, roundtrip, swap, central);
    absorb(c, {roundtrip, swap, central});
    c.seconds = seconds_since(t0);
    report(c);
}

void criterion_reduction_table() {
    Criterion c;
    c.name = "reduction-table (pinned instances, partition sweep, a_p = 0 datum)";
    c.budget = 5.0;
    auto t0 = std::chrono::steady_clock::now();
    for (int p : {3, 5, 7}) {
        CheckConfig cfg;
        cfg.p = p;
        cfg.seed = 6000 + p;
        PropertyResult instances{"reduction-table-instances"};
        PropertyResult sweep{"reduction-table-partition"};
        PropertyResult breuil{"breuil-datum-consistency"};
        PropertyResult bracketpr{"bracket"};
        props::reduction_table(cfg, instances, sweep, breuil, bracketpr);
        absorb(c, {instances, sweep, breuil, bracketpr});
    }
    c.seconds = seconds_since(t0);
    report(c);
}

void criterion_full_check() {
    Criterion c;
    c.name = "full check suite (all suites, p = 5, defaults)";
    c.budget = 60.0;
    auto t0 = std::chrono::steady_clock::now();
    CheckConfig cfg; // defaults: p 5, precision 60, depth 8, level 3, samples 100
    auto reports = run_suites("all", cfg);
    for (const auto& rep : reports) absorb(c, rep.properties);
    c.seconds = seconds_since(t0);
    report(c);
}

} // namespace

int main() {
    criterion_residue_equivariance();
    criterion_psi_structure();
    criterion_amice();
    criterion_profile_injectivity();
    criterion_correspondence();
    criterion_reduction_table();
    criterion_full_check();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
