#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgmod/json_io.hpp"

namespace pgmod {

struct PropertyResult {
    std::string name;
    long samples = 0;
    long violations = 0;
    std::vector<std::string> failures; // capped detail strings

    PropertyResult() = default;
    explicit PropertyResult(std::string n) : name(std::move(n)) {}

    void count(bool ok, const std::string& detail = "") {
        ++samples;
        if (!ok) {
            ++violations;
            if (failures.size() < 6) failures.push_back(detail);
        }
    }
};

struct CheckReport {
    std::string suite;
    int p = 0;
    std::uint64_t seed = 0;
    double seconds = 0.0;
    std::vector<PropertyResult> properties;

    long total_violations() const;
    bool ok() const { return total_violations() == 0; }
};

struct CheckConfig {
    int p = 5;
    int precision = 60;
    int depth = 8;
    int level = 3;
    int samples = 100;
    std::uint64_t seed = 1;
};

CheckReport run_series_suite(const CheckConfig& cfg);
CheckReport run_tower_suite(const CheckConfig& cfg);
CheckReport run_amice_suite(const CheckConfig& cfg);
CheckReport run_reps_suite(const CheckConfig& cfg);
CheckReport run_corresp_suite(const CheckConfig& cfg);

// which: one of series|tower|amice|reps|corresp|all
std::vector<CheckReport> run_suites(const std::string& which, const CheckConfig& cfg);

json report_to_json(const CheckReport& rep);

// Individual property drivers, shared by the suites above and by the
// acceptance gate (which pins its own budgets per criterion).
namespace props {

void field_axioms(int p, PropertyResult& pr);
void unit_quadratic(int p, PropertyResult& pr);
void lucas_vs_pascal(int p, PropertyResult& pr);
void padic_vs_rational(int p, int samples, std::mt19937_64& rng, PropertyResult& pr);
void psi_structure(int p, int prec, int samples, std::mt19937_64& rng, PropertyResult& pr);
void psi_block_reconstruction(int p, int prec, int samples, std::mt19937_64& rng,
                              PropertyResult& pr);
void gamma_operators(int p, int prec, int samples, std::mt19937_64& rng, PropertyResult& pr);
void psi_ideal_surjectivity(int p, PropertyResult& pr);
void psi_pole_surjectivity(int p, int prec, int samples, std::mt19937_64& rng,
                           PropertyResult& pr);

// displayed residue values, full equivariance sweep, exact-sequence checks
void tower_residue_suite(const CheckConfig& cfg, bool with_quadratic,
                         std::vector<PropertyResult>& out);
// validity preservation, unipotent index independence, group law, center
void tower_structure_suite(const CheckConfig& cfg, std::vector<PropertyResult>& out);

void amice_suite(const CheckConfig& cfg, std::vector<PropertyResult>& out);

void reps_basic_suite(const CheckConfig& cfg, std::vector<PropertyResult>& out);
// Borel profiles distinguish semisimple inventories of length <= 2 and
// reconstruct_from_borel inverts restrict_to_borel (desk scale).
void borel_distinguishes(const CheckConfig& cfg, PropertyResult& injective,
                         PropertyResult& reconstruction);

void correspondence_roundtrips(const CheckConfig& cfg, PropertyResult& roundtrip, PropertyResult& swap,
               PropertyResult& central);
void reduction_table(const CheckConfig& cfg, PropertyResult& instances, PropertyResult& sweep,
                     PropertyResult& breuil, PropertyResult& bracketpr);

} // namespace props

} // namespace pgmod
