#pragma once

#include <nlohmann/json.hpp>

#include "pgmod/amice.hpp"
#include "pgmod/corresp.hpp"
#include "pgmod/reps.hpp"
#include "pgmod/tower.hpp"

namespace pgmod {

using json = nlohmann::ordered_json;

// Schema identifiers carried in the "schema" field of top-level objects.
inline constexpr const char* kGaloisSchema = "pgmod/galois-rep/1";
inline constexpr const char* kGl2Schema = "pgmod/gl2-ss/1";
inline constexpr const char* kBorelSchema = "pgmod/borel-ss/1";
inline constexpr const char* kTowerSchema = "pgmod/tower/1";
inline constexpr const char* kReductionSchema = "pgmod/reduction/1";
inline constexpr const char* kReportSchema = "pgmod/check-report/1";

json char_to_json(const MulCharacter& c);
MulCharacter char_from_json(int p, const json& j);

json galois_to_json(const GaloisRep& v);
GaloisRep galois_from_json(const json& j);

json gss_to_json(int p, const GSS& s);
GSS gss_from_json(const json& j);

json bss_to_json(int p, const BSS& s);
BSS bss_from_json(const json& j);

json series_to_json(const LaurentSeries& f);
LaurentSeries series_from_json(const json& j);

json scalar_to_json(const PadicScalar& x);
PadicScalar scalar_from_json(const json& j);

json tower_to_json(const Tower& t);
Tower tower_from_json(const json& j);

json borel_to_json(const BorelElement& g);
BorelElement borel_from_json(int p, const json& j);

json measure_to_json(const MeasureZp& nu);
json step_to_json(const StepFunction& f);

json reduction_to_json(int p, long long k, const ReductionResult& r);

} // namespace pgmod
