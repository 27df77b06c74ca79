#pragma once

#include <stdexcept>
#include <string>

namespace pgmod {

// Failure kinds surfaced by the library. The CLI maps these to exit codes:
// undetermined_valuation -> 3, everything else -> 2.
enum class errc {
    division_by_zero,
    mismatched_field,
    not_a_unit,
    insufficient_precision,
    insufficient_digits,
    empty_window,
    window_miss,
    depth_exhausted,
    level_exhausted,
    level_mismatch,
    inconsistent_profile,
    not_in_image,
    out_of_table_range,
    undetermined_valuation,
    reducible_induction,
    bad_input,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::division_by_zero: return "DivisionByZero";
        case errc::mismatched_field: return "MismatchedField";
        case errc::not_a_unit: return "NotAUnit";
        case errc::insufficient_precision: return "InsufficientPrecision";
        case errc::insufficient_digits: return "InsufficientDigits";
        case errc::empty_window: return "EmptyWindow";
        case errc::window_miss: return "WindowMiss";
        case errc::depth_exhausted: return "DepthExhausted";
        case errc::level_exhausted: return "LevelExhausted";
        case errc::level_mismatch: return "LevelMismatch";
        case errc::inconsistent_profile: return "InconsistentProfile";
        case errc::not_in_image: return "NotInImage";
        case errc::out_of_table_range: return "OutOfTableRange";
        case errc::undetermined_valuation: return "UndeterminedValuation";
        case errc::reducible_induction: return "ReducibleInduction";
        case errc::bad_input: return "BadInput";
    }
    return "Error";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace pgmod
