#pragma once

#include <stdexcept>
#include <string>

namespace ecx {

enum class errc {
    division_by_zero,
    field_mismatch,
    curve_mismatch,
    not_on_curve,
    singular_curve,
    enumeration_too_large,
    abscissa_undefined,
    invalid_k,
    trivial_character,
    empty_distribution,
    derivation_failed,
    invalid_parameter,
    arithmetic_overflow,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::division_by_zero:      return "DivisionByZero";
    case errc::field_mismatch:        return "FieldMismatch";
    case errc::curve_mismatch:        return "CurveMismatch";
    case errc::not_on_curve:          return "NotOnCurve";
    case errc::singular_curve:        return "SingularCurve";
    case errc::enumeration_too_large: return "EnumerationTooLarge";
    case errc::abscissa_undefined:    return "AbscissaUndefined";
    case errc::invalid_k:             return "InvalidK";
    case errc::trivial_character:     return "TrivialCharacter";
    case errc::empty_distribution:    return "EmptyDistribution";
    case errc::derivation_failed:     return "DerivationFailed";
    case errc::invalid_parameter:     return "InvalidParameter";
    case errc::arithmetic_overflow:   return "ArithmeticOverflow";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace ecx
