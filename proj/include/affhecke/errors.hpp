#pragma once

#include <stdexcept>
#include <string>

namespace affhecke {

// Stable numbering: these values back the C API status codes.
enum class errc {
    ok = 0,
    malformed_scalar = 1,
    noninvertible_modulus = 2,
    denominator_zero = 3,
    division_by_zero = 4,
    field_mismatch = 5,
    length_mismatch = 6,
    index_out_of_range = 7,
    not_divisible = 8,
    zero_coordinate = 9,
    product_not_one = 10,
    zero_parameter = 11,
    parameter_mismatch = 12,
    missing_image = 13,
    invalid_module = 14,
    witness_verification_failed = 15,
    certificate_unavailable = 16,
    rank_too_small = 17,
    parse_error = 18,
    internal = 19,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::ok: return "Ok";
        case errc::malformed_scalar: return "MalformedScalar";
        case errc::noninvertible_modulus: return "NonInvertibleModulus";
        case errc::denominator_zero: return "DenominatorZero";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::not_divisible: return "NotDivisible";
        case errc::zero_coordinate: return "ZeroCoordinate";
        case errc::product_not_one: return "ProductNotOne";
        case errc::zero_parameter: return "ZeroParameter";
        case errc::parameter_mismatch: return "ParameterMismatch";
        case errc::missing_image: return "MissingImage";
        case errc::invalid_module: return "InvalidModule";
        case errc::witness_verification_failed: return "WitnessVerificationFailed";
        case errc::certificate_unavailable: return "CertificateUnavailable";
        case errc::rank_too_small: return "RankTooSmall";
        case errc::parse_error: return "ParseError";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

// All library failures surface as this exception type; code() gives the
// stable category used by the C API status mapping.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace affhecke
