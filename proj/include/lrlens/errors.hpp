#pragma once

#include <stdexcept>
#include <string>

namespace lrlens {

enum class ErrorCode {
    invalid_input,
    shape_error,
    numerical_error,
    format_error,
    unsupported_method,
    empty_intersection,
    degenerate_spectrum,
    degenerate_input,
    schema_error,
    missing_feature,
    singular_design,
    insufficient_groups,
    config_error,
    missing_input,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

#define LRLENS_DEFINE_ERROR(Name, code_value)                                        \
    struct Name : Error {                                                            \
        explicit Name(const std::string& msg) : Error(ErrorCode::code_value, msg) {} \
    }

LRLENS_DEFINE_ERROR(InvalidInput, invalid_input);
LRLENS_DEFINE_ERROR(ShapeError, shape_error);
LRLENS_DEFINE_ERROR(NumericalError, numerical_error);
LRLENS_DEFINE_ERROR(FormatError, format_error);
LRLENS_DEFINE_ERROR(UnsupportedMethod, unsupported_method);
LRLENS_DEFINE_ERROR(EmptyIntersection, empty_intersection);
LRLENS_DEFINE_ERROR(DegenerateSpectrum, degenerate_spectrum);
LRLENS_DEFINE_ERROR(DegenerateInput, degenerate_input);
LRLENS_DEFINE_ERROR(SchemaError, schema_error);
LRLENS_DEFINE_ERROR(MissingFeature, missing_feature);
LRLENS_DEFINE_ERROR(SingularDesign, singular_design);
LRLENS_DEFINE_ERROR(InsufficientGroups, insufficient_groups);
LRLENS_DEFINE_ERROR(ConfigError, config_error);
LRLENS_DEFINE_ERROR(MissingInput, missing_input);
LRLENS_DEFINE_ERROR(IoError, io_error);

#undef LRLENS_DEFINE_ERROR

} // namespace lrlens
