#ifndef SRDEPTH_ERROR_HPP
#define SRDEPTH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace srdepth {

enum class ErrorCode {
    VertexOutOfRange,
    UnusedVertex,
    EmptyInput,
    FaceNotInComplex,
    NotASubcomplex,
    EmptyFace,
    NotAComplex,
    OddDegree,
    NotNested,
    BadParameter,
    TooLarge,
    EngineDisagreement,
    Parse,
    Io,
};

const char* to_string(ErrorCode code);

/// Library-wide exception. Every failure mode named in the public API maps to
/// one ErrorCode so callers (the CLI in particular) can pick an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::UnusedVertex: return "UnusedVertex";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::NotASubcomplex: return "NotASubcomplex";
    case ErrorCode::EmptyFace: return "EmptyFace";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::OddDegree: return "OddDegree";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EngineDisagreement: return "EngineDisagreement";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace srdepth

#endif  // SRDEPTH_ERROR_HPP
