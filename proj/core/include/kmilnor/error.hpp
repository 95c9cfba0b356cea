#ifndef KMILNOR_ERROR_HPP
#define KMILNOR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kmil {

enum class Errc {
    ParseError,
    InvalidInput,
    Precondition,
    DivisionByNonUnit,
    NonUnit,
    GhostUndefined,
    DenominatorNotUnit,
    ReducibleExtension,
    NonUnitCoordinate,
    NonUnitParameter,
    SteinbergDegenerate,
    UnhandledFaceShape,
    NonUnitEntry,
    PairDiverged,
    NotRelative,
    Unsupported,
};

inline const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::Precondition: return "PreconditionViolation";
    case Errc::DivisionByNonUnit: return "DivisionByNonUnit";
    case Errc::NonUnit: return "NonUnit";
    case Errc::GhostUndefined: return "GhostUndefined";
    case Errc::DenominatorNotUnit: return "DenominatorNotUnit";
    case Errc::ReducibleExtension: return "ReducibleExtension";
    case Errc::NonUnitCoordinate: return "NonUnitCoordinate";
    case Errc::NonUnitParameter: return "NonUnitParameter";
    case Errc::SteinbergDegenerate: return "SteinbergDegenerate";
    case Errc::UnhandledFaceShape: return "UnhandledFaceShape";
    case Errc::NonUnitEntry: return "NonUnitEntry";
    case Errc::PairDiverged: return "PairDiverged";
    case Errc::NotRelative: return "NotRelative";
    case Errc::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

} // namespace kmil

#endif
