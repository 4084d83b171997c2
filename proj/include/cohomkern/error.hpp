#pragma once

#include <stdexcept>
#include <string>

namespace cohomkern {

enum class Errc {
    InvalidOrder,
    FamilyMismatch,
    EvenD,
    ModulusMismatch,
    NotStable,
    NoSolution,
    NotContained,
    DegreeTooLarge,
    ConstructionFailure,
    LiftFailure,
    SectionFailure,
    OutsideImage,
    NotACocycle,
    UnsupportedDegree,
    ParseError,
    ConfigError,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

}  // namespace cohomkern
