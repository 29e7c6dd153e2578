#pragma once

#include <stdexcept>
#include <string>

namespace gdc {

// Error taxonomy shared by every pipeline.  Indeterminate is not a failure:
// it is the restart signal of the precision protocol and callers that own a
// Precision handle are expected to catch it, refine, and retry.
enum class ErrorCode {
    Domain,
    Precondition,
    Validation,
    Indeterminate,
    ResourceExceeded,
    Certificate,
    Parse,
    Io,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(ErrorCode::Precondition, what) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(ErrorCode::Validation, what) {}
};

// Thrown when a predicate cannot be decided at the current interval width.
struct IndeterminateError : Error {
    explicit IndeterminateError(const std::string& what) : Error(ErrorCode::Indeterminate, what) {}
};

struct ResourceExceeded : Error {
    explicit ResourceExceeded(const std::string& what) : Error(ErrorCode::ResourceExceeded, what) {}
};

struct CertificateError : Error {
    explicit CertificateError(const std::string& what) : Error(ErrorCode::Certificate, what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorCode::Parse, what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(ErrorCode::Io, what) {}
};

// Three-valued answer used wherever interval data cannot always decide.
enum class Trit { False, True, Indeterminate };

inline const char* trit_name(Trit t) {
    switch (t) {
        case Trit::False: return "no";
        case Trit::True: return "yes";
        default: return "indeterminate";
    }
}

}  // namespace gdc
