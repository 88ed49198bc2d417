#pragma once

#include <stdexcept>
#include <string>

namespace restab {

enum class ErrorKind {
    MalformedRow,
    OrderViolation,
    EmptyCorpus,
    DomainError,
    MissingImputation,
    SliceCollapse,
    EmptySamples,
    Io,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedRow: return "MalformedRow";
        case ErrorKind::OrderViolation: return "OrderViolation";
        case ErrorKind::EmptyCorpus: return "EmptyCorpus";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::MissingImputation: return "MissingImputation";
        case ErrorKind::SliceCollapse: return "SliceCollapse";
        case ErrorKind::EmptySamples: return "EmptySamples";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace restab
