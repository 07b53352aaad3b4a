#pragma once

#include <stdexcept>
#include <string>

namespace orbitfn {

/// Base class for all domain errors; kind() is the name printed by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ORBITFN_ERROR(Name)                                                  \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name, what) {}       \
    };

ORBITFN_ERROR(UnsupportedType)
ORBITFN_ERROR(UnsupportedSeries)
ORBITFN_ERROR(UnsupportedRank)
ORBITFN_ERROR(MismatchedSystem)
ORBITFN_ERROR(IndexOutOfRange)
ORBITFN_ERROR(NotDominant)
ORBITFN_ERROR(NotStrictlyDominant)
ORBITFN_ERROR(NotIntegral)
ORBITFN_ERROR(UnknownPair)
ORBITFN_ERROR(NonTermination)
ORBITFN_ERROR(SeparationFailure)
ORBITFN_ERROR(DomainError)
ORBITFN_ERROR(ParseError)

#undef ORBITFN_ERROR

/// Thrown when an enumeration would exceed its cap; size() reports the exact count.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::string size)
        : Error("CapExceeded", what), size_(std::move(size)) {}
    const std::string& size() const noexcept { return size_; }

private:
    std::string size_;
};

}  // namespace orbitfn
