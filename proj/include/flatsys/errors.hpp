#pragma once

#include <stdexcept>
#include <string>

namespace flatsys {

// Library errors carry a stable machine-readable code alongside the message,
// so the CLI and bindings can map them without string matching.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define FLATSYS_DEFINE_ERROR(NAME)                                   \
    class NAME : public Error {                                      \
    public:                                                          \
        explicit NAME(const std::string& what) : Error(#NAME, what) {} \
    }

FLATSYS_DEFINE_ERROR(ParseError);
FLATSYS_DEFINE_ERROR(NotABijection);
FLATSYS_DEFINE_ERROR(Disconnected);
FLATSYS_DEFINE_ERROR(NoSingularities);
FLATSYS_DEFINE_ERROR(GenusOne);
FLATSYS_DEFINE_ERROR(NotPrimitive);
FLATSYS_DEFINE_ERROR(EmptyGraph);
FLATSYS_DEFINE_ERROR(EmptyStratum);
FLATSYS_DEFINE_ERROR(MissingAnchors);
FLATSYS_DEFINE_ERROR(NoRegularCutFound);
FLATSYS_DEFINE_ERROR(InvalidCut);
FLATSYS_DEFINE_ERROR(InsufficientDirectionSet);
FLATSYS_DEFINE_ERROR(NearTie);

#undef FLATSYS_DEFINE_ERROR

}  // namespace flatsys
