#pragma once

#include <stdexcept>
#include <string>

namespace halg {

// Base for every error this library throws on purpose. Anything escaping as a
// plain std::logic_error is a bug, not a user-facing condition.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& what = "division by zero scalar")
        : Error(what) {}
};

struct ParityError : Error {
    explicit ParityError(const std::string& what) : Error(what) {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

struct NotQuadratic : Error {
    explicit NotQuadratic(const std::string& what) : Error(what) {}
};

} // namespace halg
