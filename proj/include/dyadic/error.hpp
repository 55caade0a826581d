#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dyadic {

enum class ErrorKind {
    parse,
    validation,
    range,
    domain,
    config,
    generation,
    budget,
    io,
};

// Process exit code used by the CLI for each error kind.
constexpr int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::parse: return 3;
    case ErrorKind::validation: return 4;
    case ErrorKind::range: return 5;
    case ErrorKind::domain: return 5;
    case ErrorKind::config: return 6;
    case ErrorKind::generation: return 7;
    case ErrorKind::budget: return 8;
    case ErrorKind::io: return 9;
    }
    return 1;
}

constexpr std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::validation: return "validation";
    case ErrorKind::range: return "range";
    case ErrorKind::domain: return "domain";
    case ErrorKind::config: return "config";
    case ErrorKind::generation: return "generation";
    case ErrorKind::budget: return "budget";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace dyadic
