#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace snake {

// Domain errors carry a stable machine-readable name. The CLI prints
// "<name>: <message>" on stderr and maps every domain error to exit code 1
// (usage errors to exit 2).
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct EmptyCF : Error {
    EmptyCF() : Error("EmptyCF", "continued fraction has no terms") {}
};

struct NonPositiveTerm : Error {
    explicit NonPositiveTerm(long long term)
        : Error("NonPositiveTerm",
                "continued fraction term " + std::to_string(term) + " is not positive") {}
};

struct DegenerateCF : Error {
    DegenerateCF()
        : Error("DegenerateCF", "continued fraction sums to less than 2 (zero-tile graph)") {}
};

struct BadChainLength : Error {
    explicit BadChainLength(const std::string& why) : Error("BadChainLength", why) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(std::uint64_t found)
        : Error("CapExceeded",
                "enumeration exceeded the cap; " + std::to_string(found) + " results found"),
          count_so_far(found) {}

    std::uint64_t count_so_far;
};

struct NotAMatching : Error {
    explicit NotAMatching(const std::string& why) : Error("NotAMatching", why) {}
};

struct NotATiling : Error {
    explicit NotATiling(const std::string& why) : Error("NotATiling", why) {}
};

struct BrokenRoute : Error {
    explicit BrokenRoute(const std::string& why) : Error("BrokenRoute", why) {}
};

struct NotARoute : Error {
    explicit NotARoute(const std::string& why) : Error("NotARoute", why) {}
};

struct UnknownNode : Error {
    explicit UnknownNode(int id)
        : Error("UnknownNode", "node id " + std::to_string(id) + " is not in the graph") {}
};

// Two sources (or two sinks) with equal y would make the terminal order
// ill-defined; surfaced loudly instead of being tie-broken silently.
struct TerminalOrderError : Error {
    explicit TerminalOrderError(const std::string& why) : Error("TerminalOrderError", why) {}
};

struct IndexOutOfRange : Error {
    IndexOutOfRange(std::size_t index, std::size_t size)
        : Error("IndexOutOfRange", "index " + std::to_string(index) +
                                       " out of range for custom sequence of length " +
                                       std::to_string(size)) {}
};

struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& name)
        : Error("UnknownIdentity", "no identity named '" + name + "'") {}
};

struct ParseError : Error {
    ParseError(std::size_t line, const std::string& why)
        : Error("ParseError", "line " + std::to_string(line) + ": " + why) {}
};

struct GapError : Error {
    explicit GapError(std::size_t line)
        : Error("GapError", "line " + std::to_string(line) + ": b-file index not consecutive") {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& why) : Error("UsageError", why) {}
};

}  // namespace snake
