#pragma once

#include <stdexcept>
#include <string>

namespace posets {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction from covers found a directed cycle.
struct CycleDetected : Error {
    using Error::Error;
};

struct UnknownLabel : Error {
    explicit UnknownLabel(const std::string& label)
        : Error("unknown label '" + label + "'"), label(label) {}
    std::string label;
};

struct DuplicateLabel : Error {
    explicit DuplicateLabel(const std::string& label)
        : Error("duplicate label '" + label + "'"), label(label) {}
    std::string label;
};

// Pseudocomplements need a bottom element.
struct NoBottom : Error {
    NoBottom() : Error("poset has no bottom element") {}
};

struct NoTop : Error {
    NoTop() : Error("poset has no top element") {}
};

struct NotPseudocomplemented : Error {
    NotPseudocomplemented(const std::string& msg, int witness)
        : Error(msg), witness(witness) {}
    int witness;  // element whose pseudocomplement does not exist, -1 for no bottom
};

struct NotAFilter : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)), position(position) {}
    std::size_t position;
};

struct ArityError : Error {
    using Error::Error;
};

struct UnboundVariable : Error {
    explicit UnboundVariable(const std::string& var)
        : Error("unbound variable '" + var + "'"), var(var) {}
    std::string var;
};

struct FormatError : Error {
    FormatError(const std::string& msg, int line)
        : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

struct VersionMismatch : Error {
    using Error::Error;
};

struct SizeCapExceeded : Error {
    using Error::Error;
};

}  // namespace posets
