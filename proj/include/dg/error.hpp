#pragma once

#include <stdexcept>
#include <string>

namespace dg {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A closure / enumeration / matrix size cap was exceeded.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

// Malformed permutation image array (wrong length, out of range, repeats).
struct InvalidPermutation : Error {
    explicit InvalidPermutation(const std::string& msg) : Error(msg) {}
};

// Operation requires a transitive group.
struct NotTransitive : Error {
    explicit NotTransitive(const std::string& msg) : Error(msg) {}
};

// Partition is not a G-invariant block system (or not a partition at all).
struct InvalidBlockSystem : Error {
    explicit InvalidBlockSystem(const std::string& msg) : Error(msg) {}
};

// Claimed subgroup is not contained in the ambient group.
struct NotASubgroup : Error {
    explicit NotASubgroup(const std::string& msg) : Error(msg) {}
};

// Claimed normal subgroup is not normalized by the acting group.
struct NotNormalized : Error {
    explicit NotNormalized(const std::string& msg) : Error(msg) {}
};

// A clique witness fails its defining pairwise property.
struct InvalidWitness : Error {
    explicit InvalidWitness(const std::string& msg) : Error(msg) {}
};

// File could not be opened or written.
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Group/hypergraph file could not be parsed; carries a 1-based line number.
struct ParseError : Error {
    ParseError(int line_arg, const std::string& msg)
        : Error("line " + std::to_string(line_arg) + ": " + msg), line(line_arg) {}
    int line;
};

// The supplied group action does not map hypergraph edges to edges.
struct ActionDoesNotPreserveEdges : Error {
    explicit ActionDoesNotPreserveEdges(const std::string& msg) : Error(msg) {}
};

// Covering-subgroup verifier preconditions.
struct NotIndexThree : Error {
    explicit NotIndexThree(const std::string& msg) : Error(msg) {}
};
struct NotCovering : Error {
    explicit NotCovering(const std::string& msg) : Error(msg) {}
};

// Generic precondition violation (bad argument combinations).
struct PreconditionViolation : Error {
    explicit PreconditionViolation(const std::string& msg) : Error(msg) {}
};

}  // namespace dg
