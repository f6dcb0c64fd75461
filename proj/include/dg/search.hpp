#pragma once

#include <cstdint>
#include <vector>

#include "dg/catalog.hpp"

namespace dg {

// Randomized rediscovery of the 4-clique-free transitive groups of degree
// 6p, p in {3, 5}, inside the wreath product AGL(1,p) wr Alt(4) acting on 6
// blocks of size p. Each restart samples multiplier arrays compatible with
// the two Alt(4) block generators (their lift relations must hold up to a
// constant scalar), rejects pairs whose monomial closure is too large,
// extracts a small invariant translation module in which every vector has a
// zero entry, assembles a candidate subgroup and keeps it when it is
// transitive with no 4-clique in its derangement graph. Finds are
// deduplicated by fingerprint. Deterministic for a fixed seed.
struct SearchOutcome {
    std::vector<GroupRecord> records;  // one representative per class
    std::vector<GroupFingerprint> fingerprints;  // parallel to records
    std::uint64_t restarts_used = 0;
};

// stop_after = 0 runs the whole budget; otherwise the search returns as soon
// as that many fingerprint classes have been found.
SearchOutcome search_exceptional(int p, std::uint64_t budget,
                                 std::uint64_t seed,
                                 std::size_t stop_after = 0);

// 1 for p=3, 2 for p=5 (the class counts the dichotomy predicts).
std::size_t expected_exceptional_classes(int p);

}  // namespace dg
