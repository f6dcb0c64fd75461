#pragma once

#include <cstdint>

#include "dg/group.hpp"

namespace dg {

// Number of orbits of N's elements under conjugation by A (N normalized by
// A, both materialized). Throws NotNormalized / CapExceeded.
std::size_t aut_class_count(const PermGroup& n, const PermGroup& a);

// binomial(t + k - 1, k): the number of multisets of size k drawn from t
// classes. Exact; throws CapExceeded if the value overflows 64 bits.
std::uint64_t stars_and_bars(std::uint64_t t, std::uint64_t k);

// Orbit count of T^k under per-coordinate conjugation by the ambient group
// combined with coordinate permutations, by a plain breadth-first walk over
// all |T|^k tuples. Independent of the multiset formula; the two must agree.
// Throws CapExceeded when |T|^k exceeds `state_cap`.
std::size_t brute_force_power_classes(const PermGroup& t,
                                      const PermGroup& aut_ambient, int k,
                                      std::size_t state_cap = 10000000);

}  // namespace dg
