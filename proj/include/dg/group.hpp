#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "dg/perm.hpp"

namespace dg {

// A permutation group on {0..degree-1} given by generators. The element set
// is materialized lazily (breadth-first closure) on the first query that
// needs it; the transition happens at most once and is thread-safe. If the
// closure exceeds the element cap, materializing queries throw CapExceeded
// while generator-only queries (degree, generators, orbits) keep working.
//
// Instances are immutable values; copies share the underlying storage.
class PermGroup {
  public:
    static constexpr std::size_t kDefaultElementCap = 200000;

    PermGroup() = default;

    // Generators must all have the given degree. An empty generator list
    // denotes the trivial group.
    static PermGroup from_generators(int degree, std::vector<Perm> gens,
                                     std::size_t cap = kDefaultElementCap);

    // Wrap an already-known subgroup: `elements` must be closed under the
    // group operations and contain the identity (checked lightly: identity
    // presence and closure under inverses; full closure is the caller's
    // contract). Generators default to the whole element list.
    static PermGroup from_elements(int degree, std::vector<Perm> elements);
    static PermGroup from_elements(int degree, std::vector<Perm> elements,
                                   std::vector<Perm> gens);

    bool valid() const { return impl_ != nullptr; }
    int degree() const;
    const std::vector<Perm>& generators() const;
    std::size_t element_cap() const;

    // Materializing queries; throw CapExceeded when the closure passed the cap.
    std::size_t order() const;
    // Sorted lexicographically by image array; index 0 is the identity.
    const std::vector<Perm>& elements() const;
    bool contains(const Perm& p) const;
    // Index into elements(), or -1 when absent.
    int element_index(const Perm& p) const;
    // Index of the inverse of elements()[i].
    int inverse_index(int i) const;

  private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// Validates generators against the degree and returns the (lazily
// materialized) generated group. Materializing queries on the result throw
// CapExceeded if the closure exceeds `cap`.
PermGroup generate_group(int degree, std::vector<Perm> gens,
                         std::size_t cap = PermGroup::kDefaultElementCap);

// Orbit of a point under the group (generator walk; no materialization).
// Returned sorted ascending.
std::vector<int> orbit(const PermGroup& g, int point);

// All orbits, each sorted, ordered by smallest member.
std::vector<std::vector<int>> orbits(const PermGroup& g);

bool is_transitive(const PermGroup& g);

// Stabilizer subgroups (materialize the group; the results are
// pre-materialized subgroups of the same degree).
PermGroup stabilizer_point(const PermGroup& g, int point);
PermGroup stabilizer_pointwise(const PermGroup& g, const std::vector<int>& pts);
PermGroup stabilizer_setwise(const PermGroup& g, const std::vector<int>& set);

// True if every element of `sub` lies in `g` (both materialized).
bool is_subgroup_of(const PermGroup& sub, const PermGroup& g);

// Orbits of N's elements under conjugation by A (using A's generators).
// Throws NotNormalized if some conjugate leaves N, and PreconditionViolation
// on degree mismatch. Orbits are ordered by their smallest element; each
// orbit lists elements in sorted order.
std::vector<std::vector<Perm>> conjugation_orbits(const PermGroup& a,
                                                  const PermGroup& n);

// Multiset of cycle types over all elements (materializes).
std::map<std::vector<int>, std::size_t> cycle_type_census(const PermGroup& g);

}  // namespace dg
