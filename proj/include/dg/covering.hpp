#pragma once

#include <cstdint>
#include <vector>

#include "dg/group.hpp"

namespace dg {

// A ≥ H ⊵ U with H normal in A; n = |A:H|.
struct CoveringInstance {
    PermGroup ambient;   // A
    PermGroup normal;    // H, normal in A
    PermGroup subgroup;  // U <= H

    CoveringInstance(PermGroup a, PermGroup h, PermGroup u);
    std::size_t index() const;  // |A:H|
};

// True iff H equals the union of A-conjugates of U.
bool is_covering_subgroup(const CoveringInstance& inst);

// The kernel of G's action on an invariant partition into 3 cells, found by
// coarsening a minimal block system (directly, or through a minimal system
// of the induced block action). Throws NotIndexThree when no 3-cell
// invariant partition arises this way.
PermGroup index3_kernel(const PermGroup& g);

// For |A:H| = 3 and U covering: builds the coset action of A on A/U,
// computes the clique number of its derangement graph and checks the
// derived bounds: omega <= 3, |A:U| <= 30, |H:U| <= 10.
struct CoveringReport {
    std::size_t index_ambient_normal = 0;   // |A:H|
    std::size_t index_normal_subgroup = 0;  // |H:U|
    std::size_t coset_degree = 0;           // |A:U|
    std::size_t omega = 0;
    bool omega_bound_holds = false;         // omega <= 3
    bool degree_bound_holds = false;        // |A:U| <= 30
    bool subgroup_bound_holds = false;      // |H:U| <= 10
    bool subgroup_bound_attained = false;   // |H:U| == 10
};
CoveringReport verify_neumann_praeger_n3(const CoveringInstance& inst);

// True iff the union of all conjugates of M under the ambient group covers T.
// (For T nonabelian simple with AutAction realizing Aut(T) by conjugation,
// true should only happen when M = T.)
bool saxl_check(const PermGroup& t, const PermGroup& m,
                const PermGroup& aut_action);

// Pigeonhole fixity: with t = number of AutAction-conjugacy classes of T,
// every tuple of length > t has two coordinates in one class. Exhaustive
// when |T|^len <= 10^6, otherwise `samples` seeded random tuples.
// Requires tuple_len >= 2; for tuple_len <= t a counterexample exists and
// the check returns false.
bool pigeonhole_fixity_check(const PermGroup& t, const PermGroup& aut_action,
                             int tuple_len, std::uint64_t samples,
                             std::uint64_t seed);

// All subgroups of a materialized group, enumerated as closures of
// generating subsets of size <= 2 (complete for 2-generated-subgroup
// lattices such as Alt(5)'s).
std::vector<PermGroup> two_generated_subgroups(const PermGroup& g);

}  // namespace dg
