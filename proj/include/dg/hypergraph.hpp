#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dg/group.hpp"

namespace dg {

// An edge of an (a,b)-hypergraph: b pairwise-disjoint parts of size a,
// canonicalized (each part sorted, parts sorted lexicographically).
using Edge = std::vector<std::vector<int>>;

Edge canonical_edge(Edge e);

// Hypergraph whose edges are partitions of ab-subsets of the vertex set into
// b parts of size a.
class ABHypergraph {
  public:
    ABHypergraph(int vertex_count, int a, int b, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int part_size() const { return a_; }
    int part_count() const { return b_; }
    const std::vector<Edge>& edges() const { return edges_; }

  private:
    int n_, a_, b_;
    std::vector<Edge> edges_;  // canonical, sorted, deduplicated
};

// colours[v] in {1..c}; an edge is violated iff all b of its parts are
// monochromatic.
using Colouring = std::vector<int>;

bool is_valid_colouring(const ABHypergraph& h, const Colouring& colouring);

// Uniform random colour maps; returns the first valid one, or nullopt after
// `trials` attempts. Deterministic under a fixed seed.
std::optional<Colouring> random_colouring_search(const ABHypergraph& h,
                                                 int colours,
                                                 std::uint64_t trials,
                                                 std::uint64_t seed);

// Exact chromatic number by backtracking; colour k+1 is introduced only
// after 1..k are in use. Vertex cap 32.
int exact_chromatic_number(const ABHypergraph& h);

// Image of an edge under a vertex permutation, canonicalized.
Edge apply_to_edge(const Perm& g, const Edge& e);

// Vertex-transitive + edge-transitive + every edge stabilizer transitive on
// the b parts + (a = 2 or edge stabilizer transitive on the edge's support).
// Throws ActionDoesNotPreserveEdges if some group element maps an edge
// outside the edge set.
bool is_special(const PermGroup& g, const ABHypergraph& h);

// All (a,b)-hypergraphs with edge set a single G-orbit of a seed partition,
// filtered by is_special, deduplicated by canonical edge set.
std::vector<ABHypergraph> enumerate_special_hypergraphs(const PermGroup& g,
                                                        int a, int b);

// An edge fixed (as a partition) by every element of the subgroup, if any.
std::optional<Edge> point_stabilizer_fixes_edge(const PermGroup& stabilizer,
                                                const ABHypergraph& h);

// Text format: `vertices: <n>`, `a: <a>`, `b: <b>`, one
// `edge: [[...],[...]]` line per edge. Round-trips bit-exact.
std::string serialize_hypergraph(const ABHypergraph& h);
ABHypergraph parse_hypergraph(std::istream& in);

}  // namespace dg
