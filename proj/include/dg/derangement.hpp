#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dg/blocks.hpp"
#include "dg/group.hpp"
#include "dg/rational.hpp"

namespace dg {

bool is_derangement(const Perm& p);

// Two group elements are adjacent in the derangement graph iff they disagree
// at every point, i.e. x * y^-1 is a derangement.
bool derangement_adjacent(const Perm& x, const Perm& y);

// All fixed-point-free elements, in canonical element order.
std::vector<Perm> derangements(const PermGroup& g);

// The derangement (Cayley) graph of a materialized group: vertices are the
// group elements in canonical order, edges join elements that disagree
// everywhere. Adjacency restricted to the derangement set is cached in a bit
// matrix when the derangement count does not exceed `matrix_cap`; beyond
// that, adjacency is answered directly from the image arrays.
class DerangementGraph {
  public:
    static constexpr std::size_t kDefaultMatrixCap = 20000;

    explicit DerangementGraph(PermGroup g,
                              std::size_t matrix_cap = kDefaultMatrixCap);

    const PermGroup& group() const { return group_; }
    // Indices into group().elements() of the derangements, ascending.
    const std::vector<int>& derangement_indices() const { return der_; }
    std::size_t derangement_count() const { return der_.size(); }

    bool has_matrix() const { return words_ > 0; }
    // Adjacency between derangement-list positions.
    bool der_adjacent(int di, int dj) const;
    const Perm& derangement(int di) const;

  private:
    PermGroup group_;
    std::vector<int> der_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;  // der_.size() rows of words_ words
};

DerangementGraph derangement_graph(const PermGroup& g);

// A clique in the derangement graph, listed in canonical order with the
// identity first (every clique can be translated to contain the identity).
using CliqueWitness = std::vector<Perm>;

// True iff the witness is pairwise adjacent, pairwise distinct and contains
// the identity.
bool is_clique(const CliqueWitness& w);

// Exact k-clique decision, rooted at the identity: a k-clique exists iff one
// through the identity exists (vertex transitivity). Returns a witness
// containing the identity, or nullopt if the graph has no k-clique.
std::optional<CliqueWitness> has_kclique(const DerangementGraph& graph,
                                         std::size_t k);

// Exact clique number (branch and bound with a greedy colouring bound over
// the derangement-induced subgraph; the identity contributes 1). Requires
// the bit matrix; throws CapExceeded beyond the matrix cap.
struct CliqueNumberResult {
    std::size_t omega = 0;
    CliqueWitness witness;  // a maximum clique containing the identity
};
CliqueNumberResult clique_number(const DerangementGraph& graph);

// Exact maximum coclique (independent set), computed as a maximum clique of
// the complement restricted to the non-derangements (every maximum coclique
// translates to one containing the identity, whose other members intersect
// the identity, i.e. are non-derangements). Throws CapExceeded when the
// group order exceeds `order_cap`.
std::vector<Perm> max_coclique(const DerangementGraph& graph,
                               std::size_t order_cap = 2000);

// alpha / |G_omega| as an exact rational (transitive groups only).
struct DensityReport {
    std::size_t alpha = 0;
    std::size_t stabilizer_order = 0;
    Rational rho;
};
DensityReport intersection_density(const PermGroup& g,
                                   std::size_t order_cap = 2000);

// Clique-coclique bound report: alpha * omega <= |G| and rho <= |domain| / omega,
// with exact tightness flags.
struct CliqueCocliqueReport {
    int degree = 0;
    std::size_t order = 0;
    std::size_t alpha = 0;
    std::size_t omega = 0;
    std::size_t stabilizer_order = 0;
    Rational rho;
    Rational rho_bound;   // degree / omega
    bool product_bound_holds = false;  // alpha * omega <= order
    bool product_bound_tight = false;  // alpha * omega == order
    bool density_bound_holds = false;  // rho <= degree / omega
    bool density_bound_tight = false;
};
CliqueCocliqueReport clique_coclique_check(const PermGroup& g,
                                           std::size_t order_cap = 2000);

// First derangement (canonical order) whose order is a positive power of p.
std::optional<Perm> prime_power_derangement(const PermGroup& g, int p);

// Verifies that a clique of the blocks action lifts to a clique of the
// original action: the witness elements must induce pairwise-disagreeing
// permutations of the blocks (InvalidWitness otherwise); returns whether
// they also pairwise disagree on the full domain.
bool lift_clique_check(const PermGroup& g, const BlockSystem& sys,
                       const std::vector<Perm>& witness);

}  // namespace dg
