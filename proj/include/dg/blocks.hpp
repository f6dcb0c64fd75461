#pragma once

#include <utility>
#include <vector>

#include "dg/group.hpp"

namespace dg {

// A G-invariant partition of {0..degree-1} into blocks of equal size.
// Canonical form: each block sorted ascending, blocks ordered by smallest
// member. Construction validates the partition shape; invariance under a
// group is validated by the operations that require it.
class BlockSystem {
  public:
    BlockSystem() = default;
    // Throws InvalidBlockSystem if not a partition into equal-size cells.
    BlockSystem(int degree, std::vector<std::vector<int>> blocks);

    int degree() const { return static_cast<int>(block_of_.size()); }
    std::size_t block_count() const { return blocks_.size(); }
    std::size_t block_size() const {
        return blocks_.empty() ? 0 : blocks_[0].size();
    }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_of(int point) const { return block_of_[point]; }

    bool operator==(const BlockSystem& o) const { return blocks_ == o.blocks_; }

  private:
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

// True if every generator maps blocks onto blocks.
bool is_invariant(const PermGroup& g, const BlockSystem& sys);

// The minimal G-invariant partitions: for every seed pair (0, beta) the
// finest invariant partition with 0 and beta in one cell, deduplicated, with
// the two trivial partitions excluded. Empty iff G is primitive. Requires G
// transitive (NotTransitive otherwise). Uses generators only.
std::vector<BlockSystem> minimal_block_systems(const PermGroup& g);

// Finest invariant partition in which all points of `seed` share a cell.
BlockSystem block_system_from_seed(const PermGroup& g,
                                   const std::vector<int>& seed);

// Action of G on the blocks of an invariant system: the induced image group
// (degree = number of blocks) and the kernel (elements fixing every block
// setwise) as a pre-materialized subgroup. |image| * |kernel| == |G|.
// Throws InvalidBlockSystem if the system is not G-invariant.
struct BlocksAction {
    PermGroup image;
    PermGroup kernel;
};
BlocksAction blocks_action(const PermGroup& g, const BlockSystem& sys);

// The permutation of block indices induced by g (system must be invariant).
Perm induced_block_perm(const Perm& g, const BlockSystem& sys);

// Coarsen `sys` by an invariant system `coarse` of the induced blocks action:
// cells are unions of sys-blocks grouped by coarse. The result is invariant
// under any group for which both inputs are invariant.
BlockSystem pullback_block_system(const BlockSystem& sys,
                                  const BlockSystem& coarse);

}  // namespace dg
