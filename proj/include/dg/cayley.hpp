#pragma once

#include <utility>
#include <vector>

#include "dg/group.hpp"

namespace dg {

// Multiplication table of a finite group on elements {0..size-1}:
// table[i][j] = i * j. Construction validates the Latin-square property,
// the existence of a two-sided identity and of inverses, and checks
// associativity exhaustively when size <= 64; larger tables are accepted
// with associativity_checked == false (caller's trust).
class CayleyTable {
  public:
    explicit CayleyTable(std::vector<std::vector<int>> table);

    int size() const { return static_cast<int>(table_.size()); }
    int product(int i, int j) const { return table_[i][j]; }
    int identity() const { return identity_; }
    int inverse(int i) const { return inverse_[i]; }
    bool associativity_checked() const { return associativity_checked_; }
    const std::vector<std::vector<int>>& table() const { return table_; }

  private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = -1;
    bool associativity_checked_ = false;
};

// Table of a materialized permutation group: element i of the table is
// elements()[i]; table[i][j] = index of compose(elements()[i], elements()[j]).
CayleyTable cayley_table_of(const PermGroup& g);

// Right and left regular representations on {0..size-1}:
// first  = { rho_x : w -> w*x }   (right multiplication)
// second = { lambda_x : w -> x^-1*w } (left multiplication by the inverse)
// The two commute elementwise and are both regular.
std::pair<PermGroup, PermGroup> regular_reps(const CayleyTable& t);

// Action of the table group on the right cosets of the subgroup given by
// element indices (validated: contains identity, closed under products).
// Coset 0 is the subgroup itself; cosets are numbered by their smallest
// member. Throws NotASubgroup on invalid input.
PermGroup coset_action(const CayleyTable& t, const std::vector<int>& subgroup);

}  // namespace dg
