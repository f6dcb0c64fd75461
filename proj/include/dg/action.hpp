#pragma once

#include <vector>

#include "dg/group.hpp"

namespace dg {

// Action of A on the right cosets of U <= A, as the induced (faithful image)
// permutation group of degree |A:U|. Coset 0 is U itself; cosets are numbered
// by their smallest element in A's canonical element order, so the point
// stabilizer of 0 is the image of U. Throws NotASubgroup if U is not
// contained in A, and CapExceeded if the index exceeds `max_index`.
PermGroup coset_action(const PermGroup& a, const PermGroup& u,
                       std::size_t max_index = 10000);

// Imprimitive wreath product K wr P acting on d*m points (d = degree of K,
// m = degree of P; point b*d + j is position j of block b). Generated by a
// copy of K's generators in every coordinate plus P's generators permuting
// the blocks. Throws CapExceeded if d*m exceeds `max_degree`.
PermGroup wreath_imprimitive(const PermGroup& k, const PermGroup& p,
                             int max_degree = 10000);

// Action of G (degree n) on k-subsets of {0..n-1} in lexicographic order.
struct KSubsetsAction {
    PermGroup group;                        // degree = C(n, k)
    std::vector<std::vector<int>> labels;   // point -> the k-subset it names
};
KSubsetsAction ksubsets_action(const PermGroup& g, int k);

// The permutation of lexicographic k-subset indices induced by g.
Perm induced_ksubset_perm(const Perm& g, const std::vector<std::vector<int>>& labels);

}  // namespace dg
