#include "dg/cayley.hpp"

#include <algorithm>

namespace dg {

CayleyTable::CayleyTable(std::vector<std::vector<int>> table)
    : table_(std::move(table)) {
    const int k = static_cast<int>(table_.size());
    if (k == 0) throw PreconditionViolation("empty multiplication table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != k) {
            throw PreconditionViolation("multiplication table is not square");
        }
    }
    // Latin square: every row and column is a permutation of {0..k-1}.
    for (int i = 0; i < k; ++i) {
        std::vector<char> seen_row(k, 0), seen_col(k, 0);
        for (int j = 0; j < k; ++j) {
            int r = table_[i][j], c = table_[j][i];
            if (r < 0 || r >= k || seen_row[r]) {
                throw PreconditionViolation("row " + std::to_string(i) +
                                            " is not a permutation");
            }
            if (c < 0 || c >= k || seen_col[c]) {
                throw PreconditionViolation("column " + std::to_string(i) +
                                            " is not a permutation");
            }
            seen_row[r] = seen_col[c] = 1;
        }
    }
    // Two-sided identity.
    for (int e = 0; e < k; ++e) {
        bool ok = true;
        for (int x = 0; x < k && ok; ++x) {
            ok = table_[e][x] == x && table_[x][e] == x;
        }
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw PreconditionViolation("table has no identity");
    inverse_.assign(k, -1);
    for (int x = 0; x < k; ++x) {
        for (int y = 0; y < k; ++y) {
            if (table_[x][y] == identity_ && table_[y][x] == identity_) {
                inverse_[x] = y;
                break;
            }
        }
        if (inverse_[x] < 0) {
            throw PreconditionViolation("element " + std::to_string(x) +
                                        " has no two-sided inverse");
        }
    }
    // Exhaustive associativity is cubic; only affordable for small tables.
    if (k <= 64) {
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) {
                for (int c = 0; c < k; ++c) {
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
                        throw PreconditionViolation("table is not associative");
                    }
                }
            }
        }
        associativity_checked_ = true;
    }
}

CayleyTable cayley_table_of(const PermGroup& g) {
    const auto& elems = g.elements();
    const int k = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            table[i][j] = g.element_index(compose(elems[i], elems[j]));
        }
    }
    return CayleyTable(std::move(table));
}

std::pair<PermGroup, PermGroup> regular_reps(const CayleyTable& t) {
    const int k = t.size();
    std::vector<Perm> rho, lam;
    rho.reserve(k);
    lam.reserve(k);
    for (int x = 0; x < k; ++x) {
        std::vector<int> r(k), l(k);
        int xi = t.inverse(x);
        for (int w = 0; w < k; ++w) {
            r[w] = t.product(w, x);
            l[w] = t.product(xi, w);
        }
        rho.emplace_back(std::move(r));
        lam.emplace_back(std::move(l));
    }
    return {PermGroup::from_elements(k, std::move(rho)),
            PermGroup::from_elements(k, std::move(lam))};
}

PermGroup coset_action(const CayleyTable& t, const std::vector<int>& subgroup) {
    const int k = t.size();
    std::vector<char> in_u(k, 0);
    for (int u : subgroup) {
        if (u < 0 || u >= k) throw NotASubgroup("subgroup index out of range");
        in_u[u] = 1;
    }
    if (!in_u[t.identity()]) throw NotASubgroup("subgroup misses the identity");
    for (int u : subgroup) {
        for (int v : subgroup) {
            if (!in_u[t.product(u, v)]) {
                throw NotASubgroup("subgroup indices not closed under products");
            }
        }
    }
    // Assign coset ids in order of smallest member.
    std::vector<int> coset_of(k, -1);
    std::vector<int> reps;
    for (int x = 0; x < k; ++x) {
        if (coset_of[x] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int u : subgroup) coset_of[t.product(u, x)] = c;
    }
    const int m = static_cast<int>(reps.size());
    std::vector<Perm> images;
    images.reserve(k);
    for (int a = 0; a < k; ++a) {
        std::vector<int> img(m);
        for (int c = 0; c < m; ++c) img[c] = coset_of[t.product(reps[c], a)];
        images.emplace_back(std::move(img));
    }
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return PermGroup::from_elements(m, std::move(images));
}

}  // namespace dg
