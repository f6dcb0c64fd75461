#include "dg/action.hpp"

#include <algorithm>
#include <map>

namespace dg {

PermGroup coset_action(const PermGroup& a, const PermGroup& u,
                       std::size_t max_index) {
    if (a.degree() != u.degree()) {
        throw NotASubgroup("subgroup degree does not match ambient degree");
    }
    if (!is_subgroup_of(u, a)) {
        throw NotASubgroup("claimed subgroup has elements outside the group");
    }
    const auto& elems = a.elements();
    const std::size_t index = elems.size() / u.order();
    if (index > max_index) {
        throw CapExceeded("coset count " + std::to_string(index) +
                          " exceeds cap " + std::to_string(max_index));
    }
    // Label right cosets Ug by order of first appearance over the canonical
    // element order; coset 0 (the one containing the identity) is U.
    std::vector<int> coset_of(elems.size(), -1);
    std::vector<int> reps;
    for (std::size_t x = 0; x < elems.size(); ++x) {
        if (coset_of[x] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(static_cast<int>(x));
        for (const Perm& w : u.elements()) {
            int j = a.element_index(compose(w, elems[x]));
            coset_of[j] = c;
        }
    }
    const int m = static_cast<int>(reps.size());
    std::vector<Perm> image_gens;
    image_gens.reserve(a.generators().size());
    for (const Perm& gen : a.generators()) {
        std::vector<int> img(m);
        for (int c = 0; c < m; ++c) {
            img[c] = coset_of[a.element_index(compose(elems[reps[c]], gen))];
        }
        image_gens.emplace_back(std::move(img));
    }
    return PermGroup::from_generators(m, std::move(image_gens));
}

PermGroup wreath_imprimitive(const PermGroup& k, const PermGroup& p,
                             int max_degree) {
    const int d = k.degree(), m = p.degree();
    if (d <= 0 || m <= 0) {
        throw PreconditionViolation("wreath factors must have positive degree");
    }
    const long long n = static_cast<long long>(d) * m;
    if (n > max_degree) {
        throw CapExceeded("wreath degree " + std::to_string(n) +
                          " exceeds cap " + std::to_string(max_degree));
    }
    std::vector<Perm> gens;
    // Base copies of K's generators in each coordinate.
    for (int b = 0; b < m; ++b) {
        for (const Perm& kg : k.generators()) {
            std::vector<int> img(n);
            for (int i = 0; i < n; ++i) img[i] = i;
            for (int j = 0; j < d; ++j) img[b * d + j] = b * d + kg[j];
            gens.emplace_back(std::move(img));
        }
    }
    // Top copies of P's generators permuting the blocks.
    for (const Perm& pg : p.generators()) {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = pg[i / d] * d + (i % d);
        gens.emplace_back(std::move(img));
    }
    return PermGroup::from_generators(static_cast<int>(n), std::move(gens));
}

KSubsetsAction ksubsets_action(const PermGroup& g, int k) {
    const int n = g.degree();
    if (k <= 0 || k > n) {
        throw PreconditionViolation("subset size out of range");
    }
    std::vector<std::vector<int>> labels;
    std::vector<int> cur(k);
    // Lexicographic k-subset enumeration.
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        labels.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    std::vector<Perm> gens;
    gens.reserve(g.generators().size());
    for (const Perm& gen : g.generators()) {
        gens.push_back(induced_ksubset_perm(gen, labels));
    }
    PermGroup act = PermGroup::from_generators(
        static_cast<int>(labels.size()), std::move(gens));
    return KSubsetsAction{std::move(act), std::move(labels)};
}

Perm induced_ksubset_perm(const Perm& g,
                          const std::vector<std::vector<int>>& labels) {
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        index[labels[i]] = static_cast<int>(i);
    }
    std::vector<int> img(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        std::vector<int> moved;
        moved.reserve(labels[i].size());
        for (int p : labels[i]) moved.push_back(g[p]);
        std::sort(moved.begin(), moved.end());
        auto it = index.find(moved);
        if (it == index.end()) {
            throw PreconditionViolation("permutation does not act on the labels");
        }
        img[i] = it->second;
    }
    return Perm(std::move(img));
}

}  // namespace dg
