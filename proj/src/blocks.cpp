#include "dg/blocks.hpp"

#include <algorithm>
#include <numeric>

namespace dg {

BlockSystem::BlockSystem(int degree, std::vector<std::vector<int>> blocks) {
    block_of_.assign(degree, -1);
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    std::size_t cell = blocks.empty() ? 0 : blocks[0].size();
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        if (blocks[bi].size() != cell || cell == 0) {
            throw InvalidBlockSystem("cells must be nonempty and equal-sized");
        }
        for (int p : blocks[bi]) {
            if (p < 0 || p >= degree || block_of_[p] != -1) {
                throw InvalidBlockSystem("not a partition of the domain");
            }
            block_of_[p] = static_cast<int>(bi);
        }
    }
    for (int p = 0; p < degree; ++p) {
        if (block_of_[p] == -1) {
            throw InvalidBlockSystem("point " + std::to_string(p) +
                                     " not covered by any block");
        }
    }
    blocks_ = std::move(blocks);
}

bool is_invariant(const PermGroup& g, const BlockSystem& sys) {
    if (g.degree() != sys.degree()) return false;
    for (const Perm& gen : g.generators()) {
        for (const auto& block : sys.blocks()) {
            int target = sys.block_of(gen[block[0]]);
            for (int p : block) {
                if (sys.block_of(gen[p]) != target) return false;
            }
        }
    }
    return true;
}

namespace {

// Union-find over points.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // Returns false if already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

BlockSystem dsu_to_system(int degree, Dsu& dsu) {
    std::vector<std::vector<int>> cells(degree);
    for (int p = 0; p < degree; ++p) cells[dsu.find(p)].push_back(p);
    std::vector<std::vector<int>> blocks;
    for (auto& c : cells) {
        if (!c.empty()) blocks.push_back(std::move(c));
    }
    return BlockSystem(degree, std::move(blocks));
}

}  // namespace

BlockSystem block_system_from_seed(const PermGroup& g,
                                   const std::vector<int>& seed) {
    const int n = g.degree();
    Dsu dsu(n);
    // Classic refinement: merge the seed, then propagate merges through the
    // generators until the partition is invariant.
    std::vector<std::pair<int, int>> work;
    for (std::size_t i = 1; i < seed.size(); ++i) {
        if (dsu.unite(seed[0], seed[i])) work.emplace_back(seed[0], seed[i]);
    }
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        for (const Perm& gen : g.generators()) {
            int x = gen[a], y = gen[b];
            if (dsu.unite(x, y)) work.emplace_back(x, y);
        }
    }
    return dsu_to_system(n, dsu);
}

std::vector<BlockSystem> minimal_block_systems(const PermGroup& g) {
    if (!is_transitive(g)) {
        throw NotTransitive("minimal_block_systems requires a transitive group");
    }
    const int n = g.degree();
    std::vector<BlockSystem> out;
    for (int beta = 1; beta < n; ++beta) {
        BlockSystem sys = block_system_from_seed(g, {0, beta});
        if (sys.block_count() <= 1) continue;                        // whole domain
        if (sys.block_size() <= 1) continue;                         // singletons
        if (std::find(out.begin(), out.end(), sys) == out.end()) {
            out.push_back(std::move(sys));
        }
    }
    return out;
}

Perm induced_block_perm(const Perm& g, const BlockSystem& sys) {
    std::vector<int> img(sys.block_count());
    for (std::size_t bi = 0; bi < sys.block_count(); ++bi) {
        const auto& block = sys.blocks()[bi];
        int target = sys.block_of(g[block[0]]);
        for (int p : block) {
            if (sys.block_of(g[p]) != target) {
                throw InvalidBlockSystem("partition is not invariant");
            }
        }
        img[bi] = target;
    }
    return Perm(std::move(img));
}

BlocksAction blocks_action(const PermGroup& g, const BlockSystem& sys) {
    if (g.degree() != sys.degree()) {
        throw InvalidBlockSystem("system degree does not match group degree");
    }
    std::vector<Perm> image_gens;
    image_gens.reserve(g.generators().size());
    for (const Perm& gen : g.generators()) {
        image_gens.push_back(induced_block_perm(gen, sys));
    }
    PermGroup image = PermGroup::from_generators(
        static_cast<int>(sys.block_count()), std::move(image_gens));

    std::vector<Perm> kernel_elems;
    for (const Perm& e : g.elements()) {
        if (induced_block_perm(e, sys).is_identity()) kernel_elems.push_back(e);
    }
    PermGroup kernel = PermGroup::from_elements(g.degree(), std::move(kernel_elems));
    return BlocksAction{std::move(image), std::move(kernel)};
}

BlockSystem pullback_block_system(const BlockSystem& sys,
                                  const BlockSystem& coarse) {
    if (coarse.degree() != static_cast<int>(sys.block_count())) {
        throw InvalidBlockSystem(
            "coarse system degree must equal the block count of the fine one");
    }
    std::vector<std::vector<int>> cells(coarse.block_count());
    for (int p = 0; p < sys.degree(); ++p) {
        cells[coarse.block_of(sys.block_of(p))].push_back(p);
    }
    return BlockSystem(sys.degree(), std::move(cells));
}

}  // namespace dg
