#include "dg/covering.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "dg/action.hpp"
#include "dg/blocks.hpp"
#include "dg/derangement.hpp"
#include "dg/error.hpp"

namespace dg {

namespace {

bool is_normal_in(const PermGroup& h, const PermGroup& a) {
    for (const Perm& x : h.elements())
        for (const Perm& g : a.generators())
            if (!h.contains(conjugate(x, g))) return false;
    return true;
}

}  // namespace

CoveringInstance::CoveringInstance(PermGroup a, PermGroup h, PermGroup u)
    : ambient(std::move(a)), normal(std::move(h)), subgroup(std::move(u)) {
    if (!is_subgroup_of(normal, ambient))
        throw NotASubgroup("H is not a subgroup of A");
    if (!is_subgroup_of(subgroup, normal))
        throw NotASubgroup("U is not a subgroup of H");
    if (!is_normal_in(normal, ambient))
        throw NotNormalized("H is not normal in A");
}

std::size_t CoveringInstance::index() const {
    return ambient.order() / normal.order();
}

PermGroup index3_kernel(const PermGroup& g) {
    for (const BlockSystem& sys : minimal_block_systems(g)) {
        if (sys.block_count() == 3) return blocks_action(g, sys).kernel;
        BlocksAction act = blocks_action(g, sys);
        for (const BlockSystem& coarse : minimal_block_systems(act.image)) {
            if (coarse.block_count() != 3) continue;
            BlockSystem pulled = pullback_block_system(sys, coarse);
            return blocks_action(g, pulled).kernel;
        }
    }
    throw NotIndexThree("no invariant partition into 3 cells found");
}

bool is_covering_subgroup(const CoveringInstance& inst) {
    // union of A-conjugates of U
    std::set<Perm> covered;
    for (const Perm& a : inst.ambient.elements())
        for (const Perm& u : inst.subgroup.elements())
            covered.insert(conjugate(u, a));
    if (covered.size() != inst.normal.order()) return false;
    for (const Perm& h : inst.normal.elements())
        if (!covered.count(h)) return false;
    return true;
}

CoveringReport verify_neumann_praeger_n3(const CoveringInstance& inst) {
    if (inst.index() != 3)
        throw NotIndexThree("the normal subgroup must have index 3");
    if (!is_covering_subgroup(inst))
        throw NotCovering("U is not an A-covering subgroup of H");
    CoveringReport rep;
    rep.index_ambient_normal = inst.index();
    rep.index_normal_subgroup = inst.normal.order() / inst.subgroup.order();
    PermGroup action = coset_action(inst.ambient, inst.subgroup);
    rep.coset_degree = static_cast<std::size_t>(action.degree());
    rep.omega = clique_number(DerangementGraph(action)).omega;
    rep.omega_bound_holds = rep.omega <= 3;
    rep.degree_bound_holds = rep.coset_degree <= 30;
    rep.subgroup_bound_holds = rep.index_normal_subgroup <= 10;
    rep.subgroup_bound_attained = rep.index_normal_subgroup == 10;
    return rep;
}

bool saxl_check(const PermGroup& t, const PermGroup& m,
                const PermGroup& aut_action) {
    if (!is_subgroup_of(m, t)) throw NotASubgroup("M is not a subgroup of T");
    std::set<Perm> covered;
    for (const Perm& a : aut_action.elements())
        for (const Perm& x : m.elements())
            covered.insert(conjugate(x, a));
    for (const Perm& x : t.elements())
        if (!covered.count(x)) return false;
    return true;
}

bool pigeonhole_fixity_check(const PermGroup& t, const PermGroup& aut_action,
                             int tuple_len, std::uint64_t samples,
                             std::uint64_t seed) {
    if (tuple_len < 2)
        throw PreconditionViolation("tuple length must be at least 2");
    std::vector<std::vector<Perm>> classes = conjugation_orbits(aut_action, t);
    // label each element (by its index in t.elements()) with its class
    std::vector<int> label(t.order(), -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (const Perm& p : classes[c])
            label[static_cast<std::size_t>(t.element_index(p))] =
                static_cast<int>(c);
    std::size_t n = t.order();
    auto tuple_collides = [&](const std::vector<int>& tup) {
        std::vector<char> seen(classes.size(), 0);
        for (int idx : tup) {
            int c = label[static_cast<std::size_t>(idx)];
            if (seen[static_cast<std::size_t>(c)]) return true;
            seen[static_cast<std::size_t>(c)] = 1;
        }
        return false;
    };
    // exhaustive when feasible
    double total = 1;
    for (int i = 0; i < tuple_len; ++i) total *= static_cast<double>(n);
    if (total <= 1e6) {
        std::vector<int> tup(static_cast<std::size_t>(tuple_len), 0);
        while (true) {
            if (!tuple_collides(tup)) return false;
            int pos = tuple_len - 1;
            while (pos >= 0 && tup[static_cast<std::size_t>(pos)] ==
                                   static_cast<int>(n) - 1) {
                tup[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++tup[static_cast<std::size_t>(pos)];
        }
        return true;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<int> tup(static_cast<std::size_t>(tuple_len));
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (auto& v : tup) v = static_cast<int>(pick(rng));
        if (!tuple_collides(tup)) return false;
    }
    return true;
}

std::vector<PermGroup> two_generated_subgroups(const PermGroup& g) {
    const auto& elems = g.elements();
    std::set<std::vector<Perm>> seen;  // element lists, canonical order
    std::vector<PermGroup> out;
    auto add = [&](std::vector<Perm> gens) {
        PermGroup sub = generate_group(g.degree(), gens, g.order());
        std::vector<Perm> key = sub.elements();
        if (seen.insert(key).second) out.push_back(std::move(sub));
    };
    add({Perm::identity(g.degree())});
    for (std::size_t i = 0; i < elems.size(); ++i) {
        add({elems[i]});
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            add({elems[i], elems[j]});
    }
    std::sort(out.begin(), out.end(),
              [](const PermGroup& a, const PermGroup& b) {
                  if (a.order() != b.order()) return a.order() < b.order();
                  return a.elements() < b.elements();
              });
    return out;
}

}  // namespace dg
