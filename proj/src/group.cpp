#include "dg/group.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <unordered_set>

namespace dg {

struct PermGroup::Impl {
    int degree = 0;
    std::vector<Perm> gens;
    std::size_t cap = kDefaultElementCap;

    std::once_flag once;
    std::atomic<bool> ready{false};
    bool capped = false;
    std::vector<Perm> elems;     // sorted; [0] == identity
    std::vector<int> inv_idx;    // index of inverse per element

    void materialize() {
        std::call_once(once, [this] {
            std::unordered_set<Perm, PermHash> seen;
            std::vector<Perm> frontier;
            const Perm id = Perm::identity(degree);
            seen.insert(id);
            frontier.push_back(id);
            while (!frontier.empty() && !capped) {
                std::vector<Perm> next;
                for (const Perm& e : frontier) {
                    for (const Perm& g : gens) {
                        Perm h = compose(e, g);
                        if (seen.insert(h).second) {
                            if (seen.size() > cap) {
                                capped = true;
                                break;
                            }
                            next.push_back(std::move(h));
                        }
                    }
                    if (capped) break;
                }
                frontier = std::move(next);
            }
            if (!capped) {
                elems.assign(seen.begin(), seen.end());
                std::sort(elems.begin(), elems.end());
                index_inverses();
            }
            ready.store(true, std::memory_order_release);
        });
        if (capped) {
            throw CapExceeded("group closure exceeded element cap of " +
                              std::to_string(cap));
        }
    }

    void index_inverses() {
        inv_idx.resize(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i) {
            Perm inv = inverse(elems[i]);
            auto it = std::lower_bound(elems.begin(), elems.end(), inv);
            inv_idx[i] = static_cast<int>(it - elems.begin());
        }
    }

    void adopt_elements(std::vector<Perm> elements) {
        std::call_once(once, [this, &elements] {
            elems = std::move(elements);
            std::sort(elems.begin(), elems.end());
            elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
            if (elems.empty() || !elems.front().is_identity()) {
                throw PreconditionViolation(
                    "from_elements: element list must contain the identity");
            }
            for (const Perm& e : elems) {
                Perm inv = inverse(e);
                if (!std::binary_search(elems.begin(), elems.end(), inv)) {
                    throw PreconditionViolation(
                        "from_elements: element list not closed under inverses");
                }
            }
            index_inverses();
            ready.store(true, std::memory_order_release);
        });
    }
};

static void validate_gens(int degree, const std::vector<Perm>& gens) {
    if (degree < 0) throw PreconditionViolation("negative degree");
    for (const Perm& g : gens) {
        if (g.degree() != degree) {
            throw InvalidPermutation("generator degree " +
                                     std::to_string(g.degree()) +
                                     " does not match group degree " +
                                     std::to_string(degree));
        }
    }
}

PermGroup PermGroup::from_generators(int degree, std::vector<Perm> gens,
                                     std::size_t cap) {
    validate_gens(degree, gens);
    PermGroup g;
    g.impl_ = std::make_shared<Impl>();
    g.impl_->degree = degree;
    g.impl_->gens = std::move(gens);
    g.impl_->cap = cap;
    return g;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements) {
    std::vector<Perm> gens = elements;
    return from_elements(degree, std::move(elements), std::move(gens));
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements,
                                   std::vector<Perm> gens) {
    validate_gens(degree, gens);
    validate_gens(degree, elements);
    PermGroup g;
    g.impl_ = std::make_shared<Impl>();
    g.impl_->degree = degree;
    g.impl_->gens = std::move(gens);
    g.impl_->cap = std::max(PermGroup::kDefaultElementCap, elements.size());
    g.impl_->adopt_elements(std::move(elements));
    return g;
}

int PermGroup::degree() const { return impl_->degree; }
const std::vector<Perm>& PermGroup::generators() const { return impl_->gens; }
std::size_t PermGroup::element_cap() const { return impl_->cap; }

std::size_t PermGroup::order() const {
    impl_->materialize();
    return impl_->elems.size();
}

const std::vector<Perm>& PermGroup::elements() const {
    impl_->materialize();
    return impl_->elems;
}

bool PermGroup::contains(const Perm& p) const { return element_index(p) >= 0; }

int PermGroup::element_index(const Perm& p) const {
    impl_->materialize();
    if (p.degree() != impl_->degree) return -1;
    auto it = std::lower_bound(impl_->elems.begin(), impl_->elems.end(), p);
    if (it != impl_->elems.end() && *it == p) {
        return static_cast<int>(it - impl_->elems.begin());
    }
    return -1;
}

int PermGroup::inverse_index(int i) const {
    impl_->materialize();
    return impl_->inv_idx[static_cast<std::size_t>(i)];
}

PermGroup generate_group(int degree, std::vector<Perm> gens, std::size_t cap) {
    return PermGroup::from_generators(degree, std::move(gens), cap);
}

std::vector<int> orbit(const PermGroup& g, int point) {
    if (point < 0 || point >= g.degree()) {
        throw PreconditionViolation("orbit: point out of range");
    }
    std::vector<char> seen(g.degree(), 0);
    std::vector<int> stack{point};
    seen[point] = 1;
    std::vector<int> out;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (const Perm& gen : g.generators()) {
            int y = gen[x];
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> orbits(const PermGroup& g) {
    std::vector<char> done(g.degree(), 0);
    std::vector<std::vector<int>> out;
    for (int p = 0; p < g.degree(); ++p) {
        if (done[p]) continue;
        auto orb = orbit(g, p);
        for (int x : orb) done[x] = 1;
        out.push_back(std::move(orb));
    }
    return out;
}

bool is_transitive(const PermGroup& g) {
    if (g.degree() == 0) return true;
    return static_cast<int>(orbit(g, 0).size()) == g.degree();
}

static PermGroup filter_elements(const PermGroup& g, auto keep) {
    std::vector<Perm> sub;
    for (const Perm& e : g.elements()) {
        if (keep(e)) sub.push_back(e);
    }
    return PermGroup::from_elements(g.degree(), std::move(sub));
}

PermGroup stabilizer_point(const PermGroup& g, int point) {
    if (point < 0 || point >= g.degree()) {
        throw PreconditionViolation("stabilizer: point out of range");
    }
    return filter_elements(g, [&](const Perm& e) { return e[point] == point; });
}

PermGroup stabilizer_pointwise(const PermGroup& g, const std::vector<int>& pts) {
    for (int p : pts) {
        if (p < 0 || p >= g.degree()) {
            throw PreconditionViolation("stabilizer: point out of range");
        }
    }
    return filter_elements(g, [&](const Perm& e) {
        for (int p : pts) {
            if (e[p] != p) return false;
        }
        return true;
    });
}

PermGroup stabilizer_setwise(const PermGroup& g, const std::vector<int>& set) {
    std::vector<char> in(g.degree(), 0);
    for (int p : set) {
        if (p < 0 || p >= g.degree()) {
            throw PreconditionViolation("stabilizer: point out of range");
        }
        in[p] = 1;
    }
    return filter_elements(g, [&](const Perm& e) {
        for (int p : set) {
            if (!in[e[p]]) return false;
        }
        return true;
    });
}

bool is_subgroup_of(const PermGroup& sub, const PermGroup& g) {
    if (sub.degree() != g.degree()) return false;
    for (const Perm& e : sub.elements()) {
        if (!g.contains(e)) return false;
    }
    return true;
}

std::vector<std::vector<Perm>> conjugation_orbits(const PermGroup& a,
                                                  const PermGroup& n) {
    if (a.degree() != n.degree()) {
        throw PreconditionViolation("conjugation_orbits: degree mismatch");
    }
    const std::vector<Perm>& elems = n.elements();
    // Precompute conjugation maps (as index permutations of N) per generator.
    std::vector<std::vector<int>> conj_map;
    for (const Perm& g : a.generators()) {
        std::vector<int> m(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i) {
            int j = n.element_index(conjugate(elems[i], g));
            if (j < 0) {
                throw NotNormalized(
                    "conjugate of an element leaves the normal subgroup");
            }
            m[i] = j;
        }
        conj_map.push_back(std::move(m));
    }
    std::vector<char> done(elems.size(), 0);
    std::vector<std::vector<Perm>> out;
    for (std::size_t start = 0; start < elems.size(); ++start) {
        if (done[start]) continue;
        std::vector<int> stack{static_cast<int>(start)};
        std::vector<int> members;
        done[start] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (const auto& m : conj_map) {
                int y = m[x];
                if (!done[y]) {
                    done[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        std::vector<Perm> orb;
        orb.reserve(members.size());
        for (int i : members) orb.push_back(elems[i]);
        out.push_back(std::move(orb));
    }
    return out;
}

std::map<std::vector<int>, std::size_t> cycle_type_census(const PermGroup& g) {
    std::map<std::vector<int>, std::size_t> census;
    for (const Perm& e : g.elements()) ++census[cycle_type(e)];
    return census;
}

}  // namespace dg
