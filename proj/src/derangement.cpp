#include "dg/derangement.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "dg/error.hpp"

namespace dg {
namespace {

// Dense undirected graph on <= a few thousand vertices, one bitset row per
// vertex. Used for the exact clique search.
struct BitGraph {
    int n = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> rows;

    explicit BitGraph(int n_)
        : n(n_), words((static_cast<std::size_t>(n_) + 63) / 64),
          rows(static_cast<std::size_t>(n_) * words, 0) {}

    std::uint64_t* row(int v) { return rows.data() + static_cast<std::size_t>(v) * words; }
    const std::uint64_t* row(int v) const {
        return rows.data() + static_cast<std::size_t>(v) * words;
    }
    void add_edge(int u, int v) {
        row(u)[static_cast<std::size_t>(v) / 64] |= 1ULL << (v % 64);
        row(v)[static_cast<std::size_t>(u) / 64] |= 1ULL << (u % 64);
    }
    bool adjacent(int u, int v) const {
        return (row(u)[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1ULL;
    }
};

struct BitSetOps {
    static std::size_t count(const std::uint64_t* a, std::size_t words) {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words; ++w) c += std::popcount(a[w]);
        return c;
    }
    static bool empty(const std::uint64_t* a, std::size_t words) {
        for (std::size_t w = 0; w < words; ++w)
            if (a[w]) return false;
        return true;
    }
};

// Branch and bound maximum clique (Tomita-style): candidates are greedily
// coloured, vertices are expanded in decreasing colour order, and a branch
// is cut when current clique size + colour bound cannot beat the incumbent.
// If `target` is set the search stops as soon as a clique of that size is
// found (decision mode).
class MaxCliqueSearch {
  public:
    MaxCliqueSearch(const BitGraph& g, std::optional<std::size_t> target)
        : g_(g), target_(target) {}

    void run() {
        std::vector<int> cand(static_cast<std::size_t>(g_.n));
        for (int v = 0; v < g_.n; ++v) cand[static_cast<std::size_t>(v)] = v;
        // Order by non-increasing degree: helps the first colouring.
        std::vector<std::size_t> deg(static_cast<std::size_t>(g_.n));
        for (int v = 0; v < g_.n; ++v)
            deg[static_cast<std::size_t>(v)] = BitSetOps::count(g_.row(v), g_.words);
        std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
            return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
        });
        expand(cand);
    }

    const std::vector<int>& best() const { return best_; }
    bool target_met() const {
        return target_ && best_.size() >= *target_;
    }

  private:
    void expand(const std::vector<int>& cand) {
        if (done_) return;
        if (cand.empty()) {
            if (cur_.size() > best_.size()) {
                best_ = cur_;
                if (target_ && best_.size() >= *target_) done_ = true;
            }
            return;
        }
        // Greedy colouring of the candidate set; colours[i] is the colour
        // (1-based) of order[i], non-decreasing.
        std::vector<int> order;
        std::vector<int> colour;
        greedy_colour(cand, order, colour);
        std::size_t goal = target_ ? *target_ : best_.size() + 1;
        for (std::size_t i = order.size(); i-- > 0;) {
            if (done_) return;
            if (cur_.size() + static_cast<std::size_t>(colour[i]) < goal) return;
            int v = order[i];
            std::vector<int> next;
            next.reserve(i);
            for (std::size_t j = 0; j < i; ++j)
                if (g_.adjacent(v, order[j])) next.push_back(order[j]);
            cur_.push_back(v);
            expand(next);
            cur_.pop_back();
        }
    }

    void greedy_colour(const std::vector<int>& cand, std::vector<int>& order,
                       std::vector<int>& colour) {
        order.reserve(cand.size());
        colour.reserve(cand.size());
        std::vector<std::vector<int>> classes;
        for (int v : cand) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (int u : classes[c])
                    if (g_.adjacent(u, v)) { clash = true; break; }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                order.push_back(v);
                colour.push_back(static_cast<int>(c) + 1);
            }
    }

    const BitGraph& g_;
    std::optional<std::size_t> target_;
    std::vector<int> cur_;
    std::vector<int> best_;
    bool done_ = false;
};

std::vector<int> solve_max_clique(const BitGraph& g,
                                  std::optional<std::size_t> target) {
    MaxCliqueSearch search(g, target);
    search.run();
    return search.best();
}

}  // namespace

bool is_derangement(const Perm& p) {
    for (int i = 0; i < p.degree(); ++i)
        if (p[i] == i) return false;
    return p.degree() > 0;
}

bool derangement_adjacent(const Perm& x, const Perm& y) {
    if (x.degree() != y.degree())
        throw PreconditionViolation("derangement_adjacent: degree mismatch");
    for (int i = 0; i < x.degree(); ++i)
        if (x[i] == y[i]) return false;
    return x.degree() > 0;
}

std::vector<Perm> derangements(const PermGroup& g) {
    std::vector<Perm> out;
    for (const Perm& p : g.elements())
        if (is_derangement(p)) out.push_back(p);
    return out;
}

DerangementGraph::DerangementGraph(PermGroup g, std::size_t matrix_cap)
    : group_(std::move(g)) {
    const auto& elems = group_.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (is_derangement(elems[i])) der_.push_back(static_cast<int>(i));
    if (der_.size() <= matrix_cap && !der_.empty()) {
        words_ = (der_.size() + 63) / 64;
        bits_.assign(der_.size() * words_, 0);
        for (std::size_t i = 0; i < der_.size(); ++i) {
            const Perm& a = elems[static_cast<std::size_t>(der_[i])];
            for (std::size_t j = i + 1; j < der_.size(); ++j) {
                const Perm& b = elems[static_cast<std::size_t>(der_[j])];
                if (derangement_adjacent(a, b)) {
                    bits_[i * words_ + j / 64] |= 1ULL << (j % 64);
                    bits_[j * words_ + i / 64] |= 1ULL << (i % 64);
                }
            }
        }
    }
}

bool DerangementGraph::der_adjacent(int di, int dj) const {
    if (di == dj) return false;
    if (words_ > 0) {
        return (bits_[static_cast<std::size_t>(di) * words_ +
                      static_cast<std::size_t>(dj) / 64] >>
                (dj % 64)) &
               1ULL;
    }
    return derangement_adjacent(derangement(di), derangement(dj));
}

const Perm& DerangementGraph::derangement(int di) const {
    return group_.elements()[static_cast<std::size_t>(der_[static_cast<std::size_t>(di)])];
}

DerangementGraph derangement_graph(const PermGroup& g) {
    return DerangementGraph(g);
}

bool is_clique(const CliqueWitness& w) {
    if (w.empty()) return false;
    bool has_id = false;
    for (const Perm& p : w)
        if (p == Perm::identity(p.degree())) has_id = true;
    if (!has_id) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] == w[j]) return false;
            if (!derangement_adjacent(w[i], w[j])) return false;
        }
    return true;
}

namespace {

BitGraph derangement_bitgraph(const DerangementGraph& graph) {
    if (!graph.has_matrix() && graph.derangement_count() > 0)
        throw CapExceeded("derangement set too large for exact clique search");
    BitGraph g(static_cast<int>(graph.derangement_count()));
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (graph.der_adjacent(i, j)) g.add_edge(i, j);
    return g;
}

CliqueWitness witness_from_positions(const DerangementGraph& graph,
                                     const std::vector<int>& positions) {
    CliqueWitness w;
    w.push_back(Perm::identity(graph.group().degree()));
    for (int di : positions) w.push_back(graph.derangement(di));
    std::sort(w.begin(), w.end());
    return w;
}

// Matrix-free k-clique decision for derangement sets beyond the bit-matrix
// cap: depth-first search in index order with a budget of pairwise adjacency
// tests. Exact when the search space is exhausted within the budget; throws
// CapExceeded when the budget runs out undecided.
std::optional<CliqueWitness> bounded_kclique(const DerangementGraph& graph,
                                             std::size_t k) {
    const std::size_t want = k - 1;  // derangements besides the identity
    const int n = static_cast<int>(graph.derangement_count());
    std::uint64_t budget = 20000000;
    std::vector<int> stack;
    bool capped = false;
    auto extend = [&](auto&& self, int start) -> bool {
        if (stack.size() == want) return true;
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : stack) {
                if (budget == 0) {
                    capped = true;
                    return false;
                }
                --budget;
                if (!graph.der_adjacent(u, v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            stack.push_back(v);
            if (self(self, v + 1)) return true;
            stack.pop_back();
            if (capped) return false;
        }
        return false;
    };
    if (extend(extend, 0)) return witness_from_positions(graph, stack);
    if (capped)
        throw CapExceeded("derangement set too large for exact clique search");
    return std::nullopt;
}

}  // namespace

std::optional<CliqueWitness> has_kclique(const DerangementGraph& graph,
                                         std::size_t k) {
    if (k == 0) return CliqueWitness{};
    if (k == 1) return CliqueWitness{Perm::identity(graph.group().degree())};
    // A k-clique exists iff one containing the identity exists, i.e. iff the
    // derangement-induced subgraph has a (k-1)-clique.
    if (graph.derangement_count() + 1 < k) return std::nullopt;
    if (!graph.has_matrix()) return bounded_kclique(graph, k);
    BitGraph g = derangement_bitgraph(graph);
    std::vector<int> best = solve_max_clique(g, k - 1);
    if (best.size() < k - 1) return std::nullopt;
    CliqueWitness w = witness_from_positions(graph, best);
    // The decision search may overshoot; any k members (keeping the
    // identity, which sorts first) still form a k-clique.
    w.resize(k);
    return w;
}

CliqueNumberResult clique_number(const DerangementGraph& graph) {
    CliqueNumberResult res;
    if (graph.derangement_count() == 0) {
        res.omega = graph.group().order() > 0 ? 1 : 0;
        if (res.omega == 1)
            res.witness = {Perm::identity(graph.group().degree())};
        return res;
    }
    BitGraph g = derangement_bitgraph(graph);
    std::vector<int> best = solve_max_clique(g, std::nullopt);
    res.omega = best.size() + 1;
    res.witness = witness_from_positions(graph, best);
    return res;
}

std::vector<Perm> max_coclique(const DerangementGraph& graph,
                               std::size_t order_cap) {
    const PermGroup& grp = graph.group();
    if (grp.order() > order_cap)
        throw CapExceeded("group too large for exact coclique search");
    // A maximum coclique can be translated to contain the identity; its other
    // members then agree with the identity somewhere, i.e. are non-identity
    // non-derangements. Search a maximum clique of the complement graph
    // induced on those elements.
    const auto& elems = grp.elements();
    std::vector<int> fixers;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const Perm& p = elems[i];
        if (p == Perm::identity(grp.degree())) continue;
        if (!is_derangement(p)) fixers.push_back(static_cast<int>(i));
    }
    BitGraph g(static_cast<int>(fixers.size()));
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (!derangement_adjacent(elems[static_cast<std::size_t>(fixers[static_cast<std::size_t>(i)])],
                                      elems[static_cast<std::size_t>(fixers[static_cast<std::size_t>(j)])]))
                g.add_edge(i, j);
    std::vector<int> best = solve_max_clique(g, std::nullopt);
    std::vector<Perm> out;
    out.push_back(Perm::identity(grp.degree()));
    for (int i : best)
        out.push_back(elems[static_cast<std::size_t>(fixers[static_cast<std::size_t>(i)])]);
    std::sort(out.begin(), out.end());
    return out;
}

DensityReport intersection_density(const PermGroup& g, std::size_t order_cap) {
    if (!is_transitive(g))
        throw NotTransitive("intersection density requires a transitive group");
    DerangementGraph graph(g);
    DensityReport rep;
    rep.alpha = max_coclique(graph, order_cap).size();
    rep.stabilizer_order = stabilizer_point(g, 0).order();
    rep.rho = Rational(static_cast<std::int64_t>(rep.alpha),
                       static_cast<std::int64_t>(rep.stabilizer_order));
    return rep;
}

CliqueCocliqueReport clique_coclique_check(const PermGroup& g,
                                           std::size_t order_cap) {
    if (!is_transitive(g))
        throw NotTransitive("clique-coclique check requires a transitive group");
    DerangementGraph graph(g);
    CliqueCocliqueReport rep;
    rep.degree = g.degree();
    rep.order = g.order();
    rep.alpha = max_coclique(graph, order_cap).size();
    rep.omega = clique_number(graph).omega;
    rep.stabilizer_order = stabilizer_point(g, 0).order();
    rep.rho = Rational(static_cast<std::int64_t>(rep.alpha),
                       static_cast<std::int64_t>(rep.stabilizer_order));
    rep.rho_bound = Rational(rep.degree, static_cast<std::int64_t>(rep.omega));
    rep.product_bound_holds = rep.alpha * rep.omega <= rep.order;
    rep.product_bound_tight = rep.alpha * rep.omega == rep.order;
    rep.density_bound_holds = !(rep.rho_bound < rep.rho);
    rep.density_bound_tight = rep.rho == rep.rho_bound;
    return rep;
}

std::optional<Perm> prime_power_derangement(const PermGroup& g, int p) {
    if (p < 2) throw PreconditionViolation("prime_power_derangement: p must be >= 2");
    for (const Perm& x : g.elements()) {
        if (!is_derangement(x)) continue;
        std::uint64_t n = perm_order(x);
        while (n % static_cast<std::uint64_t>(p) == 0) n /= static_cast<std::uint64_t>(p);
        if (n == 1) return x;
    }
    return std::nullopt;
}

bool lift_clique_check(const PermGroup& g, const BlockSystem& sys,
                       const std::vector<Perm>& witness) {
    std::vector<Perm> induced;
    induced.reserve(witness.size());
    for (const Perm& w : witness) {
        if (!g.contains(w))
            throw InvalidWitness("clique witness element outside the group");
        induced.push_back(induced_block_perm(w, sys));
    }
    for (std::size_t i = 0; i < induced.size(); ++i)
        for (std::size_t j = i + 1; j < induced.size(); ++j)
            if (!derangement_adjacent(induced[i], induced[j]))
                throw InvalidWitness(
                    "witness is not a clique of the blocks action");
    for (std::size_t i = 0; i < witness.size(); ++i)
        for (std::size_t j = i + 1; j < witness.size(); ++j)
            if (!derangement_adjacent(witness[i], witness[j])) return false;
    return true;
}

}  // namespace dg
