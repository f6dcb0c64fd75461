#include "dg/search.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>

#include "dg/derangement.hpp"
#include "dg/error.hpp"

namespace dg {
namespace {

using Vec6 = std::array<int, 6>;

// Alt(4) acting on the six unordered pairs of {0,1,2,3}; pair order fixed.
constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

int pair_index(int x, int y) {
    if (x > y) std::swap(x, y);
    for (int i = 0; i < 6; ++i)
        if (kPairs[i][0] == x && kPairs[i][1] == y) return i;
    return -1;
}

Vec6 pair_action(const std::array<int, 4>& g4) {
    Vec6 out{};
    for (int i = 0; i < 6; ++i)
        out[static_cast<std::size_t>(i)] =
            pair_index(g4[static_cast<std::size_t>(kPairs[i][0])],
                       g4[static_cast<std::size_t>(kPairs[i][1])]);
    return out;
}

Vec6 invert6(const Vec6& s) {
    Vec6 out{};
    for (int i = 0; i < 6; ++i) out[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])] = i;
    return out;
}

int mod_inverse(int x, int p) {
    // p is 3 or 5; Fermat
    int acc = 1;
    for (int e = 0; e < p - 2; ++e) acc = acc * x % p;
    return acc;
}

// A block scaling combined with a block permutation: the image of a lift of
// the block permutation s with multiplier array e in the quotient by the
// translation module.
using Monomial = std::pair<Vec6, Vec6>;  // (mult, perm)

Monomial mono_mul(const Monomial& q, const Monomial& r, int p) {
    const auto& [e, s] = q;
    const auto& [e2, s2] = r;
    Vec6 ns{}, ne{};
    for (int b = 0; b < 6; ++b)
        ns[static_cast<std::size_t>(b)] =
            s2[static_cast<std::size_t>(s[static_cast<std::size_t>(b)])];
    for (int b = 0; b < 6; ++b)
        ne[static_cast<std::size_t>(ns[static_cast<std::size_t>(b)])] =
            e2[static_cast<std::size_t>(ns[static_cast<std::size_t>(b)])] *
            e[static_cast<std::size_t>(s[static_cast<std::size_t>(b)])] % p;
    return {ne, ns};
}

bool small_monomial_closure(const std::vector<Monomial>& gens, int p,
                            std::size_t cap) {
    Monomial ident{{1, 1, 1, 1, 1, 1}, {0, 1, 2, 3, 4, 5}};
    std::set<Monomial> elems{ident};
    std::vector<Monomial> frontier{ident};
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const Monomial& e : frontier)
            for (const Monomial& g : gens) {
                Monomial h = mono_mul(e, g, p);
                if (elems.insert(h).second) {
                    if (elems.size() > cap) return false;
                    next.push_back(h);
                }
            }
        frontier = std::move(next);
    }
    return true;
}

// v twisted by the lift (a, s): out[s[b]] = v[b] * a[s[b]].
Vec6 twist(const Vec6& v, const Vec6& a, const Vec6& s, int p) {
    Vec6 out{};
    for (int b = 0; b < 6; ++b)
        out[static_cast<std::size_t>(s[static_cast<std::size_t>(b)])] =
            v[static_cast<std::size_t>(b)] *
            a[static_cast<std::size_t>(s[static_cast<std::size_t>(b)])] % p;
    return out;
}

std::vector<Vec6> echelon(const std::vector<Vec6>& rows, int p) {
    std::vector<Vec6> basis;
    for (Vec6 r : rows) {
        for (const Vec6& b : basis) {
            int piv = 0;
            while (!b[static_cast<std::size_t>(piv)]) ++piv;
            if (r[static_cast<std::size_t>(piv)]) {
                int c = r[static_cast<std::size_t>(piv)] *
                        mod_inverse(b[static_cast<std::size_t>(piv)], p) % p;
                for (int i = 0; i < 6; ++i)
                    r[static_cast<std::size_t>(i)] =
                        ((r[static_cast<std::size_t>(i)] -
                          c * b[static_cast<std::size_t>(i)]) % p + p) % p;
            }
        }
        bool zero = true;
        for (int x : r)
            if (x) zero = false;
        if (zero) continue;
        int piv = 0;
        while (!r[static_cast<std::size_t>(piv)]) ++piv;
        int iv = mod_inverse(r[static_cast<std::size_t>(piv)], p);
        for (int i = 0; i < 6; ++i)
            r[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)] * iv % p;
        basis.push_back(r);
    }
    return basis;
}

// Closure of a seed vector under both twists, capped at `maxdim` dimensions;
// empty result means the cap was exceeded.
std::vector<Vec6> module_closure(const Vec6& seed, const Vec6& a1,
                                 const Vec6& a2, const Vec6& g1,
                                 const Vec6& g2, int p, std::size_t maxdim) {
    std::vector<Vec6> cur = echelon({seed}, p);
    while (true) {
        std::vector<Vec6> next = cur;
        for (const Vec6& b : cur) {
            next.push_back(twist(b, a1, g1, p));
            next.push_back(twist(b, a2, g2, p));
        }
        std::vector<Vec6> nb = echelon(next, p);
        if (nb.size() == cur.size()) return cur;
        if (nb.size() > maxdim) return {};
        cur = std::move(nb);
    }
}

std::vector<Vec6> vectors_of(const std::vector<Vec6>& basis, int p) {
    std::vector<Vec6> vs{Vec6{}};
    for (const Vec6& b : basis) {
        std::vector<Vec6> next;
        for (const Vec6& v : vs)
            for (int c = 0; c < p; ++c) {
                Vec6 w{};
                for (int i = 0; i < 6; ++i)
                    w[static_cast<std::size_t>(i)] =
                        (v[static_cast<std::size_t>(i)] +
                         c * b[static_cast<std::size_t>(i)]) % p;
                next.push_back(w);
            }
        vs = std::move(next);
    }
    return vs;
}

bool every_vector_has_zero(const std::vector<Vec6>& basis, int p) {
    for (const Vec6& v : vectors_of(basis, p)) {
        bool zero = false;
        for (int x : v)
            if (!x) zero = true;
        if (!zero) return false;
    }
    return true;
}

// First sparse seed (0, 1, u, u, u, u) whose closure stays within `maxdim`
// dimensions and consists of vectors that all have a zero entry.
std::vector<Vec6> good_module(const Vec6& a1, const Vec6& a2, const Vec6& g1,
                              const Vec6& g2, int p, std::size_t maxdim) {
    std::array<int, 4> rest{};
    auto advance = [&]() {
        for (int i = 3; i >= 0; --i) {
            if (++rest[static_cast<std::size_t>(i)] < p - 1) return true;
            rest[static_cast<std::size_t>(i)] = 0;
        }
        return false;
    };
    do {
        Vec6 seed{0, 1, rest[0] + 1, rest[1] + 1, rest[2] + 1, rest[3] + 1};
        std::vector<Vec6> basis =
            module_closure(seed, a1, a2, g1, g2, p, maxdim);
        if (basis.empty()) continue;
        if (every_vector_has_zero(basis, p)) return basis;
    } while (advance());
    return {};
}

Perm top_perm(const Vec6& s, int p) {
    std::vector<int> img(static_cast<std::size_t>(6 * p));
    for (int i = 0; i < 6 * p; ++i)
        img[static_cast<std::size_t>(i)] =
            s[static_cast<std::size_t>(i / p)] * p + i % p;
    return Perm(std::move(img));
}

Perm rot_perm(const Vec6& v, int p) {
    std::vector<int> img(static_cast<std::size_t>(6 * p));
    for (int i = 0; i < 6 * p; ++i)
        img[static_cast<std::size_t>(i)] =
            (i / p) * p + (i % p + v[static_cast<std::size_t>(i / p)]) % p;
    return Perm(std::move(img));
}

Perm aff_perm(const Vec6& a, const Vec6& v, int p) {
    std::vector<int> img(static_cast<std::size_t>(6 * p));
    for (int i = 0; i < 6 * p; ++i)
        img[static_cast<std::size_t>(i)] =
            (i / p) * p + ((i % p) * a[static_cast<std::size_t>(i / p)] +
                           v[static_cast<std::size_t>(i / p)]) % p;
    return Perm(std::move(img));
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

std::size_t expected_exceptional_classes(int p) {
    if (p == 3) return 1;
    if (p == 5) return 2;
    throw PreconditionViolation("search supports p = 3 and p = 5 only");
}

SearchOutcome search_exceptional(int p, std::uint64_t budget,
                                 std::uint64_t seed, std::size_t stop_after) {
    expected_exceptional_classes(p);  // validates p
    const Vec6 g1 = pair_action({1, 2, 0, 3});  // order 3, two block 3-cycles
    const Vec6 g2 = pair_action({1, 0, 3, 2});  // order 2, fixes two blocks
    const Vec6 g1i = invert6(g1), g2i = invert6(g2);
    const std::size_t maxdim = p == 5 ? 2 : 3;
    const std::size_t closure_cap = 1300;
    const std::size_t monomial_cap = 48;

    // Pools of multiplier arrays compatible with each generator: the products
    // along every g1-orbit (resp. g2-orbit) must agree, so that the cubed
    // (resp. squared) lift is a constant scalar.
    std::vector<Vec6> pool1, pool2;
    {
        Vec6 a{1, 1, 1, 1, 1, 1};
        auto advance = [&]() {
            for (int i = 5; i >= 0; --i) {
                if (++a[static_cast<std::size_t>(i)] < p) return true;
                a[static_cast<std::size_t>(i)] = 1;
            }
            return false;
        };
        do {
            std::set<int> prod1, prod2;
            for (int i = 0; i < 6; ++i) {
                int j = g1i[static_cast<std::size_t>(i)];
                int k = g1i[static_cast<std::size_t>(j)];
                prod1.insert(a[static_cast<std::size_t>(i)] *
                             a[static_cast<std::size_t>(j)] %
                             p * a[static_cast<std::size_t>(k)] % p);
                prod2.insert(a[static_cast<std::size_t>(i)] *
                             a[static_cast<std::size_t>(
                                 g2i[static_cast<std::size_t>(i)])] % p);
            }
            if (prod1.size() == 1) pool1.push_back(a);
            if (prod2.size() == 1) pool2.push_back(a);
        } while (advance());
    }

    std::mt19937_64 rng(seed);
    SearchOutcome out;
    std::set<GroupFingerprint> seen;
    std::set<std::string> names;

    for (std::uint64_t it = 0; it < budget; ++it) {
        out.restarts_used = it + 1;
        const Vec6& a1 = pool1[draw(rng, pool1.size())];
        const Vec6& a2 = pool2[draw(rng, pool2.size())];
        int scal = 0;
        if (p > 3 && draw(rng, 2) == 1)
            scal = 2 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(p - 2)));

        std::vector<Monomial> mono{{a1, g1}, {a2, g2}};
        if (scal)
            mono.push_back({Vec6{scal, scal, scal, scal, scal, scal},
                            Vec6{0, 1, 2, 3, 4, 5}});
        if (!small_monomial_closure(mono, p, monomial_cap)) continue;

        std::vector<Vec6> basis = good_module(a1, a2, g1, g2, p, maxdim);
        if (basis.empty()) continue;

        auto random_in_module = [&]() {
            Vec6 v{};
            for (const Vec6& b : basis) {
                int c = static_cast<int>(draw(rng, static_cast<std::uint64_t>(p)));
                for (int i = 0; i < 6; ++i)
                    v[static_cast<std::size_t>(i)] =
                        (v[static_cast<std::size_t>(i)] +
                         c * b[static_cast<std::size_t>(i)]) % p;
            }
            return v;
        };
        auto random_vector = [&]() {
            Vec6 v{};
            for (int i = 0; i < 6; ++i)
                v[static_cast<std::size_t>(i)] =
                    static_cast<int>(draw(rng, static_cast<std::uint64_t>(p)));
            return v;
        };
        Vec6 x1 = draw(rng, 4) < 3 ? random_in_module() : random_vector();
        Vec6 x2 = draw(rng, 4) < 3 ? random_in_module() : random_vector();

        std::vector<Perm> gens;
        for (const Vec6& b : basis) gens.push_back(rot_perm(b, p));
        gens.push_back(compose(top_perm(g1, p), aff_perm(a1, x1, p)));
        gens.push_back(compose(top_perm(g2, p), aff_perm(a2, x2, p)));
        if (scal)
            gens.push_back(aff_perm(Vec6{scal, scal, scal, scal, scal, scal},
                                    Vec6{}, p));

        PermGroup g = generate_group(6 * p, gens, closure_cap);
        if (!is_transitive(g)) continue;
        try {
            g.order();
        } catch (const CapExceeded&) {
            continue;
        }
        DerangementGraph graph(g);
        if (has_kclique(graph, 4)) continue;

        GroupFingerprint fp = fingerprint_group(g);
        if (!seen.insert(fp).second) continue;

        std::string base = "p" + std::to_string(p) + "_deg" +
                           std::to_string(6 * p) + "_order" +
                           std::to_string(fp.order) + "_d" +
                           std::to_string(fp.derangement_count);
        std::string name = base;
        for (char suffix = 'b'; !names.insert(name).second; ++suffix)
            name = base + "_" + suffix;

        GroupRecord rec;
        rec.name = name;
        rec.degree = 6 * p;
        rec.generators = gens;
        rec.tags = {{"transitive", "true"},
                    {"exceptional", "true"},
                    {"order", std::to_string(fp.order)},
                    {"derangements", std::to_string(fp.derangement_count)},
                    {"omega", std::to_string(fp.omega)},
                    {"seed", std::to_string(seed)},
                    {"restart", std::to_string(it)}};
        out.records.push_back(std::move(rec));
        out.fingerprints.push_back(std::move(fp));
        if (stop_after && out.records.size() >= stop_after) break;
    }
    return out;
}

}  // namespace dg
