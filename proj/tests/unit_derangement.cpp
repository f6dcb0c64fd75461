#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "dg/action.hpp"
#include "dg/derangement.hpp"
#include "dg/group.hpp"
#include "doctest.h"

using dg::DerangementGraph;
using dg::Perm;
using dg::PermGroup;

namespace {

Perm p(std::vector<int> img) { return Perm(std::move(img)); }

PermGroup alt3() { return dg::generate_group(3, {p({1, 2, 0})}); }
PermGroup sym3() { return dg::generate_group(3, {p({1, 2, 0}), p({1, 0, 2})}); }
PermGroup alt4_deg6() {
    PermGroup a4 = dg::generate_group(4, {p({1, 2, 0, 3}), p({0, 2, 3, 1})});
    return dg::ksubsets_action(a4, 2).group;
}
PermGroup cyclic(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n;
    return dg::generate_group(n, {Perm(std::move(img))});
}
PermGroup sym4() {
    return dg::generate_group(4, {p({1, 0, 2, 3}), p({1, 2, 3, 0})});
}
PermGroup alt5() {
    return dg::generate_group(5, {p({1, 2, 0, 3, 4}), p({1, 2, 3, 4, 0})});
}

// Brute-force oracle: does the derangement graph contain a k-clique?
// Scans every k-subset of the full element list (not rooted at the
// identity), so it is an independent check of the rooted search.
bool brute_force_kclique(const PermGroup& g, std::size_t k) {
    const std::vector<Perm>& els = g.elements();
    const std::size_t n = els.size();
    if (k == 0) return true;
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i)
            for (std::size_t j = i + 1; j < k && ok; ++j)
                if (!dg::derangement_adjacent(els[idx[i]], els[idx[j]]))
                    ok = false;
        if (ok) return true;
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) return false;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

}  // namespace

TEST_CASE("derangement predicate") {
    CHECK(dg::is_derangement(p({1, 2, 0})));
    CHECK(dg::is_derangement(p({1, 0, 3, 2})));
    CHECK_FALSE(dg::is_derangement(p({0, 2, 1})));
    CHECK_FALSE(dg::is_derangement(Perm::identity(3)));
}

TEST_CASE("adjacency means disagreeing everywhere") {
    CHECK(dg::derangement_adjacent(p({1, 2, 0}), p({2, 0, 1})));
    CHECK_FALSE(dg::derangement_adjacent(p({1, 2, 0}), p({1, 0, 2})));
    // x ~ y iff x y^-1 deranged.
    Perm x = p({1, 2, 0});
    Perm y = p({2, 0, 1});
    CHECK(dg::derangement_adjacent(x, y) ==
          dg::is_derangement(dg::compose(x, dg::inverse(y))));
}

TEST_CASE("derangement counts of the worked examples") {
    CHECK(dg::derangements(sym3()).size() == 2);
    CHECK(dg::derangements(alt3()).size() == 2);
    CHECK(dg::derangements(alt4_deg6()).size() == 8);
    CHECK(dg::derangements(cyclic(4)).size() == 3);
    // A point stabilizer fixes a point, so it has no derangements at all.
    CHECK(dg::derangements(dg::generate_group(3, {p({0, 2, 1})})).empty());
}

TEST_CASE("derangement set is closed under inverse and conjugation") {
    for (const PermGroup& g : {sym3(), alt4_deg6(), sym4()}) {
        std::vector<Perm> ders = dg::derangements(g);
        std::set<Perm> dset(ders.begin(), ders.end());
        for (const Perm& d : ders) {
            CHECK(dset.count(dg::inverse(d)) == 1);
            for (const Perm& y : g.elements())
                CHECK(dset.count(dg::conjugate(d, y)) == 1);
        }
    }
}

TEST_CASE("adjacency is right-translation invariant") {
    PermGroup g = alt4_deg6();
    for (const Perm& x : g.elements())
        for (const Perm& y : g.elements())
            for (const Perm& t : g.generators())
                CHECK(dg::derangement_adjacent(x, y) ==
                      dg::derangement_adjacent(dg::compose(x, t),
                                               dg::compose(y, t)));
}

TEST_CASE("graph structure of Alt(3): a triangle") {
    DerangementGraph graph(alt3());
    CHECK(graph.derangement_count() == 2);
    CHECK(graph.has_matrix());
    CHECK(graph.der_adjacent(0, 1));  // the two 3-cycles disagree everywhere
    CHECK(dg::has_kclique(graph, 3).has_value());
    CHECK_FALSE(dg::has_kclique(graph, 4).has_value());
}

TEST_CASE("graph structure of Sym(3): two disjoint triangles") {
    PermGroup g = sym3();
    DerangementGraph graph(g);
    // Rotations {id, c, c2} form one triangle; transpositions the other.
    std::vector<Perm> rot = {Perm::identity(3), p({1, 2, 0}), p({2, 0, 1})};
    std::vector<Perm> swaps = {p({1, 0, 2}), p({0, 2, 1}), p({2, 1, 0})};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            CHECK(dg::derangement_adjacent(rot[i], rot[j]));
            CHECK(dg::derangement_adjacent(swaps[i], swaps[j]));
        }
    for (const Perm& a : rot)
        for (const Perm& b : swaps) CHECK_FALSE(dg::derangement_adjacent(a, b));
    CHECK(dg::clique_number(graph).omega == 3);
}

TEST_CASE("regular cyclic groups give complete graphs") {
    for (int n : {4, 5, 6}) {
        PermGroup g = cyclic(n);
        DerangementGraph graph(g);
        CHECK(graph.derangement_count() == static_cast<std::size_t>(n - 1));
        dg::CliqueNumberResult res = dg::clique_number(graph);
        CHECK(res.omega == static_cast<std::size_t>(n));
        CHECK(dg::is_clique(res.witness));
    }
}

TEST_CASE("clique witnesses are validated cliques through the identity") {
    for (const PermGroup& g : {sym3(), alt4_deg6(), sym4(), alt5()}) {
        DerangementGraph graph(g);
        for (std::size_t k = 1; k <= 4; ++k) {
            std::optional<dg::CliqueWitness> w = dg::has_kclique(graph, k);
            if (w) {
                CHECK(w->size() == k);
                CHECK(dg::is_clique(*w));
                CHECK((*w)[0].is_identity());
                for (const Perm& x : *w) CHECK(g.contains(x));
            }
        }
    }
}

TEST_CASE("rooted k-clique decision agrees with the subset oracle") {
    for (const PermGroup& g :
         {alt3(), sym3(), cyclic(4), cyclic(6), alt4_deg6(), sym4(), alt5()}) {
        DerangementGraph graph(g);
        for (std::size_t k = 1; k <= 4; ++k)
            CHECK(dg::has_kclique(graph, k).has_value() ==
                  brute_force_kclique(g, k));
    }
}

TEST_CASE("is_clique rejects bad witnesses") {
    CHECK(dg::is_clique({Perm::identity(3), p({1, 2, 0}), p({2, 0, 1})}));
    // Missing identity.
    CHECK_FALSE(dg::is_clique({p({1, 2, 0}), p({2, 0, 1})}));
    // Duplicate member.
    CHECK_FALSE(dg::is_clique({Perm::identity(3), p({1, 2, 0}), p({1, 2, 0})}));
    // Non-adjacent pair.
    CHECK_FALSE(dg::is_clique({Perm::identity(3), p({1, 0, 2})}));
}

TEST_CASE("clique numbers of the worked examples") {
    CHECK(dg::clique_number(DerangementGraph(alt3())).omega == 3);
    CHECK(dg::clique_number(DerangementGraph(sym3())).omega == 3);
    CHECK(dg::clique_number(DerangementGraph(alt4_deg6())).omega == 3);
    CHECK(dg::clique_number(DerangementGraph(sym4())).omega == 4);
    CHECK(dg::clique_number(DerangementGraph(alt5())).omega == 5);
}

TEST_CASE("Alt(4) on 2-subsets has no 4-clique but a triangle") {
    DerangementGraph graph(alt4_deg6());
    CHECK(dg::has_kclique(graph, 3).has_value());
    CHECK_FALSE(dg::has_kclique(graph, 4).has_value());
}

TEST_CASE("maximum cocliques") {
    // Alt(4) on 2-subsets: alpha = 4 (a Klein four-subgroup, no derangements
    // between its members).
    std::vector<Perm> cc = dg::max_coclique(DerangementGraph(alt4_deg6()));
    CHECK(cc.size() == 4);
    CHECK(cc[0].is_identity());
    for (std::size_t i = 0; i < cc.size(); ++i)
        for (std::size_t j = i + 1; j < cc.size(); ++j)
            CHECK_FALSE(dg::derangement_adjacent(cc[i], cc[j]));
    // Sym(3): alpha = 2 (each triangle contributes at most one vertex... the
    // two-triangle structure gives exactly a stabilizer).
    CHECK(dg::max_coclique(DerangementGraph(sym3())).size() == 2);
    // Complete graph: only the identity.
    CHECK(dg::max_coclique(DerangementGraph(cyclic(4))).size() == 1);
    // Cap enforcement.
    CHECK_THROWS_AS(dg::max_coclique(DerangementGraph(alt5()), 10),
                    dg::CapExceeded);
}

TEST_CASE("intersection densities of the worked examples") {
    dg::DensityReport rep = dg::intersection_density(alt4_deg6());
    CHECK(rep.alpha == 4);
    CHECK(rep.stabilizer_order == 2);
    CHECK(rep.rho == dg::Rational(2, 1));
    rep = dg::intersection_density(sym3());
    CHECK(rep.alpha == 2);
    CHECK(rep.stabilizer_order == 2);
    CHECK(rep.rho == dg::Rational(1, 1));
    rep = dg::intersection_density(cyclic(4));
    CHECK(rep.alpha == 1);
    CHECK(rep.stabilizer_order == 1);
    CHECK(rep.rho == dg::Rational(1, 1));
}

TEST_CASE("clique-coclique bounds hold and are tight where expected") {
    dg::CliqueCocliqueReport rep = dg::clique_coclique_check(alt4_deg6());
    CHECK(rep.alpha == 4);
    CHECK(rep.omega == 3);
    CHECK(rep.order == 12);
    CHECK(rep.product_bound_holds);
    CHECK(rep.product_bound_tight);
    CHECK(rep.rho == dg::Rational(2, 1));
    CHECK(rep.rho_bound == dg::Rational(2, 1));
    CHECK(rep.density_bound_holds);
    CHECK(rep.density_bound_tight);

    rep = dg::clique_coclique_check(sym3());
    CHECK(rep.product_bound_tight);  // 2 * 3 == 6
    rep = dg::clique_coclique_check(cyclic(4));
    CHECK(rep.product_bound_tight);  // 1 * 4 == 4
    rep = dg::clique_coclique_check(alt5());
    CHECK(rep.alpha * rep.omega <= rep.order);
    CHECK(rep.product_bound_holds);
}

TEST_CASE("prime power derangements") {
    std::optional<Perm> d = dg::prime_power_derangement(cyclic(15), 3);
    REQUIRE(d.has_value());
    CHECK(dg::is_derangement(*d));
    CHECK(dg::perm_order(*d) == 3);
    CHECK_FALSE(dg::prime_power_derangement(alt4_deg6(), 2).has_value());
    std::optional<Perm> d3 = dg::prime_power_derangement(alt4_deg6(), 3);
    REQUIRE(d3.has_value());
    CHECK(dg::perm_order(*d3) == 3);
    // C4 has a derangement of order 4 = 2^2 but none of order 3.
    CHECK(dg::prime_power_derangement(cyclic(4), 2).has_value());
    CHECK_FALSE(dg::prime_power_derangement(cyclic(4), 3).has_value());
}

TEST_CASE("block clique lifting") {
    PermGroup g = alt4_deg6();
    dg::BlockSystem sys = dg::minimal_block_systems(g)[0];
    // A triangle whose members also pairwise disagree on the blocks.
    std::optional<dg::CliqueWitness> tri =
        dg::has_kclique(DerangementGraph(g), 3);
    REQUIRE(tri.has_value());
    // The triangle is a coset of the kernel complement: its elements induce
    // the three distinct rotations of the blocks.
    CHECK(dg::lift_clique_check(g, sys, *tri));
    // A witness that repeats a block permutation is rejected.
    dg::BlocksAction act = dg::blocks_action(g, sys);
    std::vector<Perm> bad = {Perm::identity(6), act.kernel.elements()[1]};
    CHECK_THROWS_AS(dg::lift_clique_check(g, sys, bad), dg::InvalidWitness);
}

TEST_CASE("matrix-free fallback answers k-clique decisions beyond the cap") {
    // Force a tiny matrix cap so the fallback path runs on a small graph.
    PermGroup g = sym4();
    DerangementGraph graph(g, 2);
    CHECK_FALSE(graph.has_matrix());
    CHECK(dg::has_kclique(graph, 4).has_value());
    CHECK(dg::has_kclique(graph, 3).has_value());
    std::optional<dg::CliqueWitness> w = dg::has_kclique(graph, 4);
    CHECK(dg::is_clique(*w));
    // Degree 4 action: no 5 permutations can pairwise disagree at point 0.
    CHECK_FALSE(dg::has_kclique(graph, 5).has_value());
    // clique_number still requires the matrix.
    CHECK_THROWS_AS(dg::clique_number(graph), dg::CapExceeded);
}
