#include <algorithm>
#include <set>
#include <vector>

#include "dg/action.hpp"
#include "dg/cayley.hpp"
#include "dg/group.hpp"
#include "doctest.h"

using dg::CayleyTable;
using dg::Perm;
using dg::PermGroup;

namespace {

Perm p(std::vector<int> img) { return Perm(std::move(img)); }

PermGroup sym3() { return dg::generate_group(3, {p({1, 2, 0}), p({1, 0, 2})}); }
PermGroup alt4() {
    return dg::generate_group(4, {p({1, 2, 0, 3}), p({0, 2, 3, 1})});
}
PermGroup cyclic(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n;
    return dg::generate_group(n, {Perm(std::move(img))});
}

// All permutations of {0..n-1}, for brute-force centralizer checks.
std::vector<Perm> all_perms(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    std::vector<Perm> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace

TEST_CASE("cayley table construction validates the axioms") {
    // C2 table.
    CHECK_NOTHROW(CayleyTable({{0, 1}, {1, 0}}));
    // Latin square violated.
    CHECK_THROWS_AS(CayleyTable({{0, 0}, {1, 1}}), dg::Error);
    // Latin square without a two-sided identity.
    CHECK_THROWS_AS(CayleyTable({{1, 0, 2}, {2, 1, 0}, {0, 2, 1}}), dg::Error);
    CayleyTable c3({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK(c3.identity() == 0);
    CHECK(c3.inverse(1) == 2);
    CHECK(c3.associativity_checked());
}

TEST_CASE("table of a permutation group reproduces composition") {
    PermGroup g = sym3();
    CayleyTable t = dg::cayley_table_of(g);
    CHECK(t.size() == 6);
    const std::vector<Perm>& els = g.elements();
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < t.size(); ++j)
            CHECK(els[static_cast<std::size_t>(t.product(i, j))] ==
                  dg::compose(els[static_cast<std::size_t>(i)],
                              els[static_cast<std::size_t>(j)]));
}

TEST_CASE("regular representations are regular and commute") {
    for (const PermGroup& g : {cyclic(3), sym3(), alt4()}) {
        CayleyTable t = dg::cayley_table_of(g);
        auto [right, left] = dg::regular_reps(t);
        CHECK(right.order() == g.order());
        CHECK(left.order() == g.order());
        CHECK(dg::is_transitive(right));
        CHECK(dg::is_transitive(left));
        // Regular: only the identity fixes a point.
        for (const Perm& x : right.elements())
            if (!x.is_identity()) CHECK(x.fixed_points() == 0);
        for (const Perm& x : right.elements())
            for (const Perm& y : left.elements())
                CHECK(dg::compose(x, y) == dg::compose(y, x));
    }
}

TEST_CASE("for abelian groups the two regular reps coincide") {
    CayleyTable t = dg::cayley_table_of(cyclic(5));
    auto [right, left] = dg::regular_reps(t);
    std::set<Perm> r(right.elements().begin(), right.elements().end());
    std::set<Perm> l(left.elements().begin(), left.elements().end());
    CHECK(r == l);
}

TEST_CASE("right regular rep is the full centralizer of the left one") {
    // Brute force over all of Sym(|X|) for |X| <= 5.
    for (const PermGroup& g : {cyclic(2), cyclic(3), cyclic(4), cyclic(5)}) {
        CayleyTable t = dg::cayley_table_of(g);
        auto [right, left] = dg::regular_reps(t);
        std::set<Perm> centralizer;
        for (const Perm& cand : all_perms(t.size())) {
            bool commutes = true;
            for (const Perm& y : left.generators())
                if (dg::compose(cand, y) != dg::compose(y, cand)) {
                    commutes = false;
                    break;
                }
            if (commutes) centralizer.insert(cand);
        }
        std::set<Perm> r(right.elements().begin(), right.elements().end());
        CHECK(centralizer == r);
    }
}

TEST_CASE("table coset action validates the subgroup") {
    CayleyTable t = dg::cayley_table_of(sym3());
    CHECK_THROWS_AS(dg::coset_action(t, std::vector<int>{1, 2}),
                    dg::NotASubgroup);
}

TEST_CASE("table coset action on an index 3 subgroup of Sym(3)") {
    PermGroup g = sym3();
    CayleyTable t = dg::cayley_table_of(g);
    // Indices of an order-2 subgroup {id, (0 1)}.
    std::vector<int> sub;
    for (std::size_t i = 0; i < g.elements().size(); ++i) {
        const Perm& x = g.elements()[i];
        if (x.is_identity() || x == p({1, 0, 2})) sub.push_back(static_cast<int>(i));
    }
    REQUIRE(sub.size() == 2);
    PermGroup act = dg::coset_action(t, sub);
    CHECK(act.degree() == 3);
    CHECK(act.order() == 6);
    CHECK(dg::is_transitive(act));
}

TEST_CASE("permutation coset action reproduces known actions") {
    // Sym(3) on the cosets of a point stabilizer: natural degree 3 action.
    PermGroup g = sym3();
    PermGroup act = dg::coset_action(g, dg::stabilizer_point(g, 0));
    CHECK(act.degree() == 3);
    CHECK(act.order() == 6);
    CHECK(dg::is_transitive(act));
    // Point 0 of the coset action is the subgroup itself.
    PermGroup stab0 = dg::stabilizer_point(act, 0);
    CHECK(stab0.order() == 2);

    // Alt(4) on the cosets of <(0 1)(2 3)>: degree 6, same invariants as the
    // 2-subsets action.
    PermGroup a4 = alt4();
    PermGroup u = dg::generate_group(4, {p({1, 0, 3, 2})});
    PermGroup act6 = dg::coset_action(a4, u);
    CHECK(act6.degree() == 6);
    CHECK(act6.order() == 12);
    CHECK(dg::is_transitive(act6));
    CHECK(dg::cycle_type_census(act6) ==
          dg::cycle_type_census(dg::ksubsets_action(a4, 2).group));
}

TEST_CASE("coset action rejects non-subgroups and huge indices") {
    PermGroup g = sym3();
    PermGroup not_sub = dg::generate_group(4, {p({1, 0, 2, 3})});
    CHECK_THROWS_AS(dg::coset_action(g, not_sub), dg::NotASubgroup);
    PermGroup trivial = dg::generate_group(3, {});
    CHECK_THROWS_AS(dg::coset_action(g, trivial, 5), dg::CapExceeded);
}

TEST_CASE("wreath product degrees and orders") {
    PermGroup c2 = cyclic(2);
    PermGroup w = dg::wreath_imprimitive(c2, c2);  // dihedral of order 8
    CHECK(w.degree() == 4);
    CHECK(w.order() == 8);
    CHECK(dg::is_transitive(w));

    PermGroup a4_deg6 = dg::ksubsets_action(alt4(), 2).group;
    PermGroup big = dg::wreath_imprimitive(cyclic(3), a4_deg6);
    CHECK(big.degree() == 18);
    CHECK(big.order() == 8748);  // 3^6 * 12
    CHECK(dg::is_transitive(big));

    CHECK_THROWS_AS(dg::wreath_imprimitive(cyclic(5), a4_deg6, 20),
                    dg::CapExceeded);
}

TEST_CASE("wreath product with a trivial base copies the top group") {
    PermGroup top = sym3();
    PermGroup triv = dg::generate_group(1, {});
    PermGroup w = dg::wreath_imprimitive(triv, top);
    CHECK(w.degree() == 3);
    CHECK(w.order() == 6);
}

TEST_CASE("k-subsets action labels are lexicographic and consistent") {
    PermGroup a4 = alt4();
    dg::KSubsetsAction act = dg::ksubsets_action(a4, 2);
    CHECK(act.group.degree() == 6);
    CHECK(act.group.order() == 12);
    REQUIRE(act.labels.size() == 6);
    CHECK(act.labels[0] == std::vector<int>{0, 1});
    CHECK(act.labels[5] == std::vector<int>{2, 3});
    CHECK(std::is_sorted(act.labels.begin(), act.labels.end()));
    // The induced permutation of labels matches the group generator images.
    for (std::size_t gi = 0; gi < a4.generators().size(); ++gi) {
        Perm ind = dg::induced_ksubset_perm(a4.generators()[gi], act.labels);
        CHECK(ind == act.group.generators()[gi]);
        for (std::size_t s = 0; s < act.labels.size(); ++s) {
            std::vector<int> image = {a4.generators()[gi][act.labels[s][0]],
                                      a4.generators()[gi][act.labels[s][1]]};
            std::sort(image.begin(), image.end());
            CHECK(act.labels[static_cast<std::size_t>(ind[static_cast<int>(s)])] ==
                  image);
        }
    }
}
