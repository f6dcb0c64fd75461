#include <algorithm>
#include <set>
#include <vector>

#include "dg/action.hpp"
#include "dg/group.hpp"
#include "doctest.h"

using dg::Perm;
using dg::PermGroup;

namespace {

Perm p(std::vector<int> img) { return Perm(std::move(img)); }

PermGroup sym3() { return dg::generate_group(3, {p({1, 2, 0}), p({1, 0, 2})}); }
PermGroup alt4() {
    return dg::generate_group(4, {p({1, 2, 0, 3}), p({0, 2, 3, 1})});
}
PermGroup alt4_deg6() { return dg::ksubsets_action(alt4(), 2).group; }
PermGroup sym5() {
    return dg::generate_group(5, {p({1, 0, 2, 3, 4}), p({1, 2, 3, 4, 0})});
}
PermGroup alt5() {
    return dg::generate_group(5, {p({1, 2, 0, 3, 4}), p({1, 2, 3, 4, 0})});
}

}  // namespace

TEST_CASE("generated orders of the standard small groups") {
    CHECK(dg::generate_group(3, {p({1, 2, 0})}).order() == 3);
    CHECK(sym3().order() == 6);
    CHECK(alt4().order() == 12);
    CHECK(alt4_deg6().order() == 12);
    CHECK(sym5().order() == 120);
    CHECK(alt5().order() == 60);
    CHECK(dg::generate_group(4, {}).order() == 1);  // trivial group
}

TEST_CASE("elements are sorted with the identity at index 0") {
    PermGroup g = sym3();
    const std::vector<Perm>& els = g.elements();
    CHECK(els.size() == 6);
    CHECK(els[0].is_identity());
    CHECK(std::is_sorted(els.begin(), els.end()));
    for (const Perm& x : els) {
        CHECK(g.contains(x));
        int i = g.element_index(x);
        CHECK(els[static_cast<std::size_t>(i)] == x);
        CHECK(els[static_cast<std::size_t>(g.inverse_index(i))] ==
              dg::inverse(x));
    }
    CHECK(g.element_index(p({2, 1, 0})) >= 0);
    CHECK_FALSE(g.contains(Perm::identity(4)));
}

TEST_CASE("group closure oracle: elements closed under product and inverse") {
    for (const PermGroup& g : {sym3(), alt4(), alt4_deg6()}) {
        std::set<Perm> all(g.elements().begin(), g.elements().end());
        CHECK(all.size() == g.order());
        for (const Perm& x : g.elements()) {
            CHECK(all.count(dg::inverse(x)) == 1);
            for (const Perm& y : g.elements())
                CHECK(all.count(dg::compose(x, y)) == 1);
        }
    }
}

TEST_CASE("element cap throws on materializing queries only") {
    PermGroup g = dg::generate_group(5, sym5().generators(), 10);
    CHECK(g.degree() == 5);
    CHECK(g.generators().size() == 2);
    CHECK(dg::is_transitive(g));  // generator-only query works
    CHECK_THROWS_AS(g.order(), dg::CapExceeded);
    CHECK_THROWS_AS(g.elements(), dg::CapExceeded);
}

TEST_CASE("orbits and transitivity") {
    PermGroup g = dg::generate_group(4, {p({1, 0, 2, 3})});
    std::vector<std::vector<int>> obs = dg::orbits(g);
    CHECK(obs == std::vector<std::vector<int>>{{0, 1}, {2}, {3}});
    CHECK_FALSE(dg::is_transitive(g));
    CHECK(dg::is_transitive(sym3()));
    CHECK(dg::is_transitive(alt4_deg6()));
    CHECK(dg::orbit(sym3(), 1) == std::vector<int>{0, 1, 2});
}

TEST_CASE("orbit-stabilizer products equal the group order") {
    for (const PermGroup& g : {sym3(), alt4(), alt4_deg6(), alt5()}) {
        for (int pt = 0; pt < g.degree(); ++pt) {
            PermGroup stab = dg::stabilizer_point(g, pt);
            CHECK(stab.order() * dg::orbit(g, pt).size() == g.order());
            for (const Perm& x : stab.elements()) CHECK(x[pt] == pt);
        }
    }
}

TEST_CASE("point stabilizer contents") {
    PermGroup stab = dg::stabilizer_point(sym3(), 0);
    CHECK(stab.order() == 2);
    CHECK(stab.contains(p({0, 2, 1})));
}

TEST_CASE("pointwise and setwise stabilizers") {
    PermGroup g = sym5();
    PermGroup pw = dg::stabilizer_pointwise(g, {0, 1});
    CHECK(pw.order() == 6);  // Sym on the remaining 3 points
    PermGroup sw = dg::stabilizer_setwise(g, {0, 1});
    CHECK(sw.order() == 12);  // Sym(2) x Sym(3)
    CHECK(sw.contains(p({1, 0, 2, 3, 4})));
    CHECK_FALSE(pw.contains(p({1, 0, 2, 3, 4})));
}

TEST_CASE("subgroup relation") {
    CHECK(dg::is_subgroup_of(alt5(), sym5()));
    CHECK(dg::is_subgroup_of(dg::stabilizer_point(sym3(), 0), sym3()));
    CHECK_FALSE(dg::is_subgroup_of(sym5(), alt5()));
}

TEST_CASE("conjugation orbits split as expected") {
    // Alt(3) inside Sym(3): classes {id}, {3-cycles}.
    PermGroup a3 = dg::generate_group(3, {p({1, 2, 0})});
    std::vector<std::vector<Perm>> cls = dg::conjugation_orbits(sym3(), a3);
    CHECK(cls.size() == 2);
    // Alt(5) inside Sym(5): id, 15 double transpositions, 20 3-cycles,
    // 24 5-cycles fused into one class.
    cls = dg::conjugation_orbits(sym5(), alt5());
    CHECK(cls.size() == 4);
    std::multiset<std::size_t> sizes;
    for (const auto& c : cls) sizes.insert(c.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 15, 20, 24});
    // Inside Alt(5) itself the 5-cycles split into two classes of 12.
    cls = dg::conjugation_orbits(alt5(), alt5());
    CHECK(cls.size() == 5);
}

TEST_CASE("conjugation orbits demand normality") {
    PermGroup u = dg::generate_group(3, {p({1, 0, 2})});
    CHECK_THROWS_AS(dg::conjugation_orbits(sym3(), u), dg::NotNormalized);
}

TEST_CASE("cycle type census of Sym(3)") {
    std::map<std::vector<int>, std::size_t> census = dg::cycle_type_census(sym3());
    CHECK(census.size() == 3);
    CHECK(census[{1, 1, 1}] == 1);
    CHECK(census[{1, 2}] == 3);
    CHECK(census[{3}] == 2);
}

TEST_CASE("from_elements wraps a known subgroup") {
    std::vector<Perm> v4 = {Perm::identity(4), p({1, 0, 3, 2}), p({2, 3, 0, 1}),
                            p({3, 2, 1, 0})};
    PermGroup g = PermGroup::from_elements(4, v4);
    CHECK(g.order() == 4);
    CHECK(dg::is_subgroup_of(g, alt4()));
}
