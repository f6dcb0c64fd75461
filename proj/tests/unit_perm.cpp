#include <random>
#include <vector>

#include "dg/perm.hpp"
#include "doctest.h"

using dg::Perm;

namespace {

Perm p(std::vector<int> img) { return Perm(std::move(img)); }

// Independent composition oracle: walk each point through p then q.
Perm slow_compose(const Perm& a, const Perm& b) {
    std::vector<int> img(static_cast<std::size_t>(a.degree()));
    for (int i = 0; i < a.degree(); ++i) img[static_cast<std::size_t>(i)] = b[a[i]];
    return Perm(std::move(img));
}

Perm random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(std::move(img));
}

}  // namespace

TEST_CASE("perm construction validates bijectivity") {
    CHECK_NOTHROW(p({0, 1, 2}));
    CHECK_THROWS_AS(p({0, 0, 2}), dg::InvalidPermutation);
    CHECK_THROWS_AS(p({0, 3, 1}), dg::InvalidPermutation);
    CHECK_THROWS_AS(p({-1, 0, 1}), dg::InvalidPermutation);
}

TEST_CASE("identity basics") {
    Perm e = Perm::identity(4);
    CHECK(e.degree() == 4);
    CHECK(e.is_identity());
    CHECK(e.fixed_points() == 4);
    CHECK(dg::format_cycles(e) == "()");
    CHECK(dg::perm_order(e) == 1);
}

TEST_CASE("compose applies left argument first") {
    // (0 1 2) then (0 1): point 0 -> 1 -> 0, point 1 -> 2 -> 2, point 2 -> 0 -> 1.
    Perm c = p({1, 2, 0});
    Perm t = p({1, 0, 2});
    Perm ct = dg::compose(c, t);
    CHECK(ct == p({0, 2, 1}));
    CHECK(dg::compose(t, c) == p({2, 1, 0}));  // not commutative
}

TEST_CASE("compose matches pointwise oracle on random samples") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Perm a = random_perm(n, rng);
        Perm b = random_perm(n, rng);
        CHECK(dg::compose(a, b) == slow_compose(a, b));
    }
}

TEST_CASE("inverse and composition identities") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        Perm a = random_perm(n, rng);
        Perm b = random_perm(n, rng);
        Perm e = Perm::identity(n);
        CHECK(dg::compose(a, dg::inverse(a)) == e);
        CHECK(dg::compose(dg::inverse(a), a) == e);
        // (ab)^-1 == b^-1 a^-1
        CHECK(dg::inverse(dg::compose(a, b)) ==
              dg::compose(dg::inverse(b), dg::inverse(a)));
    }
}

TEST_CASE("conjugate is q^-1 p q and preserves cycle type") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        Perm a = random_perm(n, rng);
        Perm q = random_perm(n, rng);
        Perm c = dg::conjugate(a, q);
        CHECK(c == dg::compose(dg::inverse(q), dg::compose(a, q)));
        CHECK(dg::cycle_type(c) == dg::cycle_type(a));
        CHECK(dg::perm_order(c) == dg::perm_order(a));
    }
}

TEST_CASE("cycle type and order examples") {
    CHECK(dg::cycle_type(p({1, 2, 0})) == std::vector<int>{3});
    CHECK(dg::cycle_type(p({1, 0, 2})) == std::vector<int>{1, 2});
    CHECK(dg::cycle_type(p({1, 0, 3, 2})) == std::vector<int>{2, 2});
    CHECK(dg::cycle_type(p({1, 2, 0, 4, 3})) == std::vector<int>{2, 3});
    CHECK(dg::perm_order(p({1, 2, 0, 4, 3})) == 6);
    CHECK(dg::perm_order(p({1, 2, 3, 0})) == 4);
}

TEST_CASE("order via repeated composition oracle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Perm a = random_perm(n, rng);
        Perm acc = a;
        std::uint64_t k = 1;
        while (!acc.is_identity()) {
            acc = dg::compose(acc, a);
            ++k;
        }
        CHECK(dg::perm_order(a) == k);
    }
}

TEST_CASE("cycle formatting") {
    CHECK(dg::format_cycles(p({1, 2, 0})) == "(0 1 2)");
    CHECK(dg::format_cycles(p({1, 0, 3, 2})) == "(0 1)(2 3)");
    CHECK(dg::format_cycles(p({0, 2, 1})) == "(1 2)");
}

TEST_CASE("fixed points count") {
    CHECK(p({0, 2, 1, 3}).fixed_points() == 2);
    CHECK(p({1, 2, 0}).fixed_points() == 0);
}
