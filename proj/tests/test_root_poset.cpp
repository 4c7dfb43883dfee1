#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "shi/errors.hpp"
#include "shi/root_poset.hpp"

using namespace shi;

TEST_SUITE("root-posets") {

TEST_CASE("Q_321 is empty") {
    const auto p = root_poset(Window::type_a({3, 2, 1}));
    CHECK(p.size() == 0);
    CHECK(antichains(p) == std::vector<Antichain>{{}});
    CHECK(antichain_count(p) == 1);
}

TEST_CASE("Q_123") {
    const auto p = root_poset(Window::type_a({1, 2, 3}));
    std::vector<Arc> elems = p.elements();
    std::sort(elems.begin(), elems.end());
    CHECK(elems == std::vector<Arc>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(p.arcs_of(p.maximal(p.all())) == std::vector<Arc>{{1, 3}});
    CHECK(antichains(p).size() == 5);
    CHECK(floors_of(p, {}) == Antichain{{1, 2}, {2, 3}});
    CHECK(floors_of(p, {{1, 3}}).empty());
    CHECK(p.dump() ==
          "poset A window 1,2,3\n"
          "element (1,2)\n"
          "element (2,3)\n"
          "element (1,3)\n"
          "cover (1,2) < (1,3)\n"
          "cover (2,3) < (1,3)\n");
}

TEST_CASE("Q^C at window [-2,-1]") {
    const auto p = root_poset(Window::type_c({-2, -1}));
    REQUIRE(p.size() == 4);
    // 2x_2 = (-1,1), x_1 - x_2 = (-2,-1), x_1 + x_2 = (-2,1), 2x_1 = (-2,2)
    const auto two_x2 = *p.index_of({-1, 1});
    const auto diff = *p.index_of({-2, -1});
    const auto sum = *p.index_of({-2, 1});
    const auto two_x1 = *p.index_of({-2, 2});
    CHECK_FALSE(p.leq(two_x2, diff));
    CHECK_FALSE(p.leq(diff, two_x2));
    CHECK(p.leq(two_x2, sum));
    CHECK(p.leq(diff, sum));
    CHECK(p.leq(sum, two_x1));
    CHECK_FALSE(p.leq(two_x1, sum));
    CHECK(antichains(p).size() == 6);
    CHECK(p.index_of({1, 2}) == p.index_of({-2, -1}));
}

TEST_CASE("floors on a chain") {
    // find a three-element chain u < v < x among small windows
    bool found = false;
    for (Family f : {Family::A, Family::C}) {
        for (const auto& w : all_windows(f, 3)) {
            const auto p = root_poset(w);
            if (p.size() != 3) {
                continue;
            }
            std::vector<std::size_t> order{0, 1, 2};
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p.leq(a, b) && a != b; });
            const auto u = order[0];
            const auto v = order[1];
            const auto x = order[2];
            if (!(p.leq(u, v) && p.leq(v, x))) {
                continue;
            }
            found = true;
            const auto& e = p.elements();
            CHECK(floors_of(p, {e[u]}) == Antichain{e[v]});
            CHECK(floors_of(p, {e[x]}).empty());
        }
    }
    CHECK(found);
}

TEST_CASE("antichain to partition") {
    CHECK(antichain_to_partition(Family::A, 3, {{1, 2}}).blocks() == Blocks{{1, 2}, {3}});
    const auto zero = antichain_to_partition(Family::C, 1, {{-1, 1}});
    CHECK(zero.blocks() == Blocks{{-1, 1}});
    CHECK(partition_type(zero) == PartitionType());
    const auto pair = antichain_to_partition(Family::C, 2, {{-2, 1}});
    CHECK(pair.blocks() == Blocks{{-2, 1}, {-1, 2}});
    CHECK(partition_type(pair) == PartitionType({2}));
    CHECK(partition_to_antichain(pair) == Antichain{{-2, 1}});
}

TEST_CASE("antichain totals") {
    CHECK(antichain_counts_by_window(Family::A, 3) == std::vector<Count>{5, 3, 3, 2, 2, 1});
    CHECK(antichain_count_total(Family::A, 3) == 16);
    auto c2 = antichain_counts_by_window(Family::C, 2);
    CHECK(antichain_count_total(Family::C, 2) == 25);
    std::sort(c2.begin(), c2.end());
    std::vector<Count> listed{2, 1, 3, 4, 2, 3, 4, 6};
    std::sort(listed.begin(), listed.end());
    CHECK(c2 == listed);
    CHECK(antichain_counts_by_window(Family::C, 1) == std::vector<Count>{1, 2});
    CHECK(antichain_count_total(Family::C, 1) == 3);
    for (int n = 1; n <= 7; ++n) {
        CHECK(antichain_count_total(Family::A, n) == ipow(static_cast<Count>(n) + 1, n - 1));
    }
    for (int n = 1; n <= 5; ++n) {
        CHECK(antichain_count_total(Family::C, n) == ipow(2 * static_cast<Count>(n) + 1, n));
    }
}

TEST_CASE("identity and longest element") {
    for (int n = 1; n <= 7; ++n) {
        std::vector<int> id(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            id[static_cast<std::size_t>(k)] = k + 1;
        }
        std::vector<int> longest(id.rbegin(), id.rend());
        CHECK(antichain_count(root_poset(Window::type_a(id))) == catalan(n));
        CHECK(antichain_count(root_poset(Window::type_a(longest))) == 1);
    }
}

TEST_CASE("posets, antichains and floors agree with the definition oracle") {
    for (Family f : {Family::A, Family::C}) {
        for (int n = 1; n <= (f == Family::A ? 4 : 3); ++n) {
            for (const auto& w : all_windows(f, n)) {
                CAPTURE(w.to_string());
                const auto p = root_poset(w);
                p.check_axioms();
                std::vector<Arc> elems = p.elements();
                std::sort(elems.begin(), elems.end());
                const auto expected = oracle::poset_elements(f, w.values());
                REQUIRE(elems == expected);
                for (std::size_t a = 0; a < p.size(); ++a) {
                    for (std::size_t b = 0; b < p.size(); ++b) {
                        CHECK(p.leq(a, b) == oracle::leq(f, p.elements()[a], p.elements()[b]));
                    }
                }
                auto brute = oracle::antichains(f, expected);
                std::sort(brute.begin(), brute.end());
                auto mine = antichains(p);
                CHECK(mine.size() == antichain_count(p));
                std::sort(mine.begin(), mine.end());
                CHECK(mine == brute);
                for (const auto& a : mine) {
                    CHECK(floors_of(p, a) == oracle::floors(f, expected, a));
                    CHECK(antichain_of_down_set(p, down_set(p, a)) == a);
                    CHECK(partition_to_antichain(antichain_to_partition(p, a)) == a);
                    CHECK(is_nonnesting(antichain_to_partition(p, a).partition()));
                }
            }
        }
    }
}

TEST_CASE("every down-set is the closure of its maxima") {
    for (const auto& w : all_windows(Family::C, 2)) {
        const auto p = root_poset(w);
        for (ElementMask m = 0; m < (ElementMask{1} << p.size()); ++m) {
            if (p.down_closure(m) == m) {
                const auto arcs = p.arcs_of(m);
                CHECK(down_set(p, antichain_of_down_set(p, arcs)) == arcs);
            }
        }
    }
}

TEST_CASE("invalid antichains are rejected") {
    const auto p = root_poset(Window::type_a({1, 2, 3}));
    CHECK_THROWS_AS(floors_of(p, {{1, 2}, {1, 3}}), ValidationError);
    CHECK_THROWS_AS(down_set(p, {{2, 1}}), ValidationError);
}

}
