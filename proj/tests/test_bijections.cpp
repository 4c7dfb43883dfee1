#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "oracles.hpp"
#include "shi/bijections.hpp"
#include "shi/errors.hpp"

using namespace shi;

namespace {

NonnestingPartition nn(Family f, int n, Blocks blocks) {
    return NonnestingPartition(SetPartition::from_blocks(f, n, std::move(blocks)));
}

std::set<std::vector<int>> entries_of(const std::vector<SequenceA>& seqs) {
    std::set<std::vector<int>> out;
    for (const auto& s : seqs) {
        out.insert(s.entries());
    }
    return out;
}

std::set<std::vector<int>> entries_of(const std::vector<SequenceC>& seqs) {
    std::set<std::vector<int>> out;
    for (const auto& s : seqs) {
        out.insert(s.entries());
    }
    return out;
}

// rearrangements of the multiset, then every cyclic shift mod n+1 with values in 1..n+1
std::set<std::vector<int>> shifted_oracle(std::vector<int> m, int n) {
    std::set<std::vector<int>> out;
    std::sort(m.begin(), m.end());
    do {
        for (int k = 0; k <= n; ++k) {
            std::vector<int> s = m;
            for (int& x : s) {
                x = (x - 1 + k) % (n + 1) + 1;
            }
            out.insert(s);
        }
    } while (std::next_permutation(m.begin(), m.end()));
    return out;
}

std::set<std::vector<int>> marked_oracle(std::vector<int> m) {
    std::set<std::vector<int>> out;
    std::sort(m.begin(), m.end());
    do {
        for (int mask = 0; mask < (1 << m.size()); ++mask) {
            std::vector<int> s = m;
            for (std::size_t k = 0; k < s.size(); ++k) {
                if ((mask >> k) & 1) {
                    s[k] = -s[k];
                }
            }
            out.insert(s);
        }
    } while (std::next_permutation(m.begin(), m.end()));
    return out;
}

}  // namespace

TEST_SUITE("bijections") {

TEST_CASE("(S, g) in type A") {
    CHECK(sg_of_partition_a(nn(Family::A, 4, {{1, 3}, {2, 4}})) == SGPair{{1, 2}, {2, 2}});
    CHECK(sg_of_partition_a(nn(Family::A, 3, {{1}, {2}, {3}})) == SGPair{{1, 2, 3}, {1, 1, 1}});
    CHECK(sg_of_partition_a(nn(Family::A, 3, {{1, 2}, {3}})) == SGPair{{1, 3}, {2, 1}});
    CHECK(partition_from_sg_a({{1, 2}, {2, 2}}, 4).blocks() == Blocks{{1, 3}, {2, 4}});
    CHECK(partition_from_sg_a({{1, 2, 3, 4}, {1, 1, 1, 1}}, 4).blocks() == Blocks{{1}, {2}, {3}, {4}});
    CHECK(partition_from_sg_a({{1}, {5}}, 5).blocks() == Blocks{{1, 2, 3, 4, 5}});
    CHECK_THROWS_AS(partition_from_sg_a({{2}, {3}}, 3), ValidationError);
    CHECK_THROWS_AS(partition_from_sg_a({{1}, {2}}, 3), ValidationError);
}

TEST_CASE("(S, g) in type A is a bijection, checked against minima and sizes") {
    for (int n = 1; n <= 6; ++n) {
        std::set<SGPair> seen;
        for (const auto& blocks : oracle::nonnesting_partitions(Family::A, n)) {
            SGPair expected;
            auto sorted = blocks;
            std::sort(sorted.begin(), sorted.end(), [](const Block& x, const Block& y) { return x.front() < y.front(); });
            for (const auto& b : sorted) {
                expected.subset.push_back(b.front());
                expected.sizes.push_back(static_cast<int>(b.size()));
            }
            const auto p = nn(Family::A, n, blocks);
            CHECK(sg_of_partition_a(p) == expected);
            CHECK(partition_from_sg_a(expected, n) == p);
            seen.insert(expected);
        }
        CHECK(seen.size() == oracle::nonnesting_partitions(Family::A, n).size());
    }
}

TEST_CASE("(S, g) in type C") {
    CHECK(sg_of_partition_c(nn(Family::C, 1, {{1}, {-1}})) == SGPair{{1}, {1}});
    CHECK(sg_of_partition_c(nn(Family::C, 1, {{-1, 1}})) == SGPair{});
    std::set<SGPair> images;
    for (const auto& p : enumerate_nonnesting(Family::C, 2)) {
        if (partition_type(p) == PartitionType({1})) {
            images.insert(sg_of_partition_c(p));
        }
    }
    CHECK(images == std::set<SGPair>{{{1}, {1}}, {{2}, {1}}});
}

TEST_CASE("(S, g) in type C is type preserving and bijective") {
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        std::set<SGPair> seen;
        for (const auto& p : enumerate_nonnesting(Family::C, n)) {
            const auto sg = sg_of_partition_c(p);
            CHECK(sg.type() == partition_type(p));
            CHECK(partition_from_sg_c(sg, n) == p);
            seen.insert(sg);
        }
        // every S ⊆ [n] with g(s) >= 1 and Σ g <= n
        std::size_t expected = 0;
        for (const auto& sizes : oracle::sequences(n, 0, n)) {
            int total = 0;
            for (int g : sizes) {
                total += g;
            }
            expected += total <= n ? 1 : 0;
        }
        CHECK(seen.size() == expected);
        CHECK(seen.size() == binomial(2 * n, n));
    }
}

TEST_CASE("co vectors") {
    const auto a = partition_to_antichain(nn(Family::A, 4, {{1, 3}, {2, 4}}));
    CHECK(a == Antichain{{1, 3}, {2, 4}});
    CHECK(co_vectors(Family::A, 4, a) == COVectors{{1, 2}, {2, 2}});
    CHECK(antichain_from_co({{1, 2}, {2, 2}}, 4, Family::A) == a);
    CHECK(antichain_from_co({{1}, {4}}, 4, Family::A) == Antichain{{1, 2}, {2, 3}, {3, 4}});
    CHECK(is_valid_co(Family::A, 2, {{1}, {2}}));
    CHECK_FALSE(is_valid_co(Family::A, 3, {{2}, {3}}));
    CHECK_THROWS_AS(antichain_from_co({{2}, {3}}, 3, Family::A), ValidationError);
    CHECK(co_of_sequence(SequenceA({1, 3, 1})) == COVectors{{1, 3}, {2, 1}});
    CHECK(co_of_sequence(SequenceC({3, -3, 1})) == COVectors{{1, 3}, {1, 2}});
    CHECK(to_string(COVectors{{1, 3}, {2, 1}}) == "c=(1,3);o=(2,1)");
}

TEST_CASE("co vectors round trip over every antichain") {
    for (Family f : {Family::A, Family::C}) {
        for (int n = 1; n <= (f == Family::A ? 5 : 4); ++n) {
            for (const auto& p : enumerate_nonnesting(f, n)) {
                const auto a = partition_to_antichain(p);
                const auto co = co_vectors(f, n, a);
                CHECK(is_valid_co(f, n, co));
                CHECK(antichain_from_co(co, n, f) == a);
            }
        }
    }
}

TEST_CASE("bar multisets") {
    CHECK(bar_multiset(nn(Family::A, 3, {{1, 2}, {3}})) == std::vector<int>{1, 1, 3});
    CHECK(bar_multiset(nn(Family::C, 1, {{-1, 1}})) == std::vector<int>{0});
    for (const auto& p : enumerate_nonnesting(Family::C, 2)) {
        if (partition_type(p) == PartitionType({1}) && sg_of_partition_c(p).subset == std::vector<int>{2}) {
            CHECK(bar_multiset(p) == std::vector<int>{0, 2});
        }
    }
}

TEST_CASE("shifted and marked permutations") {
    const auto shifted = n_shifted_permutations({1, 2}, 2);
    CHECK(entries_of(shifted) == std::set<std::vector<int>>{{1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 1}, {1, 3}});
    CHECK(shifted.size() == 6);
    const auto marked = marked_permutations({0, 1, 1});
    CHECK(marked.size() == 12);
    CHECK(entries_of(marked) == std::set<std::vector<int>>{{0, 1, 1},   {1, 0, 1},   {1, 1, 0},  {0, -1, -1},
                                                          {-1, 0, -1}, {-1, -1, 0}, {0, 1, -1}, {1, 0, -1},
                                                          {1, -1, 0},  {0, -1, 1},  {-1, 0, 1}, {-1, 1, 0}});
    CHECK(marked_permutations({0, 0, 0}).size() == 1);
    CHECK(std::is_sorted(marked.begin(), marked.end()));
    for (int n = 1; n <= 4; ++n) {
        for (const auto& p : enumerate_nonnesting(Family::A, n)) {
            const auto m = bar_multiset(p);
            const auto listed = n_shifted_permutations(m, n);
            CHECK(listed.size() == entries_of(listed).size());
            CHECK(entries_of(listed) == shifted_oracle(m, n));
        }
        for (const auto& p : enumerate_nonnesting(Family::C, n)) {
            const auto m = bar_multiset(p);
            const auto listed = marked_permutations(m);
            CHECK(listed.size() == entries_of(listed).size());
            CHECK(entries_of(listed) == marked_oracle(m));
        }
    }
}

TEST_CASE("phi_A examples") {
    const RegionAddress first{1, Window::type_a({1, 3, 2}), {{1, 2}}};
    CHECK(phi_a(first) == SequenceA({1, 3, 1}));
    const RegionAddress second{2, Window::type_a({1, 3, 2}), {{1, 2}}};
    CHECK(phi_a(second) == SequenceA({2, 4, 2}));
    CHECK(phi_a({1, Window::type_a({1}), {}}) == SequenceA({1}));
    CHECK(phi_a_inverse(SequenceA({1, 3, 1})) == first);
    CHECK(phi_a_inverse(SequenceA({2, 4, 2})) == second);
    CHECK(first.to_string() == "copy=1;w=1,3,2;arcs=(1,2)");
    CHECK_THROWS_AS(phi_a({1, Window::type_a({1, 3, 2}), {{2, 3}}}), ValidationError);
    CHECK_THROWS_AS(phi_a({5, Window::type_a({1, 3, 2}), {}}), ValidationError);
}

TEST_CASE("phi_C examples") {
    CHECK(phi_c({1, Window::type_c({1}), {}}) == SequenceC({1}));
    CHECK(phi_c({1, Window::type_c({-1}), {}}) == SequenceC({-1}));
    CHECK(phi_c({1, Window::type_c({-1}), {{-1, 1}}}) == SequenceC({0}));
    CHECK(phi_c_inverse(SequenceC({0})) == RegionAddress{1, Window::type_c({-1}), {{-1, 1}}});
    CHECK(phi_c_inverse(SequenceC({1})) == RegionAddress{1, Window::type_c({1}), {}});
    CHECK(RegionAddress{1, Window::type_c({-1}), {{-1, 1}}}.to_string() == "w=-1;arcs=(-1,1)");
}

TEST_CASE("phi_A is a bijection onto all sequences with copy 1 giving parking functions") {
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        std::set<std::vector<int>> image;
        std::set<std::vector<int>> copy_one;
        const auto addresses = all_addresses(Family::A, n);
        CHECK(addresses.size() == ipow(static_cast<Count>(n) + 1, n));
        for (const auto& address : addresses) {
            const auto s = phi_a(address);
            image.insert(s.entries());
            if (address.copy == 1) {
                copy_one.insert(s.entries());
            }
            CHECK(phi_a_inverse(s) == address);
            const auto p = antichain_to_partition(RootPoset::build(address.window), address.antichain);
            CHECK(shifted_oracle(bar_multiset(p), n).contains(s.entries()));
        }
        const auto all = oracle::sequences(n, 1, n + 1);
        CHECK(image == std::set<std::vector<int>>(all.begin(), all.end()));
        std::set<std::vector<int>> parking;
        for (const auto& s : all) {
            if (oracle::parking(s)) {
                parking.insert(s);
            }
        }
        CHECK(copy_one == parking);
        for (const auto& s : all) {
            CHECK(phi_a(phi_a_inverse(SequenceA(s))).entries() == s);
        }
    }
}

TEST_CASE("phi_C is a bijection onto all signed sequences") {
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        std::set<std::vector<int>> image;
        const auto addresses = all_addresses(Family::C, n);
        for (const auto& address : addresses) {
            const auto s = phi_c(address);
            image.insert(s.entries());
            CHECK(phi_c_inverse(s) == address);
            const auto p = antichain_to_partition(RootPoset::build(address.window), address.antichain);
            CHECK(marked_oracle(bar_multiset(p)).contains(s.entries()));
        }
        const auto all = oracle::sequences(n, -n, n);
        CHECK(addresses.size() == all.size());
        CHECK(image == std::set<std::vector<int>>(all.begin(), all.end()));
        for (const auto& s : all) {
            CHECK(phi_c(phi_c_inverse(SequenceC(s))).entries() == s);
        }
    }
}

TEST_CASE("block values use the bar multiset") {
    for (int n = 1; n <= 4; ++n) {
        for (Family f : {Family::A, Family::C}) {
            for (const auto& p : enumerate_nonnesting(f, n)) {
                auto values = block_values(p);
                std::map<int, int> from_blocks;
                const auto reps = p.block_representatives();
                REQUIRE(reps.size() == values.size());
                for (std::size_t k = 0; k < values.size(); ++k) {
                    from_blocks[values[k]] += static_cast<int>(reps[k].size());
                }
                std::map<int, int> bar;
                for (int v : bar_multiset(p)) {
                    if (v != 0) {
                        ++bar[v];
                    }
                }
                CHECK(from_blocks == bar);
            }
        }
    }
}

}
