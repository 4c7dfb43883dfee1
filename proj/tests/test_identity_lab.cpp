#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "shi/errors.hpp"
#include "shi/identity_lab.hpp"

using namespace shi;

namespace {

// distinct values and multiplicities; type C drops zeros and signs
COVectors co_oracle(Family f, const std::vector<int>& s) {
    std::map<int, int> m;
    for (int x : s) {
        if (f == Family::A) {
            ++m[x];
        } else if (x != 0) {
            ++m[std::abs(x)];
        }
    }
    COVectors co;
    for (auto [v, k] : m) {
        co.c.push_back(v);
        co.o.push_back(k);
    }
    return co;
}

std::vector<std::vector<int>> model_sequences(Family f, int n) {
    std::vector<std::vector<int>> out;
    if (f == Family::C) {
        return oracle::sequences(n, -n, n);
    }
    for (const auto& s : oracle::sequences(n, 1, n + 1)) {
        if (oracle::parking(s)) {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<std::vector<int>> window_values(Family f, int n) {
    return f == Family::A ? oracle::permutations(n) : oracle::signed_permutations(n);
}

// the arcs of a partition as canonical poset elements
std::vector<Arc> canonical_arcs(Family f, const Blocks& blocks) {
    std::set<Arc> out;
    for (const auto& a : oracle::arcs(blocks)) {
        out.insert(canonical_arc(f, a));
    }
    return {out.begin(), out.end()};
}

bool is_antichain_in(Family f, const std::vector<Arc>& elements, const std::vector<Arc>& arcs) {
    for (const auto& a : arcs) {
        if (std::find(elements.begin(), elements.end(), a) == elements.end()) {
            return false;
        }
        for (const auto& b : arcs) {
            if (a != b && oracle::leq(f, a, b)) {
                return false;
            }
        }
    }
    return true;
}

QPolynomial poly(std::vector<Count> c) { return QPolynomial(std::move(c)); }

}  // namespace

TEST_SUITE("identity-lab") {

TEST_CASE("q-polynomials") {
    QPolynomial p;
    p.add(0, 2);
    p.add(1);
    CHECK(p.to_string() == "[2, 1]");
    CHECK(p.at_one() == 3);
    CHECK(poly({4, 2, 0}).divided_by(2) == poly({2, 1}));
    CHECK_THROWS_AS(poly({3, 1}).divided_by(2), ConsistencyError);
    CHECK(QPolynomial().to_string() == "[]");
}

TEST_CASE("closed-form examples") {
    CHECK(kreweras_count(PartitionType({2, 1}), 3) == 3);
    CHECK(type_count_c(PartitionType({1}), 2) == 2);
    for (int n = 1; n <= 6; ++n) {
        CHECK(kreweras_count(PartitionType({n}), n) == 1);
    }
    CHECK(class_size_a(PartitionType({2, 1}), 3) == 3);
    CHECK(class_size_c(PartitionType({1}), 1) == 2);
    CHECK(class_size_c(PartitionType(), 2) == 1);
    CHECK(class_size_co(Family::A, {{1}, {2}}, 2) == 1);
    CHECK(class_size_co(Family::A, {{1, 2}, {1, 1}}, 2) == 2);
    CHECK(class_size_co(Family::C, {{}, {}}, 1) == 1);
    CHECK_THROWS_AS(kreweras_count(PartitionType({2}), 3), ValidationError);
    CHECK_THROWS_AS(type_count_c(PartitionType({2, 2}), 3), ValidationError);
    CHECK_THROWS_AS(class_size_co(Family::A, {{2}, {2}}, 2), ValidationError);
}

TEST_CASE("type counts against a census of all set partitions") {
    for (Family f : {Family::A, Family::C}) {
        for (int n = 1; n <= (f == Family::A ? 7 : 4); ++n) {
            std::map<std::vector<int>, Count> census;
            for (const auto& b : oracle::nonnesting_partitions(f, n)) {
                ++census[oracle::type_of(f, b)];
            }
            for (const auto& t : integer_partitions(n)) {
                CHECK(census[t.parts()] == (f == Family::A ? kreweras_count(t, n) : type_count_c(t, n)));
            }
            if (f == Family::C) {
                for (int size = 0; size < n; ++size) {
                    for (const auto& t : integer_partitions(size)) {
                        CHECK(census[t.parts()] == type_count_c(t, n));
                    }
                }
            }
        }
    }
}

TEST_CASE("class sizes count the windows admitting a partition") {
    for (Family f : {Family::A, Family::C}) {
        for (int n = 1; n <= (f == Family::A ? 5 : 3); ++n) {
            std::vector<std::vector<Arc>> posets;
            for (const auto& w : window_values(f, n)) {
                posets.push_back(oracle::poset_elements(f, w));
            }
            for (const auto& b : oracle::nonnesting_partitions(f, n)) {
                const auto arcs = canonical_arcs(f, b);
                Count admitting = 0;
                for (const auto& elements : posets) {
                    admitting += is_antichain_in(f, elements, arcs) ? 1 : 0;
                }
                const PartitionType t(oracle::type_of(f, b));
                CHECK(admitting == (f == Family::A ? class_size_a(t, n) : class_size_c(t, n)));
            }
        }
    }
}

TEST_CASE("(c,o) classes of sequences and antichains") {
    for (Family f : {Family::A, Family::C}) {
        for (int n = 1; n <= (f == Family::A ? 5 : 3); ++n) {
            CAPTURE(n);
            std::map<COVectors, std::pair<Count, Count>> census;
            for (const auto& s : model_sequences(f, n)) {
                ++census[co_oracle(f, s)].first;
            }
            for (const auto& w : window_values(f, n)) {
                for (const auto& a : oracle::antichains(f, oracle::poset_elements(f, w))) {
                    ++census[co_vectors(f, n, a)].second;
                }
            }
            for (const auto& [co, counts] : census) {
                CAPTURE(to_string(co));
                REQUIRE(is_valid_co(f, n, co));
                CHECK(counts.first == class_size_co(f, co, n));
                CHECK(counts.second == class_size_co(f, co, n));
            }
        }
    }
}

TEST_CASE("S_k and M_k") {
    const auto a2 = sk_mk_counts(Family::A, 2);
    CHECK(a2.s == std::vector<Count>{0, 1, 2});
    CHECK(a2.m == std::vector<Count>{2, 1, 0});
    CHECK(a2.dual());
    const auto c1 = sk_mk_counts(Family::C, 1);
    CHECK(c1.s == std::vector<Count>{1, 2});
    CHECK(c1.m == std::vector<Count>{2, 1});
    CHECK(c1.dual());
    const auto a3 = sk_mk_counts(Family::A, 3);
    Count total = 0;
    for (Count s : a3.s) {
        total += s;
    }
    CHECK(total == 16);
    for (Family f : {Family::A, Family::C}) {
        for (int n = 1; n <= (f == Family::A ? 5 : 3); ++n) {
            std::vector<Count> s(static_cast<std::size_t>(n) + 1, 0);
            std::vector<Count> m(static_cast<std::size_t>(n) + 1, 0);
            for (const auto& seq : model_sequences(f, n)) {
                ++s[co_oracle(f, seq).c.size()];
            }
            for (const auto& w : window_values(f, n)) {
                for (const auto& a : oracle::antichains(f, oracle::poset_elements(f, w))) {
                    ++m[a.size()];
                }
            }
            const auto table = sk_mk_counts(f, n);
            CHECK(table.s == s);
            CHECK(table.m == m);
            CHECK(table.dual());
            CHECK(table.refined_mismatches.empty());
        }
    }
}

TEST_CASE("generating functions") {
    const auto shi_a = ArrangementFamily::ShiA;
    const auto shi_c = ArrangementFamily::ShiC;
    CHECK(gf_statistic(shi_a, 2, Statistic::Ceilings, StatisticMode::Geometric) == poly({2, 1}));
    CHECK(gf_statistic(shi_c, 1, Statistic::Ceilings, StatisticMode::Geometric) == poly({2, 1}));
    CHECK(gf_statistic(shi_a, 2, Statistic::SequenceDistinct, StatisticMode::Combinatorial) == poly({2, 1}));
    CHECK(parse_statistic("floors") == Statistic::Floors);
    CHECK(to_string(Statistic::SequenceDistinctAll) == "sequence-distinct-all");
    CHECK_FALSE(parse_statistic_mode("exact").has_value());
    CHECK_THROWS_AS(gf_statistic(ArrangementFamily::CoxA, 2, Statistic::Ceilings, StatisticMode::Geometric),
                    ValidationError);
}

TEST_CASE("generating functions agree with oracle sums and across modes") {
    for (Family f : {Family::A, Family::C}) {
        const auto family = f == Family::A ? ArrangementFamily::ShiA : ArrangementFamily::ShiC;
        for (int n = 1; n <= (f == Family::A ? 4 : 3); ++n) {
            CAPTURE(n);
            QPolynomial ceilings;
            QPolynomial floors;
            for (const auto& w : window_values(f, n)) {
                const auto elements = oracle::poset_elements(f, w);
                for (const auto& a : oracle::antichains(f, elements)) {
                    ceilings.add(static_cast<int>(a.size()));
                    floors.add(static_cast<int>(oracle::floors(f, elements, a).size()));
                }
            }
            QPolynomial distinct;
            for (const auto& s : model_sequences(f, n)) {
                distinct.add(n - static_cast<int>(co_oracle(f, s).c.size()));
            }
            for (auto mode : {StatisticMode::Geometric, StatisticMode::Combinatorial}) {
                CHECK(gf_statistic(family, n, Statistic::Ceilings, mode) == ceilings);
                CHECK(gf_statistic(family, n, Statistic::Floors, mode) == floors);
            }
            CHECK(gf_statistic(family, n, Statistic::SequenceDistinct, StatisticMode::Combinatorial) == distinct);
            CHECK(gf_statistic(family, n, Statistic::SequenceDistinctAll, StatisticMode::Combinatorial) == distinct);
            CHECK(ceilings == floors);
            CHECK(ceilings == distinct);
        }
    }
}

TEST_CASE("identity suite term breakdowns") {
    const auto report = verify("identities", 3);
    CHECK(report.passed());
    bool saw_a = false;
    bool saw_c = false;
    for (const auto& c : report.checks) {
        if (c.family == "A" && c.n == 3 && c.name == "sum over types = (n+1)^n") {
            saw_a = true;
            CHECK(c.detail.find("(4+36+24)") != std::string::npos);
        }
        if (c.family == "C" && c.n == 2 && c.name == "sum over types = (2n+1)^n") {
            saw_c = true;
            CHECK(c.detail.find("(1+8+8+8)") != std::string::npos);
        }
    }
    CHECK(saw_a);
    CHECK(saw_c);
}

TEST_CASE("reports") {
    const auto report = verify("counts", 2);
    CHECK(report.passed());
    CHECK(report.failures() == 0);
    const auto j = report.to_json();
    CHECK(j["schema"] == 1);
    CHECK(j["suite"] == "counts");
    CHECK(j["max_n"] == 2);
    CHECK(j["checks"].size() == report.checks.size());
    CHECK(report.to_table().find("pass") != std::string::npos);
    CHECK_THROWS_AS(verify("nonsense", 2), ValidationError);
    CHECK(suite_names().size() == 7);
    CHECK(verify("counts", 2).to_json().dump() == j.dump());
}

TEST_CASE("every suite passes at small n") {
    const auto report = verify("all", 3);
    for (const auto& c : report.checks) {
        CAPTURE(c.suite + " " + c.name + " " + c.family + " n=" + std::to_string(c.n) + ": " + c.detail);
        CHECK(c.passed);
    }
}

}
