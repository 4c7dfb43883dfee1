#include "shi/identity_lab.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "shi/errors.hpp"
#include "shi/parallel.hpp"
#include "shi/root_poset.hpp"

namespace shi {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// QPolynomial

QPolynomial::QPolynomial(std::vector<Count> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

void QPolynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) {
        coefficients_.pop_back();
    }
}

void QPolynomial::add(int degree, Count count) {
    require(degree >= 0, "negative degree");
    if (coefficients_.size() <= static_cast<std::size_t>(degree)) {
        coefficients_.resize(static_cast<std::size_t>(degree) + 1, 0);
    }
    coefficients_[static_cast<std::size_t>(degree)] += count;
    trim();
}

Count QPolynomial::at_one() const { return std::accumulate(coefficients_.begin(), coefficients_.end(), Count{0}); }

QPolynomial QPolynomial::divided_by(Count divisor) const {
    require(divisor > 0, "division by zero");
    std::vector<Count> out;
    for (Count c : coefficients_) {
        if (c % divisor != 0) {
            throw ConsistencyError(to_string() + " is not divisible by " + std::to_string(divisor));
        }
        out.push_back(c / divisor);
    }
    return QPolynomial(std::move(out));
}

std::string QPolynomial::to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
        out += (k ? ", " : "") + std::to_string(coefficients_[k]);
    }
    return out + "]";
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

void check_type(const PartitionType& type, int n, bool exact) {
    require(n >= 1, "n must be at least 1");
    require(exact ? type.size() == n : type.size() <= n,
            "type " + type.to_string() + (exact ? " is not a partition of " : " exceeds ") + std::to_string(n));
    require(n <= 20, "n too large for 64-bit closed forms");
}

}  // namespace

Count kreweras_count(const PartitionType& type, int n) {
    check_type(type, n, true);
    return factorial(n) / (type.m_lambda() * factorial(n - type.d() + 1));
}

Count type_count_c(const PartitionType& type, int n) {
    check_type(type, n, false);
    return factorial(n) / (type.m_lambda() * factorial(n - type.d()));
}

Count class_size_a(const PartitionType& type, int n) {
    check_type(type, n, true);
    return multinomial(n, type.parts());
}

Count class_size_c(const PartitionType& type, int n) {
    check_type(type, n, false);
    auto parts = type.parts();
    parts.push_back(n - type.size());
    return multinomial(n, parts) * ipow(2, type.size());
}

Count class_size_co(Family family, const COVectors& co, int n) {
    require(is_valid_co(family, n, co), "invalid (c,o) vectors " + to_string(co));
    auto parts = co.o;
    const int total = std::accumulate(parts.begin(), parts.end(), 0);
    if (family == Family::A) {
        return multinomial(n, parts);
    }
    parts.push_back(n - total);
    return multinomial(n, parts) * ipow(2, total);
}

// ---------------------------------------------------------------------------
// Duality of S_k and M_k

bool DualityTable::dual() const {
    if (s.size() != m.size()) {
        return false;
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] != m[s.size() - 1 - k]) {
            return false;
        }
    }
    return refined_mismatches.empty();
}

namespace {

struct WindowData {
    Window window;
    std::vector<Antichain> antichains;
};

std::vector<WindowData> antichain_census(Family family, int n) {
    const auto windows = all_windows(family, n);
    return parallel_map(windows.size(), [&](std::size_t k) {
        return WindowData{windows[k], antichains(RootPoset::build(windows[k]))};
    });
}

}  // namespace

DualityTable sk_mk_counts(Family family, int n) {
    guard_size(n, family == Family::A ? 6 : 4, "sk_mk_counts");
    DualityTable table;
    table.family = family;
    table.n = n;
    table.s.assign(static_cast<std::size_t>(n) + 1, 0);
    table.m.assign(static_cast<std::size_t>(n) + 1, 0);
    std::map<COVectors, std::pair<Count, Count>> classes;
    if (family == Family::A) {
        for (const auto& a : parking_functions(n)) {
            ++table.s[static_cast<std::size_t>(d_stat(a))];
            ++classes[co_of_sequence(a)].first;
        }
    } else {
        for (const auto& a : all_sequences_c(n)) {
            ++table.s[static_cast<std::size_t>(dc_stat(a))];
            ++classes[co_of_sequence(a)].first;
        }
    }
    for (const auto& data : antichain_census(family, n)) {
        for (const auto& a : data.antichains) {
            ++table.m[a.size()];
            ++classes[co_vectors(family, n, a)].second;
        }
    }
    for (const auto& [co, counts] : classes) {
        if (counts.first != counts.second) {
            table.refined_mismatches.push_back(to_string(co) + ": " + std::to_string(counts.first) +
                                               " sequences, " + std::to_string(counts.second) + " antichains");
        }
    }
    return table;
}

// ---------------------------------------------------------------------------
// Statistics

std::string to_string(Statistic statistic) {
    switch (statistic) {
        case Statistic::Ceilings:
            return "ceilings";
        case Statistic::Floors:
            return "floors";
        case Statistic::SequenceDistinct:
            return "sequence-distinct";
        case Statistic::SequenceDistinctAll:
            return "sequence-distinct-all";
    }
    return "?";
}

std::optional<Statistic> parse_statistic(std::string_view text) {
    for (auto s : {Statistic::Ceilings, Statistic::Floors, Statistic::SequenceDistinct,
                   Statistic::SequenceDistinctAll}) {
        if (to_string(s) == text) {
            return s;
        }
    }
    return std::nullopt;
}

std::string to_string(StatisticMode mode) { return mode == StatisticMode::Geometric ? "geometric" : "combinatorial"; }

std::optional<StatisticMode> parse_statistic_mode(std::string_view text) {
    if (text == "geometric") {
        return StatisticMode::Geometric;
    }
    if (text == "combinatorial") {
        return StatisticMode::Combinatorial;
    }
    return std::nullopt;
}

QPolynomial gf_statistic(ArrangementFamily family, int n, Statistic statistic, StatisticMode mode) {
    require(is_shi(family), "statistics are defined for shi-a and shi-c");
    require(n >= 1, "n must be at least 1");
    const Family root = root_family(family);
    QPolynomial out;
    if (statistic == Statistic::SequenceDistinct || statistic == Statistic::SequenceDistinctAll) {
        if (root == Family::C) {
            for (const auto& a : all_sequences_c(n)) {
                out.add(n - dc_stat(a));
            }
            return out;
        }
        const auto sequences = statistic == Statistic::SequenceDistinct ? parking_functions(n) : all_sequences_a(n);
        for (const auto& a : sequences) {
            out.add(n - d_stat(a));
        }
        return statistic == Statistic::SequenceDistinct ? out : out.divided_by(static_cast<Count>(n) + 1);
    }
    const bool ceilings = statistic == Statistic::Ceilings;
    if (mode == StatisticMode::Geometric) {
        for (const auto& r : enumerate_regions(build_arrangement(family, n))) {
            out.add(static_cast<int>(ceilings ? r.ceilings.size() : r.floors.size()));
        }
        return out;
    }
    guard_size(n, root == Family::A ? 7 : 5, "gf_statistic");
    const auto windows = all_windows(root, n);
    const auto partial = parallel_map(windows.size(), [&](std::size_t k) {
        const auto poset = RootPoset::build(windows[k]);
        QPolynomial p;
        for (const auto& a : antichains(poset)) {
            p.add(static_cast<int>(ceilings ? a.size() : floors_of(poset, a).size()));
        }
        return p;
    });
    for (const auto& p : partial) {
        for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
            out.add(static_cast<int>(k), p.coefficients()[k]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verification

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

json VerificationReport::to_json() const {
    json out{{"schema", 1}, {"suite", suite}, {"max_n", max_n}, {"passed", passed()}, {"failures", failures()}};
    out["checks"] = json::array();
    for (const auto& c : checks) {
        json entry{{"suite", c.suite}, {"check", c.name}, {"family", c.family},
                   {"n", c.n},         {"passed", c.passed}, {"detail", c.detail}};
        if (!c.passed) {
            entry["counterexample"] = c.counterexample;
        }
        out["checks"].push_back(std::move(entry));
    }
    return out;
}

std::string VerificationReport::to_table() const {
    std::size_t w_suite = 5;
    std::size_t w_name = 5;
    for (const auto& c : checks) {
        w_suite = std::max(w_suite, c.suite.size());
        w_name = std::max(w_name, c.name.size());
    }
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };
    std::ostringstream os;
    os << pad("suite", w_suite) << "  " << pad("check", w_name) << "  family  n  result  detail\n";
    for (const auto& c : checks) {
        os << pad(c.suite, w_suite) << "  " << pad(c.name, w_name) << "  " << pad(c.family, 6) << "  "
           << pad(std::to_string(c.n), 1) << "  " << (c.passed ? "pass  " : "FAIL  ") << "  " << c.detail << "\n";
        if (!c.passed) {
            os << "    counterexample: " << c.counterexample.dump() << "\n";
        }
    }
    os << (passed() ? "all " + std::to_string(checks.size()) + " checks passed"
                    : std::to_string(failures()) + " of " + std::to_string(checks.size()) + " checks failed")
       << "\n";
    return os.str();
}

namespace {

using Task = std::function<CheckResult()>;

struct Planner {
    int max_n;
    std::vector<Task> tasks;

    // Schedules body(n) for n = 1..min(max_n, limit).
    void each(const std::string& suite, const std::string& name, const std::string& family, int limit,
              std::function<void(int, CheckResult&)> body) {
        for (int n = 1; n <= std::min(max_n, limit); ++n) {
            tasks.push_back([=] {
                CheckResult r{suite, name, family, n, true, {}, {}};
                try {
                    body(n, r);
                } catch (const std::exception& e) {
                    r.passed = false;
                    r.detail = std::string("exception: ") + e.what();
                    r.counterexample = json{{"exception", e.what()}};
                }
                return r;
            });
        }
    }
};

void fail(CheckResult& r, const std::string& detail, json counterexample) {
    if (r.passed) {
        r.passed = false;
        r.detail = detail;
        r.counterexample = std::move(counterexample);
    }
}

void expect_equal(CheckResult& r, Count actual, Count expected, const std::string& what) {
    if (actual != expected) {
        fail(r, what + " = " + std::to_string(actual) + ", expected " + std::to_string(expected),
             json{{"actual", actual}, {"expected", expected}});
    } else if (r.detail.empty()) {
        r.detail = what + " = " + std::to_string(actual);
    }
}

std::string join_counts(const std::vector<Count>& values, const std::string& separator = ",") {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += (k ? separator : "") + std::to_string(values[k]);
    }
    return out;
}

std::string family_name(Family f) { return f == Family::A ? "A" : "C"; }

ArrangementFamily shi_of(Family f) { return f == Family::A ? ArrangementFamily::ShiA : ArrangementFamily::ShiC; }

Count shi_count(Family f, int n) {
    return f == Family::A ? ipow(static_cast<Count>(n) + 1, n - 1) : ipow(2 * static_cast<Count>(n) + 1, n);
}

// Every set partition of the ground set, by restricted growth strings.
std::vector<SetPartition> brute_force_partitions(Family family, int n, bool symmetric_only) {
    const auto ground = ground_set(family, n);
    const std::size_t size = ground.size();
    std::vector<SetPartition> out;
    std::vector<int> label(size, 0);
    std::function<void(std::size_t, int)> go = [&](std::size_t k, int blocks) {
        if (k == size) {
            Blocks bs(static_cast<std::size_t>(blocks));
            for (std::size_t t = 0; t < size; ++t) {
                bs[static_cast<std::size_t>(label[t])].push_back(ground[t]);
            }
            if (symmetric_only) {
                std::set<Block> present(bs.begin(), bs.end());
                for (const auto& b : bs) {
                    Block neg;
                    for (auto it = b.rbegin(); it != b.rend(); ++it) {
                        neg.push_back(-*it);
                    }
                    if (!present.contains(neg)) {
                        return;
                    }
                }
            }
            out.push_back(SetPartition::from_blocks(family, n, std::move(bs)));
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            label[k] = b;
            go(k + 1, std::max(blocks, b + 1));
        }
    };
    go(0, 0);
    return out;
}

// Type of a symmetric or plain set partition computed straight from its blocks.
PartitionType census_type(const SetPartition& p) {
    std::vector<int> parts;
    for (const auto& b : p.blocks()) {
        if (p.family() == Family::A) {
            parts.push_back(static_cast<int>(b.size()));
        } else if (b.back() > -b.front()) {
            parts.push_back(static_cast<int>(b.size()));
        }
    }
    std::sort(parts.rbegin(), parts.rend());
    return PartitionType(parts);
}

std::vector<PartitionType> types_for(Family family, int n) {
    if (family == Family::A) {
        return integer_partitions(n);
    }
    std::vector<PartitionType> out;
    for (int m = 0; m <= n; ++m) {
        const auto ps = integer_partitions(m);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

// ---- counts

void plan_counts(Planner& p) {
    for (Family f : {Family::A, Family::C}) {
        const bool a = f == Family::A;
        p.each("counts", "antichain total", family_name(f), a ? 7 : 5, [f](int n, CheckResult& r) {
            expect_equal(r, antichain_count_total(f, n), shi_count(f, n), "sum of j(Q_w)");
        });
        p.each("counts", "region count", to_string(shi_of(f)), a ? 4 : 3, [f](int n, CheckResult& r) {
            const auto regions = enumerate_regions(build_arrangement(shi_of(f), n));
            expect_equal(r, regions.size(), shi_count(f, n), "regions");
        });
        p.each("counts", "nonnesting partitions", family_name(f), a ? 7 : 5, [f, a](int n, CheckResult& r) {
            expect_equal(r, enumerate_nonnesting(f, n).size(), a ? catalan(n) : binomial(2 * n, n), "partitions");
        });
        p.each("counts", "sequences", family_name(f), a ? 7 : 6, [f, a](int n, CheckResult& r) {
            if (a) {
                expect_equal(r, parking_functions(n).size(), shi_count(f, n), "|PF(n)|");
            } else {
                expect_equal(r, all_sequences_c(n).size(), shi_count(f, n), "|A^C(n)|");
            }
        });
    }
}

// ---- theorem2 / theorem4

void compare_polynomials(CheckResult& r, const std::vector<std::pair<std::string, QPolynomial>>& polys) {
    json payload;
    bool same = true;
    for (const auto& [name, poly] : polys) {
        payload[name] = poly.coefficients();
        same = same && poly == polys.front().second;
    }
    if (!same) {
        fail(r, "q-polynomials differ", payload);
    } else {
        r.detail = polys.front().second.to_string();
    }
}

void plan_theorem(Planner& p, Family f) {
    const std::string suite = f == Family::A ? "theorem2" : "theorem4";
    const ArrangementFamily shi = shi_of(f);
    auto sequences = [f, shi](int n) {
        std::vector<std::pair<std::string, QPolynomial>> out{
            {"sequences", gf_statistic(shi, n, Statistic::SequenceDistinct, StatisticMode::Combinatorial)}};
        if (f == Family::A) {
            out.emplace_back("all_sequences_over_n_plus_1",
                             gf_statistic(shi, n, Statistic::SequenceDistinctAll, StatisticMode::Combinatorial));
        }
        return out;
    };
    for (auto mode : {StatisticMode::Geometric, StatisticMode::Combinatorial}) {
        const int limit = mode == StatisticMode::Geometric ? (f == Family::A ? 4 : 3) : (f == Family::A ? 6 : 4);
        p.each(suite, to_string(mode) + " ceilings = floors = sequences", to_string(shi), limit,
               [=](int n, CheckResult& r) {
                   std::vector<std::pair<std::string, QPolynomial>> polys{
                       {"ceilings", gf_statistic(shi, n, Statistic::Ceilings, mode)},
                       {"floors", gf_statistic(shi, n, Statistic::Floors, mode)}};
                   for (auto& s : sequences(n)) {
                       polys.push_back(std::move(s));
                   }
                   compare_polynomials(r, polys);
               });
    }
}

// ---- bijectivity

template <typename Seq>
void check_phi(CheckResult& r, Family f, int n, Seq (*phi)(const RegionAddress&),
               RegionAddress (*inverse)(const Seq&), const std::vector<Seq>& codomain) {
    std::set<Seq> image;
    for (const auto& address : all_addresses(f, n)) {
        const Seq s = phi(address);
        if (!image.insert(s).second) {
            fail(r, "phi is not injective", json{{"address", address.to_string()}, {"sequence", s.to_string()}});
            return;
        }
        if (inverse(s) != address) {
            fail(r, "inverse(phi(x)) != x", json{{"address", address.to_string()}, {"sequence", s.to_string()}});
            return;
        }
    }
    if (image != std::set<Seq>(codomain.begin(), codomain.end())) {
        fail(r, "image differs from the sequence set", json{{"image_size", image.size()}, {"codomain_size", codomain.size()}});
        return;
    }
    for (const auto& s : codomain) {
        if (phi(inverse(s)) != s) {
            fail(r, "phi(inverse(s)) != s", json{{"sequence", s.to_string()}});
            return;
        }
    }
    r.detail = std::to_string(image.size()) + " sequences, round trips exact";
}

void plan_bijectivity(Planner& p) {
    p.each("bijectivity", "phi_A onto A(n)", "A", 5, [](int n, CheckResult& r) {
        check_phi<SequenceA>(r, Family::A, n, phi_a, phi_a_inverse, all_sequences_a(n));
        if (!r.passed) {
            return;
        }
        std::set<SequenceA> first_copy;
        for (const auto& address : all_addresses(Family::A, n)) {
            if (address.copy == 1) {
                first_copy.insert(phi_a(address));
            }
        }
        const auto pf = parking_functions(n);
        if (first_copy != std::set<SequenceA>(pf.begin(), pf.end())) {
            fail(r, "copy-1 image is not PF(n)", json{{"image_size", first_copy.size()}, {"pf_size", pf.size()}});
        }
    });
    p.each("bijectivity", "phi_C onto A^C(n)", "C", 4, [](int n, CheckResult& r) {
        check_phi<SequenceC>(r, Family::C, n, phi_c, phi_c_inverse, all_sequences_c(n));
    });
    for (Family f : {Family::A, Family::C}) {
        p.each("bijectivity", "region labels onto (window, antichain)", to_string(shi_of(f)),
               f == Family::A ? 4 : 3, [f](int n, CheckResult& r) {
                   const auto census = geometric_census(shi_of(f), n);
                   if (!census.ok()) {
                       fail(r, census.problems.front(), json{{"problems", census.problems}});
                   } else {
                       r.detail = std::to_string(census.regions.size()) + " regions labeled bijectively";
                   }
               });
        p.each("bijectivity", "(S,g) round trip", family_name(f), f == Family::A ? 7 : 5, [f](int n, CheckResult& r) {
            std::set<SGPair> seen;
            for (const auto& pi : enumerate_nonnesting(f, n)) {
                const SGPair sg = f == Family::A ? sg_of_partition_a(pi) : sg_of_partition_c(pi);
                const auto back = f == Family::A ? partition_from_sg_a(sg, n) : partition_from_sg_c(sg, n);
                if (back != pi || sg.type() != partition_type(pi) || !seen.insert(sg).second) {
                    fail(r, "(S,g) map fails on a partition", json{{"partition", pi.to_string()}});
                    return;
                }
            }
            Count expected = 0;
            for (const auto& t : types_for(f, n)) {
                for (const auto& sg : all_sg_pairs(n, t)) {
                    expected += is_valid_co(f, n, {sg.subset, sg.sizes}) ? 1 : 0;
                }
            }
            expect_equal(r, seen.size(), expected, "(S,g) pairs");
        });
        p.each("bijectivity", "antichain <-> partition", family_name(f), f == Family::A ? 6 : 4,
               [f](int n, CheckResult& r) {
                   Count total = 0;
                   for (const auto& data : antichain_census(f, n)) {
                       const auto poset = RootPoset::build(data.window);
                       for (const auto& a : data.antichains) {
                           if (partition_to_antichain(antichain_to_partition(poset, a)) != a) {
                               fail(r, "antichain round trip", json{{"window", data.window.to_string()}});
                               return;
                           }
                           ++total;
                       }
                   }
                   expect_equal(r, total, shi_count(f, n), "antichains");
               });
    }
}

// ---- classes

void plan_classes(Planner& p) {
    for (Family f : {Family::A, Family::C}) {
        const bool a = f == Family::A;
        p.each("classes", "type counts vs census", family_name(f), a ? 7 : 5, [f, a](int n, CheckResult& r) {
            std::map<PartitionType, Count> census;
            for (const auto& sp : brute_force_partitions(f, n, !a)) {
                if (is_nonnesting(sp)) {
                    ++census[census_type(sp)];
                }
            }
            for (const auto& t : types_for(f, n)) {
                const Count formula = a ? kreweras_count(t, n) : type_count_c(t, n);
                if (census[t] != formula) {
                    fail(r, "type " + t.to_string(),
                         json{{"type", t.to_string()}, {"census", census[t]}, {"formula", formula}});
                    return;
                }
            }
            r.detail = std::to_string(census.size()) + " types match";
        });
        p.each("classes", "class sizes vs census", family_name(f), a ? 5 : 4, [f, a](int n, CheckResult& r) {
            std::vector<RootPoset> posets;
            for (const auto& w : all_windows(f, n)) {
                posets.push_back(RootPoset::build(w));
            }
            for (const auto& pi : enumerate_nonnesting(f, n)) {
                const auto arcs = partition_to_antichain(pi);
                Count admitting = 0;
                for (const auto& poset : posets) {
                    admitting += std::all_of(arcs.begin(), arcs.end(),
                                             [&](const Arc& arc) { return poset.index_of(arc).has_value(); })
                                     ? 1
                                     : 0;
                }
                const auto t = partition_type(pi);
                const Count formula = a ? class_size_a(t, n) : class_size_c(t, n);
                if (admitting != formula) {
                    fail(r, "partition " + pi.to_string(),
                         json{{"partition", pi.to_string()}, {"windows", admitting}, {"formula", formula}});
                    return;
                }
            }
            r.detail = "every partition admitted by its class size";
        });
        p.each("classes", "(c,o) class sizes", family_name(f), a ? 6 : 4, [f, a](int n, CheckResult& r) {
            std::map<COVectors, std::pair<Count, Count>> census;
            if (a) {
                for (const auto& s : parking_functions(n)) {
                    ++census[co_of_sequence(s)].first;
                }
            } else {
                for (const auto& s : all_sequences_c(n)) {
                    ++census[co_of_sequence(s)].first;
                }
            }
            for (const auto& data : antichain_census(f, n)) {
                for (const auto& anti : data.antichains) {
                    ++census[co_vectors(f, n, anti)].second;
                }
            }
            Count valid = 0;
            for (const auto& t : types_for(f, n)) {
                for (const auto& sg : all_sg_pairs(n, t)) {
                    const COVectors co{sg.subset, sg.sizes};
                    if (!is_valid_co(f, n, co)) {
                        continue;
                    }
                    ++valid;
                    const auto [seqs, antis] = census[co];
                    const Count formula = class_size_co(f, co, n);
                    if (seqs != formula || antis != formula) {
                        fail(r, "class " + to_string(co),
                             json{{"co", to_string(co)}, {"sequences", seqs}, {"antichains", antis}, {"formula", formula}});
                        return;
                    }
                }
            }
            expect_equal(r, census.size(), valid, "(c,o) classes");
        });
    }
}

// ---- identities

void plan_identities(Planner& p) {
    p.each("identities", "sum over types = (n+1)^n", "A", 10, [](int n, CheckResult& r) {
        Count total = 0;
        std::vector<Count> terms;
        for (const auto& t : integer_partitions(n)) {
            terms.push_back((static_cast<Count>(n) + 1) * kreweras_count(t, n) * class_size_a(t, n));
            total += terms.back();
        }
        expect_equal(r, total, ipow(static_cast<Count>(n) + 1, n), "sum");
        r.detail += " (" + join_counts(terms, "+") + ")";
    });
    p.each("identities", "sum over types = (2n+1)^n", "C", 8, [](int n, CheckResult& r) {
        Count total = 0;
        std::vector<Count> terms;
        for (const auto& t : types_for(Family::C, n)) {
            terms.push_back(type_count_c(t, n) * class_size_c(t, n));
            total += terms.back();
        }
        expect_equal(r, total, shi_count(Family::C, n), "sum");
        r.detail += " (" + join_counts(terms, "+") + ")";
    });
    for (Family f : {Family::A, Family::C}) {
        p.each("identities", "S_k = M_{n-k}", family_name(f), f == Family::A ? 6 : 4, [f](int n, CheckResult& r) {
            const auto table = sk_mk_counts(f, n);
            if (!table.dual()) {
                fail(r, "duality fails",
                     json{{"S", table.s}, {"M", table.m}, {"refined_mismatches", table.refined_mismatches}});
            } else {
                r.detail = "S=(" + join_counts(table.s) + ") M=(" + join_counts(table.m) + "), classwise equal";
            }
        });
    }
}

// ---- geometry cross-check

void plan_geometry(Planner& p) {
    for (auto [family, limit] : {std::pair{ArrangementFamily::ShiA, 4}, std::pair{ArrangementFamily::ShiC, 2},
                                 std::pair{ArrangementFamily::CoxA, 4}, std::pair{ArrangementFamily::CoxC, 3}}) {
        p.each("geometry-cross-check", "flood fill = sign sweep", to_string(family), limit,
               [family](int n, CheckResult& r) {
                   const auto arr = build_arrangement(family, n);
                   const auto flood = enumerate_regions(arr, EnumerationMode::FloodFill);
                   const auto sweep = enumerate_regions(arr, EnumerationMode::SignSweep);
                   bool same = flood.size() == sweep.size();
                   for (std::size_t k = 0; same && k < flood.size(); ++k) {
                       same = flood[k].signs == sweep[k].signs && flood[k].walls == sweep[k].walls;
                   }
                   if (!same) {
                       fail(r, "region lists differ", json{{"flood", flood.size()}, {"sweep", sweep.size()}});
                   } else {
                       r.detail = std::to_string(flood.size()) + " regions either way";
                   }
               });
    }
    p.each("geometry-cross-check", "Coxeter chambers = n!", "cox-a", 5, [](int n, CheckResult& r) {
        expect_equal(r, enumerate_regions(build_arrangement(ArrangementFamily::CoxA, n)).size(), factorial(n),
                     "chambers");
    });
    p.each("geometry-cross-check", "Coxeter chambers = 2^n n!", "cox-c", 4, [](int n, CheckResult& r) {
        expect_equal(r, enumerate_regions(build_arrangement(ArrangementFamily::CoxC, n)).size(),
                     ipow(2, n) * factorial(n), "chambers");
    });
    for (Family f : {Family::A, Family::C}) {
        p.each("geometry-cross-check", "walls agree with floors_of", to_string(shi_of(f)), f == Family::A ? 4 : 3,
               [f](int n, CheckResult& r) {
                   const auto arr = build_arrangement(shi_of(f), n);
                   for (const auto& region : enumerate_regions(arr)) {
                       const auto label = label_region(arr, region);
                       const auto poset = RootPoset::build(label.window);
                       if (floors_of(poset, label.ceilings) != label.floors ||
                           !poset.is_antichain(label.ceilings)) {
                           fail(r, "region " + region.signs, json{{"signs", region.signs}});
                           return;
                       }
                   }
                   r.detail = "ceilings antichains, floors = floors_of";
               });
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"counts",  "theorem2",   "theorem4",           "bijectivity",
                                                "classes", "identities", "geometry-cross-check"};
    return names;
}

VerificationReport verify(std::string_view suite, int max_n) {
    const auto& names = suite_names();
    require(suite == "all" || std::find(names.begin(), names.end(), suite) != names.end(),
            "unknown suite: " + std::string(suite));
    require(max_n >= 1, "max_n must be at least 1");
    Planner planner{max_n, {}};
    auto wants = [&](std::string_view name) { return suite == "all" || suite == name; };
    if (wants("counts")) {
        plan_counts(planner);
    }
    if (wants("theorem2")) {
        plan_theorem(planner, Family::A);
    }
    if (wants("theorem4")) {
        plan_theorem(planner, Family::C);
    }
    if (wants("bijectivity")) {
        plan_bijectivity(planner);
    }
    if (wants("classes")) {
        plan_classes(planner);
    }
    if (wants("identities")) {
        plan_identities(planner);
    }
    if (wants("geometry-cross-check")) {
        plan_geometry(planner);
    }
    VerificationReport report;
    report.suite = std::string(suite);
    report.max_n = max_n;
    report.checks = parallel_map(planner.tasks.size(), [&](std::size_t k) { return planner.tasks[k](); });
    return report;
}

}  // namespace shi
