#pragma once

// Closed-form counts, q-polynomials of region statistics, and the
// verification suites that compare them with brute-force censuses.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "shi/bijections.hpp"
#include "shi/combinatorics.hpp"
#include "shi/geometry.hpp"

namespace shi {

class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Count> coefficients);

    /// Adds `count` to the coefficient of q^degree.
    void add(int degree, Count count = 1);
    const std::vector<Count>& coefficients() const { return coefficients_; }
    Count at_one() const;
    /// Divides every coefficient exactly; throws ConsistencyError on a remainder.
    QPolynomial divided_by(Count divisor) const;

    /// "[2, 1]" for 2 + q
    std::string to_string() const;

    bool operator==(const QPolynomial&) const = default;

private:
    void trim();
    std::vector<Count> coefficients_;
};

/// Number of nonnesting A-partitions of [n] of type λ (|λ| = n).
Count kreweras_count(const PartitionType& type, int n);
/// Number of nonnesting C-partitions of [±n] of type λ (|λ| <= n).
Count type_count_c(const PartitionType& type, int n);
/// Number of windows whose poset contains a fixed type-λ partition as an antichain.
Count class_size_a(const PartitionType& type, int n);
Count class_size_c(const PartitionType& type, int n);
/// Size of the (c, o) class of sequences, equal to that of antichains.
Count class_size_co(Family family, const COVectors& co, int n);

struct DualityTable {
    Family family = Family::A;
    int n = 0;
    /// s[k]: sequences with k distinct values (PF(n) for A, A^C(n) for C).
    std::vector<Count> s;
    /// m[k]: antichains of size k over all windows.
    std::vector<Count> m;
    /// (c, o) classes whose sequence and antichain counts differ.
    std::vector<std::string> refined_mismatches;

    bool dual() const;
};

DualityTable sk_mk_counts(Family family, int n);

enum class Statistic {
    Ceilings,
    Floors,
    SequenceDistinct,     ///< q^{n-d} over PF(n) (A) or A^C(n) (C)
    SequenceDistinctAll   ///< q^{n-d} over all of A(n), divided by n+1; same as above for C
};
enum class StatisticMode { Geometric, Combinatorial };

std::string to_string(Statistic statistic);
std::optional<Statistic> parse_statistic(std::string_view text);
std::string to_string(StatisticMode mode);
std::optional<StatisticMode> parse_statistic_mode(std::string_view text);

/// Geometric mode reads walls of the enumerated regions; combinatorial mode
/// uses antichains and floors_of. Sequence statistics ignore the mode.
QPolynomial gf_statistic(ArrangementFamily family, int n, Statistic statistic, StatisticMode mode);

struct CheckResult {
    std::string suite;
    std::string name;
    std::string family;
    int n = 0;
    bool passed = false;
    std::string detail;
    /// Reproducible witness of a failure, empty on success.
    nlohmann::ordered_json counterexample;
};

struct VerificationReport {
    std::string suite;
    int max_n = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::size_t failures() const;
    nlohmann::ordered_json to_json() const;
    std::string to_table() const;
};

const std::vector<std::string>& suite_names();
/// Runs every check of the suite ("all" runs every suite) with n up to max_n,
/// each check capped at its own range. Throws ValidationError on an unknown suite.
VerificationReport verify(std::string_view suite, int max_n);

}  // namespace shi
