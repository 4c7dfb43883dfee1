#pragma once

// Core combinatorial objects: windows (permutations and signed permutations),
// set partitions of [n] and [±n], partition types, and the sequence families
// A(n), PF(n) and A^C(n).
//
// Positions and values are always the actual integers of the ground set.
// For type C the ground order is -n,...,-1,1,...,n, which coincides with the
// integer order, so comparisons never go through array offsets.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shi {

enum class Family { A, C };

std::string to_string(Family family);

using Count = std::uint64_t;
using Block = std::vector<int>;
using Blocks = std::vector<Block>;

std::vector<int> ground_set(Family family, int n);

/// Zero-based index of p in the ground order.
int ground_rank(Family family, int n, int p);

/// An arc (i, j), i < j, joining consecutive elements of a block.
struct Arc {
    int i = 0;
    int j = 0;

    auto operator<=>(const Arc&) const = default;
};

inline Arc mirror(Arc a) { return {-a.j, -a.i}; }

/// For type C, the member of {a, mirror(a)} with the smaller first coordinate.
Arc canonical_arc(Family family, Arc a);

std::string to_string(const Arc& a);

/// One-line notation w(1..n) of a permutation (type A) or the window of a
/// signed permutation (type C, extended by w(-i) = -w(i)).
class Window {
public:
    /// The empty type-A window.
    Window() = default;
    static Window type_a(std::vector<int> word);
    static Window type_c(std::vector<int> window);
    static Window make(Family family, std::vector<int> values);

    Family family() const { return family_; }
    int n() const { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const { return values_; }

    /// w(p) for p in the ground set.
    int operator()(int position) const;
    /// w^{-1}(value) for value in the ground set.
    int position_of(int value) const;

    /// Comma-separated window, e.g. "1,3,2" or "-2,1".
    std::string to_string() const;

    bool operator==(const Window&) const = default;
    auto operator<=>(const Window&) const = default;

private:
    Window(Family family, std::vector<int> values);

    Family family_ = Family::A;
    std::vector<int> values_;
    std::vector<int> inverse_;  // inverse_[|v|-1] = position of |v|, signed for C
};

/// Every window of the family in canonical order: type A in lexicographic
/// one-line order; type C by permutation of absolute values (lexicographic),
/// then sign pattern ('+' before '-', first position most significant).
std::vector<Window> all_windows(Family family, int n);

/// Integer partition λ_1 >= ... >= λ_d >= 1.
class PartitionType {
public:
    PartitionType() = default;
    explicit PartitionType(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int d() const { return static_cast<int>(parts_.size()); }
    int size() const;
    /// r_i, the number of parts equal to i.
    int multiplicity(int i) const;
    /// m_λ = ∏ r_i!.
    Count m_lambda() const;

    /// "(2,1)"; the empty partition prints as "()".
    std::string to_string() const;

    bool operator==(const PartitionType&) const = default;
    auto operator<=>(const PartitionType&) const = default;

private:
    std::vector<int> parts_;
};

/// All partitions of m, in decreasing lexicographic order.
std::vector<PartitionType> integer_partitions(int m);

/// A set partition of the ground set of a family. Type C partitions are
/// symmetric: B a block implies -B a block.
class SetPartition {
public:
    static SetPartition from_blocks(Family family, int n, Blocks blocks);
    /// Builds the partition whose consecutive-element arcs are exactly `arcs`
    /// (for type C the mirror of every arc is added).
    static SetPartition from_arcs(Family family, int n, const std::vector<Arc>& arcs);

    Family family() const { return family_; }
    int n() const { return n_; }
    /// Blocks sorted internally, ordered by minimum element.
    const Blocks& blocks() const { return blocks_; }

    /// All arcs, sorted; for type C both members of every mirror pair.
    std::vector<Arc> arcs() const;
    std::optional<Block> zero_block() const;

    /// "{-5,-3,3,5}|{-4,-1}|{-2}|{1,4}|{2}"
    std::string to_string() const;

    bool operator==(const SetPartition&) const = default;
    auto operator<=>(const SetPartition&) const = default;

private:
    SetPartition(Family family, int n, Blocks blocks);

    Family family_ = Family::A;
    int n_ = 0;
    Blocks blocks_;
};

bool is_nonnesting(const SetPartition& partition);

/// A set partition whose arc diagram has no strictly nested arcs.
class NonnestingPartition {
public:
    explicit NonnestingPartition(SetPartition partition);

    const SetPartition& partition() const { return partition_; }
    Family family() const { return partition_.family(); }
    int n() const { return partition_.n(); }
    const Blocks& blocks() const { return partition_.blocks(); }
    std::vector<Arc> arcs() const { return partition_.arcs(); }
    std::optional<Block> zero_block() const { return partition_.zero_block(); }
    std::string to_string() const { return partition_.to_string(); }

    /// Nonzero blocks paired with their mirrors; element k holds the
    /// representative, the block of {B, -B} containing the larger maximum.
    /// Type A: every block is its own representative.
    Blocks block_representatives() const;

    bool operator==(const NonnestingPartition&) const = default;
    auto operator<=>(const NonnestingPartition&) const = default;

private:
    SetPartition partition_;
};

PartitionType partition_type(const NonnestingPartition& partition);

/// Complete list of nonnesting partitions, ordered lexicographically by block list.
std::vector<NonnestingPartition> enumerate_nonnesting(Family family, int n);

NonnestingPartition parse_partition(Family family, int n, std::string_view text);

/// a_1..a_n with a_i in [n+1].
class SequenceA {
public:
    explicit SequenceA(std::vector<int> entries);

    int n() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    std::string to_string() const;

    bool operator==(const SequenceA&) const = default;
    auto operator<=>(const SequenceA&) const = default;

private:
    std::vector<int> entries_;
};

/// a_1..a_n with a_i in [±n] ∪ {0}.
class SequenceC {
public:
    explicit SequenceC(std::vector<int> entries);

    int n() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    std::string to_string() const;

    bool operator==(const SequenceC&) const = default;
    auto operator<=>(const SequenceC&) const = default;

private:
    std::vector<int> entries_;
};

/// Number of distinct entries.
int d_stat(const SequenceA& s);
/// Number of distinct absolute values among the nonzero entries.
int dc_stat(const SequenceC& s);

bool is_parking_function(const SequenceA& s);

/// A(n) in lexicographic order.
std::vector<SequenceA> all_sequences_a(int n);
/// PF(n) in lexicographic order.
std::vector<SequenceA> parking_functions(int n);
/// A^C(n) in lexicographic order.
std::vector<SequenceC> all_sequences_c(int n);

/// Comma-separated integers, e.g. "1,3,1" or "-1,0,2".
std::vector<int> parse_int_list(std::string_view text);
std::string join_ints(const std::vector<int>& values, std::string_view separator = ",");

Count factorial(int n);
Count binomial(int n, int k);
/// n! / (k_1! ... k_m!) for parts summing to n.
Count multinomial(int n, const std::vector<int>& parts);
Count ipow(Count base, int exponent);
Count catalan(int n);

}  // namespace shi
