#pragma once

// Encodings of nonnesting partitions by (S, g) pairs and (c, o) vectors, the
// bar multisets, shifted and marked permutations, and the maps phi_A / phi_C
// from region addresses to sequences together with their inverses.

#include <string>
#include <vector>

#include "shi/combinatorics.hpp"
#include "shi/root_poset.hpp"

namespace shi {

/// A d-subset S of [n] with sizes g(s); subset is sorted and sizes[k] = g(subset[k]).
struct SGPair {
    std::vector<int> subset;
    std::vector<int> sizes;

    PartitionType type() const { return PartitionType(sizes); }
    int total() const;

    bool operator==(const SGPair&) const = default;
    auto operator<=>(const SGPair&) const = default;
};

/// S = block minima, g = block sizes.
SGPair sg_of_partition_a(const NonnestingPartition& partition);
/// Greedy sweep; throws ValidationError if no nonnesting partition has these minima and sizes.
NonnestingPartition partition_from_sg_a(const SGPair& sg, int n);

/// Type-preserving bijection between nonnesting C_n-partitions and (S, g)
/// pairs: both sides of each type class are listed in canonical order and
/// matched by rank.
SGPair sg_of_partition_c(const NonnestingPartition& partition);
NonnestingPartition partition_from_sg_c(const SGPair& sg, int n);

/// All (S, g) pairs with S ⊆ [n] and Σ g <= n (type C) or Σ g = n (type A),
/// optionally restricted to one type; canonical (lexicographic) order.
std::vector<SGPair> all_sg_pairs(int n, const PartitionType& type);

struct COVectors {
    std::vector<int> c;
    std::vector<int> o;

    bool operator==(const COVectors&) const = default;
    auto operator<=>(const COVectors&) const = default;
};

std::string to_string(const COVectors& co);

COVectors co_vectors(Family family, int n, const Antichain& antichain);
Antichain antichain_from_co(const COVectors& co, int n, Family family);
/// Whether (c, o) satisfies the admissibility conditions of its family.
bool is_valid_co(Family family, int n, const COVectors& co);
/// (c, o) of a sequence: distinct values (type C: nonzero absolute values) and their multiplicities.
COVectors co_of_sequence(const SequenceA& s);
COVectors co_of_sequence(const SequenceC& s);

/// Sorted multiset: g(s) copies of each s in S, plus n - |λ| zeros for type C.
std::vector<int> bar_multiset(const NonnestingPartition& partition);

/// All rotations (mod n+1, representatives 1..n+1) of all rearrangements of
/// the multiset; shift-major, rearrangements lexicographic within a shift.
std::vector<SequenceA> n_shifted_permutations(const std::vector<int>& multiset, int n);
/// All signed rearrangements of the multiset, lexicographic.
std::vector<SequenceC> marked_permutations(const std::vector<int>& multiset);

/// A region of (S^A_n)^{⊔(n+1)} (copy in [n+1]) or of S^C_n (copy fixed at 1).
struct RegionAddress {
    int copy = 1;
    Window window;
    Antichain antichain;

    Family family() const { return window.family(); }
    int n() const { return window.n(); }

    /// "copy=K;w=...;arcs=(i,j)(r,s)"; type C omits the copy field.
    std::string to_string() const;

    bool operator==(const RegionAddress&) const = default;
};

/// Throws ValidationError unless the antichain belongs to the window's poset.
void validate_address(const RegionAddress& address);

/// b_3: for each block of the partition (type C: each representative of a
/// nonzero pair), the value of the bar multiset it is matched with. Blocks
/// are ordered by size and then by position, values by multiplicity and then
/// by value. Returned in block_representatives() order.
std::vector<int> block_values(const NonnestingPartition& partition);

SequenceA phi_a(const RegionAddress& address);
RegionAddress phi_a_inverse(const SequenceA& sequence);
SequenceC phi_c(const RegionAddress& address);
RegionAddress phi_c_inverse(const SequenceC& sequence);

/// Every region address of the family at n (type A: all n+1 copies).
std::vector<RegionAddress> all_addresses(Family family, int n);

}  // namespace shi
