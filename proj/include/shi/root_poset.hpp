#pragma once

// The posets Q_w (type A) and the mirror-identified Q^C_w (type C) whose
// antichains index the Shi regions inside the cone of w.
//
// Elements are position pairs (i, j), i < j; for type C the pair and its
// mirror (-j, -i) are one element, stored under the member with the smaller
// first coordinate. (i, j) <= (r, s) iff r <= i < j <= s for some choice of
// representatives, so narrow intervals lie below wide ones and the set of
// hyperplanes a region sees on the origin side is a down-set.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shi/combinatorics.hpp"

namespace shi {

/// Sorted list of canonical element representatives.
using Antichain = std::vector<Arc>;
using DownSet = std::vector<Arc>;
using ElementMask = std::uint64_t;

class RootPoset {
public:
    /// Builds Q_w or Q^C_w and checks the order axioms.
    static RootPoset build(const Window& window);

    const Window& window() const { return window_; }
    Family family() const { return window_.family(); }
    int n() const { return window_.n(); }

    std::size_t size() const { return elements_.size(); }
    /// Elements in a linear extension (by interval length, then first coordinate).
    const std::vector<Arc>& elements() const { return elements_; }
    std::optional<std::size_t> index_of(Arc a) const;

    bool leq(std::size_t a, std::size_t b) const { return ((below_[b] >> a) & 1U) != 0; }
    /// Elements strictly below / above element k.
    ElementMask strictly_below(std::size_t k) const { return below_[k] & ~bit(k); }
    ElementMask strictly_above(std::size_t k) const { return above_[k] & ~bit(k); }
    ElementMask comparable(std::size_t k) const { return below_[k] | above_[k]; }

    ElementMask mask_of(const std::vector<Arc>& arcs) const;
    std::vector<Arc> arcs_of(ElementMask mask) const;

    bool is_antichain(const std::vector<Arc>& arcs) const;
    ElementMask down_closure(ElementMask mask) const;
    ElementMask maximal(ElementMask mask) const;
    ElementMask minimal(ElementMask mask) const;
    ElementMask all() const;

    /// Reflexivity, antisymmetry and transitivity; throws ConsistencyError.
    void check_axioms() const;

    /// Element list plus cover relations, one per line.
    std::string dump() const;

    static ElementMask bit(std::size_t k) { return ElementMask{1} << k; }

private:
    explicit RootPoset(Window window) : window_(std::move(window)) {}

    bool contains(Arc narrow, Arc wide) const;

    Window window_;
    std::vector<Arc> elements_;
    std::vector<ElementMask> below_;  // below_[k]: elements <= k, including k
    std::vector<ElementMask> above_;  // above_[k]: elements >= k, including k
};

RootPoset root_poset(const Window& window);

/// All antichains, including the empty one, ordered by size then lexicographically.
std::vector<Antichain> antichains(const RootPoset& poset);
Count antichain_count(const RootPoset& poset);

DownSet down_set(const RootPoset& poset, const Antichain& antichain);
Antichain antichain_of_down_set(const RootPoset& poset, const DownSet& down_set);

/// min(P \ down_set(a)): the floors of the region whose ceilings are a.
Antichain floors_of(const RootPoset& poset, const Antichain& antichain);

/// The nonnesting partition drawn by the antichain's arcs (plus mirrors for C).
NonnestingPartition antichain_to_partition(const RootPoset& poset, const Antichain& antichain);
NonnestingPartition antichain_to_partition(Family family, int n, const Antichain& antichain);
/// Canonical antichain (one representative per mirror pair) of a partition's arcs.
Antichain partition_to_antichain(const NonnestingPartition& partition);

/// j(Q_w) for every window in all_windows order.
std::vector<Count> antichain_counts_by_window(Family family, int n);
/// Σ_w j(Q_w).
Count antichain_count_total(Family family, int n);

}  // namespace shi
