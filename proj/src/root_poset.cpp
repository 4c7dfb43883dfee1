#include "shi/root_poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "shi/errors.hpp"
#include "shi/parallel.hpp"

namespace shi {

namespace {

constexpr std::size_t kMaxElements = 64;

int arc_length(Family family, int n, Arc a) {
    return ground_rank(family, n, a.j) - ground_rank(family, n, a.i);
}

}  // namespace

RootPoset RootPoset::build(const Window& window) {
    RootPoset poset(window);
    const Family family = window.family();
    const int n = window.n();
    const auto ground = ground_set(family, n);

    std::set<Arc> found;
    for (int i : ground) {
        for (int j : ground) {
            if (i >= j) {
                continue;
            }
            const bool member = family == Family::A ? window(i) < window(j)
                                                    : 0 < window(i) && window(i) <= std::abs(window(j));
            if (member) {
                found.insert(canonical_arc(family, {i, j}));
            }
        }
    }
    if (found.size() > kMaxElements) {
        throw ResourceLimitError("root poset has more than 64 elements");
    }
    poset.elements_.assign(found.begin(), found.end());
    std::stable_sort(poset.elements_.begin(), poset.elements_.end(), [&](const Arc& a, const Arc& b) {
        return arc_length(family, n, a) < arc_length(family, n, b);
    });

    const std::size_t m = poset.elements_.size();
    poset.below_.assign(m, 0);
    poset.above_.assign(m, 0);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (poset.contains(poset.elements_[a], poset.elements_[b])) {
                poset.below_[b] |= bit(a);
                poset.above_[a] |= bit(b);
            }
        }
    }
    poset.check_axioms();
    return poset;
}

RootPoset root_poset(const Window& window) { return RootPoset::build(window); }

bool RootPoset::contains(Arc narrow, Arc wide) const {
    auto inside = [](Arc x, Arc y) { return y.i <= x.i && x.j <= y.j; };
    if (inside(narrow, wide)) {
        return true;
    }
    return family() == Family::C && inside(mirror(narrow), wide);
}

std::optional<std::size_t> RootPoset::index_of(Arc a) const {
    const Arc key = canonical_arc(family(), a);
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        if (elements_[k] == key) {
            return k;
        }
    }
    return std::nullopt;
}

ElementMask RootPoset::mask_of(const std::vector<Arc>& arcs) const {
    ElementMask mask = 0;
    for (const Arc& a : arcs) {
        const auto k = index_of(a);
        require(k.has_value(), "arc " + to_string(a) + " is not an element of the poset for window " +
                                   window_.to_string());
        mask |= bit(*k);
    }
    return mask;
}

std::vector<Arc> RootPoset::arcs_of(ElementMask mask) const {
    std::vector<Arc> out;
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        if ((mask >> k) & 1U) {
            out.push_back(elements_[k]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool RootPoset::is_antichain(const std::vector<Arc>& arcs) const {
    std::set<Arc> seen;
    for (const Arc& a : arcs) {
        const auto k = index_of(a);
        if (!k || !seen.insert(elements_[*k]).second) {
            return false;
        }
    }
    const ElementMask mask = mask_of(arcs);
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        if (((mask >> k) & 1U) && (mask & (comparable(k) & ~bit(k)))) {
            return false;
        }
    }
    return true;
}

ElementMask RootPoset::down_closure(ElementMask mask) const {
    ElementMask out = 0;
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        if ((mask >> k) & 1U) {
            out |= below_[k];
        }
    }
    return out;
}

ElementMask RootPoset::maximal(ElementMask mask) const {
    ElementMask out = 0;
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        if (((mask >> k) & 1U) && (mask & strictly_above(k)) == 0) {
            out |= bit(k);
        }
    }
    return out;
}

ElementMask RootPoset::minimal(ElementMask mask) const {
    ElementMask out = 0;
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        if (((mask >> k) & 1U) && (mask & strictly_below(k)) == 0) {
            out |= bit(k);
        }
    }
    return out;
}

ElementMask RootPoset::all() const {
    return elements_.size() == 64 ? ~ElementMask{0} : bit(elements_.size()) - 1;
}

void RootPoset::check_axioms() const {
    const std::size_t m = elements_.size();
    for (std::size_t a = 0; a < m; ++a) {
        if (!leq(a, a)) {
            throw ConsistencyError("reflexivity fails at " + to_string(elements_[a]));
        }
        for (std::size_t b = 0; b < m; ++b) {
            if (a != b && leq(a, b) && leq(b, a)) {
                throw ConsistencyError("antisymmetry fails for " + to_string(elements_[a]) + ", " +
                                       to_string(elements_[b]) + " at window " + window_.to_string());
            }
            if (!leq(a, b)) {
                continue;
            }
            for (std::size_t c = 0; c < m; ++c) {
                if (leq(b, c) && !leq(a, c)) {
                    throw ConsistencyError("transitivity fails at window " + window_.to_string());
                }
            }
        }
    }
}

std::string RootPoset::dump() const {
    std::ostringstream out;
    out << "poset " << to_string(family()) << " window " << window_.to_string() << "\n";
    for (const Arc& a : elements_) {
        out << "element " << to_string(a) << "\n";
    }
    for (std::size_t a = 0; a < elements_.size(); ++a) {
        for (std::size_t b = 0; b < elements_.size(); ++b) {
            if (a == b || !leq(a, b)) {
                continue;
            }
            // a < b is a cover iff nothing lies strictly between them
            if ((strictly_above(a) & strictly_below(b)) == 0) {
                out << "cover " << to_string(elements_[a]) << " < " << to_string(elements_[b]) << "\n";
            }
        }
    }
    return out.str();
}

std::vector<Antichain> antichains(const RootPoset& poset) {
    const std::size_t m = poset.size();
    std::vector<ElementMask> masks;
    // Walk the linear extension; an element may join only if it is
    // incomparable to everything already chosen.
    std::function<void(std::size_t, ElementMask, ElementMask)> rec = [&](std::size_t k, ElementMask chosen,
                                                                         ElementMask blocked) {
        if (k == m) {
            masks.push_back(chosen);
            return;
        }
        rec(k + 1, chosen, blocked);
        if (((blocked >> k) & 1U) == 0) {
            rec(k + 1, chosen | RootPoset::bit(k), blocked | poset.comparable(k));
        }
    };
    rec(0, 0, 0);

    std::vector<Antichain> out;
    out.reserve(masks.size());
    for (ElementMask mask : masks) {
        out.push_back(poset.arcs_of(mask));
    }
    std::sort(out.begin(), out.end(), [](const Antichain& a, const Antichain& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    });
    return out;
}

Count antichain_count(const RootPoset& poset) {
    std::function<Count(ElementMask)> count = [&](ElementMask available) -> Count {
        if (available == 0) {
            return 1;
        }
        const auto k = static_cast<std::size_t>(std::countr_zero(available));
        const ElementMask rest = available & ~RootPoset::bit(k);
        return count(rest) + count(rest & ~poset.comparable(k));
    };
    return count(poset.all());
}

DownSet down_set(const RootPoset& poset, const Antichain& antichain) {
    require(poset.is_antichain(antichain), "not an antichain of the poset");
    return poset.arcs_of(poset.down_closure(poset.mask_of(antichain)));
}

Antichain antichain_of_down_set(const RootPoset& poset, const DownSet& down) {
    const ElementMask mask = poset.mask_of(down);
    require(poset.down_closure(mask) == mask, "not a down-set of the poset");
    return poset.arcs_of(poset.maximal(mask));
}

Antichain floors_of(const RootPoset& poset, const Antichain& antichain) {
    require(poset.is_antichain(antichain), "not an antichain of the poset");
    const ElementMask down = poset.down_closure(poset.mask_of(antichain));
    return poset.arcs_of(poset.minimal(poset.all() & ~down));
}

NonnestingPartition antichain_to_partition(Family family, int n, const Antichain& antichain) {
    return NonnestingPartition(SetPartition::from_arcs(family, n, antichain));
}

NonnestingPartition antichain_to_partition(const RootPoset& poset, const Antichain& antichain) {
    require(poset.is_antichain(antichain), "not an antichain of the poset");
    return antichain_to_partition(poset.family(), poset.n(), antichain);
}

Antichain partition_to_antichain(const NonnestingPartition& partition) {
    std::set<Arc> reps;
    for (const Arc& a : partition.arcs()) {
        reps.insert(canonical_arc(partition.family(), a));
    }
    return {reps.begin(), reps.end()};
}

std::vector<Count> antichain_counts_by_window(Family family, int n) {
    const auto windows = all_windows(family, n);
    return parallel_map(windows.size(),
                        [&](std::size_t k) { return antichain_count(RootPoset::build(windows[k])); });
}

Count antichain_count_total(Family family, int n) {
    const auto counts = antichain_counts_by_window(family, n);
    return std::accumulate(counts.begin(), counts.end(), Count{0});
}

}  // namespace shi
