#include "shi/bijections.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "shi/errors.hpp"

namespace shi {

int SGPair::total() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

namespace {

void validate_sg(const SGPair& sg, int n) {
    require(sg.subset.size() == sg.sizes.size(), "S and g have different lengths");
    for (std::size_t k = 0; k < sg.subset.size(); ++k) {
        require(sg.subset[k] >= 1 && sg.subset[k] <= n, "S must be a subset of [n]");
        require(k == 0 || sg.subset[k - 1] < sg.subset[k], "S must be sorted without repeats");
        require(sg.sizes[k] >= 1, "g values must be positive");
    }
}

// Rank-matching tables for the type C (S, g) bijection, built once per n.
struct TypeClassTable {
    std::map<SetPartition, SGPair> forward;
    std::map<SGPair, SetPartition> backward;
};

std::shared_ptr<const TypeClassTable> type_class_table(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const TypeClassTable>> cache;
    {
        const std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) {
            return it->second;
        }
    }
    auto table = std::make_shared<TypeClassTable>();
    std::map<PartitionType, std::vector<SetPartition>> by_type;
    for (const auto& p : enumerate_nonnesting(Family::C, n)) {
        by_type[partition_type(p)].push_back(p.partition());
    }
    for (const auto& [type, partitions] : by_type) {
        const auto pairs = all_sg_pairs(n, type);
        if (pairs.size() != partitions.size()) {
            throw ConsistencyError("type class " + type.to_string() + " has " +
                                   std::to_string(partitions.size()) + " partitions but " +
                                   std::to_string(pairs.size()) + " (S,g) pairs");
        }
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            table->forward.emplace(partitions[k], pairs[k]);
            table->backward.emplace(pairs[k], partitions[k]);
        }
    }
    const std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(table)).first->second;
}

}  // namespace

// ---------------------------------------------------------------------------
// (S, g) pairs

SGPair sg_of_partition_a(const NonnestingPartition& partition) {
    require(partition.family() == Family::A, "expected a type A partition");
    SGPair sg;
    for (const auto& b : partition.blocks()) {
        sg.subset.push_back(b.front());
        sg.sizes.push_back(static_cast<int>(b.size()));
    }
    return sg;
}

NonnestingPartition partition_from_sg_a(const SGPair& sg, int n) {
    validate_sg(sg, n);
    require(sg.total() == n, "g values must sum to n");
    struct OpenBlock {
        Block elements;
        int target;
    };
    std::vector<OpenBlock> blocks;
    std::size_t next_min = 0;
    for (int x = 1; x <= n; ++x) {
        if (next_min < sg.subset.size() && sg.subset[next_min] == x) {
            blocks.push_back({{x}, sg.sizes[next_min]});
            ++next_min;
            continue;
        }
        OpenBlock* best = nullptr;
        for (auto& b : blocks) {
            if (static_cast<int>(b.elements.size()) < b.target &&
                (best == nullptr || b.elements.back() < best->elements.back())) {
                best = &b;
            }
        }
        require(best != nullptr, "no nonnesting partition with these block minima and sizes");
        best->elements.push_back(x);
    }
    Blocks out;
    for (auto& b : blocks) {
        require(static_cast<int>(b.elements.size()) == b.target,
                "no nonnesting partition with these block minima and sizes");
        out.push_back(std::move(b.elements));
    }
    return NonnestingPartition(SetPartition::from_blocks(Family::A, n, std::move(out)));
}

SGPair sg_of_partition_c(const NonnestingPartition& partition) {
    require(partition.family() == Family::C, "expected a type C partition");
    const auto table = type_class_table(partition.n());
    return table->forward.at(partition.partition());
}

NonnestingPartition partition_from_sg_c(const SGPair& sg, int n) {
    validate_sg(sg, n);
    require(sg.total() <= n, "g values must sum to at most n");
    const auto table = type_class_table(n);
    const auto it = table->backward.find(sg);
    if (it == table->backward.end()) {
        throw ConsistencyError("no type C partition for a valid (S,g) pair");
    }
    return NonnestingPartition(it->second);
}

std::vector<SGPair> all_sg_pairs(int n, const PartitionType& type) {
    const int d = type.d();
    std::vector<SGPair> out;
    if (d > n) {
        return out;
    }
    std::vector<int> sizes_sorted(type.parts().rbegin(), type.parts().rend());
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + d, true);
    do {
        std::vector<int> subset;
        for (int x = 1; x <= n; ++x) {
            if (pick[static_cast<std::size_t>(x - 1)]) {
                subset.push_back(x);
            }
        }
        auto sizes = sizes_sorted;
        do {
            out.push_back({subset, sizes});
        } while (std::next_permutation(sizes.begin(), sizes.end()));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

// ---------------------------------------------------------------------------
// (c, o) vectors

std::string to_string(const COVectors& co) {
    return "c=(" + join_ints(co.c) + ");o=(" + join_ints(co.o) + ")";
}

COVectors co_vectors(Family family, int n, const Antichain& antichain) {
    const auto partition = antichain_to_partition(family, n, antichain);
    const SGPair sg = family == Family::A ? sg_of_partition_a(partition) : sg_of_partition_c(partition);
    return {sg.subset, sg.sizes};
}

bool is_valid_co(Family family, int n, const COVectors& co) {
    if (co.c.size() != co.o.size()) {
        return false;
    }
    int total = 0;
    for (std::size_t k = 0; k < co.c.size(); ++k) {
        if (co.o[k] <= 0 || co.c[k] < 1 || co.c[k] > n || (k > 0 && co.c[k] <= co.c[k - 1])) {
            return false;
        }
        if (family == Family::A && co.c[k] > total + 1) {
            return false;
        }
        total += co.o[k];
    }
    if (family == Family::A) {
        return total == n && (n == 0 || (!co.c.empty() && co.c.front() == 1));
    }
    return total <= n;
}

Antichain antichain_from_co(const COVectors& co, int n, Family family) {
    require(is_valid_co(family, n, co), "invalid (c,o) vectors " + to_string(co));
    const SGPair sg{co.c, co.o};
    const auto partition = family == Family::A ? partition_from_sg_a(sg, n) : partition_from_sg_c(sg, n);
    return partition_to_antichain(partition);
}

namespace {

COVectors co_from_values(const std::vector<int>& values) {
    std::map<int, int> counts;
    for (int v : values) {
        ++counts[v];
    }
    COVectors co;
    for (const auto& [v, m] : counts) {
        co.c.push_back(v);
        co.o.push_back(m);
    }
    return co;
}

}  // namespace

COVectors co_of_sequence(const SequenceA& s) { return co_from_values(s.entries()); }

COVectors co_of_sequence(const SequenceC& s) {
    std::vector<int> values;
    for (int a : s.entries()) {
        if (a != 0) {
            values.push_back(std::abs(a));
        }
    }
    return co_from_values(values);
}

// ---------------------------------------------------------------------------
// Multisets and their rearrangements

std::vector<int> bar_multiset(const NonnestingPartition& partition) {
    const int n = partition.n();
    const SGPair sg = partition.family() == Family::A ? sg_of_partition_a(partition)
                                                     : sg_of_partition_c(partition);
    std::vector<int> out;
    if (partition.family() == Family::C) {
        out.assign(static_cast<std::size_t>(n - sg.total()), 0);
    }
    for (std::size_t k = 0; k < sg.subset.size(); ++k) {
        out.insert(out.end(), static_cast<std::size_t>(sg.sizes[k]), sg.subset[k]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SequenceA> n_shifted_permutations(const std::vector<int>& multiset, int n) {
    require(static_cast<int>(multiset.size()) == n, "multiset must have n elements");
    auto sorted = multiset;
    std::sort(sorted.begin(), sorted.end());
    std::vector<SequenceA> out;
    for (int shift = 0; shift <= n; ++shift) {
        auto perm = sorted;
        do {
            std::vector<int> entries;
            for (int v : perm) {
                entries.push_back((v - 1 + shift) % (n + 1) + 1);
            }
            out.emplace_back(std::move(entries));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

std::vector<SequenceC> marked_permutations(const std::vector<int>& multiset) {
    auto perm = multiset;
    std::sort(perm.begin(), perm.end());
    std::set<std::vector<int>> found;
    do {
        std::vector<std::size_t> nonzero;
        for (std::size_t k = 0; k < perm.size(); ++k) {
            if (perm[k] != 0) {
                nonzero.push_back(k);
            }
        }
        for (unsigned mask = 0; mask < (1U << nonzero.size()); ++mask) {
            auto entries = perm;
            for (std::size_t b = 0; b < nonzero.size(); ++b) {
                if (mask & (1U << b)) {
                    entries[nonzero[b]] = -entries[nonzero[b]];
                }
            }
            found.insert(std::move(entries));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<SequenceC> out;
    for (const auto& e : found) {
        out.emplace_back(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Region addresses and phi

std::string RegionAddress::to_string() const {
    std::string out;
    if (family() == Family::A) {
        out += "copy=" + std::to_string(copy) + ";";
    }
    out += "w=" + window.to_string() + ";arcs=";
    for (const Arc& a : antichain) {
        out += shi::to_string(a);
    }
    return out;
}

void validate_address(const RegionAddress& address) {
    const int n = address.n();
    if (address.family() == Family::A) {
        require(address.copy >= 1 && address.copy <= n + 1, "copy index must lie in [1, n+1]");
    } else {
        require(address.copy == 1, "type C addresses have no copy index");
    }
    require(std::is_sorted(address.antichain.begin(), address.antichain.end()),
            "antichain arcs must be sorted");
    for (const Arc& a : address.antichain) {
        require(canonical_arc(address.family(), a) == a, "antichain arcs must be canonical representatives");
    }
    const auto poset = RootPoset::build(address.window);
    require(poset.is_antichain(address.antichain),
            "not an antichain of the poset for window " + address.window.to_string());
}

std::vector<int> block_values(const NonnestingPartition& partition) {
    const auto reps = partition.block_representatives();
    const SGPair sg = partition.family() == Family::A ? sg_of_partition_a(partition)
                                                     : sg_of_partition_c(partition);
    std::vector<std::size_t> block_order(reps.size());
    std::iota(block_order.begin(), block_order.end(), std::size_t{0});
    std::sort(block_order.begin(), block_order.end(), [&](std::size_t a, std::size_t b) {
        if (reps[a].size() != reps[b].size()) {
            return reps[a].size() < reps[b].size();
        }
        return reps[a] < reps[b];
    });
    std::vector<std::pair<int, int>> value_order;  // (multiplicity, value)
    for (std::size_t k = 0; k < sg.subset.size(); ++k) {
        value_order.emplace_back(sg.sizes[k], sg.subset[k]);
    }
    std::sort(value_order.begin(), value_order.end());
    if (value_order.size() != reps.size()) {
        throw ConsistencyError("block count differs from |S| for " + partition.to_string());
    }
    std::vector<int> values(reps.size());
    for (std::size_t t = 0; t < reps.size(); ++t) {
        const auto& [size, value] = value_order[t];
        if (static_cast<std::size_t>(size) != reps[block_order[t]].size()) {
            throw ConsistencyError("(S,g) pair is not of the partition's type: " + partition.to_string());
        }
        values[block_order[t]] = value;
    }
    return values;
}

SequenceA phi_a(const RegionAddress& address) {
    require(address.family() == Family::A, "phi_a needs a type A address");
    validate_address(address);
    const int n = address.n();
    const auto partition = antichain_to_partition(Family::A, n, address.antichain);
    const auto blocks = partition.block_representatives();
    const auto values = block_values(partition);
    std::vector<int> entries(static_cast<std::size_t>(n), 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const int shifted = (values[b] + address.copy - 2) % (n + 1) + 1;
        for (int p : blocks[b]) {
            entries[static_cast<std::size_t>(address.window(p) - 1)] = shifted;
        }
    }
    return SequenceA(std::move(entries));
}

RegionAddress phi_a_inverse(const SequenceA& sequence) {
    const int n = sequence.n();
    require(n >= 1, "empty sequence");
    const int modulus = n + 1;
    std::vector<int> unshifted;
    int copy = 0;
    for (int k = 1; k <= modulus; ++k) {
        std::vector<int> candidate;
        for (int a : sequence.entries()) {
            candidate.push_back(((a - k) % modulus + modulus) % modulus + 1);
        }
        if (is_parking_function(SequenceA(candidate))) {
            if (copy != 0) {
                throw ConsistencyError("two rotations of " + sequence.to_string() + " are parking functions");
            }
            copy = k;
            unshifted = std::move(candidate);
        }
    }
    if (copy == 0) {
        throw ConsistencyError("no rotation of " + sequence.to_string() + " is a parking function");
    }

    const COVectors co = co_from_values(unshifted);
    const auto partition = partition_from_sg_a({co.c, co.o}, n);
    const auto blocks = partition.block_representatives();
    const auto values = block_values(partition);
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::vector<int> labels;
        for (int t = 1; t <= n; ++t) {
            if (unshifted[static_cast<std::size_t>(t - 1)] == values[b]) {
                labels.push_back(t);
            }
        }
        if (labels.size() != blocks[b].size()) {
            throw ConsistencyError("label count mismatch inverting " + sequence.to_string());
        }
        for (std::size_t k = 0; k < labels.size(); ++k) {
            word[static_cast<std::size_t>(blocks[b][k] - 1)] = labels[k];
        }
    }
    RegionAddress address{copy, Window::type_a(std::move(word)), partition_to_antichain(partition)};
    validate_address(address);
    return address;
}

SequenceC phi_c(const RegionAddress& address) {
    require(address.family() == Family::C, "phi_c needs a type C address");
    validate_address(address);
    const int n = address.n();
    const auto partition = antichain_to_partition(Family::C, n, address.antichain);
    const auto reps = partition.block_representatives();
    const auto values = block_values(partition);
    // positions not covered by a representative carry the zero block
    std::vector<int> entries(static_cast<std::size_t>(n), 0);
    for (std::size_t b = 0; b < reps.size(); ++b) {
        for (int p : reps[b]) {
            const int label = address.window(p);
            entries[static_cast<std::size_t>(std::abs(label) - 1)] = label > 0 ? values[b] : -values[b];
        }
    }
    return SequenceC(std::move(entries));
}

RegionAddress phi_c_inverse(const SequenceC& sequence) {
    const int n = sequence.n();
    require(n >= 1, "empty sequence");
    const COVectors co = co_of_sequence(sequence);
    const auto partition = partition_from_sg_c({co.c, co.o}, n);
    const auto reps = partition.block_representatives();
    const auto values = block_values(partition);

    std::vector<int> window(static_cast<std::size_t>(n), 0);
    auto assign = [&](int position, int label) {
        if (position > 0) {
            window[static_cast<std::size_t>(position - 1)] = label;
        } else {
            window[static_cast<std::size_t>(-position - 1)] = -label;
        }
    };
    for (std::size_t b = 0; b < reps.size(); ++b) {
        // a nonzero block reads positive labels increasing, then negative labels increasing
        std::vector<int> positive;
        std::vector<int> negative;
        for (int t = 1; t <= n; ++t) {
            const int a = sequence[t - 1];
            if (a == values[b]) {
                positive.push_back(t);
            } else if (a == -values[b]) {
                negative.push_back(-t);
            }
        }
        std::sort(negative.begin(), negative.end());
        positive.insert(positive.end(), negative.begin(), negative.end());
        if (positive.size() != reps[b].size()) {
            throw ConsistencyError("label count mismatch inverting " + sequence.to_string());
        }
        for (std::size_t k = 0; k < positive.size(); ++k) {
            assign(reps[b][k], positive[k]);
        }
    }
    if (const auto zero = partition.zero_block()) {
        std::vector<int> labels;
        for (int t = 1; t <= n; ++t) {
            if (sequence[t - 1] == 0) {
                labels.push_back(t);
            }
        }
        if (labels.size() * 2 != zero->size()) {
            throw ConsistencyError("zero block size mismatch inverting " + sequence.to_string());
        }
        // the negative half of the zero block carries the positive labels, increasing
        for (std::size_t k = 0; k < labels.size(); ++k) {
            assign((*zero)[k], labels[k]);
        }
    }
    RegionAddress address{1, Window::type_c(std::move(window)), partition_to_antichain(partition)};
    validate_address(address);
    return address;
}

std::vector<RegionAddress> all_addresses(Family family, int n) {
    std::vector<RegionAddress> out;
    const int copies = family == Family::A ? n + 1 : 1;
    const auto windows = all_windows(family, n);
    std::vector<std::vector<Antichain>> per_window;
    per_window.reserve(windows.size());
    for (const auto& w : windows) {
        per_window.push_back(antichains(RootPoset::build(w)));
    }
    for (int copy = 1; copy <= copies; ++copy) {
        for (std::size_t k = 0; k < windows.size(); ++k) {
            for (const auto& a : per_window[k]) {
                out.push_back({copy, windows[k], a});
            }
        }
    }
    return out;
}

}  // namespace shi
