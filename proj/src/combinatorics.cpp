#include "shi/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "shi/errors.hpp"

namespace shi {

namespace {

constexpr int kMaxNonnestingA = 12;
constexpr int kMaxNonnestingC = 6;
constexpr int kMaxWindowsA = 9;
constexpr int kMaxWindowsC = 7;
constexpr int kMaxSequences = 8;

bool in_ground(Family family, int n, int p) {
    if (family == Family::A) {
        return p >= 1 && p <= n;
    }
    return p != 0 && std::abs(p) <= n;
}

Block negated(const Block& block) {
    Block out;
    out.reserve(block.size());
    for (auto it = block.rbegin(); it != block.rend(); ++it) {
        out.push_back(-*it);
    }
    return out;
}

void normalize_blocks(Blocks& blocks) {
    for (auto& b : blocks) {
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end());
}

}  // namespace

std::string to_string(Family family) { return family == Family::A ? "A" : "C"; }

std::vector<int> ground_set(Family family, int n) {
    std::vector<int> out;
    if (family == Family::C) {
        for (int p = -n; p <= -1; ++p) {
            out.push_back(p);
        }
    }
    for (int p = 1; p <= n; ++p) {
        out.push_back(p);
    }
    return out;
}

int ground_rank(Family family, int n, int p) {
    if (family == Family::A) {
        return p - 1;
    }
    return p < 0 ? p + n : p + n - 1;
}

Arc canonical_arc(Family family, Arc a) {
    if (family == Family::A) {
        return a;
    }
    return std::min(a, mirror(a));
}

std::string to_string(const Arc& a) {
    return "(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")";
}

// ---------------------------------------------------------------------------
// Window

Window::Window(Family family, std::vector<int> values)
    : family_(family), values_(std::move(values)), inverse_(values_.size(), 0) {
    const int n = static_cast<int>(values_.size());
    for (int p = 1; p <= n; ++p) {
        const int v = values_[static_cast<std::size_t>(p - 1)];
        require(v != 0 && std::abs(v) <= n, "window entry out of range: " + std::to_string(v));
        require(family == Family::C || v > 0, "type A window entries must be positive");
        auto& slot = inverse_[static_cast<std::size_t>(std::abs(v) - 1)];
        require(slot == 0, "window repeats absolute value " + std::to_string(std::abs(v)));
        slot = v > 0 ? p : -p;
    }
}

Window Window::type_a(std::vector<int> word) { return Window(Family::A, std::move(word)); }
Window Window::type_c(std::vector<int> window) { return Window(Family::C, std::move(window)); }
Window Window::make(Family family, std::vector<int> values) {
    return Window(family, std::move(values));
}

int Window::operator()(int position) const {
    if (position > 0) {
        return values_[static_cast<std::size_t>(position - 1)];
    }
    return -values_[static_cast<std::size_t>(-position - 1)];
}

int Window::position_of(int value) const {
    const int p = inverse_[static_cast<std::size_t>(std::abs(value) - 1)];
    return value > 0 ? p : -p;
}

std::string Window::to_string() const { return join_ints(values_); }

std::vector<Window> all_windows(Family family, int n) {
    guard_size(n, family == Family::A ? kMaxWindowsA : kMaxWindowsC, "all_windows");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Window> out;
    do {
        if (family == Family::A) {
            out.push_back(Window::type_a(perm));
            continue;
        }
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            std::vector<int> w = perm;
            for (int p = 0; p < n; ++p) {
                if (mask & (1U << (n - 1 - p))) {
                    w[static_cast<std::size_t>(p)] = -w[static_cast<std::size_t>(p)];
                }
            }
            out.push_back(Window::type_c(std::move(w)));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// ---------------------------------------------------------------------------
// PartitionType

PartitionType::PartitionType(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        require(p >= 1, "partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int PartitionType::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int PartitionType::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Count PartitionType::m_lambda() const {
    Count m = 1;
    std::size_t k = 0;
    while (k < parts_.size()) {
        std::size_t run = k;
        while (run < parts_.size() && parts_[run] == parts_[k]) {
            ++run;
        }
        m *= factorial(static_cast<int>(run - k));
        k = run;
    }
    return m;
}

std::string PartitionType::to_string() const { return "(" + join_ints(parts_) + ")"; }

std::vector<PartitionType> integer_partitions(int m) {
    std::vector<PartitionType> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(m, m);
    return out;
}

// ---------------------------------------------------------------------------
// SetPartition

SetPartition::SetPartition(Family family, int n, Blocks blocks)
    : family_(family), n_(n), blocks_(std::move(blocks)) {}

SetPartition SetPartition::from_blocks(Family family, int n, Blocks blocks) {
    require(n >= 0, "n must be nonnegative");
    std::set<int> seen;
    for (const auto& b : blocks) {
        require(!b.empty(), "empty block");
        for (int p : b) {
            require(in_ground(family, n, p), "element " + std::to_string(p) + " not in ground set");
            require(seen.insert(p).second, "element " + std::to_string(p) + " repeated");
        }
    }
    require(seen.size() == ground_set(family, n).size(), "blocks do not cover the ground set");
    normalize_blocks(blocks);
    if (family == Family::C) {
        const std::set<Block> all(blocks.begin(), blocks.end());
        for (const auto& b : blocks) {
            require(all.count(negated(b)) == 1, "type C partition is not symmetric");
        }
    }
    return SetPartition(family, n, std::move(blocks));
}

SetPartition SetPartition::from_arcs(Family family, int n, const std::vector<Arc>& arcs) {
    std::set<Arc> wanted;
    for (const Arc& a : arcs) {
        require(in_ground(family, n, a.i) && in_ground(family, n, a.j) && a.i < a.j,
                "invalid arc " + shi::to_string(a));
        wanted.insert(a);
        if (family == Family::C) {
            wanted.insert(mirror(a));
        }
    }
    const auto ground = ground_set(family, n);
    std::vector<int> parent(ground.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const Arc& a : wanted) {
        parent[static_cast<std::size_t>(find(ground_rank(family, n, a.i)))] =
            find(ground_rank(family, n, a.j));
    }
    std::map<int, Block> grouped;
    for (int p : ground) {
        grouped[find(ground_rank(family, n, p))].push_back(p);
    }
    Blocks blocks;
    for (auto& [root, b] : grouped) {
        blocks.push_back(std::move(b));
    }
    SetPartition result = from_blocks(family, n, std::move(blocks));
    const auto got = result.arcs();
    require(std::vector<Arc>(wanted.begin(), wanted.end()) == got,
            "arc set is not the consecutive-element arc set of a partition");
    return result;
}

std::vector<Arc> SetPartition::arcs() const {
    std::vector<Arc> out;
    for (const auto& b : blocks_) {
        for (std::size_t k = 1; k < b.size(); ++k) {
            out.push_back({b[k - 1], b[k]});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Block> SetPartition::zero_block() const {
    if (family_ == Family::A) {
        return std::nullopt;
    }
    for (const auto& b : blocks_) {
        if (negated(b) == b) {
            return b;
        }
    }
    return std::nullopt;
}

std::string SetPartition::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (k > 0) {
            out += "|";
        }
        out += "{" + join_ints(blocks_[k]) + "}";
    }
    return out;
}

bool is_nonnesting(const SetPartition& partition) {
    const auto arcs = partition.arcs();
    for (const Arc& outer : arcs) {
        for (const Arc& inner : arcs) {
            if (outer.i < inner.i && inner.j < outer.j) {
                return false;
            }
        }
    }
    return true;
}

NonnestingPartition::NonnestingPartition(SetPartition partition) : partition_(std::move(partition)) {
    require(is_nonnesting(partition_), "partition has nested arcs: " + partition_.to_string());
    if (partition_.family() == Family::C) {
        int zero_blocks = 0;
        for (const auto& b : partition_.blocks()) {
            zero_blocks += negated(b) == b ? 1 : 0;
        }
        require(zero_blocks <= 1, "more than one zero block");
    }
}

Blocks NonnestingPartition::block_representatives() const {
    Blocks out;
    for (const auto& b : blocks()) {
        if (family() == Family::A || b.back() > -b.front()) {
            out.push_back(b);
        }
    }
    return out;
}

PartitionType partition_type(const NonnestingPartition& partition) {
    std::vector<int> sizes;
    for (const auto& b : partition.block_representatives()) {
        sizes.push_back(static_cast<int>(b.size()));
    }
    return PartitionType(std::move(sizes));
}

std::vector<NonnestingPartition> enumerate_nonnesting(Family family, int n) {
    guard_size(n, family == Family::A ? kMaxNonnestingA : kMaxNonnestingC, "enumerate_nonnesting");
    const auto ground = ground_set(family, n);
    const int m = static_cast<int>(ground.size());

    // Arcs of a nonnesting diagram close in the order they open, so each
    // element either continues the oldest open block or starts a new one.
    std::vector<int> block_of(static_cast<std::size_t>(m), -1);
    std::deque<int> open;  // block ids awaiting another element, oldest first
    int block_count = 0;
    std::vector<Blocks> found;

    std::function<void(int)> rec = [&](int idx) {
        if (static_cast<int>(open.size()) > m - idx) {
            return;
        }
        if (idx == m) {
            Blocks blocks(static_cast<std::size_t>(block_count));
            for (int k = 0; k < m; ++k) {
                blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(k)])].push_back(
                    ground[static_cast<std::size_t>(k)]);
            }
            found.push_back(std::move(blocks));
            return;
        }
        for (int attach = 0; attach < 2; ++attach) {
            if (attach == 1 && open.empty()) {
                continue;
            }
            int block = 0;
            if (attach == 1) {
                block = open.front();
                open.pop_front();
            } else {
                block = block_count++;
            }
            block_of[static_cast<std::size_t>(idx)] = block;
            for (int reopen = 0; reopen < 2; ++reopen) {
                if (reopen == 1) {
                    open.push_back(block);
                }
                rec(idx + 1);
                if (reopen == 1) {
                    open.pop_back();
                }
            }
            if (attach == 1) {
                open.push_front(block);
            } else {
                --block_count;
            }
        }
    };
    rec(0);

    std::vector<NonnestingPartition> out;
    for (auto& blocks : found) {
        normalize_blocks(blocks);
        if (family == Family::C) {
            const std::set<Block> all(blocks.begin(), blocks.end());
            const bool symmetric = std::all_of(blocks.begin(), blocks.end(),
                                               [&](const Block& b) { return all.count(negated(b)) == 1; });
            if (!symmetric) {
                continue;
            }
        }
        out.emplace_back(SetPartition::from_blocks(family, n, std::move(blocks)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

NonnestingPartition parse_partition(Family family, int n, std::string_view text) {
    Blocks blocks;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == '|' || text[pos] == ' ') {
            ++pos;
            continue;
        }
        require(text[pos] == '{', "expected '{' in partition text");
        const auto close = text.find('}', pos);
        require(close != std::string_view::npos, "unterminated block in partition text");
        blocks.push_back(parse_int_list(text.substr(pos + 1, close - pos - 1)));
        pos = close + 1;
    }
    return NonnestingPartition(SetPartition::from_blocks(family, n, std::move(blocks)));
}

// ---------------------------------------------------------------------------
// Sequences

SequenceA::SequenceA(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    for (int a : entries_) {
        require(a >= 1 && a <= n + 1, "type A sequence entry out of range [1," +
                                          std::to_string(n + 1) + "]: " + std::to_string(a));
    }
}

std::string SequenceA::to_string() const { return join_ints(entries_); }

SequenceC::SequenceC(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    for (int a : entries_) {
        require(std::abs(a) <= n, "type C sequence entry out of range [-" + std::to_string(n) +
                                      "," + std::to_string(n) + "]: " + std::to_string(a));
    }
}

std::string SequenceC::to_string() const { return join_ints(entries_); }

int d_stat(const SequenceA& s) {
    return static_cast<int>(std::set<int>(s.entries().begin(), s.entries().end()).size());
}

int dc_stat(const SequenceC& s) {
    std::set<int> values;
    for (int a : s.entries()) {
        if (a != 0) {
            values.insert(std::abs(a));
        }
    }
    return static_cast<int>(values.size());
}

bool is_parking_function(const SequenceA& s) {
    auto sorted = s.entries();
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] > static_cast<int>(i) + 1) {
            return false;
        }
    }
    return true;
}

namespace {

template <typename F>
void for_each_word(int n, int lo, int hi, F&& visit) {
    std::vector<int> word(static_cast<std::size_t>(n), lo);
    while (true) {
        visit(word);
        int k = n - 1;
        while (k >= 0 && word[static_cast<std::size_t>(k)] == hi) {
            word[static_cast<std::size_t>(k)] = lo;
            --k;
        }
        if (k < 0) {
            return;
        }
        ++word[static_cast<std::size_t>(k)];
    }
}

}  // namespace

std::vector<SequenceA> all_sequences_a(int n) {
    guard_size(n, kMaxSequences, "all_sequences_a");
    std::vector<SequenceA> out;
    for_each_word(n, 1, n + 1, [&](const std::vector<int>& w) { out.emplace_back(w); });
    return out;
}

std::vector<SequenceA> parking_functions(int n) {
    std::vector<SequenceA> out;
    for (auto& s : all_sequences_a(n)) {
        if (is_parking_function(s)) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<SequenceC> all_sequences_c(int n) {
    guard_size(n, kMaxSequences - 1, "all_sequences_c");
    std::vector<SequenceC> out;
    for_each_word(n, -n, n, [&](const std::vector<int>& w) { out.emplace_back(w); });
    return out;
}

// ---------------------------------------------------------------------------
// Text and arithmetic helpers

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto token = text.substr(pos, end - pos);
        while (!token.empty() && token.front() == ' ') {
            token.remove_prefix(1);
        }
        while (!token.empty() && token.back() == ' ') {
            token.remove_suffix(1);
        }
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        require(ec == std::errc() && ptr == token.data() + token.size() && !token.empty(),
                "not an integer: '" + std::string(token) + "'");
        out.push_back(value);
        pos = end + 1;
    }
    return out;
}

std::string join_ints(const std::vector<int>& values, std::string_view separator) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k > 0) {
            out += separator;
        }
        out += std::to_string(values[k]);
    }
    return out;
}

Count factorial(int n) {
    Count out = 1;
    for (int k = 2; k <= n; ++k) {
        out *= static_cast<Count>(k);
    }
    return out;
}

Count binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Count out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * static_cast<Count>(n - k + i) / static_cast<Count>(i);
    }
    return out;
}

Count multinomial(int n, const std::vector<int>& parts) {
    Count out = 1;
    int remaining = n;
    for (int p : parts) {
        out *= binomial(remaining, p);
        remaining -= p;
    }
    return remaining == 0 ? out : 0;
}

Count ipow(Count base, int exponent) {
    Count out = 1;
    for (int k = 0; k < exponent; ++k) {
        out *= base;
    }
    return out;
}

Count catalan(int n) { return binomial(2 * n, n) / static_cast<Count>(n + 1); }

}  // namespace shi
