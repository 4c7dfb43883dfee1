#include "shi/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "shi/errors.hpp"

namespace shi {

namespace {

constexpr int kMaxDimension = 6;
constexpr std::size_t kMaxSweepHyperplanes = 20;

std::string coordinate(int k) { return "x" + std::to_string(k); }

Hyperplane make_hyperplane(int n, int plus, int minus, int level) {
    Hyperplane h;
    h.plus = plus;
    h.minus = minus;
    h.level = level;
    h.normal.assign(static_cast<std::size_t>(n), 0);
    h.normal[static_cast<std::size_t>(std::abs(plus) - 1)] += plus > 0 ? 1 : -1;
    h.normal[static_cast<std::size_t>(std::abs(minus) - 1)] -= minus > 0 ? 1 : -1;
    int g = 0;
    for (int v : h.normal) {
        g = std::gcd(g, std::abs(v));
    }
    const auto lead = std::find_if(h.normal.begin(), h.normal.end(), [](int v) { return v != 0; });
    const int scale = *lead > 0 ? g : -g;
    for (int& v : h.normal) {
        v /= scale;
    }
    h.offset = Rational(level, scale);
    h.offset.canonicalize();
    return h;
}

char side(const Hyperplane& h, const Point& x) {
    Rational value = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        value += h.normal[k] * x[k];
    }
    if (value == h.offset) {
        return '0';
    }
    return value > h.offset ? '+' : '-';
}

void fill_walls(const Arrangement& arrangement, GeoRegion& region) {
    region.walls.clear();
    region.ceilings.clear();
    region.floors.clear();
    for (const auto& h : arrangement.hyperplanes) {
        const auto system = region_constraints(arrangement, region.signs, h.id);
        if (!feasible_interior(arrangement.n, system)) {
            continue;
        }
        region.walls.push_back(h.id);
        if (h.through_origin()) {
            continue;
        }
        // the origin lies on the '-' side of every level-1 hyperplane
        (region.signs[static_cast<std::size_t>(h.id)] == '-' ? region.ceilings : region.floors).push_back(h.id);
    }
}

}  // namespace

std::string to_string(ArrangementFamily family) {
    switch (family) {
        case ArrangementFamily::CoxA:
            return "cox-a";
        case ArrangementFamily::ShiA:
            return "shi-a";
        case ArrangementFamily::CoxC:
            return "cox-c";
        case ArrangementFamily::ShiC:
            return "shi-c";
    }
    return "?";
}

std::optional<ArrangementFamily> parse_arrangement_family(std::string_view text) {
    for (auto f : {ArrangementFamily::CoxA, ArrangementFamily::ShiA, ArrangementFamily::CoxC,
                   ArrangementFamily::ShiC}) {
        if (to_string(f) == text) {
            return f;
        }
    }
    return std::nullopt;
}

Family root_family(ArrangementFamily family) {
    return family == ArrangementFamily::CoxA || family == ArrangementFamily::ShiA ? Family::A : Family::C;
}

bool is_shi(ArrangementFamily family) {
    return family == ArrangementFamily::ShiA || family == ArrangementFamily::ShiC;
}

std::string Hyperplane::to_string() const {
    std::string lhs;
    if (plus == -minus) {
        lhs = "2" + coordinate(std::abs(plus));
    } else {
        lhs = coordinate(plus) + (minus > 0 ? "-" : "+") + coordinate(std::abs(minus));
    }
    return lhs + "=" + std::to_string(level);
}

Arrangement build_arrangement(ArrangementFamily family, int n) {
    require(n >= 1, "arrangement dimension must be at least 1");
    guard_size(n, kMaxDimension, "build_arrangement");
    Arrangement arr;
    arr.family = family;
    arr.n = n;
    const int top_level = is_shi(family) ? 1 : 0;
    for (int level = 0; level <= top_level; ++level) {
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                arr.hyperplanes.push_back(make_hyperplane(n, i, j, level));
            }
        }
        if (root_family(family) == Family::C) {
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    arr.hyperplanes.push_back(make_hyperplane(n, i, -j, level));
                }
            }
            for (int k = 1; k <= n; ++k) {
                arr.hyperplanes.push_back(make_hyperplane(n, k, -k, level));
            }
        }
    }
    for (std::size_t k = 0; k < arr.hyperplanes.size(); ++k) {
        arr.hyperplanes[k].id = static_cast<int>(k);
    }
    return arr;
}

int geometric_limit(ArrangementFamily family) {
    switch (family) {
        case ArrangementFamily::CoxA:
            return 5;
        case ArrangementFamily::ShiA:
            return 4;
        case ArrangementFamily::CoxC:
            return 4;
        case ArrangementFamily::ShiC:
            return 3;
    }
    return 0;
}

std::vector<LinearConstraint> region_constraints(const Arrangement& arrangement, const std::string& signs,
                                                 std::optional<int> equal_at) {
    require(signs.size() == arrangement.hyperplanes.size(), "sign vector has wrong length");
    std::vector<LinearConstraint> out;
    for (const auto& h : arrangement.hyperplanes) {
        LinearConstraint c;
        for (int v : h.normal) {
            c.coefficients.emplace_back(v);
        }
        c.rhs = h.offset;
        if (equal_at && *equal_at == h.id) {
            c.relation = Relation::Equal;
        } else {
            c.relation = signs[static_cast<std::size_t>(h.id)] == '+' ? Relation::Greater : Relation::Less;
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<GeoRegion> enumerate_regions(const Arrangement& arrangement, EnumerationMode mode) {
    const int n = arrangement.n;
    const std::size_t m = arrangement.hyperplanes.size();
    guard_size(n, geometric_limit(arrangement.family), "enumerate_regions");
    std::vector<GeoRegion> regions;

    if (mode == EnumerationMode::SignSweep) {
        if (m > kMaxSweepHyperplanes) {
            throw ResourceLimitError("sign sweep over more than 20 hyperplanes");
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            GeoRegion r;
            for (std::size_t k = 0; k < m; ++k) {
                r.signs.push_back((mask >> (m - 1 - k)) & 1U ? '-' : '+');
            }
            auto witness = feasible_interior(n, region_constraints(arrangement, r.signs));
            if (!witness) {
                continue;
            }
            r.witness = std::move(*witness);
            fill_walls(arrangement, r);
            regions.push_back(std::move(r));
        }
    } else {
        // x_i = i/(3n+3) avoids every hyperplane of both families
        Point start;
        for (int i = 1; i <= n; ++i) {
            start.emplace_back(i, 3 * n + 3);
            start.back().canonicalize();
        }
        GeoRegion first;
        for (const auto& h : arrangement.hyperplanes) {
            first.signs.push_back(side(h, start));
        }
        if (first.signs.find('0') != std::string::npos) {
            throw ConsistencyError("flood-fill start point lies on a hyperplane");
        }
        first.witness = start;
        std::unordered_set<std::string> seen{first.signs};
        std::deque<GeoRegion> frontier{std::move(first)};
        while (!frontier.empty()) {
            GeoRegion r = std::move(frontier.front());
            frontier.pop_front();
            fill_walls(arrangement, r);
            for (int wall : r.walls) {
                std::string flipped = r.signs;
                auto& s = flipped[static_cast<std::size_t>(wall)];
                s = s == '+' ? '-' : '+';
                if (!seen.insert(flipped).second) {
                    continue;
                }
                auto witness = feasible_interior(n, region_constraints(arrangement, flipped));
                if (!witness) {
                    throw ConsistencyError("crossing a wall led to an empty sign vector");
                }
                frontier.push_back({std::move(flipped), std::move(*witness), {}, {}, {}});
            }
            regions.push_back(std::move(r));
        }
    }
    std::sort(regions.begin(), regions.end(),
              [](const GeoRegion& a, const GeoRegion& b) { return a.signs < b.signs; });
    return regions;
}

GeoRegion region_from_signs(const Arrangement& arrangement, std::string signs, Point witness) {
    require(witness.size() == static_cast<std::size_t>(arrangement.n), "witness has wrong dimension");
    require(signs.find_first_not_of("+-") == std::string::npos, "sign vector may only contain '+' and '-'");
    GeoRegion region{std::move(signs), std::move(witness), {}, {}, {}};
    require(witness_is_valid(arrangement, region), "witness does not lie in the region " + region.signs);
    fill_walls(arrangement, region);
    return region;
}

bool witness_is_valid(const Arrangement& arrangement, const GeoRegion& region) {
    const auto system = region_constraints(arrangement, region.signs);
    return std::all_of(system.begin(), system.end(),
                       [&](const LinearConstraint& c) { return satisfies(region.witness, c); });
}

RegionLabel label_region(const Arrangement& arrangement, const GeoRegion& region) {
    const int n = arrangement.n;
    const Family family = root_family(arrangement.family);
    auto value_of = [&](int label) -> Rational {
        const Rational& x = region.witness[static_cast<std::size_t>(std::abs(label) - 1)];
        return label > 0 ? x : Rational(-x);
    };
    std::vector<int> labels;
    for (int k = 1; k <= n; ++k) {
        labels.push_back(k);
        if (family == Family::C) {
            labels.push_back(-k);
        }
    }
    std::sort(labels.begin(), labels.end(), [&](int a, int b) { return value_of(a) > value_of(b); });
    for (std::size_t k = 1; k < labels.size(); ++k) {
        if (value_of(labels[k - 1]) == value_of(labels[k])) {
            throw ConsistencyError("witness lies on a Coxeter hyperplane");
        }
    }
    // positions -n..-1,1..n (type C) or 1..n (type A) read the labels in decreasing value
    std::vector<int> window(labels.end() - n, labels.end());
    Window w = Window::make(family, std::move(window));

    auto to_arcs = [&](const std::vector<int>& ids) {
        Antichain out;
        for (int id : ids) {
            const auto& h = arrangement.hyperplanes[static_cast<std::size_t>(id)];
            const Arc a{w.position_of(h.plus), w.position_of(h.minus)};
            if (a.i >= a.j) {
                throw ConsistencyError("wall " + h.to_string() + " does not meet the cone of " + w.to_string());
            }
            out.push_back(canonical_arc(family, a));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return {w, to_arcs(region.ceilings), to_arcs(region.floors)};
}

GeometricCensus geometric_census(ArrangementFamily family, int n) {
    GeometricCensus census;
    census.family = family;
    census.n = n;
    const Family root = root_family(family);
    const auto arrangement = build_arrangement(family, n);
    census.regions = enumerate_regions(arrangement);

    const auto windows = all_windows(root, n);
    std::map<Window, std::size_t> window_index;
    for (std::size_t k = 0; k < windows.size(); ++k) {
        window_index.emplace(windows[k], k);
    }
    census.per_window.assign(windows.size(), 0);

    std::set<std::pair<std::vector<int>, Antichain>> labels_seen;
    for (const auto& region : census.regions) {
        const std::string where = "region " + region.signs;
        if (!witness_is_valid(arrangement, region)) {
            census.problems.push_back(where + ": witness violates its sign vector");
        }
        RegionLabel label = label_region(arrangement, region);
        ++census.per_window[window_index.at(label.window)];
        ++census.ceiling_histogram[static_cast<int>(region.ceilings.size())];
        ++census.floor_histogram[static_cast<int>(region.floors.size())];
        if (!labels_seen.emplace(label.window.values(), label.ceilings).second) {
            census.problems.push_back(where + ": duplicate label at window " + label.window.to_string());
        }
        if (is_shi(family)) {
            const auto poset = RootPoset::build(label.window);
            if (!poset.is_antichain(label.ceilings)) {
                census.problems.push_back(where + ": ceilings are not an antichain");
            } else {
                // hyperplanes of the poset seen from the origin side form a down-set
                std::vector<Arc> origin_side;
                for (const auto& h : arrangement.hyperplanes) {
                    if (h.through_origin()) {
                        continue;
                    }
                    const Arc a{label.window.position_of(h.plus), label.window.position_of(h.minus)};
                    if (a.i < a.j && region.signs[static_cast<std::size_t>(h.id)] == '-') {
                        origin_side.push_back(canonical_arc(root, a));
                    }
                }
                std::sort(origin_side.begin(), origin_side.end());
                origin_side.erase(std::unique(origin_side.begin(), origin_side.end()), origin_side.end());
                const ElementMask mask = poset.mask_of(origin_side);
                if (poset.down_closure(mask) != mask) {
                    census.problems.push_back(where + ": origin-side set is not a down-set");
                } else if (poset.arcs_of(poset.maximal(mask)) != label.ceilings) {
                    census.problems.push_back(where + ": ceilings differ from max(origin-side set)");
                }
                if (floors_of(poset, label.ceilings) != label.floors) {
                    census.problems.push_back(where + ": geometric floors differ from floors_of");
                }
            }
        } else if (!label.ceilings.empty() || !label.floors.empty()) {
            census.problems.push_back(where + ": Coxeter region with ceilings or floors");
        }
        census.labels.push_back(std::move(label));
    }

    for (std::size_t k = 0; k < windows.size(); ++k) {
        const Count expected = is_shi(family) ? antichain_count(RootPoset::build(windows[k])) : 1;
        if (census.per_window[k] != expected) {
            census.problems.push_back("window " + windows[k].to_string() + ": " +
                                      std::to_string(census.per_window[k]) + " regions but " +
                                      std::to_string(expected) + " antichains");
        }
    }
    return census;
}

}  // namespace shi
