#pragma once

// Ground-truth geometry: the Coxeter and Shi arrangements of types A and C
// over exact rationals, their regions, walls, ceilings and floors, and the
// labeling of each region by (window, ceiling antichain).

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shi/combinatorics.hpp"
#include "shi/feasibility.hpp"
#include "shi/root_poset.hpp"

namespace shi {

enum class ArrangementFamily { CoxA, ShiA, CoxC, ShiC };

std::string to_string(ArrangementFamily family);
std::optional<ArrangementFamily> parse_arrangement_family(std::string_view text);
Family root_family(ArrangementFamily family);
bool is_shi(ArrangementFamily family);

/// The hyperplane x_plus - x_minus = level, with x_{-k} = -x_k. Stored also
/// in canonical form normal · x = offset: primitive integer normal whose
/// first nonzero entry is positive.
struct Hyperplane {
    int id = 0;
    int plus = 0;
    int minus = 0;
    int level = 0;
    std::vector<int> normal;
    Rational offset;

    bool through_origin() const { return level == 0; }
    /// e.g. "x1-x2=1", "x1+x3=0", "2x2=1"
    std::string to_string() const;
};

struct Arrangement {
    ArrangementFamily family = ArrangementFamily::ShiA;
    int n = 0;
    std::vector<Hyperplane> hyperplanes;
};

/// Hyperplanes listed by level (0 then 1); within a level type A lists
/// x_i - x_j for i < j, type C lists differences, sums, then 2x_k.
Arrangement build_arrangement(ArrangementFamily family, int n);

struct GeoRegion {
    /// '+' where normal · x > offset, '-' where below, one per hyperplane.
    std::string signs;
    Point witness;
    std::vector<int> walls;
    std::vector<int> ceilings;
    std::vector<int> floors;
};

/// Strict system describing a region; `equal_at` turns one constraint into an equality.
std::vector<LinearConstraint> region_constraints(const Arrangement& arrangement, const std::string& signs,
                                                 std::optional<int> equal_at = std::nullopt);

/// Largest n accepted by enumerate_regions for the family.
int geometric_limit(ArrangementFamily family);

enum class EnumerationMode {
    FloodFill,  ///< breadth-first over the region adjacency graph
    SignSweep   ///< every sign vector tested; slow cross-check
};

/// Complete region list sorted by sign vector.
std::vector<GeoRegion> enumerate_regions(const Arrangement& arrangement,
                                         EnumerationMode mode = EnumerationMode::FloodFill);

/// The region with this sign vector and witness, walls, ceilings and floors filled in.
GeoRegion region_from_signs(const Arrangement& arrangement, std::string signs, Point witness);

bool witness_is_valid(const Arrangement& arrangement, const GeoRegion& region);

struct RegionLabel {
    Window window;
    Antichain ceilings;
    Antichain floors;
};

RegionLabel label_region(const Arrangement& arrangement, const GeoRegion& region);

struct GeometricCensus {
    ArrangementFamily family = ArrangementFamily::ShiA;
    int n = 0;
    std::vector<GeoRegion> regions;
    std::vector<RegionLabel> labels;
    /// Regions per window, in all_windows order.
    std::vector<Count> per_window;
    std::map<int, Count> ceiling_histogram;
    std::map<int, Count> floor_histogram;
    /// Every disagreement with the combinatorial model, one line each.
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }
};

/// Enumerates, labels and cross-checks every region against root posets.
GeometricCensus geometric_census(ArrangementFamily family, int n);

}  // namespace shi
