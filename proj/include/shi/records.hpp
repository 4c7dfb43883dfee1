#pragma once

// Region records: one row per region of a Shi arrangement (or one copy of it),
// carrying its address, statistics, partition and sequence; JSON and CSV forms.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shi/bijections.hpp"
#include "shi/geometry.hpp"

namespace shi {

struct RegionRecord {
    ArrangementFamily family = ArrangementFamily::ShiA;
    int n = 0;
    std::optional<int> copy;  // type A only
    Window window;
    Antichain antichain;
    int ceilings = 0;
    int floors = 0;
    Antichain floor_arcs;
    std::string partition;
    std::vector<int> sequence;
    std::optional<std::string> sign_vector;
    std::optional<Point> witness;

    RegionAddress address() const;
};

/// Record of a region address, without geometry.
RegionRecord record_of(const RegionAddress& address);

/// Geometric regions of shi-a / shi-c, sorted by sign vector, each labeled as
/// a region of the given copy (type A; ignored for C).
std::vector<RegionRecord> region_records(ArrangementFamily family, int n, int copy = 1);
/// Every region address (type A: all copies unless one is chosen), in
/// (copy, window, antichain) order.
std::vector<RegionRecord> bijection_records(ArrangementFamily family, int n, std::optional<int> copy = std::nullopt);

/// Recomputes everything derivable from the address and compares; throws
/// ValidationError or ConsistencyError.
void validate_record(const RegionRecord& record);

nlohmann::ordered_json to_json(const RegionRecord& record);
RegionRecord record_from_json(const nlohmann::ordered_json& j);

/// Column order: family,n,copy,window,antichain,ceilings,floors,floor_arcs,
/// partition,sequence,sign_vector,witness
std::string csv_header();
std::string to_csv_row(const RegionRecord& record);

std::string arcs_to_string(const Antichain& arcs);

}  // namespace shi
