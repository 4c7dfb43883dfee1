#include "shi/records.hpp"

#include "shi/errors.hpp"
#include "shi/root_poset.hpp"

namespace shi {

using json = nlohmann::ordered_json;

namespace {

void require_shi(ArrangementFamily family) {
    require(is_shi(family), "region records exist for shi-a and shi-c only");
}

std::vector<int> sequence_of(const RegionAddress& address) {
    return address.family() == Family::A ? phi_a(address).entries() : phi_c(address).entries();
}

json arcs_json(const Antichain& arcs) {
    json out = json::array();
    for (const Arc& a : arcs) {
        out.push_back({a.i, a.j});
    }
    return out;
}

Antichain arcs_from_json(const json& j) {
    require(j.is_array(), "arc list must be an array");
    Antichain out;
    for (const auto& pair : j) {
        require(pair.is_array() && pair.size() == 2, "arc must be a pair [i, j]");
        out.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return out;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) {
        return value;
    }
    std::string out = "\"";
    for (char c : value) {
        out += c == '"' ? "\"\"" : std::string(1, c);
    }
    return out + "\"";
}

}  // namespace

std::string arcs_to_string(const Antichain& arcs) {
    std::string out;
    for (const Arc& a : arcs) {
        out += to_string(a);
    }
    return out;
}

RegionAddress RegionRecord::address() const {
    return {copy.value_or(1), window, antichain};
}

RegionRecord record_of(const RegionAddress& address) {
    validate_address(address);
    const auto poset = RootPoset::build(address.window);
    RegionRecord r;
    r.family = address.family() == Family::A ? ArrangementFamily::ShiA : ArrangementFamily::ShiC;
    r.n = address.n();
    if (address.family() == Family::A) {
        r.copy = address.copy;
    }
    r.window = address.window;
    r.antichain = address.antichain;
    r.floor_arcs = floors_of(poset, address.antichain);
    r.ceilings = static_cast<int>(r.antichain.size());
    r.floors = static_cast<int>(r.floor_arcs.size());
    r.partition = antichain_to_partition(poset, address.antichain).to_string();
    r.sequence = sequence_of(address);
    return r;
}

std::vector<RegionRecord> region_records(ArrangementFamily family, int n, int copy) {
    require_shi(family);
    if (root_family(family) == Family::C) {
        require(copy == 1, "type C has a single copy");
    }
    require(copy >= 1 && copy <= n + 1, "copy index must lie in [1, n+1]");
    const auto arrangement = build_arrangement(family, n);
    std::vector<RegionRecord> out;
    for (const auto& region : enumerate_regions(arrangement)) {
        const auto label = label_region(arrangement, region);
        RegionRecord r = record_of({copy, label.window, label.ceilings});
        if (r.floor_arcs != label.floors) {
            throw ConsistencyError("geometric floors of " + region.signs + " differ from floors_of");
        }
        r.sign_vector = region.signs;
        r.witness = region.witness;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<RegionRecord> bijection_records(ArrangementFamily family, int n, std::optional<int> copy) {
    require_shi(family);
    const Family root = root_family(family);
    if (copy) {
        require(root == Family::A ? *copy >= 1 && *copy <= n + 1 : *copy == 1,
                root == Family::A ? "copy index must lie in [1, n+1]" : "type C has a single copy");
    }
    std::vector<RegionRecord> out;
    for (const auto& address : all_addresses(root, n)) {
        if (!copy || address.copy == *copy) {
            out.push_back(record_of(address));
        }
    }
    return out;
}

void validate_record(const RegionRecord& record) {
    require_shi(record.family);
    const Family root = root_family(record.family);
    require(record.window.family() == root && record.window.n() == record.n, "window does not match family and n");
    require(root == Family::A ? record.copy.has_value() : !record.copy.has_value(),
            root == Family::A ? "type A records need a copy" : "type C records have no copy");
    const RegionRecord expected = record_of(record.address());
    auto mismatch = [&](const std::string& field) {
        throw ConsistencyError("record " + record.address().to_string() + ": " + field + " is inconsistent");
    };
    if (record.ceilings != expected.ceilings) {
        mismatch("ceilings");
    }
    if (record.floors != expected.floors || record.floor_arcs != expected.floor_arcs) {
        mismatch("floors");
    }
    if (record.partition != expected.partition) {
        mismatch("partition");
    }
    if (record.sequence != expected.sequence) {
        mismatch("sequence");
    }
    if (record.sign_vector.has_value() != record.witness.has_value()) {
        mismatch("sign_vector/witness pairing");
    }
    if (record.sign_vector) {
        const auto arrangement = build_arrangement(record.family, record.n);
        const auto region = region_from_signs(arrangement, *record.sign_vector, *record.witness);
        const auto label = label_region(arrangement, region);
        if (label.window != record.window || label.ceilings != record.antichain || label.floors != record.floor_arcs) {
            mismatch("geometry");
        }
    }
}

json to_json(const RegionRecord& r) {
    json out;
    out["family"] = to_string(r.family);
    out["n"] = r.n;
    if (r.copy) {
        out["copy"] = *r.copy;
    }
    out["window"] = r.window.values();
    out["antichain"] = arcs_json(r.antichain);
    out["ceilings"] = r.ceilings;
    out["floors"] = r.floors;
    out["floor_arcs"] = arcs_json(r.floor_arcs);
    out["partition"] = r.partition;
    out["sequence"] = r.sequence;
    if (r.sign_vector) {
        out["sign_vector"] = *r.sign_vector;
    }
    if (r.witness) {
        json w = json::array();
        for (const auto& x : *r.witness) {
            w.push_back(to_string(x));
        }
        out["witness"] = std::move(w);
    }
    return out;
}

RegionRecord record_from_json(const json& j) {
    require(j.is_object(), "record must be a JSON object");
    try {
        RegionRecord r;
        const auto family = parse_arrangement_family(j.at("family").get<std::string>());
        require(family.has_value(), "unknown family in record");
        r.family = *family;
        r.n = j.at("n").get<int>();
        if (j.contains("copy")) {
            r.copy = j.at("copy").get<int>();
        }
        r.window = Window::make(root_family(r.family), j.at("window").get<std::vector<int>>());
        r.antichain = arcs_from_json(j.at("antichain"));
        r.ceilings = j.at("ceilings").get<int>();
        r.floors = j.at("floors").get<int>();
        r.floor_arcs = arcs_from_json(j.at("floor_arcs"));
        r.partition = j.at("partition").get<std::string>();
        r.sequence = j.at("sequence").get<std::vector<int>>();
        if (j.contains("sign_vector")) {
            r.sign_vector = j.at("sign_vector").get<std::string>();
        }
        if (j.contains("witness")) {
            Point w;
            for (const auto& x : j.at("witness")) {
                w.push_back(parse_rational(x.get<std::string>()));
            }
            r.witness = std::move(w);
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed record: ") + e.what());
    }
}

std::string csv_header() {
    return "family,n,copy,window,antichain,ceilings,floors,floor_arcs,partition,sequence,sign_vector,witness";
}

std::string to_csv_row(const RegionRecord& r) {
    std::string witness;
    if (r.witness) {
        for (std::size_t k = 0; k < r.witness->size(); ++k) {
            witness += (k ? " " : "") + to_string((*r.witness)[k]);
        }
    }
    const std::vector<std::string> fields{to_string(r.family),
                                          std::to_string(r.n),
                                          r.copy ? std::to_string(*r.copy) : "",
                                          r.window.to_string(),
                                          arcs_to_string(r.antichain),
                                          std::to_string(r.ceilings),
                                          std::to_string(r.floors),
                                          arcs_to_string(r.floor_arcs),
                                          r.partition,
                                          join_ints(r.sequence),
                                          r.sign_vector.value_or(""),
                                          witness};
    std::string out;
    for (std::size_t k = 0; k < fields.size(); ++k) {
        out += (k ? "," : "") + csv_field(fields[k]);
    }
    return out;
}

}  // namespace shi
