#include "shi/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "shi/errors.hpp"
#include "shi/identity_lab.hpp"
#include "shi/plot.hpp"
#include "shi/records.hpp"
#include "shi/root_poset.hpp"

namespace shi {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::string> kAllFamilies{"shi-a", "shi-c", "cox-a", "cox-c"};
const std::vector<std::string> kShiFamilies{"shi-a", "shi-c"};

struct Options {
    std::string family = "shi-a";
    int n = 1;
    std::string method;
    std::optional<int> copy;
    std::string format;
    std::string output;
    std::string sequence;
    std::string statistic;
    std::string mode = "combinatorial";
    std::string suite = "all";
    int max_n = 3;
};

ArrangementFamily family_of(const Options& o) { return *parse_arrangement_family(o.family); }

void add_family(CLI::App* cmd, Options& o, const std::vector<std::string>& allowed) {
    cmd->add_option("--family", o.family, "arrangement family")->required()->check(CLI::IsMember(allowed));
    cmd->add_option("--n", o.n, "dimension")->required()->check(CLI::PositiveNumber);
}

// Writes to -o FILE when given, else to out.
void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.output, std::ios::binary);
    require(static_cast<bool>(file), "cannot open " + o.output + " for writing");
    file << text;
    require(static_cast<bool>(file), "failed writing " + o.output);
}

std::string render_records(const std::string& command, const Options& o, const std::vector<RegionRecord>& records) {
    std::ostringstream os;
    if (o.format == "csv") {
        os << csv_header() << "\n";
        for (const auto& r : records) {
            os << to_csv_row(r) << "\n";
        }
        return os.str();
    }
    json doc{{"schema", 1}, {"command", command}, {"family", o.family}, {"n", o.n}};
    if (o.copy) {
        doc["copy"] = *o.copy;
    }
    doc["count"] = records.size();
    doc["records"] = json::array();
    for (const auto& r : records) {
        doc["records"].push_back(to_json(r));
    }
    return doc.dump(2) + "\n";
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
    const auto family = family_of(o);
    const Family root = root_family(family);
    const bool geometric_ok = o.n <= geometric_limit(family);
    const bool want_geometric = o.method == "geometric" || (o.method.empty() && geometric_ok);
    const bool want_combinatorial = o.method != "geometric";

    std::optional<Count> geometric;
    std::optional<Count> combinatorial;
    if (want_geometric) {
        geometric = enumerate_regions(build_arrangement(family, o.n)).size();
    }
    if (want_combinatorial) {
        combinatorial = is_shi(family) ? antichain_count_total(root, o.n) : all_windows(root, o.n).size();
    }
    if (geometric && combinatorial && *geometric != *combinatorial) {
        err << "error: geometric count " << *geometric << " differs from combinatorial count " << *combinatorial
            << "\n";
        return kExitFailure;
    }
    out << (combinatorial ? *combinatorial : *geometric) << "\n";
    return kExitOk;
}

int cmd_invert(const Options& o, std::ostream& out) {
    const auto family = family_of(o);
    const auto values = parse_int_list(o.sequence);
    require(static_cast<int>(values.size()) == o.n,
            "sequence has " + std::to_string(values.size()) + " entries, expected " + std::to_string(o.n));
    RegionAddress address;
    std::vector<int> back;
    if (root_family(family) == Family::A) {
        const SequenceA s(values);
        address = phi_a_inverse(s);
        back = phi_a(address).entries();
    } else {
        const SequenceC s(values);
        address = phi_c_inverse(s);
        back = phi_c(address).entries();
    }
    if (back != values) {
        throw ConsistencyError("phi does not invert the sequence " + o.sequence);
    }
    const RegionRecord record = record_of(address);
    if (o.format == "json") {
        json doc{{"schema", 1}, {"command", "invert"}, {"record", to_json(record)}};
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    if (record.copy) {
        out << "copy " << *record.copy << "\n";
    }
    out << "window " << record.window.to_string() << "\n";
    out << "antichain " << (record.antichain.empty() ? "-" : arcs_to_string(record.antichain)) << "\n";
    out << "partition " << record.partition << "\n";
    out << "sequence " << join_ints(record.sequence) << "\n";
    return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
    const auto poly = gf_statistic(family_of(o), o.n, *parse_statistic(o.statistic), *parse_statistic_mode(o.mode));
    out << poly.to_string() << "\n";
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto report = verify(o.suite, o.max_n);
    if (o.format == "json") {
        out << report.to_json().dump(2) << "\n";
    } else {
        out << report.to_table();
    }
    return report.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shi arrangements, their regions, and the sequences that label them", "shi"};
    app.require_subcommand(1);
    Options o;
    std::vector<std::string> statistics{"ceilings", "floors", "sequence-distinct", "sequence-distinct-all"};
    std::vector<std::string> suites{"all"};
    suites.insert(suites.end(), suite_names().begin(), suite_names().end());

    auto* count = app.add_subcommand("count", "number of regions");
    add_family(count, o, kAllFamilies);
    count->add_option("--method", o.method, "geometric or combinatorial (default: both when feasible)")
        ->check(CLI::IsMember({"geometric", "combinatorial"}));

    auto* regions = app.add_subcommand("regions", "regions found geometrically, one record each");
    auto* bijection = app.add_subcommand("bijection", "every region address with its sequence");
    for (auto* cmd : {regions, bijection}) {
        add_family(cmd, o, kShiFamilies);
        cmd->add_option("--copy", o.copy, "copy index in [1, n+1] (type A)");
        cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("-o,--output", o.output, "output file");
    }

    auto* invert = app.add_subcommand("invert", "region address of a sequence");
    add_family(invert, o, kShiFamilies);
    invert->add_option("--sequence", o.sequence, "comma-separated entries")->required()->allow_extra_args(false);
    invert->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* stats = app.add_subcommand("stats", "q-polynomial of a region statistic");
    add_family(stats, o, kShiFamilies);
    stats->add_option("--statistic", o.statistic, "statistic")->required()->check(CLI::IsMember(statistics));
    stats->add_option("--mode", o.mode, "geometric or combinatorial")
        ->check(CLI::IsMember({"geometric", "combinatorial"}));

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(suites));
    verify_cmd->add_option("--max-n", o.max_n, "largest n")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* plot = app.add_subcommand("plot", "SVG picture of a planar Shi arrangement");
    add_family(plot, o, kShiFamilies);
    plot->add_option("-o,--output", o.output, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (count->parsed()) {
            return cmd_count(o, out, err);
        }
        if (regions->parsed()) {
            emit(o, out, render_records("regions", o, region_records(family_of(o), o.n, o.copy.value_or(1))));
            return kExitOk;
        }
        if (bijection->parsed()) {
            emit(o, out, render_records("bijection", o, bijection_records(family_of(o), o.n, o.copy)));
            return kExitOk;
        }
        if (invert->parsed()) {
            return cmd_invert(o, out);
        }
        if (stats->parsed()) {
            return cmd_stats(o, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(o, out);
        }
        if (plot->parsed()) {
            emit(o, out, plot_svg(family_of(o), o.n));
            return kExitOk;
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace shi
