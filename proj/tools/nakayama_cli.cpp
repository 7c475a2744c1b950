// Command-line front end: conversions between the three object kinds,
// per-object statistic reports, minimal (co)resolutions, census runs and
// path renderings.  Exit codes: 0 success / all checks pass, 1 parse or
// usage error, 2 check failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include "nakayama/algebra.hpp"
#include "nakayama/bridge.hpp"
#include "nakayama/census.hpp"
#include "nakayama/json_io.hpp"
#include "nakayama/perm.hpp"
#include "nakayama/render.hpp"

namespace {

using namespace nakayama;

enum class Kind { kupisch, dyck, perm };

const std::map<std::string, Kind> kKindNames = {
    {"kupisch", Kind::kupisch}, {"dyck", Kind::dyck}, {"perm", Kind::perm}};

// Every object kind pivots through its Dyck path.
DyckPath parse_as_path(Kind kind, const std::string& payload) {
    switch (kind) {
    case Kind::dyck: return DyckPath::parse(payload);
    case Kind::perm: return bjs_inverse(Permutation::parse(payload));
    case Kind::kupisch: return kupisch_to_dyck(KupischSeries::parse(payload));
    }
    throw ParseError("unreachable");
}

std::string format_as(Kind kind, const DyckPath& path) {
    switch (kind) {
    case Kind::dyck: return path.str();
    case Kind::perm: return bjs(path).str();
    case Kind::kupisch: return dyck_to_kupisch(path).str();
    }
    throw ParseError("unreachable");
}

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_file);
    if (!out)
        throw std::runtime_error("cannot open output file " + out_file);
    out << text;
}

int census_threads() {
    if (const char* env = std::getenv("NAKAYAMA_CENSUS_THREADS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            throw ParseError("NAKAYAMA_CENSUS_THREADS is not a number");
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct ObjectInput {
    std::string kupisch;
    std::string dyck;
    std::string perm;

    void attach(CLI::App* cmd) {
        cmd->add_option("--kupisch", kupisch, "Kupisch series, e.g. \"4,3,2,1\"");
        cmd->add_option("--dyck", dyck, "step word, e.g. \"UUDD\"");
        cmd->add_option("--perm", perm, "one-line permutation, e.g. \"2 1 3\"");
    }

    DyckPath to_path() const {
        const int given = int(!kupisch.empty()) + int(!dyck.empty()) + int(!perm.empty());
        if (given != 1)
            throw ParseError("give exactly one of --kupisch / --dyck / --perm");
        if (!kupisch.empty())
            return parse_as_path(Kind::kupisch, kupisch);
        if (!dyck.empty())
            return parse_as_path(Kind::dyck, dyck);
        return parse_as_path(Kind::perm, perm);
    }
};

int run(int argc, char** argv) {
    CLI::App app{"linear Nakayama algebras, Dyck paths and 321-avoiding permutations"};
    app.require_subcommand(1);

    // convert
    auto* convert = app.add_subcommand("convert", "convert between object kinds");
    Kind from = Kind::dyck;
    Kind to = Kind::dyck;
    std::string payload;
    convert->add_option("--from", from, "input kind")
        ->required()
        ->transform(CLI::CheckedTransformer(kKindNames, CLI::ignore_case));
    convert->add_option("--to", to, "output kind")
        ->required()
        ->transform(CLI::CheckedTransformer(kKindNames, CLI::ignore_case));
    convert->add_option("payload", payload, "object text")->required();

    // stats
    auto* stats = app.add_subcommand("stats", "full statistic report for one object");
    ObjectInput stats_input;
    stats_input.attach(stats);

    // resolve
    auto* resolve = app.add_subcommand("resolve", "minimal (co)resolution of a module");
    std::string resolve_kupisch;
    std::string resolve_module;
    std::string resolve_direction = "projective";
    resolve->add_option("--kupisch", resolve_kupisch, "Kupisch series")->required();
    resolve->add_option("--module", resolve_module, "module, e.g. \"M(0,1)\"")->required();
    resolve->add_option("--direction", resolve_direction, "projective or injective")
        ->check(CLI::IsMember({"projective", "injective"}));

    // census
    auto* census = app.add_subcommand("census", "exhaustive verification at one size");
    int census_n = 0;
    std::string census_checks = "all";
    std::string census_format = "json";
    std::string census_out;
    census->add_option("--n", census_n, "semilength")->required()->check(CLI::NonNegativeNumber);
    census->add_option("--checks", census_checks, "'all' or comma-separated check names");
    census->add_option("--format", census_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    census->add_option("--out", census_out, "output file (default stdout)");

    // render
    auto* render = app.add_subcommand("render", "draw the Dyck path of an object");
    ObjectInput render_input;
    render_input.attach(render);
    std::string render_format = "ascii";
    std::string render_out;
    bool render_homology = false;
    render->add_option("--format", render_format, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));
    render->add_flag("--homology", render_homology, "mark the homologically relevant points");
    render->add_option("--out", render_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the usage error
        return code == 0 ? 0 : 1;
    }

    if (convert->parsed()) {
        std::cout << format_as(to, parse_as_path(from, payload)) << '\n';
        return 0;
    }

    if (stats->parsed()) {
        const nlohmann::json report = stats_report_json(stats_input.to_path());
        std::cout << report.dump(2) << '\n';
        // The report must witness the two theorems it is built on.
        if (report["algebra"]["dim_ext1_JJ"] != report["permutation"]["support_size"] ||
            report["algebra"]["proj_id1"] != report["permutation"]["fixed_points"]) {
            std::cerr << "consistency error: statistics disagree with the algebra\n";
            return 2;
        }
        return 0;
    }

    if (resolve->parsed()) {
        const Algebra alg(KupischSeries::parse(resolve_kupisch));
        const UniserialModule m = UniserialModule::parse(resolve_module);
        alg.require_valid(m);
        const bool injective_direction = resolve_direction == "injective";
        std::vector<UniserialModule> terms; // resolution terms, inside out
        for (UniserialModule x = m; !x.is_zero();
             x = injective_direction ? alg.cosyzygy(x) : alg.syzygy(x))
            terms.push_back(injective_direction ? alg.injective(x.socle())
                                                : alg.projective(x.top));
        if (injective_direction) {
            std::cout << "0 -> " << m.str();
            for (const UniserialModule& t : terms)
                std::cout << " -> " << t.str();
            std::cout << " -> 0\nid = " << alg.inj_dim(m) << '\n';
        } else {
            std::cout << "0";
            for (auto it = terms.rbegin(); it != terms.rend(); ++it)
                std::cout << " -> " << it->str();
            std::cout << " -> " << m.str() << " -> 0\npd = " << alg.proj_dim(m) << '\n';
        }
        return 0;
    }

    if (census->parsed()) {
        const CheckSet selection = CheckSet::parse(census_checks);
        const CensusReport report = run_census(census_n, selection, census_threads());
        if (census_format == "csv") {
            std::ostringstream csv;
            write_census_csv(census_n, csv);
            emit(csv.str(), census_out);
            std::cerr << "census n=" << census_n << ": total " << report.total << ", "
                      << (report.all_pass() ? "all checks pass" : "CHECK FAILURE") << '\n';
        } else {
            emit(to_json(report).dump(2) + "\n", census_out);
        }
        return report.all_pass() ? 0 : 2;
    }

    if (render->parsed()) {
        RenderOptions options;
        options.homology = render_homology;
        const DyckPath path = render_input.to_path();
        emit(render_format == "svg" ? render_svg(path, options)
                                    : render_ascii(path, options),
             render_out);
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
