// Command-line front end: benchmark-table reproduction, state comparison, and
// circuit cost audits, with reproducible JSON/CSV emission.

#include "wdist/emit.hpp"
#include "wdist/errors.hpp"
#include "wdist/resource.hpp"
#include "wdist/states.hpp"
#include "wdist/table1.hpp"
#include "wdist/weighted.hpp"

#include <CLI11.hpp>
#include <clocale>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitBoundViolation = 4;

struct Options {
    std::string format = "json";
    int workers = 0;
    long long seed = 0;
    std::string output;
};

void write_out(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.output, std::ios::binary);
    if (!f) throw wdist::Error("cannot open output file: " + opt.output);
    f << text;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw wdist::ParseError("cannot open file: " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw wdist::ParseError(path + ": " + e.what());
    }
    return j;
}

std::string csv_meta(const Options& opt, const std::string& command,
                     const std::vector<std::pair<std::string, std::string>>& extra) {
    std::ostringstream os;
    os << "key,value\n";
    os << "command," << command << "\n";
    for (const auto& [k, v] : extra) os << k << "," << wdist::csv_field(v) << "\n";
    os << "seed," << opt.seed << "\n";
    return os.str();
}

// ---- table1 ----------------------------------------------------------------

int run_table1(const Options& opt, int n, double a, double b) {
    const std::vector<wdist::Table1Row> rows = wdist::table1_rows(n, a, b, opt.workers);

    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["command"] = "table1";
        j["n"] = n;
        j["a"] = a;
        j["b"] = b;
        j["seed"] = opt.seed;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            j["rows"].push_back({{"row", r.label},
                                 {"k", r.k},
                                 {"l", r.l},
                                 {"b_computed", r.b_computed},
                                 {"b_reference", r.b_reference},
                                 {"b_dev", r.b_dev},
                                 {"db_computed", r.db_computed},
                                 {"db_reference", r.db_reference},
                                 {"db_dev", r.db_dev},
                                 {"db_squared_convention", r.db_squared_convention},
                                 {"flag", r.flagged}});
        }
        write_out(opt, wdist::dump_json(j));
    } else {
        std::ostringstream os;
        os << csv_meta(opt, "table1",
                       {{"n", std::to_string(n)}, {"a", wdist::fmt_num(a)}, {"b", wdist::fmt_num(b)}});
        os << "\nrow,k,l,b_computed,b_reference,b_dev,db_computed,db_reference,db_dev,"
              "db_squared_convention,flag\n";
        for (const auto& r : rows) {
            os << r.label << ',' << r.k << ',' << r.l << ',' << wdist::fmt_num(r.b_computed) << ','
               << wdist::fmt_num(r.b_reference) << ',' << wdist::fmt_num(r.b_dev) << ','
               << wdist::fmt_num(r.db_computed) << ',' << wdist::fmt_num(r.db_reference) << ','
               << wdist::fmt_num(r.db_dev) << ',' << wdist::fmt_num(r.db_squared_convention) << ','
               << (r.flagged ? 1 : 0) << "\n";
        }
        write_out(opt, os.str());
    }
    return kExitOk;
}

// ---- compare ---------------------------------------------------------------

int run_compare(const Options& opt, const std::string& path_a, const std::string& path_b) {
    const wdist::StateSpec spec_a = wdist::StateSpec::from_json(load_json_file(path_a));
    const wdist::StateSpec spec_b = wdist::StateSpec::from_json(load_json_file(path_b));
    const wdist::DensityMatrix rho = wdist::build_state(spec_a);
    const wdist::DensityMatrix sigma = wdist::build_state(spec_b);
    if (rho.n != sigma.n) throw wdist::DimensionMismatchError("states have different qubit counts");

    const wdist::BuresValue bv = wdist::bures_length(rho, sigma);
    const wdist::BlockDistanceCache cache = wdist::subset_distance_cache(rho, sigma, opt.workers);
    const wdist::WeightedResult wr = wdist::weighted_distance_from_cache(cache);
    const wdist::WeightedResult alt = wdist::weighted_distance_squared_convention(cache);
    const auto [lower, upper] = std::pair<double, double>{bv.length / rho.n, rho.n * bv.length};

    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["command"] = "compare";
        j["seed"] = opt.seed;
        j["n"] = rho.n;
        j["bures"] = {{"fidelity", bv.fidelity}, {"length", bv.length}};
        j["weighted"] = wdist::to_json(wr);
        j["weighted_squared_convention"] = alt.value;
        j["sandwich"] = {{"lower", lower}, {"upper", upper}};
        write_out(opt, wdist::dump_json(j));
    } else {
        std::ostringstream os;
        os << csv_meta(opt, "compare", {{"n", std::to_string(rho.n)}});
        os << "\nmetric,value\n";
        os << "fidelity," << wdist::fmt_num(bv.fidelity) << "\n";
        os << "bures," << wdist::fmt_num(bv.length) << "\n";
        os << "weighted," << wdist::fmt_num(wr.value) << "\n";
        os << "weighted_squared_convention," << wdist::fmt_num(alt.value) << "\n";
        os << "sandwich_lower," << wdist::fmt_num(lower) << "\n";
        os << "sandwich_upper," << wdist::fmt_num(upper) << "\n";
        std::string partition;
        for (wdist::SubsetMask m : wr.argmax_partition.blocks) {
            if (!partition.empty()) partition += ';';
            partition += std::to_string(m);
        }
        os << "partition," << wdist::csv_field(partition) << "\n";
        os << "\nmask,size,bures,contribution\n";
        for (const auto& blk : wr.per_block)
            os << blk.mask << ',' << blk.size << ',' << wdist::fmt_num(blk.length) << ','
               << wdist::fmt_num(blk.contribution) << "\n";
        write_out(opt, os.str());
    }
    return kExitOk;
}

// ---- audit -----------------------------------------------------------------

int run_audit(const Options& opt, const std::string& circuit_path, const std::string& state_path) {
    const wdist::Circuit circuit = wdist::Circuit::from_json(load_json_file(circuit_path));
    const wdist::StateSpec spec = wdist::StateSpec::from_json(load_json_file(state_path));
    const wdist::DensityMatrix rho0 = wdist::build_state(spec);
    if (rho0.n != circuit.n)
        throw wdist::DimensionMismatchError("input state and circuit qubit counts differ");

    const wdist::BoundReport report = wdist::audit_bound(circuit, rho0, opt.workers);

    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["command"] = "audit";
        j["seed"] = opt.seed;
        j["n"] = circuit.n;
        nlohmann::ordered_json rj = wdist::to_json(report);
        for (auto it = rj.begin(); it != rj.end(); ++it) j[it.key()] = it.value();
        write_out(opt, wdist::dump_json(j));
    } else {
        std::ostringstream os;
        os << csv_meta(opt, "audit", {{"n", std::to_string(circuit.n)}});
        os << "\nmetric,value\n";
        os << "r_u," << wdist::fmt_num(report.r_u) << "\n";
        os << "d_b," << wdist::fmt_num(report.d_b) << "\n";
        os << "d_b_general," << wdist::fmt_num(report.d_b_general) << "\n";
        os << "margin," << wdist::fmt_num(report.margin) << "\n";
        os << "holds," << (report.holds ? 1 : 0) << "\n";
        os << "tau_degenerate," << (report.tau_degenerate ? 1 : 0) << "\n";
        os << "\ngate,k,e,t,r\n";
        for (std::size_t i = 0; i < report.per_gate.size(); ++i) {
            const auto& g = report.per_gate[i];
            os << (i + 1) << ',' << g.size << ',' << wdist::fmt_num(g.energy) << ','
               << wdist::fmt_num(g.duration) << ',' << wdist::fmt_num(g.cost) << "\n";
        }
        os << "\ntau,i,j,re,im\n";
        for (std::size_t r = 0; r < report.tau.mat.dim(); ++r)
            for (std::size_t c = 0; c < report.tau.mat.dim(); ++c) {
                const wdist::cplx v = report.tau.mat(r, c);
                os << "tau," << r << ',' << c << ',' << wdist::fmt_num(v.real()) << ','
                   << wdist::fmt_num(v.imag()) << "\n";
            }
        write_out(opt, os.str());
    }
    return report.holds ? kExitOk : kExitBoundViolation;
}

} // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");

    CLI::App app{"Weighted Bures lengths for many-qubit states and circuit cost audits"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--workers", opt.workers, "Worker threads for the subset cache (0 = auto)");
    app.add_option("--seed", opt.seed, "Seed recorded in the output metadata");
    app.add_option("--output", opt.output, "Write the report to this file instead of stdout");

    int n = 4;
    double a = 0.6, b = 0.8;
    CLI::App* table1 = app.add_subcommand("table1", "Reproduce the benchmark table at a given size");
    table1->fallthrough();
    table1->add_option("--n", n, "Qubit count (2..10)")->required();
    table1->add_option("--a", a, "Amplitude a")->required();
    table1->add_option("--b", b, "Amplitude b")->required();

    std::string state_a, state_b;
    CLI::App* compare = app.add_subcommand("compare", "Compare two states from spec files");
    compare->fallthrough();
    compare->add_option("--state-a", state_a, "State spec JSON")->required();
    compare->add_option("--state-b", state_b, "State spec JSON")->required();

    std::string circuit_path, input_path;
    CLI::App* audit = app.add_subcommand("audit", "Audit a circuit against the cost lower bound");
    audit->fallthrough();
    audit->add_option("--circuit", circuit_path, "Circuit JSON")->required();
    audit->add_option("--input", input_path, "Input state spec JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitParse;
    }

    try {
        if (table1->parsed()) return run_table1(opt, n, a, b);
        if (compare->parsed()) return run_compare(opt, state_a, state_b);
        if (audit->parsed()) return run_audit(opt, circuit_path, input_path);
    } catch (const wdist::DimensionMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const wdist::DimensionTooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const wdist::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
