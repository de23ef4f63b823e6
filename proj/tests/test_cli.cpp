#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// Drives the installed binary end to end: exit codes, schema, determinism,
// and CSV/JSON numeric agreement.

#include "wdist/emit.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <regex>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kCli = WDIST_CLI_PATH;

struct RunResult {
    int exit_code = 0;
    std::string output;
};

fs::path work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "wdist_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    const fs::path out = work_dir() / "stdout.txt";
    const std::string cmd = kCli + " " + args + " > " + out.string() + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    r.output = ss.str();
    return r;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = work_dir() / name;
    std::ofstream f(p);
    f << content;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

const char* kGhzSpec = R"({"factors":[{"type":"ghz","k":2,"a":[0.6,0.0],"b":[0.8,0.0]}]})";
const char* kZeroSpec2 = R"({"factors":[{"type":"basis","bits":"00"}]})";

} // namespace

TEST_CASE("compare: identical specs give zero weighted distance") {
    const fs::path a = write_file("a.json", kZeroSpec2);
    const RunResult r = run("compare --state-a " + a.string() + " --state-b " + a.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["weighted"]["value"].get<double>() < 1e-9);
    CHECK(j["bures"]["length"].get<double>() < 1e-9);
}

TEST_CASE("compare: ghz_2 vs |00>") {
    const fs::path a = write_file("ghz.json", kGhzSpec);
    const fs::path b = write_file("zero.json", kZeroSpec2);
    const RunResult r = run("compare --state-a " + a.string() + " --state-b " + b.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["weighted"]["value"].get<double>() ==
          doctest::Approx(2.0 * std::acos(0.6)).epsilon(1e-9));
    CHECK(j["bures"]["length"].get<double>() == doctest::Approx(std::acos(0.6)).epsilon(1e-9));
    CHECK(j["sandwich"]["lower"].get<double>() <= j["weighted"]["value"].get<double>());
    CHECK(j["weighted"]["value"].get<double>() <= j["sandwich"]["upper"].get<double>());
}

TEST_CASE("compare: dicke vs |0000> reports both conventions") {
    const fs::path a = write_file("dicke.json", R"({"factors":[{"type":"dicke","n":4,"k":1}]})");
    const fs::path b = write_file("zero4.json", R"({"factors":[{"type":"basis","bits":"0000"}]})");
    const RunResult r = run("compare --state-a " + a.string() + " --state-b " + b.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    const double primary = j["weighted"]["value"].get<double>();
    const double squared = j["weighted_squared_convention"].get<double>();
    CHECK(primary == doctest::Approx(4.0 * std::acos(std::sqrt(0.75))).epsilon(1e-9));
    CHECK(squared == doctest::Approx(4.0 * std::acos(0.75)).epsilon(1e-9));
}

TEST_CASE("compare exit codes") {
    const fs::path a = write_file("bad.json", "{not json");
    const fs::path b = write_file("zero.json", kZeroSpec2);
    CHECK(run("compare --state-a " + a.string() + " --state-b " + b.string()).exit_code == 2);

    const fs::path c = write_file("one.json", R"({"factors":[{"type":"basis","bits":"0"}]})");
    CHECK(run("compare --state-a " + c.string() + " --state-b " + b.string()).exit_code == 3);

    CHECK(run("compare --state-a " + b.string()).exit_code == 2); // missing flag
}

TEST_CASE("table1 emits rows with reference values and flags") {
    const RunResult r = run("table1 --n 2 --a 0.6 --b 0.8");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["rows"].is_array());
    bool saw_flip = false, saw_dicke_flag = false;
    for (const auto& row : j["rows"]) {
        if (row["row"] == "flip" && row["k"] == 2) {
            saw_flip = true;
            CHECK(row["db_computed"].get<double>() ==
                  doctest::Approx(std::numbers::pi).epsilon(1e-9));
            CHECK(row["flag"].get<bool>() == false);
        }
        if (row["row"] == "dicke") saw_dicke_flag = row["flag"].get<bool>();
    }
    CHECK(saw_flip);
    CHECK(saw_dicke_flag); // the printed closed form uses the squared convention

    CHECK(run("table1 --n 1 --a 0.6 --b 0.8").exit_code == 2);
    CHECK(run("table1 --n 2 --a 0.5 --b 0.5").exit_code == 2);
}

TEST_CASE("audit: empty circuit holds with zero margin") {
    const fs::path c = write_file("empty.json", R"({"n":2,"gates":[]})");
    const fs::path s = write_file("zero.json", kZeroSpec2);
    const RunResult r = run("audit --circuit " + c.string() + " --input " + s.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["holds"].get<bool>());
    CHECK(std::abs(j["margin"].get<double>()) < 1e-9);
}

TEST_CASE("audit: saturation circuit has a tiny margin") {
    const fs::path c = write_file("sat.json",
        R"({"n":1,"gates":[{"targets":[0],"h":[[[0.8,0.0],[0.0,0.0]],[[0.0,0.0],[-0.8,0.0]]],"t":1.1}]})");
    // |+> as a raw single-qubit state
    const fs::path s = write_file("plus.json",
        R"({"factors":[{"type":"raw","mat":[[[0.5,0.0],[0.5,0.0]],[[0.5,0.0],[0.5,0.0]]]}]})");
    const RunResult r = run("audit --circuit " + c.string() + " --input " + s.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["holds"].get<bool>());
    CHECK(j["margin"].get<double>() < 1e-6);
    CHECK(j["r_u"].get<double>() == doctest::Approx(0.88).epsilon(1e-12));

    const fs::path bad = write_file("badc.json", R"({"n":1,"gates":)");
    CHECK(run("audit --circuit " + bad.string() + " --input " + s.string()).exit_code == 2);

    const fs::path s2 = write_file("zero.json", kZeroSpec2);
    CHECK(run("audit --circuit " + c.string() + " --input " + s2.string()).exit_code == 3);
}

TEST_CASE("audit: a generic circuit file holds with positive margin") {
    const fs::path c = write_file("generic.json", R"({"n":2,"gates":[
        {"targets":[0],"h":[[[0.3,0.0],[0.2,-0.4]],[[0.2,0.4],[-0.7,0.0]]],"t":1.2},
        {"targets":[1,0],"h":[[[1.1,0.0],[0.0,0.0],[0.3,0.1],[0.0,0.0]],
                               [[0.0,0.0],[-0.2,0.0],[0.0,0.0],[0.5,-0.2]],
                               [[0.3,-0.1],[0.0,0.0],[0.4,0.0],[0.0,0.0]],
                               [[0.0,0.0],[0.5,0.2],[0.0,0.0],[-0.9,0.0]]],"t":0.8}]})");
    const fs::path s = write_file("zero.json", kZeroSpec2);
    const RunResult r = run("audit --circuit " + c.string() + " --input " + s.string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["holds"].get<bool>());
    CHECK(j["margin"].get<double>() > 0.0);
    CHECK(j["per_gate"].size() == 2);
}

TEST_CASE("identical inputs produce byte-identical output files") {
    const fs::path a = write_file("ghz.json", kGhzSpec);
    const fs::path b = write_file("zero.json", kZeroSpec2);
    const fs::path o1 = work_dir() / "out1.json";
    const fs::path o2 = work_dir() / "out2.json";
    CHECK(run("compare --state-a " + a.string() + " --state-b " + b.string() + " --seed 7 --output " +
              o1.string()).exit_code == 0);
    CHECK(run("compare --state-a " + a.string() + " --state-b " + b.string() + " --seed 7 --output " +
              o2.string()).exit_code == 0);
    const std::string s1 = slurp(o1), s2 = slurp(o2);
    CHECK(!s1.empty());
    CHECK(s1 == s2);

    const fs::path t1 = work_dir() / "t1.json";
    const fs::path t2 = work_dir() / "t2.json";
    CHECK(run("table1 --n 3 --a 0.6 --b 0.8 --workers 1 --output " + t1.string()).exit_code == 0);
    CHECK(run("table1 --n 3 --a 0.6 --b 0.8 --workers 2 --output " + t2.string()).exit_code == 0);
    CHECK(slurp(t1) == slurp(t2)); // worker count does not change the bytes
}

TEST_CASE("CSV and JSON carry the same numeric values") {
    const RunResult js = run("table1 --n 2 --a 0.6 --b 0.8 --format json");
    const RunResult cs = run("table1 --n 2 --a 0.6 --b 0.8 --format csv");
    REQUIRE(js.exit_code == 0);
    REQUIRE(cs.exit_code == 0);

    const auto j = nlohmann::json::parse(js.output);

    // parse the CSV payload table
    std::istringstream lines(cs.output);
    std::string line;
    std::vector<std::string> rows;
    bool in_table = false;
    while (std::getline(lines, line)) {
        if (line.rfind("row,", 0) == 0) {
            in_table = true;
            continue;
        }
        if (in_table && !line.empty()) rows.push_back(line);
    }
    REQUIRE(rows.size() == j["rows"].size());

    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::istringstream ls(rows[i]);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        REQUIRE(fields.size() == 11);
        const auto& row = j["rows"][i];
        CHECK(fields[0] == row["row"].get<std::string>());
        CHECK(fields[3] == wdist::fmt_num(row["b_computed"].get<double>()));
        CHECK(fields[6] == wdist::fmt_num(row["db_computed"].get<double>()));
        CHECK(fields[9] == wdist::fmt_num(row["db_squared_convention"].get<double>()));
    }
}

TEST_CASE("compare CSV and JSON carry the same numeric values") {
    const fs::path a = write_file("ghz.json", kGhzSpec);
    const fs::path b = write_file("zero.json", kZeroSpec2);
    const std::string args = "compare --state-a " + a.string() + " --state-b " + b.string();
    const RunResult js = run(args + " --format json");
    const RunResult cs = run(args + " --format csv");
    REQUIRE(js.exit_code == 0);
    REQUIRE(cs.exit_code == 0);
    const auto j = nlohmann::json::parse(js.output);

    auto csv_value = [&](const std::string& key) -> std::string {
        std::istringstream lines(cs.output);
        std::string line;
        while (std::getline(lines, line))
            if (line.rfind(key + ",", 0) == 0) return line.substr(key.size() + 1);
        return "";
    };
    CHECK(csv_value("fidelity") == wdist::fmt_num(j["bures"]["fidelity"].get<double>()));
    CHECK(csv_value("bures") == wdist::fmt_num(j["bures"]["length"].get<double>()));
    CHECK(csv_value("weighted") == wdist::fmt_num(j["weighted"]["value"].get<double>()));
    CHECK(csv_value("weighted_squared_convention") ==
          wdist::fmt_num(j["weighted_squared_convention"].get<double>()));
    CHECK(csv_value("sandwich_lower") == wdist::fmt_num(j["sandwich"]["lower"].get<double>()));
    CHECK(csv_value("sandwich_upper") == wdist::fmt_num(j["sandwich"]["upper"].get<double>()));
}
