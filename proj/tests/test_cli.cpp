#include "relspin/experiments.hpp"
#include "relspin/numerics.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

using namespace relspin;
namespace fs = std::filesystem;

namespace {

ExperimentConfig config_from(const std::string& text, const std::string& experiment) {
    std::istringstream in(text);
    return parse_config(in, experiment);
}

struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("relspin_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    fs::path file(const std::string& name) const { return dir / name; }
};

int run_cli(const std::string& args) {
    const std::string cmd = std::string(RELSPIN_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

} // namespace

TEST_CASE("config parsing: defaults, overrides, comments") {
    const ExperimentConfig def = default_config("entropy-scan");
    CHECK(def.mass == 1.0);
    CHECK(def.grid.n == 21);
    CHECK((def.center - Vec3(0, 0, 2)).norm() == 0.0);
    CHECK((def.boost_axis - Vec3(1, 0, 0)).norm() == 0.0);
    CHECK(default_config("entangle-scan").grid.n == 7);
    CHECK((default_config("entangle-scan").boost_axis - Vec3(0, 0, 1)).norm() == 0.0);

    const ExperimentConfig cfg = config_from(
        "# comment\n"
        "mass = 2.5\n"
        "center = 0, 1, 2  # trailing comment\n"
        "width=0.25\n"
        "chi0 = 1, 0, 0, 1\n"
        "grid.n = 9\n"
        "grid.k = 3\n"
        "boost.axis = z\n"
        "rapidities = 0, 0.5, 1\n"
        "frame = helicity\n"
        "format = json\n",
        "entropy-scan");
    CHECK(cfg.mass == 2.5);
    CHECK((cfg.center - Vec3(0, 1, 2)).norm() == 0.0);
    CHECK(cfg.width == 0.25);
    CHECK(cfg.chi0(1) == Complex(0.0, 1.0));
    CHECK(cfg.grid.n == 9);
    CHECK(cfg.grid.span == 3.0);
    CHECK((cfg.boost_axis - Vec3(0, 0, 1)).norm() == 0.0);
    CHECK(cfg.rapidities == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(cfg.frame == "helicity");
    CHECK(cfg.format == "json");
}

TEST_CASE("config parsing: rejections") {
    CHECK_THROWS_AS(config_from("masse = 1\n", "entropy-scan"), config_error);
    CHECK_THROWS_AS(config_from("mass\n", "entropy-scan"), config_error);
    CHECK_THROWS_AS(config_from("mass = -1\n", "entropy-scan"), config_error);
    CHECK_THROWS_AS(config_from("mass = two\n", "entropy-scan"), config_error);
    CHECK_THROWS_AS(config_from("grid.n = 8\n", "entropy-scan"), config_error);
    CHECK_THROWS_AS(config_from("format = xml\n", "entropy-scan"), config_error);
    CHECK_THROWS_AS(config_from("frame = spiral\n", "entropy-scan"), config_error);
    CHECK_THROWS_AS(config_from("frame = custom:0,0,0,0\n", "entropy-scan"), config_error);
    CHECK_THROWS_AS(config_from("boost.axis = 0,0,0\n", "entropy-scan"), config_error);
    CHECK_THROWS_AS(config_from("chi0 = 1,0\n", "entropy-scan"), config_error);
    CHECK_THROWS_AS(config_from("experiment = wigner\n", "entropy-scan"), config_error);
    CHECK_THROWS_AS(default_config("unknown"), config_error);
}

TEST_CASE("float formatting round-trips") {
    for (double v : {0.0, 1.0 / 3.0, 0.4207839616380730, 1e-17, -2.5e300}) {
        CHECK(std::stod(format_float(v)) == v);
    }
}

TEST_CASE("entropy scan: rapidity-0 row is trivial, sharp widths stay pure") {
    ExperimentConfig cfg = default_config("entropy-scan");
    cfg.grid.n = 9;
    cfg.rapidities = {0.0, 1.0};
    const Table table = run_entropy_scan(cfg);
    REQUIRE(table.rows.size() == 2);
    REQUIRE(table.columns.size() == 7);
    // chi = 0: after == before for both frames, channel exactly trivial.
    CHECK(std::abs(table.rows[0][2] - table.rows[0][1]) < 1e-12);
    CHECK(std::abs(table.rows[0][4] - table.rows[0][3]) < 1e-12);
    CHECK(table.rows[0][5] < 1e-12);
    CHECK(table.rows[0][6] < 1e-12);
    // chi = 1: the canonical reduction gains entropy.
    CHECK(table.rows[1][1] < 1e-12);
    CHECK(table.rows[1][2] > 1e-4);

    ExperimentConfig sharp = cfg;
    sharp.width = 1e-3;
    sharp.rapidities = {1.0};
    const Table st = run_entropy_scan(sharp);
    CHECK(st.rows[0][2] < 1e-6);
}

TEST_CASE("wigner table covers the grid and stays below tolerance") {
    const ExperimentConfig cfg = default_config("wigner");
    const Table table = run_wigner_table(cfg);
    CHECK(table.rows.size() == 4 * 4 * 7);
    for (const auto& row : table.rows) {
        CHECK(row[5] < 1e-10);
    }
}

TEST_CASE("gauge check: default is exact, t ~ P is degenerate") {
    ExperimentConfig cfg = default_config("gauge-check");
    cfg.grid.n = 7;
    const GaugeReport report = run_gauge_check(cfg);
    CHECK(report.n_samples == 343);
    CHECK(report.max_defect < 1e-12);

    // t proportional to the four-momentum of the central sample.
    ExperimentConfig bad = cfg;
    std::ostringstream frame;
    frame << "custom:" << format_float(std::sqrt(5.0)) << ",0,0,2";
    bad.frame = frame.str();
    CHECK_THROWS_AS(run_gauge_check(bad), numerical_error);

    const std::string json = render(report, "json");
    CHECK(json.find("\"max_defect\"") != std::string::npos);
    CHECK(json.find("\"n_samples\": 343") != std::string::npos);
}

TEST_CASE("entangle scan: rapidity-0 row is trivial") {
    ExperimentConfig cfg = default_config("entangle-scan");
    cfg.grid.n = 3;
    cfg.rapidities = {0.0};
    const Table table = run_entangle_scan(cfg);
    REQUIRE(table.rows.size() == 1);
    CHECK(std::abs(table.rows[0][2] - table.rows[0][1]) < 1e-12);
    CHECK(std::abs(table.rows[0][4] - table.rows[0][3]) < 1e-12);
}

TEST_CASE("rendered outputs are identical across thread counts") {
    ExperimentConfig cfg = default_config("entropy-scan");
    cfg.grid.n = 9;
    cfg.rapidities = {1.0};

    const int saved = numerics::thread_count();
    numerics::set_thread_count(1);
    const std::string one = render(run_entropy_scan(cfg), "csv");
    numerics::set_thread_count(4);
    const std::string four = render(run_entropy_scan(cfg), "csv");
    numerics::set_thread_count(saved);
    CHECK(one == four);
    CHECK(!one.empty());
    CHECK(one.back() == '\n');
}

TEST_CASE("cli binary: exit codes and byte-identical outputs") {
    Scratch scratch;
    const fs::path cfg = scratch.file("small.cfg");
    write(cfg, "grid.n = 9\nrapidities = 1\n");

    // help is exit 0
    CHECK(run_cli("--help") == 0);
    // missing subcommand / unknown flag are config errors
    CHECK(run_cli("") == 1);
    CHECK(run_cli("entropy-scan --no-such-flag") == 1);
    // unreadable config
    CHECK(run_cli("entropy-scan --config " + (scratch.file("nope.cfg")).string()) == 1);

    const fs::path bad = scratch.file("bad.cfg");
    write(bad, "grid.n = 8\n");
    CHECK(run_cli("entropy-scan --config " + bad.string()) == 1);

    // numerical failure: gauge direction proportional to the central sample
    const fs::path degenerate = scratch.file("degenerate.cfg");
    write(degenerate, "grid.n = 5\nframe = custom:" + format_float(std::sqrt(5.0)) + ",0,0,2\n");
    CHECK(run_cli("gauge-check --config " + degenerate.string()) == 2);

    const fs::path out1 = scratch.file("a.csv");
    const fs::path out4 = scratch.file("b.csv");
    const std::string base = "entropy-scan --config " + cfg.string() + " --out ";
    CHECK(std::system(("RELSPIN_THREADS=1 " + std::string(RELSPIN_CLI_PATH) + " " + base +
                       out1.string() + " >/dev/null 2>&1")
                          .c_str()) == 0);
    CHECK(std::system(("RELSPIN_THREADS=4 " + std::string(RELSPIN_CLI_PATH) + " " + base +
                       out4.string() + " >/dev/null 2>&1")
                          .c_str()) == 0);
    const std::string a = slurp(out1);
    CHECK(!a.empty());
    CHECK(a == slurp(out4));

    // bad thread count is a config error
    CHECK(std::system(("RELSPIN_THREADS=zero " + std::string(RELSPIN_CLI_PATH) +
                       " gauge-check >/dev/null 2>&1")
                          .c_str()) != 0);

    // json output parses the schema we promise
    const fs::path gauge_json = scratch.file("gauge.json");
    const fs::path gcfg = scratch.file("gauge.cfg");
    write(gcfg, "grid.n = 5\n");
    CHECK(run_cli("gauge-check --config " + gcfg.string() + " --format json --out " +
                  gauge_json.string()) == 0);
    const std::string text = slurp(gauge_json);
    CHECK(text.find("\"max_defect\"") != std::string::npos);
    CHECK(text.find("\"n_samples\": 125") != std::string::npos);
}
