#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

// End-to-end checks against the installed binary (path injected by CMake).

namespace fs = std::filesystem;

namespace {

const std::string cli = TORUSYNC_CLI_PATH;

fs::path work_dir() {
    fs::path d = fs::temp_directory_path() / "torusync_cli_tests";
    fs::create_directories(d);
    return d;
}

int run(const std::string& args, const fs::path& capture = {}) {
    std::string cmd = cli + " " + args;
    if (capture.empty())
        cmd += " >/dev/null 2>&1";
    else
        cmd += " >" + capture.string() + " 2>&1";
    int raw = std::system(cmd.c_str());
    REQUIRE(raw != -1);
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::vector<std::string> file_lines(const fs::path& p) {
    std::ifstream is(p);
    REQUIRE(is.good());
    std::vector<std::string> out;
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

std::string last_field(const std::string& line) {
    return line.substr(line.find_last_of(',') + 1);
}

}  // namespace

TEST_CASE("bad configurations exit with status 2", "[cli]") {
    CHECK(run("") == 2);                  // a verb is required
    CHECK(run("no-such-verb") == 2);
    CHECK(run("fixed-points --a 0.5") == 2);          // outside (0, 1/3)
    CHECK(run("fixed-points --a 0") == 2);
    CHECK(run("orbit --delta1 0.01 --zeta none") == 2);
    CHECK(run("basins --resolution 8 --out " + (work_dir() / "r8.csv").string()) == 2);
    CHECK(run("sweep /no/such/list.txt") == 2);
}

TEST_CASE("orbit writes the trajectory table and reaches the sink", "[cli]") {
    fs::path out = work_dir() / "orbit.csv";
    CHECK(run("orbit --x 1.0 --y 2.0 --steps 200 --out " + out.string()) == 0);
    auto lines = file_lines(out);
    REQUIRE(lines.size() == 202);  // header + iterates 0..200
    CHECK(lines[0] == "n,x,y,lyapunov,sink_distance");
    CHECK(lines[1].rfind("0,1,2,", 0) == 0);
    CHECK(std::stod(last_field(lines.back())) <= 1e-8);
}

TEST_CASE("fixed-points emits one row per census record", "[cli]") {
    fs::path out = work_dir() / "fp.csv";
    CHECK(run("fixed-points --out " + out.string()) == 0);
    auto lines = file_lines(out);
    REQUIRE(lines.size() == 7);
    CHECK(lines[0].rfind("x,y,lambda1_re", 0) == 0);

    // The line family has four fixed points.
    CHECK(run("fixed-points --map line --out " + out.string()) == 0);
    CHECK(file_lines(out).size() == 5);
}

TEST_CASE("certify exits 0 on the genuine suite and 1 with the control", "[cli]") {
    fs::path out = work_dir() / "cert.csv";
    CHECK(run("certify --a 0.1 --out " + out.string()) == 0);
    auto lines = file_lines(out);
    REQUIRE(lines.size() >= 13);
    CHECK(lines[0].rfind("obligation,region,claim,status", 0) == 0);
    CHECK(lines.back().rfind("overall,proved", 0) == 0);

    fs::path out2 = work_dir() / "cert_control.csv";
    CHECK(run("certify --a 0.1 --negative-control --out " + out2.string()) == 1);
    auto lines2 = file_lines(out2);
    CHECK(lines2.back().rfind("overall,refuted", 0) == 0);
    bool control_row = false;
    for (const auto& l : lines2)
        if (l.rfind("negative_control", 0) == 0 && l.find("refuted") != std::string::npos &&
            l.find("witness (") != std::string::npos)
            control_row = true;
    CHECK(control_row);
}

TEST_CASE("basins writes the grid table plus a raster sibling", "[cli]") {
    fs::path out = work_dir() / "basins.csv";
    fs::path log = work_dir() / "basins.log";
    CHECK(run("basins --resolution 64 --out " + out.string(), log) == 0);
    REQUIRE(fs::exists(out));
    fs::path ppm = work_dir() / "basins.ppm";
    REQUIRE(fs::exists(ppm));

    auto lines = file_lines(out);
    CHECK(lines[0] == "i,j,label");
    CHECK(lines.size() == 1 + 64 * 64 + 4);
    CHECK(file_lines(ppm)[0] == "P3");

    std::ostringstream all;
    for (const auto& l : file_lines(log)) all << l << '\n';
    CHECK(all.str().find("sink 0 (") != std::string::npos);
    CHECK(all.str().find("unresolved:") != std::string::npos);
}

TEST_CASE("portrait tabulates the displacement field", "[cli]") {
    fs::path out = work_dir() / "portrait.csv";
    CHECK(run("portrait --resolution 16 --out " + out.string()) == 0);
    auto lines = file_lines(out);
    REQUIRE(lines.size() == 1 + 16 * 16);
    CHECK(lines[0] == "x,y,dx,dy");
}

TEST_CASE("conjecture scan reports and exits 0 when negative", "[cli]") {
    fs::path log = work_dir() / "conj.log";
    CHECK(run("conjecture --resolution 128", log) == 0);
    std::ostringstream all;
    for (const auto& l : file_lines(log)) all << l << '\n';
    CHECK(all.str().find("max_increment,-") != std::string::npos);
    CHECK(all.str().find("negative_outside_exclusions,yes") != std::string::npos);
}

TEST_CASE("sweep summarises each list row", "[cli]") {
    fs::path list = work_dir() / "sweep_list.txt";
    {
        std::ofstream os(list);
        os << "# a delta1 delta2\n0.1\n0.1 0.01 0.02\n";
    }
    fs::path out = work_dir() / "sweep.csv";
    CHECK(run("sweep " + list.string() + " --resolution 64 --out " + out.string()) == 0);
    auto lines = file_lines(out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "a,delta1,delta2,fixed_points,sinks,fraction0,fraction1,unresolved");
    // Values are %.17g-formatted; compare numerically.
    CHECK(std::stod(lines[1]) == 0.1);
    CHECK(lines[1].find(",6,2,") != std::string::npos);
    CHECK(lines[2].find(",6,2,") != std::string::npos);
    auto second = lines[2].substr(lines[2].find(',') + 1);
    CHECK(std::stod(second) == 0.01);
}

TEST_CASE("config files feed flags, and explicit flags win", "[cli]") {
    fs::path cfg = work_dir() / "bad_a.cfg";
    {
        std::ofstream os(cfg);
        os << "[fixed-points]\na=0.5\n";
    }
    // The config alone pushes a out of range.
    CHECK(run("--config " + cfg.string() + " fixed-points") == 2);
    // An explicit flag overrides the config value.
    fs::path out = work_dir() / "fp_cfg.csv";
    CHECK(run("--config " + cfg.string() + " fixed-points --a 0.1 --out " + out.string()) == 0);
    CHECK(file_lines(out).size() == 7);
}
