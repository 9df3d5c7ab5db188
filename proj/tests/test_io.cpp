#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <torusync/torusync.hpp>

using namespace torusync;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

long count_char(const std::string& s, char c) {
    long n = 0;
    for (char ch : s)
        if (ch == c) n++;
    return n;
}

}  // namespace

TEST_CASE("g17 formatting round-trips doubles exactly", "[io]") {
    for (double v : {0.0, 1.0, -1.0, pi, two_pi / 3.0, 0.1, 1.0 / 3.0, -2.5e-300, 1e308,
                     6.0236517347893135e-07}) {
        std::string s = fmt_g17(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("fixed point table has the documented header and shape", "[io]") {
    std::ostringstream os;
    write_fixed_points_csv(os, enumerate_fixed_points(MapSpec::ring(0.1)));
    auto lines = lines_of(os.str());
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == "x,y,lambda1_re,lambda1_im,lambda2_re,lambda2_im,kind,residual");
    for (size_t k = 1; k < lines.size(); ++k) CHECK(count_char(lines[k], ',') == 7);
    CHECK(lines[1].rfind("0,0,", 0) == 0);
    CHECK(lines[1].find("source") != std::string::npos);
    CHECK(os.str().find("sink") != std::string::npos);
    CHECK(os.str().find("saddle") != std::string::npos);
}

TEST_CASE("orbit and portrait tables have the documented headers", "[io]") {
    std::ostringstream orbit;
    write_orbit_csv(orbit, {{0, {1.0, 2.0}, 3.5, 0.25}, {1, {1.5, 2.5}, 3.0, 0.125}});
    auto olines = lines_of(orbit.str());
    REQUIRE(olines.size() == 3);
    CHECK(olines[0] == "n,x,y,lyapunov,sink_distance");
    CHECK(olines[1] == "0,1,2,3.5,0.25");

    std::ostringstream portrait;
    write_portrait_csv(portrait, MapSpec::ring(0.1), 4);
    auto plines = lines_of(portrait.str());
    REQUIRE(plines.size() == 1 + 16);
    CHECK(plines[0] == "x,y,dx,dy");
    // First sample is the lowest-left cell center (h/2, h/2).
    double h = two_pi / 4.0;
    CHECK(plines[1].rfind(fmt_g17(h / 2.0) + "," + fmt_g17(h / 2.0) + ",", 0) == 0);
}

TEST_CASE("certificate table lists every certificate plus an overall line", "[io]") {
    SuiteReport rep;
    Certificate ok;
    ok.id = "psi1_nonpos_on_T1_I_II";
    ok.target = CertTarget::Psi1;
    ok.claim = SignClaim::NonPositive;
    ok.region = CertRegion::T1_I_II;
    ok.status = CertStatus::Proved;
    ok.boxes_proved = 1;
    ok.seconds = 0.002;
    Certificate bad;
    bad.id = "negative_control_psi3";
    bad.target = CertTarget::Psi3;
    bad.claim = SignClaim::NonPositive;
    bad.region = CertRegion::T1_II;
    bad.status = CertStatus::Refuted;
    bad.witness = Witness{{3.5, 5.0}, Interval{0.25, 0.5}};
    Certificate transport;
    transport.id = "vdot_neg_on_T2_via_phi2";
    transport.transport = true;
    transport.status = CertStatus::Proved;
    transport.note = "transported through the antidiagonal reflection";
    rep.certificates = {ok, bad, transport};
    rep.overall = CertStatus::Refuted;
    rep.seconds = 0.5;
    rep.transport.samples = 9000;
    rep.transport.max_vdot = -0.0077;
    rep.transport.max_sym_residual = 1e-15;
    rep.transport.passed = true;

    std::ostringstream os;
    write_certificates(os, rep);
    auto lines = lines_of(os.str());
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] ==
          "obligation,region,claim,status,boxes_proved,boxes_excluded,boxes_empty,"
          "boxes_undecided,max_depth,seconds,detail");
    CHECK(lines[1].rfind("psi1_nonpos_on_T1_I_II,", 0) == 0);
    CHECK(lines[1].find("proved") != std::string::npos);
    CHECK(lines[2].find("refuted") != std::string::npos);
    CHECK(lines[2].find("witness (3.5 5) value_lo 0.25") != std::string::npos);
    CHECK(lines[3].rfind("vdot_neg_on_T2_via_phi2,T2,", 0) == 0);
    CHECK(lines[4].rfind("overall,refuted,", 0) == 0);
    CHECK(lines[4].find("transport samples 9000") != std::string::npos);
}

TEST_CASE("basin grid survives a csv round trip", "[io]") {
    BasinGrid g = basin_grid(MapSpec::ring(0.1), 16);
    std::ostringstream os;
    write_basin_csv(os, g);
    auto lines = lines_of(os.str());
    REQUIRE(lines.size() == 1 + 16 * 16 + 4);
    CHECK(lines[0] == "i,j,label");
    CHECK(lines[1 + 16 * 16] == "# resolution 16");
    CHECK(lines[1 + 16 * 16 + 1].rfind("# sinks ", 0) == 0);
    CHECK(lines[1 + 16 * 16 + 2].rfind("# counts ", 0) == 0);
    CHECK(lines[1 + 16 * 16 + 3].rfind("# unresolved ", 0) == 0);

    std::istringstream is(os.str());
    BasinGrid back = parse_basin_csv(is);
    CHECK(back == g);
    REQUIRE(back.sinks.size() == g.sinks.size());
    for (size_t k = 0; k < g.sinks.size(); ++k) {
        CHECK(back.sinks[k].x == g.sinks[k].x);
        CHECK(back.sinks[k].y == g.sinks[k].y);
    }
}

TEST_CASE("parsing garbage is rejected", "[io]") {
    std::istringstream junk("hello world\n1,2\n");
    CHECK_THROWS_AS(parse_basin_csv(junk), std::runtime_error);
    // Header but no resolution footer.
    std::istringstream headless("i,j,label\n0,0,1\n");
    CHECK_THROWS_AS(parse_basin_csv(headless), std::runtime_error);
}

TEST_CASE("ppm raster is valid and marks the fixed points", "[io]") {
    BasinGrid g = basin_grid(MapSpec::ring(0.1), 16);
    std::vector<TorusPoint> markers{{0.0, 0.0}};
    std::ostringstream os;
    write_basin_ppm(os, g, markers);
    std::istringstream is(os.str());

    std::string magic;
    int w = 0, hgt = 0, maxv = 0;
    is >> magic >> w >> hgt >> maxv;
    CHECK(magic == "P3");
    CHECK(w == 16);
    CHECK(hgt == 16);
    CHECK(maxv == 255);

    std::vector<int> px;
    int v;
    while (is >> v) px.push_back(v);
    REQUIRE(px.size() == static_cast<size_t>(16 * 16 * 3));

    // Rows print top-down: grid row j=N-1 first. The marker at (0,0) lands in
    // grid cell (0,0), i.e. the first pixel of the last printed row.
    size_t marker_at = static_cast<size_t>((16 - 1) * 16 + 0) * 3;
    CHECK(px[marker_at] == 255);
    CHECK(px[marker_at + 1] == 255);
    CHECK(px[marker_at + 2] == 0);

    // The diagonal cells are unresolved and painted dark grey; cell (1,1) is
    // printed at row index N-2 from the top.
    size_t diag_at = static_cast<size_t>((16 - 2) * 16 + 1) * 3;
    CHECK(px[diag_at] == 24);
    CHECK(px[diag_at + 1] == 24);
    CHECK(px[diag_at + 2] == 24);
}

TEST_CASE("conjecture report prints key,value rows", "[io]") {
    ConjectureReport rep = conjecture_scan(MapSpec::ring(0.1), 64);
    std::ostringstream os;
    write_conjecture_report(os, rep);
    auto lines = lines_of(os.str());
    REQUIRE(lines.size() == 10);
    CHECK(lines[0] == "resolution,64");
    CHECK(lines[2].rfind("cells_checked,", 0) == 0);
    CHECK(lines[3].rfind("max_increment,-", 0) == 0);
    CHECK(lines[9] == "negative_outside_exclusions,yes");
    for (const auto& line : lines) CHECK(count_char(line, ',') == 1);
}

TEST_CASE("open_out refuses an unwritable path", "[io]") {
    CHECK_THROWS_AS(open_out("/nonexistent-dir-xyz/out.csv"), std::runtime_error);
}
