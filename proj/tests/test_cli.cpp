#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <cmath>
#include <sstream>
#include <vector>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(TRIGSP_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

std::string sine_csv() {
  std::ostringstream os;
  os << "N=5,variant=0\n";
  for (int j = 0; j < 5; ++j) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", std::sin(2 * std::numbers::pi * j / 5));
    os << buf << "\n";
  }
  return os.str();
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("interpolate pipeline passes through the sample nodes") {
  const fs::path in = write_temp("trigsp_sine.csv", sine_csv());
  // 35 = 7 * 5 evaluation points contain every grid node
  const RunResult r =
      run("interpolate --r 2 --gamma 1,1,1 --eta 1,1,1 --eval-points 35 -i " + in.string());
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() >= 37);  // comment headers + column header + 35 rows
  int checked = 0;
  for (const auto& line : lines) {
    if (line.empty() || line[0] == '#' || line[0] == 'x') continue;
    const auto comma = line.find(',');
    const double x = std::strtod(line.substr(0, comma).c_str(), nullptr);
    const double v = std::strtod(line.substr(comma + 1).c_str(), nullptr);
    // node indices are multiples of 7
    const double rem = std::fmod(x, 2 * std::numbers::pi / 5);
    if (rem < 1e-9 || rem > 2 * std::numbers::pi / 5 - 1e-9) {
      CHECK(v == doctest::Approx(std::sin(x)).epsilon(1e-8));
      ++checked;
    }
  }
  CHECK(checked == 5);
}

TEST_CASE("CLI output is byte-identical across runs") {
  const fs::path in = write_temp("trigsp_sine2.csv", sine_csv());
  const std::string args = "interpolate --r 1 --eval-points 64 -i " + in.string();
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("factors tables") {
  SUBCASE("tau table row k = 10 reads exactly 0.5") {
    const RunResult r = run("factors --tau --lambda 0.1 --p 2 --kmax 50");
    REQUIRE(r.exit_code == 0);
    bool found = false;
    for (const auto& line : lines_of(r.output))
      if (line == "10,0.5") found = true;
    CHECK(found);
  }
  SUBCASE("fejer table ends at 1/101") {
    const RunResult r = run("factors --fejer --alpha 1 --n 100");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(!lines.empty());
    const std::string& last = lines.back();
    REQUIRE(last.substr(0, 4) == "100,");
    const double v = std::strtod(last.substr(4).c_str(), nullptr);
    CHECK(v == doctest::Approx(1.0 / 101).epsilon(1e-15));
  }
  SUBCASE("interpolation factor table") {
    const RunResult r = run("factors --interp --N 3 --r 1");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(!lines.empty());
    const std::string& row = lines.back();
    REQUIRE(row.substr(0, 2) == "1,");
    const double hc = std::strtod(row.substr(2).c_str(), nullptr);
    CHECK(hc == doctest::Approx(4 * std::numbers::pi * std::numbers::pi / 27).epsilon(1e-12));
  }
  SUBCASE("kind flags are mutually exclusive") {
    CHECK(run("factors --tau --fejer").exit_code == 2);
    CHECK(run("factors").exit_code == 2);
  }
}

TEST_CASE("coeffs emits the spectrum") {
  const fs::path in = write_temp("trigsp_sine3.csv", sine_csv());
  const RunResult csv = run("coeffs -i " + in.string());
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.output.find("k,a,b") != std::string::npos);
  const RunResult json = run("coeffs -f json -i " + in.string());
  REQUIRE(json.exit_code == 0);
  CHECK(json.output.find("\"a0\"") != std::string::npos);
}

TEST_CASE("smooth-data output is loadable and preserves constants") {
  std::string csv = "N=5,variant=0\n2\n2\n2\n2\n2\n";
  const fs::path in = write_temp("trigsp_const.csv", csv);
  const RunResult r = run("smooth-data -i " + in.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.substr(0, 16) == "N=5,variant=0\n2\n");
}

TEST_CASE("spline JSON round trip through eval") {
  const fs::path in = write_temp("trigsp_sine4.csv", sine_csv());
  const fs::path spline = fs::temp_directory_path() / "trigsp_spline.json";
  const RunResult build = run("interpolate --r 2 --eval-points 8 --spline-out " + spline.string() +
                              " -i " + in.string() + " -o /dev/null");
  REQUIRE(build.exit_code == 0);
  const RunResult ev = run("eval --spline " + spline.string() + " --at 0");
  REQUIRE(ev.exit_code == 0);
  const auto lines = lines_of(ev.output);
  const std::string& row = lines.back();
  const double v = std::strtod(row.substr(row.find(',') + 1).c_str(), nullptr);
  CHECK(v == doctest::Approx(0.0).epsilon(1e-9));
  const RunResult dv = run("eval --spline " + spline.string() + " --at 0 --derivative 1");
  REQUIRE(dv.exit_code == 0);
}

TEST_CASE("exit codes") {
  SUBCASE("usage errors exit 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("interpolate --r notanumber").exit_code == 2);
    const fs::path in = write_temp("trigsp_sine6.csv", sine_csv());
    // I2 contradicts the sample grid variant: validation failure
    CHECK(run("interpolate --i2 1 -i " + in.string()).exit_code == 2);
  }
  SUBCASE("parse errors exit 3") {
    const fs::path bad = write_temp("trigsp_bad.csv", "N=4,variant=0\n1\n2\n3\n4\n");
    CHECK(run("coeffs -i " + bad.string()).exit_code == 3);
  }
  SUBCASE("math errors exit 4") {
    const fs::path in = write_temp("trigsp_sine5.csv", sine_csv());
    // gamma tuned so hc_1 vanishes: degenerate factor
    const RunResult r = run(
        "interpolate --r 1 --gamma 1,-7.0089828805411791,-7.0089828805411791 -i " + in.string());
    CHECK(r.exit_code == 4);
    CHECK(r.output.find("degenerate") != std::string::npos);
  }
  SUBCASE("io errors exit 5") {
    CHECK(run("coeffs -i /nonexistent/file.csv").exit_code == 5);
  }
}

TEST_CASE("verify quick passes and the corrupted tolerance is a working negative control") {
  const RunResult ok = run("verify --level quick");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("PASS") != std::string::npos);
  CHECK(ok.output.find("FAIL") == std::string::npos);

  const RunResult bad = run("verify --level quick --tolerance 1e-2");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("FAIL") != std::string::npos);
}
