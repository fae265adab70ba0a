#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "app.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qrmt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = qrmt::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("qrmt_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  [[nodiscard]] std::string str(const std::string& sub = "") const { return (path_ / sub).string(); }

 private:
  fs::path path_;
};

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Csv read_csv(const fs::path& file) {
  std::ifstream in(file);
  Csv c;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (c.header.empty()) {
      c.header = cells;
      continue;
    }
    std::vector<double> row;
    for (const auto& s : cells) row.push_back(std::stod(s));
    c.rows.push_back(std::move(row));
  }
  return c;
}

nlohmann::json read_json(const fs::path& file) {
  std::ifstream in(file);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("sample writes one row per matrix and is reproducible") {
  TempDir a;
  TempDir b;
  const std::vector<std::string> args = {"sample", "--n", "20", "--lambda", "1", "--alpha", "auto",
                                         "--count", "10000", "--seed", "7"};
  auto first = args;
  first.insert(first.end(), {"--out", a.str(), "--threads", "1"});
  auto second = args;
  second.insert(second.end(), {"--out", b.str(), "--threads", "4"});
  REQUIRE(run(first).code == 0);
  REQUIRE(run(second).code == 0);
  const Csv c = read_csv(a.str("spectra.csv"));
  CHECK(c.rows.size() == 10000);
  CHECK(c.header.size() == 20);
  for (std::size_t i = 0; i < 100; ++i) CHECK(std::is_sorted(c.rows[i].begin(), c.rows[i].end()));
  const auto ma = read_json(a.str("manifest.json"));
  const auto mb = read_json(b.str("manifest.json"));
  CHECK(ma["outputs"][0]["sha256"] == mb["outputs"][0]["sha256"]);
  CHECK(ma["master_seed"] == 7);
  CHECK(ma["sample_count"] == 10000);
}

TEST_CASE("raw matrices") {
  TempDir d;
  REQUIRE(run({"sample", "--n", "3", "--q", "0.5", "--alpha", "1", "--count", "5", "--raw", "--out", d.str()}).code == 0);
  const Csv c = read_csv(d.str("matrices.csv"));
  CHECK(c.rows.size() == 5);
}

TEST_CASE("parameter errors exit 2 and name the bound") {
  TempDir d;
  const auto r = run({"sample", "--n", "3", "--q", "1.9", "--out", d.str()});
  CHECK(r.code == 2);
  CHECK(r.err.find("q_max") != std::string::npos);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') <= 1);
  CHECK(run({"sample", "--n", "3"}).code == 2);
  CHECK(run({"density", "--n", "3", "--lambda", "1", "--q", "1.1"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("I/O errors exit 3") {
  TempDir d;
  std::ofstream(d.str("blocker")) << "x";
  CHECK(run({"density", "--n", "3", "--lambda", "2", "--out", d.str("blocker/sub")}).code == 3);
}

TEST_CASE("density curve on a symmetric grid is even") {
  TempDir d;
  REQUIRE(run({"density", "--n", "6", "--lambda", "0.75", "--from", "-4", "--to", "4", "--points", "81", "--svg",
               "--out", d.str()}).code == 0);
  const Csv c = read_csv(d.str("curve.csv"));
  CHECK(c.header == std::vector<std::string>{"x", "y", "err"});
  REQUIRE(c.rows.size() == 81);
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    CHECK(c.rows[i][0] == -c.rows[80 - i][0]);
    CHECK(std::abs(c.rows[i][1] - c.rows[80 - i][1]) <= 1e-10 * c.rows[i][1]);
  }
  CHECK(fs::exists(d.str("plot.svg")));
}

TEST_CASE("gap curve starts at s = 0, E = 1") {
  TempDir d;
  REQUIRE(run({"gap", "--n", "20", "--lambda", "1", "--alpha", "0.5", "--out", d.str()}).code == 0);
  const Csv c = read_csv(d.str("curve.csv"));
  REQUIRE(!c.rows.empty());
  CHECK(c.rows[0][0] == 0.0);
  CHECK(c.rows[0][1] == 1.0);
}

TEST_CASE("element curve at lambda = alpha = 1/2 is Cauchy") {
  TempDir d;
  REQUIRE(run({"element", "--n", "4", "--lambda", "0.5", "--alpha", "0.5", "--from", "-10", "--to", "10", "--out",
               d.str()}).code == 0);
  for (const auto& row : read_csv(d.str("curve.csv")).rows) {
    CHECK(std::abs(row[1] - 1.0 / (M_PI * (1.0 + row[0] * row[0]))) < 1e-8);
  }
  TempDir j;
  REQUIRE(run({"element", "--n", "4", "--lambda", "0.5", "--alpha", "0.5", "--format", "json", "--out", j.str()}).code == 0);
  const auto doc = read_json(j.str("curve.json"));
  CHECK(doc["params"]["lambda"] == 0.5);
}

TEST_CASE("reproduce fig1") {
  TempDir d;
  const auto r = run({"reproduce", "fig1", "--samples", "200", "--out", d.str()});
  // the lambda = 10 semicircle comparison is expected to fail
  CHECK(r.code == 4);
  const Csv c = read_csv(d.str("fig1_density.csv"));
  CHECK(c.header.size() == 6);
  CHECK(fs::exists(d.str("fig1.svg")));
  CHECK(fs::exists(d.str("report.txt")));
  CHECK(r.out.find("fig1 has 4 density curves and 1 reference curve") != std::string::npos);
}

TEST_CASE("reproduce fig2") {
  TempDir d;
  const auto r = run({"reproduce", "fig2", "--out", d.str()});
  const Csv c = read_csv(d.str("fig2_gap.csv"));
  REQUIRE(c.header.size() == 7);
  double worst = 0.0;
  for (const auto& row : c.rows) {
    const double s = row[1];
    if (s > 0.0) CHECK(row[3] == 0.5 / (s * s));
    if (s <= 4.0) worst = std::max(worst, std::abs(row[5] - row[2]));
  }
  CHECK(worst <= 0.03);
  CHECK(r.out.find("ok") != std::string::npos);
}

TEST_CASE("verify") {
  const auto spec = run({"verify", "--suite", "specfun"});
  CHECK(spec.code == 0);
  CHECK(spec.out.find("K_{1/2}(1)") != std::string::npos);

  const auto a = run({"verify", "--suite", "all", "--seed", "7"});
  const auto b = run({"verify", "--suite", "all", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  CHECK(run({"verify", "--suite", "specfun", "--tolerance-scale", "0"}).code != 0);
}

TEST_CASE("verify re-hashes manifest outputs") {
  TempDir d;
  REQUIRE(run({"density", "--n", "3", "--lambda", "2", "--out", d.str()}).code == 0);
  const std::string manifest = d.str("manifest.json");
  CHECK(run({"verify", "--suite", "none", "--manifest", manifest}).code == 0);
  std::ofstream(d.str("curve.csv"), std::ios::app) << "0,0,0\n";
  CHECK(run({"verify", "--suite", "none", "--manifest", manifest}).code == 4);
}
