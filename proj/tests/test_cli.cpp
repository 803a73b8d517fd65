#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell, capturing stdout; stderr is discarded.
Run qps(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" QPS_CLI_PATH "\" " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qps_cli_test_" + name);
}

}  // namespace

TEST_CASE("cohomology command") {
  const auto h3 = qps("cohomology h3");
  REQUIRE(h3.code == 0);
  CHECK(parse(h3)["cohomology"]["dimH2"] == 2);
  CHECK(parse(h3)["config"]["algebra"] == "h3");

  const auto so3 = qps("cohomology so3 --omega 1,0,0");
  REQUIRE(so3.code == 0);
  CHECK(parse(so3)["kernel"]["gamma_dim"] == 2);

  const auto bad = temp_file("bad.json");
  std::ofstream(bad) << "{\"name\": \"x\",,}";
  CHECK(qps("cohomology " + bad.string()).code == 1);

  const auto jac = temp_file("jacobi.json");
  std::ofstream(jac) << R"({"name":"bad","dim":3,"basis":["a","b","c"],"brackets":[)"
                     << R"({"i":0,"j":1,"coeffs":{"0":"1"}},{"i":0,"j":2,"coeffs":{"1":"1"}}]})";
  const auto v = qps("cohomology " + jac.string());
  CHECK(v.code == 2);
  CHECK(parse(v)["validation"]["violations"].size() == 1);

  CHECK(qps("cohomology h3 --omega 1,0").code == 2);
  // H* ^ P1* on the Galilei algebra is not closed; the residual is reported.
  std::string omega = "1";
  for (int i = 1; i < 45; ++i) omega += ",0";
  const auto nc = qps("cohomology galilei --omega " + omega);
  CHECK(nc.code == 2);
  CHECK(parse(nc)["kernel"].contains("residual"));
  CHECK(qps("cohomology no_such_algebra").code == 1);
  std::filesystem::remove(bad);
  std::filesystem::remove(jac);
}

TEST_CASE("spectrum command") {
  const auto csv = qps("spectrum --format csv");
  REQUIRE(csv.code == 0);
  std::istringstream is(csv.out);
  std::string header, row0;
  std::getline(is, header);
  std::getline(is, row0);
  CHECK(header == "index,eigenvalue");
  REQUIRE(row0.rfind("0,", 0) == 0);
  CHECK(std::abs(std::stod(row0.substr(2)) - (1 - std::exp(-4.5))) <= 1e-4);

  const auto empty = qps("spectrum --region empty --format csv");
  REQUIRE(empty.code == 0);
  std::istringstream es(empty.out);
  std::string line;
  std::getline(es, line);
  int rows = 0;
  while (std::getline(es, line)) {
    ++rows;
    CHECK(std::stod(line.substr(line.find(',') + 1)) == 0.0);
  }
  CHECK(rows == 32);

  const auto small = qps("spectrum --region disk:0.70710678118654757 --spacing 0.15");
  REQUIRE(small.code == 0);
  CHECK(parse(small)["capacity"]["count"] == 0);
  CHECK(parse(small)["config"]["region"] == "disk:0.70710678118654757");

  CHECK(qps("spectrum --epsilon 0.7").code == 2);
  CHECK(qps("spectrum --region blob:1").code == 2);
  CHECK(qps("spectrum --dim 1").code == 2);
  CHECK(qps("spectrum --bogus").code == 1);
  CHECK(qps("spectrum --format xml").code == 1);
}

TEST_CASE("tomography command") {
  const auto st = qps("tomography --self-test --seed 7 --dim 4");
  REQUIRE(st.code == 0);
  CHECK(parse(st)["frobenius_error"].get<double>() <= 1e-6);
  CHECK(parse(st)["completeness"]["complete"] == true);

  const auto pos = qps("tomography --positions-only");
  REQUIRE(pos.code == 0);
  CHECK(parse(pos)["completeness"]["complete"] == false);
  CHECK(parse(pos)["completeness"]["rank"] == 4);

  CHECK(qps("tomography --probabilities /nonexistent/probabilities.csv").code == 1);
  CHECK(qps("tomography").code == 2);

  const auto probs = temp_file("probs.csv");
  REQUIRE(qps("tomography --self-test --seed 3 --emit-probabilities " + probs.string()).code == 0);
  const auto back = qps("tomography --probabilities " + probs.string());
  REQUIRE(back.code == 0);
  CHECK(parse(back)["reconstruction"]["residual_flagged"] == false);

  const auto out = temp_file("tomo.json");
  REQUIRE(qps("tomography --self-test --out " + out.string()).code == 0);
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(nlohmann::json::parse(ss.str())["config"]["command"] == "tomography");
  std::filesystem::remove(probs);
  std::filesystem::remove(out);
}

TEST_CASE("effects command") {
  const auto e = qps("effects --trials 1000 --seed 1");
  REQUIRE(e.code == 0);
  const auto j = parse(e);
  for (const auto& [k, v] : j["axioms"]["failures"].items()) CHECK_MESSAGE(v == 0, k);
  CHECK(j["projection_scan"]["all_pass"] == true);
  CHECK(j["projection_scan"]["regions"].size() == 6);
  CHECK(qps("effects --trials 0").code == 2);
}

TEST_CASE("transform and admissibility commands") {
  const auto t = qps("transform --state random:8 --seed 2");
  REQUIRE(t.code == 0);
  CHECK(parse(t)["relative_error"].get<double>() <= 1e-3);
  const auto csv = qps("transform --state fock:0 --format csv --radius 2 --spacing 0.5 --dim 8");
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("q,p,re,im,weight\n", 0) == 0);
  CHECK(qps("transform --state fock:99").code == 2);

  const auto a = qps("admissibility --radius 6 --spacing 0.1");
  REQUIRE(a.code == 0);
  CHECK(std::abs(parse(a)["admissibility"]["d_constant"].get<double>() - 1.0) <= 1e-3);
  CHECK(qps("admissibility --radius 3").code == 2);
  CHECK(qps("admissibility --generator squeezed:9").code == 2);
}

TEST_CASE("thread count does not change output") {
  for (const std::string cmd : {"spectrum --spacing 0.1", "tomography --self-test --seed 4", "transform"}) {
    const auto a = qps(cmd, "QPS_THREADS=1");
    const auto b = qps(cmd, "QPS_THREADS=8");
    const auto c = qps(cmd + " --threads 3");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.out.find("thread") == std::string::npos);
  }
}
