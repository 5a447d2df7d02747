#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CASIMIR_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args, int expected_code = 0) {
  const auto r = run(args);
  CAPTURE(args);
  REQUIRE(r.code == expected_code);
  return json::parse(r.out);
}

void has_keys(const json& j, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    CAPTURE(k);
    CHECK(j.contains(k));
  }
}

}  // namespace

TEST_CASE("table-delta") {
  const auto all = run_json("table-delta")["rows"];
  REQUIRE(all.is_array());
  CHECK(all.size() == 25);
  for (const auto& row : all) has_keys(row, {"label", "rank", "restricted_type", "two_delta_bar"});
  const auto e3 = run_json("table-delta --label EIII");
  CHECK(e3["two_delta_bar"] == json({"5", "6"}));
  CHECK(e3["restricted_type"] == "B2");
  const auto csv = run("table-delta --csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.find("EIII") != std::string::npos);
  CHECK(run("table-delta --label NOPE").code == 2);
}

TEST_CASE("rank2-catalog") {
  const auto cat = run_json("rank2-catalog");
  REQUIRE(cat["cases"].is_array());
  CHECK(cat["cases"].size() == 10);
  CHECK(cat["all_hold"] == true);
  for (const auto& c : cat["cases"]) has_keys(c, {"label", "restricted_type", "polynomial", "r_min", "checks"});
  CHECK(run("rank2-catalog --csv").code == 0);
}

TEST_CASE("collide") {
  const auto j = run_json("collide AIII2 --rank 2 --bound 4 --include-duals");
  REQUIRE(j.contains("collisions"));
  bool found = false;
  for (const auto& c : j["collisions"])
    found = found || (c["weight_a"] == json({0, 3}) && c["weight_b"] == json({2, 0}) && c["eigenvalue"] == "36");
  CHECK(found);
  CHECK(run("collide AIII2 --bound 4").code == 2);
  CHECK(run("collide AIII2 --rank 2 --bound 4 --csv").code == 2);
}

TEST_CASE("witness") {
  const auto j = run_json("witness AI --rank 3");
  has_keys(j, {"space", "v", "w", "eigenvalue", "certificate"});
  CHECK(j["v"] == json({3, 0, 3}));
  CHECK(j["w"] == json({0, 3, 2}));
  CHECK(j["eigenvalue"] == "108");
  CHECK(run("witness AI --rank 2").code != 0);
}

TEST_CASE("hopf") {
  const auto j = run_json("hopf --n 2 --bound 30");
  has_keys(j, {"n", "bound", "ordered_pairs_checked", "collisions", "swap_collisions", "non_swap_collisions", "holds"});
  CHECK(j["non_swap_collisions"] == 0);
  CHECK(j["holds"] == true);
  CHECK(run("hopf --n 1 --bound 5").code == 2);
  CHECK(run("hopf --n 2 --bound 3 --table").code == 0);
}

TEST_CASE("su2f") {
  const auto j = run_json("su2f --kmax 12");
  CHECK(j["dimensions"].size() == 13);
  run_json("su2f --kmax 12 --metric 1,2");
  const auto r = run("su2f --kmax 12 --metric 1,1");
  CHECK(r.code == 1);
  CHECK(run("su2f --kmax 12 --metric 1").code == 2);
}

TEST_CASE("product") {
  const auto j = run_json("product --factors S2,S2 --bound 5");
  has_keys(j, {"unit_beta", "beta", "candidates_tried", "hyperplanes", "holds"});
  CHECK(j["unit_beta"]["first"]["a"] == json({0, 1}));
  CHECK(j["holds"] == true);
  CHECK(run("product --factors AI --bound 5").code == 2);
}

TEST_CASE("simplicity") {
  const auto j = run_json("simplicity --family su2f --bound 12 --metric 1,2");
  CHECK(j["generic"]["condition_a"].empty());
  run_json("simplicity --family hopf --n 2 --bound 3 --metric 1,2 --mode complex", 1);
  CHECK(run("simplicity --family nope --bound 3").code == 2);
}

TEST_CASE("usage errors and determinism") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("hopf --n 2 --bound 3 --csv").code == 2);
  const auto a = run("collide AI --rank 3 --bound 4");
  const auto b = run("collide AI --rank 3 --bound 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto t1 = run("rank2-catalog --table");
  CHECK(t1.code == 0);
  CHECK(t1.out == run("rank2-catalog --table").out);
}
