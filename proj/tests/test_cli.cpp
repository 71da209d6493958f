#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(SECANT_CLI_PATH) + " " + args + " 2>/dev/null";
  Result res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("predict json") {
  auto r = run("predict --n 4 --l 3 --partition 3,2,2 --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["predicted"] == "113");
  CHECK(j["status"] == "conjectural");
  for (const char* key : {"n", "l", "partition", "d", "r", "s", "N", "dimX", "expected", "predicted", "fills",
                          "defect", "epsilon", "status", "citation", "a_seq", "errata"})
    CHECK(j.contains(key));
}

TEST_CASE("series variants") {
  auto num = nlohmann::json::parse(run("series --n 4 --l 3 --partition 3,2,2 --truncate 7 --which numerator").out);
  CHECK(num["polynomial"] == "1 - t^4 - 2t^5 + 2t^7");
  auto art = nlohmann::json::parse(run("series --n 4 --l 3 --partition 3,2,2 --truncate 15 --which artinian").out);
  CHECK(art["coefficients"][9] == "646");
  auto pred = nlohmann::json::parse(run("series --n 4 --l 3 --partition 3,2,2 --truncate 7").out);
  CHECK(pred["coefficients"][7] == "6");
  auto join = nlohmann::json::parse(run("series --n 3 --l 1 --partition 1,1 --truncate 3 --which join").out);
  CHECK(join["coefficients"] == nlohmann::json::array({"1", "1", "1", "1"}));
}

TEST_CASE("oracle and verify") {
  auto o = run("oracle --n 3 --l 2 --partition 9,7,2 --json --trials 2 --seed 5");
  REQUIRE(o.code == 0);
  auto j = nlohmann::json::parse(o.out);
  CHECK(j["secant_dim"] == 188);
  CHECK(j["trial_ranks"].size() == 2);
  auto v = run("verify --n 4 --l 3 --partition 3,2,2");
  CHECK(v.code == 0);
  CHECK(nlohmann::json::parse(v.out)["agree"] == true);
}

TEST_CASE("family commands") {
  auto lf = nlohmann::json::parse(run("lfactor --n 6 --l 3 --d 3").out);
  CHECK(lf["predicted"] == "54");
  auto rf = nlohmann::json::parse(run("redforms --n 5 --l 4 --d 3").out);
  CHECK(rf["fills"] == true);
  auto n3 = nlohmann::json::parse(run("n3line --partition 9,7,2").out);
  CHECK(n3["classification"] == "defective");
  auto seg = nlohmann::json::parse(run("segre --n 4 --l 3 --partition 3,2,2").out);
  CHECK(seg["balanced"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run("predict --n 2 --l 2 --partition 1,1").code == 2);
  CHECK(run("predict --n 4 --l 2 --partition 3,x").code == 2);
  CHECK(run("predict --n 4").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("oracle --n 4 --l 2 --partition 2,1 --prime 1000001").code == 2);
  CHECK(run("oracle --n 6 --l 2 --partition 4,3 --max-columns 10").code == 4);
  CHECK(run("verify --n 6 --l 2 --partition 4,3 --max-columns 10").code == 4);
}

TEST_CASE("sweep writes deterministic csv") {
  const std::string a = "cli_sweep_a.csv", b = "cli_sweep_b.csv";
  auto r1 = run("sweep --n-range 3:4 --l-range 2:3 --d-max 4 --r-max 3 --families general,balanced --out " + a);
  auto r2 = run("sweep --n-range 3:4 --l-range 2:3 --d-max 4 --r-max 3 --families general,balanced --out " + b);
  REQUIRE(r1.code == 0);
  REQUIRE(r2.code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("family,n,l,partition", 0) == 0);
  auto r3 = run("sweep --n-range 3:3 --l-range 2:2 --d-max 3 --r-max 2 --format json --out cli_sweep.json");
  REQUIRE(r3.code == 0);
  auto doc = nlohmann::json::parse(slurp("cli_sweep.json"));
  CHECK(doc["rows"].size() == 2);
  CHECK(doc["summary"]["rows"] == 2);
  CHECK(run("sweep --n-range 3:x --l-range 2:2 --d-max 3 --r-max 2 --out x.csv").code == 2);
  CHECK(run("sweep --n-range 3:3 --l-range 2:2 --d-max 3 --r-max 2 --families nope --out x.csv").code == 2);
  std::remove(a.c_str());
  std::remove(b.c_str());
  std::remove("cli_sweep.json");
}
