#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "stanley/certificate_io.hpp"
#include "stanley/ideal_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace stanley;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run stanley_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "stanley");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
public:
  Scratch() {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("stanley-cli-" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string gen(const std::string& family, std::vector<std::string> params, const std::string& name) {
    std::vector<std::string> args = {"gen", family};
    args.insert(args.end(), params.begin(), params.end());
    args.insert(args.end(), {"-o", path(name)});
    REQUIRE(stanley_cli(args).code == cli::kExitOk);
    return path(name);
  }

  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("gen writes family ideal files") {
  Scratch s;
  CHECK(read_ideal_file(s.gen("cycle", {"7"}, "J7.ideal")) == cycle_ideal(7));
  CHECK(read_ideal_file(s.gen("line", {"2"}, "I2.ideal")).num_generators() == 1);
  CHECK(read_ideal_file(s.gen("veronese", {"5", "3"}, "V.ideal")).num_generators() == 10);
  const auto stdout_run = stanley_cli({"gen", "cycle", "3"});
  CHECK(stdout_run.out.find("ring 3") != std::string::npos);
  CHECK(stanley_cli({"gen", "cycle", "2"}).code == cli::kExitInput);
  CHECK(stanley_cli({"gen", "torus", "4"}).code == cli::kExitInput);
}

TEST_CASE("sdepth subcommand") {
  Scratch s;
  const auto j7 = s.gen("cycle", {"7"}, "J7.ideal");
  const auto j5 = s.gen("cycle", {"5"}, "J5.ideal");
  const auto i5 = s.gen("line", {"5"}, "I5.ideal");
  const auto i9 = s.gen("line", {"9"}, "I9.ideal");

  auto r = stanley_cli({"sdepth", "--quotient", j7, "--exact", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["sdepth"]["value"] == 2);
  CHECK(j["sdepth"]["refutation_k"] == 3);
  for (const char* key : {"nodes", "prunes_alpha", "prunes_existence", "wall_ms"}) CHECK(j["sdepth"]["stats"].contains(key));

  r = stanley_cli({"--format", "json", "sdepth", "--pair", j5, i5, "--exact"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(json::parse(r.out)["sdepth"]["value"] == 3);

  r = stanley_cli({"sdepth", "--ideal", i9, "--bounds-only", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  j = json::parse(r.out);
  bool okazaki = false;
  for (const auto& e : j["bounds"]["lower_bounds"]) okazaki |= e["provenance"] == "Thm 1.4" && e["value"] == 5;
  CHECK(okazaki);
  CHECK_FALSE(j.contains("sdepth"));

  r = stanley_cli({"sdepth", "--pair", i5, i5, "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(json::parse(r.out)["sdepth"]["value"] == "infinite");

  // Strategy and search flags change nothing about the answer.
  r = stanley_cli({"sdepth", "--quotient", j7, "--strategy", "fewest", "--hall", "--workers", "3", "--no-hint",
                   "--level-count-prune", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(json::parse(r.out)["sdepth"]["value"] == 2);

  r = stanley_cli({"sdepth", "--quotient", j7});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("sdepth") != std::string::npos);
}

TEST_CASE("sdepth input errors") {
  Scratch s;
  s.write("powers.ideal", "ring 3\ngen x1^2*x2\n");
  CHECK(stanley_cli({"sdepth", "--quotient", s.path("powers.ideal"), "--exact"}).code == cli::kExitInput);
  CHECK(stanley_cli({"sdepth", "--quotient", s.path("powers.ideal"), "--bounds-only"}).code == cli::kExitOk);
  CHECK(stanley_cli({"sdepth", "--quotient", s.path("missing.ideal")}).code == cli::kExitInput);
  s.write("bad.ideal", "ring 3\ngen x4\n");
  const auto bad = stanley_cli({"sdepth", "--quotient", s.path("bad.ideal")});
  CHECK(bad.code == cli::kExitInput);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(stanley_cli({"sdepth"}).code == cli::kExitInput);
  CHECK(stanley_cli({"frobnicate"}).code == cli::kExitInput);
  CHECK(stanley_cli({"--help"}).code == cli::kExitOk);
}

TEST_CASE("sdepth timeout is inconclusive") {
  Scratch s;
  const auto j22 = s.gen("cycle", {"22"}, "J22.ideal");
  const auto r = stanley_cli({"sdepth", "--quotient", j22, "--timeout", "0.05", "--format", "json"});
  CHECK(r.code == cli::kExitInconclusive);
  const auto j = json::parse(r.out);
  CHECK(j["sdepth"]["conclusive"] == false);
  CHECK(j["sdepth"]["upper"].is_number());
}

TEST_CASE("verify round trip and rejections") {
  Scratch s;
  const auto j7 = s.gen("cycle", {"7"}, "J7.ideal");
  const auto cert = s.path("J7.cert.json");
  REQUIRE(stanley_cli({"sdepth", "--quotient", j7, "--certificate", cert}).code == cli::kExitOk);
  CHECK(stanley_cli({"verify", cert}).code == cli::kExitOk);
  CHECK(stanley_cli({"verify", "--quotient", j7, "--certificate", cert}).code == cli::kExitOk);

  // The certificate names its ideal relative to its own directory.
  const auto doc = read_certificate_file(cert);
  CHECK(doc.source.kind == PosetKind::quotient);

  auto missing = doc;
  missing.certificate.intervals.erase(missing.certificate.intervals.begin());
  write_certificate_file(s.path("missing.json"), missing);
  auto r = stanley_cli({"verify", s.path("missing.json"), "--quotient", j7, "--format", "json"});
  CHECK(r.code == cli::kExitInvalidCertificate);
  CHECK(json::parse(r.out)["violation"]["kind"] == "uncovered");

  auto inflated = doc;
  inflated.certificate.claimed_sdepth = *inflated.certificate.claimed_sdepth + 1;
  write_certificate_file(s.path("inflated.json"), inflated);
  r = stanley_cli({"verify", s.path("inflated.json"), "--quotient", j7, "--format", "json"});
  CHECK(r.code == cli::kExitInvalidCertificate);
  CHECK(json::parse(r.out)["violation"]["kind"] == "claim_mismatch");

  // Wrong poset for a valid certificate.
  const auto i7 = s.gen("line", {"7"}, "I7.ideal");
  CHECK(stanley_cli({"verify", cert, "--quotient", i7}).code == cli::kExitInvalidCertificate);

  s.write("garbage.json", "{\"n\": 7, \"intervals\": [");
  CHECK(stanley_cli({"verify", s.path("garbage.json"), "--quotient", j7}).code == cli::kExitInput);
  s.write("schema.json", "{\"n\": 7, \"claimed_sdepth\": 1, \"intervals\": [{\"F\": [3, 1], \"G\": [1, 3]}]}");
  CHECK(stanley_cli({"verify", s.path("schema.json"), "--quotient", j7}).code == cli::kExitInput);
}

TEST_CASE("alpha subcommand") {
  Scratch s;
  const auto j7 = s.gen("cycle", {"7"}, "J7.ideal");
  const auto j13 = s.gen("cycle", {"13"}, "J13.ideal");
  auto r = stanley_cli({"alpha", "--quotient", j7, "-k", "3", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["alpha"] == json::array({1, 4, 3, -1}));
  CHECK(j["pass"] == false);

  r = stanley_cli({"alpha", "--quotient", j13, "-k", "5", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(json::parse(r.out)["pass"] == true);

  CHECK(stanley_cli({"alpha", "--quotient", j7, "-k", "9"}).code == cli::kExitInput);
}

TEST_CASE("poset subcommand") {
  Scratch s;
  const auto j7 = s.gen("cycle", {"7"}, "J7.ideal");
  const auto r = stanley_cli({"poset", "--quotient", j7, "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["size"] == 29);
  CHECK(j["level_counts"] == json::array({1, 7, 14, 7, 0, 0, 0, 0}));
}

TEST_CASE("paper and conjecture subcommands") {
  auto r = stanley_cli({"paper", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  CHECK(json::parse(r.out)["all_agree"] == true);

  Scratch s;
  r = stanley_cli({"conjecture", "-n", "10", "--certificate-dir", s.path("certs"), "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto v = json::parse(r.out)["verdicts"][0];
  CHECK(v["verdict"] == "confirmed");
  CHECK(v["value"] == 4);
  CHECK(stanley_cli({"verify", v["certificate"].get<std::string>()}).code == cli::kExitOk);

  CHECK(stanley_cli({"conjecture", "-n", "11"}).code == cli::kExitInput);
  CHECK(stanley_cli({"conjecture", "-n", "7"}).code == cli::kExitInput);
}
