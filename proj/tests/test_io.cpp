#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "endogrowth/errors.hpp"
#include "endogrowth/report.hpp"

using namespace endogrowth;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = FIXTURES_DIR;
const std::string kCli = CLI_PATH;

const char* const kBundles[] = {"counter", "bs", "ex1", "ex3", "kb", "sol_ex1", "sol_ex2", "sol_ex3"};

std::string fixture(const std::string& name, const char* ext) { return kFixtures + "/" + name + ext; }

fs::path scratch() {
  const fs::path d = fs::temp_directory_path() / "endogrowth_test_io";
  fs::create_directories(d);
  return d;
}

std::string write_file(const std::string& name, const std::string& body) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << body;
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " >" + (scratch() / "stdout.txt").string() + " 2>" +
                          (scratch() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("bundled descriptors round-trip and build") {
  for (const char* name : kBundles) {
    CAPTURE(name);
    const GroupDescriptor g = load_group(fixture(name, ".group"));
    const EndoDescriptor e = load_endo(fixture(name, ".endo"));
    CHECK(parse_group(emit_group(g)) == g);
    CHECK(parse_endo(emit_endo(e)) == e);
    CHECK(emit_group(parse_group(emit_group(g))) == emit_group(g));
    const AnyMachine m = make_machine(g);
    const Endomorphism phi = make_endo(m, e);
    CHECK(phi.domain() == machine_gens(m));
  }
}

TEST_CASE("closed forms of the bundled examples") {
  const std::pair<const char*, double> expected[] = {
      {"counter", 1.0},           {"ex1", (3 + std::sqrt(5.0)) / 2}, {"ex3", 1.0},
      {"kb", 5.0},                {"sol_ex1", 1.0},                  {"sol_ex2", std::sqrt(5.0)},
      {"sol_ex3", std::sqrt(2.0)}};
  for (const auto& [name, value] : expected) {
    CAPTURE(name);
    const AnyMachine m = make_machine(load_group(fixture(name, ".group")));
    const auto c = closed_form(m, make_endo(m, load_endo(fixture(name, ".endo"))), 1e-9);
    REQUIRE(c.value);
    CHECK(std::abs(*c.value - value) < 1e-9);
  }
  const AnyMachine bs = make_machine(load_group(fixture("bs", ".group")));
  const auto c = closed_form(bs, make_endo(bs, load_endo(fixture("bs", ".endo"))));
  CHECK_FALSE(c.value);
  CHECK(std::abs(c.certificate["restricted_gr"].get<double>() - 2) < 1e-12);
}

TEST_CASE("descriptor validation") {
  CHECK(machine_family(make_machine(parse_group(Json::parse(R"({"family":"free_abelian","params":{"rank":2}})")))) ==
        "free_abelian");
  CHECK_THROWS_AS(make_machine(parse_group(Json::parse(R"({"family":"sol_lattice","params":{"A":[[1,0],[0,1]]}})"))),
                  ValidationError);
  CHECK_THROWS_AS(parse_group(Json::parse(R"({"family":"torus","params":{}})")), Error);
  CHECK_THROWS_AS(parse_group(Json::parse(R"({"family":"klein_bottle","params":{},"colour":1})")), ValidationError);
  CHECK_THROWS_AS(read_json_file(write_file("broken.json", "{\"family\": ")), ValidationError);
  CHECK_THROWS_AS(read_json_file((scratch() / "missing.json").string()), ValidationError);

  const AnyMachine kb = make_machine(load_group(fixture("kb", ".group")));
  const EndoDescriptor bad = parse_endo(Json::parse(R"({"images":{"x":"x^2","y":"y^2 x"}})"));
  CHECK_THROWS_AS(make_endo(kb, bad), ValidationError);
  const EndoDescriptor shortcut = load_endo(fixture("sol_ex2", ".endo"));
  CHECK_THROWS_AS(make_endo(kb, shortcut), FamilyError);

  // big integers survive as strings
  const Json big = to_json(ipow(BigInt(10), 30));
  CHECK(big.is_string());
  CHECK(bigint_from_json(big, "x") == ipow(BigInt(10), 30));
  CHECK(to_json(BigInt(-7)).is_number_integer());
}

TEST_CASE("block lists") {
  const BlockList b = parse_blocks(Json::parse(R"([{"weight":1,"matrix":[[2,1],[1,1]]},{"weight":2,"matrix":[[1]]}])"));
  REQUIRE(b.size() == 2);
  CHECK(b[0].matrix == IntMatrix{{2, 1}, {1, 1}});
  const auto rep = cmd_closed_blocks(b, RunOptions{});
  CHECK(std::abs(rep.json["closed"]["value"].get<double>() - (3 + std::sqrt(5.0)) / 2) < 1e-9);
  CHECK(parse_blocks(Json::parse(R"({"blocks":[{"weight":1,"matrix":[[3]]}]})")).size() == 1);
  CHECK_THROWS_AS(parse_blocks(Json::parse(R"([{"weight":0,"matrix":[[3]]}])")), ValidationError);
}

TEST_CASE("reports are deterministic and reproducible from their inputs") {
  RunOptions opt;
  opt.kmax = 8;
  for (const char* name : {"ex1", "sol_ex3", "kb"}) {
    CAPTURE(name);
    const GroupDescriptor g = load_group(fixture(name, ".group"));
    const EndoDescriptor e = load_endo(fixture(name, ".endo"));
    const Report a = cmd_compare(g, e, opt), b = cmd_compare(g, e, opt);
    CHECK(a.json.dump(2) == b.json.dump(2));
    CHECK(a.summary == b.summary);

    const Json& in = a.json["inputs"];
    RunOptions again;
    again.kmax = in["options"]["kmax"].get<unsigned>();
    again.radius = in["options"]["radius"].get<std::size_t>();
    again.cap = in["options"]["cap"].get<std::size_t>();
    again.tol = in["options"]["tol"].get<double>();
    const Report c = cmd_compare(parse_group(in["group"]), parse_endo(in["endo"]), again);
    CHECK(c.json.dump(2) == a.json.dump(2));
  }
  const Report s = cmd_compare(load_group(fixture("sol_ex3", ".group")), load_endo(fixture("sol_ex3", ".endo")), opt);
  CHECK(s.json["verdict"] == "consistent");
}

TEST_CASE("command-line exit codes and outputs") {
  const std::string g2 = fixture("sol_ex2", ".group"), e2 = fixture("sol_ex2", ".endo");
  const std::string out = (scratch() / "closed.json").string();
  CHECK(run("closed --group " + g2 + " --endo " + e2 + " --out " + out) == 0);
  const Json j = Json::parse(read_file(out));
  CHECK(std::abs(j["closed"]["value"].get<double>() - std::sqrt(5.0)) < 1e-9);
  CHECK(read_file((scratch() / "stdout.txt").string()).find("GR = 2.2360679775") != std::string::npos);

  CHECK(run("empirical --group " + fixture("counter", ".group") + " --endo " + fixture("counter", ".endo") +
            " --kmax 4 --format csv") == 0);
  const std::string csv = read_file((scratch() / "stdout.txt").string());
  CHECK(csv.rfind("k,L,provenance,root,running_inf", 0) == 0);
  CHECK(csv.find("\n4,1,exact,1,1") != std::string::npos);

  const std::string bad = write_file("identity_sol.group", R"({"family":"sol_lattice","params":{"A":[[1,0],[0,1]]}})");
  CHECK(run("ball --group " + bad) == 2);
  CHECK(run("closed --group " + g2) == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("ball --group " + fixture("ex1", ".group") + " --radius 10 --cap 10") == 3);
  CHECK(read_file((scratch() / "stderr.txt").string()).find("cap") != std::string::npos);
  CHECK(run("wordlen --group " + fixture("bs", ".group") + " --word \"b^4\" --radius 6") == 0);
  CHECK(Json::parse(read_file((scratch() / "stdout.txt").string()))["exact"] == 4);
}
