#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "skelmc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = skelmc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SKELMC_DATA_DIR) + "/" + name; }

std::filesystem::path temp_file(const char* name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("classify --json on the order-10 example") {
  const Result r = run({"classify", "--json", data("example4.kernel.json")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["method"] == "skeleton");
  CHECK(j["skeleton_order"] == 3);
  CHECK(j["N"] == 1);
  CHECK(j["classes"][0]["period"] == 1);
  CHECK(j["essentially_irreducible"] == true);
  CHECK(j["irreducible"] == false);
  CHECK(j["irreducible_reason"] == "Prop 2 contraposition");
  CHECK(j["skeleton"].size() == 5);
}

TEST_CASE("oracle and classify agree field by field") {
  for (const char* file : {"example4.kernel.json", "golden_mean.kernel.json", "alternating.kernel.json",
                           "two_absorbing.kernel.json"}) {
    INFO(file);
    const auto a = nlohmann::json::parse(run({"classify", "--json", data(file)}).out);
    const auto b = nlohmann::json::parse(run({"oracle", "--json", data(file)}).out);
    CHECK(a["N"] == b["N"]);
    CHECK(a["transient_count"] == b["transient_count"]);
    CHECK(a["essentially_irreducible"] == b["essentially_irreducible"]);
    CHECK(a["irreducible"] == b["irreducible"]);
    REQUIRE(a["classes"].size() == b["classes"].size());
    for (std::size_t i = 0; i < a["classes"].size(); ++i) {
      CHECK(a["classes"][i]["period"] == b["classes"][i]["period"]);
      CHECK(a["classes"][i]["recurrent_size"] == b["classes"][i]["recurrent_size"]);
      CHECK(a["classes"][i]["recurrent_members"] == b["classes"][i]["recurrent_members"]);
    }
  }
}

TEST_CASE("check exit codes") {
  CHECK(run({"check", "--essential", data("example4.kernel.json")}).code == 0);
  CHECK(run({"check", "--essential", "--method", "matrix-sum", data("example4.kernel.json")}).code == 0);
  CHECK(run({"check", "--irreducible", data("example4.kernel.json")}).code == 1);
  CHECK(run({"check", "--irreducible", data("alternating.kernel.json")}).code == 0);
  CHECK(run({"check", "--essential", data("two_absorbing.kernel.json")}).code == 1);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Result missing = run({"classify", "/nonexistent/kernel.json"});
  CHECK(missing.code == 2);
  CHECK_FALSE(missing.err.empty());
  const auto bad = temp_file("skelmc_bad.kernel.json");
  std::ofstream(bad) << R"({"alphabet": ["0","1"], "order": 2, "contexts": [{"suffix": "1", "support": [0,0]}]})";
  const Result invalid = run({"skeleton", bad.string()});
  CHECK(invalid.code == 2);
  CHECK(invalid.err.find("all-false support row") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("gen is deterministic and its output loads") {
  const std::vector<std::string> args{"gen", "--alphabet-size", "3", "--order", "4", "--prohibition-rate", "0.3",
                                      "--seed", "42"};
  const Result a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto path = temp_file("skelmc_gen.kernel.json");
  auto with_output = args;
  with_output.insert(with_output.end(), {"-o", path.string()});
  REQUIRE(run(with_output).code == 0);
  std::ifstream in(path);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(written == a.out);
  CHECK(run({"classify", path.string()}).code == 0);
}

TEST_CASE("skeleton outputs") {
  const Result text = run({"skeleton", "--tree", data("example4.kernel.json")});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("skeleton order K = 3") != std::string::npos);
  CHECK(text.out.find("(root)") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"skeleton", "--json", data("example4.kernel.json")}).out);
  CHECK(j["skeleton_order"] == 3);
  CHECK(j["words"][4]["word"] == "111");
  const auto dot = temp_file("skelmc_tree.dot");
  REQUIRE(run({"skeleton", "--emit-dot", dot.string(), data("example4.kernel.json")}).code == 0);
  CHECK(std::filesystem::file_size(dot) > 0);
}

TEST_CASE("export-dot writes the skeleton matrix graph") {
  const Result r = run({"export-dot", data("example4.kernel.json")});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
  CHECK(r.out.find("#bdbdbd") != std::string::npos);
}

TEST_CASE("bench compares the lifted and skeleton state spaces") {
  const Result r = run({"bench", "--repeat", "1", data("example4.kernel.json")});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("strategy,states,ops,wall_ms,essentially_irreducible", 0) == 0);
  CHECK(r.out.find("prop4-lift,1024,") != std::string::npos);
  CHECK(r.out.find("skeleton-tarjan,8,") != std::string::npos);
}

TEST_CASE("zero tolerance flag") {
  const auto path = temp_file("skelmc_tiny.kernel.json");
  std::ofstream(path) << R"({"alphabet": ["0","1"], "order": 1,
      "contexts": [{"suffix": "0", "probs": [1e-12, 1.0]}, {"suffix": "1", "probs": [1.0, 1e-12]}]})";
  const auto plain = nlohmann::json::parse(run({"classify", "--json", path.string()}).out);
  const auto coerced = nlohmann::json::parse(run({"classify", "--json", "--zero-tol", "1e-9", path.string()}).out);
  CHECK(plain["skeleton_order"] == 0);
  CHECK(coerced["classes"][0]["period"] == 2);
}
