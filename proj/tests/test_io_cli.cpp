#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "constellation/betti.hpp"
#include "constellation/corpus.hpp"
#include "constellation/error.hpp"
#include "constellation/io.hpp"

using namespace constellation;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string output;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(CONSTELLATION_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "constellation_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << content;
  return p.string();
}

std::string corpus(const std::string& name) { return default_corpus_dir() + "/" + name + ".json"; }

}  // namespace

TEST(Io, ComplexRoundTrip) {
  const auto k = SimplicialComplex::from_maximal_faces(5, {{0, 1, 2}, {2, 3}, {4}});
  EXPECT_EQ(complex_from_json(complex_to_json(k)), k);
  const auto j = parse_json(R"({"m": 4, "minimal_nonfaces": [[0, 2], [1, 3]]})");
  EXPECT_EQ(complex_from_json(j), SimplicialComplex::from_maximal_faces(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
}

TEST(Io, Errors) {
  EXPECT_THROW(complex_from_json(parse_json(R"({"m": 3, "maximal_faces": [[0, 3]]})")), Error);
  EXPECT_THROW(complex_from_json(parse_json(R"({"m": 3})")), Error);
  EXPECT_THROW(complex_from_json(parse_json(R"({"m": 3, "maximal_faces": [], "minimal_nonfaces": []})")), Error);
  try {
    parse_json("{\n  \"m\": 3,\n  \"maximal_faces\": [[0, 1]\n}", "x.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("x.json:4:"), std::string::npos) << e.what();
  }
  EXPECT_EQ(parse_vertex_list("0,2,5"), VertexSet({0, 2, 5}));
  EXPECT_THROW(parse_vertex_list("0,x"), Error);
}

TEST(Io, PolytopeConfigurationAndBettiRoundTrip) {
  const auto e = load_corpus_entry(corpus("square"));
  ASSERT_TRUE(e.polytope.has_value());
  const auto p = polytope_from_json(polytope_to_json(*e.polytope));
  EXPECT_EQ(p.vertices(), e.polytope->vertices());
  const auto x = load_corpus_entry(corpus("pentagon-config"));
  ASSERT_TRUE(x.configuration.has_value());
  EXPECT_EQ(configuration_from_json(configuration_to_json(*x.configuration)), *x.configuration);
  const auto t = hochster_betti(constellation_complex(*x.configuration));
  EXPECT_EQ(betti_from_json(betti_to_json(t), t.m), t);
  const RationalVector v{Rational(1, 2), Rational(-3)};
  EXPECT_EQ(rational_vector_from_json(rational_vector_to_json(v), "v"), v);
}

TEST(Corpus, LoadsAndTagsProvenance) {
  const auto entries = load_corpus(default_corpus_dir());
  EXPECT_GE(entries.size(), 25U);
  int polytopes = 0;
  for (const auto& e : entries) {
    polytopes += e.polytope ? 1 : 0;
    for (const auto& [key, item] : e.expected.items()) {
      const auto src = item["source"].get<std::string>();
      EXPECT_TRUE(src == "published" || src == "trivial" || src == "derived") << e.name << " " << key;
    }
  }
  EXPECT_GE(polytopes, 10);
  const auto bad = temp_file("bad-source.json", R"({"expected": {"x": {"value": 1, "source": "guess"}}})");
  EXPECT_THROW(load_corpus_entry(bad), Error);
}

TEST(Cli, DualAndExitCodes) {
  const auto cycle = temp_file("cycle.json", R"({"m": 4, "maximal_faces": [[0,1],[1,2],[2,3],[0,3]]})");
  auto r = run_cli("dual " + cycle + " --json");
  EXPECT_EQ(r.code, 0) << r.output;
  EXPECT_EQ(complex_from_json(parse_json(r.output)), SimplicialComplex::from_maximal_faces(4, {{0, 2}, {1, 3}}));

  const auto full = temp_file("full.json", R"({"m": 3, "maximal_faces": [[0,1,2]]})");
  r = run_cli("dual " + full);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.output.find("dual undefined for the full simplex"), std::string::npos) << r.output;

  const auto broken = temp_file("broken.json", "{\n \"m\": 3,\n \"maximal_faces\": [[0,1]\n");
  r = run_cli("dual " + broken);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.output.find("broken.json:"), std::string::npos) << r.output;

  EXPECT_EQ(run_cli("no-such-command").code, 2);
  EXPECT_EQ(run_cli("dual /nonexistent/file.json").code, 2);
}

TEST(Cli, Subcommands) {
  auto r = run_cli("gale " + corpus("square") + " --json");
  ASSERT_EQ(r.code, 0) << r.output;
  const auto g = configuration_from_json(parse_json(r.output));
  EXPECT_EQ(g.dim, 1);
  // the square's Gale diagram alternates in sign around the cycle
  EXPECT_EQ(g.points[0][0], -g.points[1][0]);

  r = run_cli("betti " + corpus("pentagon-config") + " --field q --json");
  ASSERT_EQ(r.code, 0) << r.output;
  const auto t = betti_from_json(parse_json(r.output), 5);
  EXPECT_EQ(t.at(1, 6), 5);
  EXPECT_EQ(t.at(2, 8), 5);
  EXPECT_EQ(t.at(3, 10), 1);
  EXPECT_EQ(run_cli("betti " + corpus("pentagon-config") + " --linear 1").code, 0);

  r = run_cli("buchstaber " + corpus("octahedron-boundary") + " --json");
  ASSERT_EQ(r.code, 0) << r.output;
  EXPECT_EQ(parse_json(r.output)["real"]["value"], 3);

  EXPECT_EQ(run_cli("fvector " + corpus("cube")).code, 0);
  EXPECT_EQ(run_cli("fnl " + corpus("prism")).code, 0);
  EXPECT_EQ(run_cli("neighborly " + corpus("cyclic-6-4") + " --k 2").code, 0);
  EXPECT_EQ(run_cli("flag " + corpus("cycle-4")).code, 0);
  EXPECT_EQ(run_cli("nerve " + corpus("cube")).code, 0);
  EXPECT_EQ(run_cli("constellation " + corpus("pentagon-config")).code, 0);
  EXPECT_EQ(run_cli("link " + corpus("cycle-4") + " --face 0").code, 0);
  EXPECT_EQ(run_cli("sub " + corpus("cycle-4") + " --set 0,1,2").code, 0);
  EXPECT_EQ(run_cli("link " + corpus("cycle-4") + " --face 0,2").code, 2);
  EXPECT_EQ(run_cli("coloring --k 3 --colors 2").code, 0);
  EXPECT_EQ(run_cli("fano --check-two-colorings").code, 0);

  r = run_cli("fano-circle --trials 2000 --seed 5 --json");
  ASSERT_EQ(r.code, 0) << r.output;
  EXPECT_EQ(parse_json(r.output)["counterexamples"], 0);
}

TEST(Cli, VerifyFailureExitsWithOne) {
  // a corpus whose published value is wrong must fail the suite
  const fs::path dir = fs::temp_directory_path() / "constellation_bad_corpus";
  fs::create_directories(dir);
  auto j = read_json_file(corpus("pentagon"));
  j["expected"]["f_vector"]["value"] = Json::array({1, 5, 6});
  write_json_file((dir / "pentagon.json").string(), j);
  const auto r = run_cli("verify betti-fvector --corpus " + dir.string());
  EXPECT_EQ(r.code, 1) << r.output;
  EXPECT_NE(r.output.find("FAIL  pentagon: f_vector"), std::string::npos) << r.output;
  EXPECT_EQ(run_cli("verify no-such-suite").code, 2);
}
