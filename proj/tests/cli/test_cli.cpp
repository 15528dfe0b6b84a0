#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Result {
  int status;
  std::string out;
};

// Runs the hgcalc binary with the test data directory as working directory; stderr is discarded.
Result hgcalc(const std::string& args) {
  const std::string cmd = std::string("cd '") + HGCALC_TEST_DATA_DIR + "' && '" + HGCALC_CLI + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, VertexGradientOnSingleArc) {
  const Result r = hgcalc("op grad_v single_arc.hg --preset general-default --fn single_arc_f.txt");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "arcfn\n1 1.5\n");
}

TEST(Cli, ExplicitHyperarcLaplacian) {
  const Result r = hgcalc("op lap_a single_arc.hg --fn single_arc_F.txt --method explicit");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "arcfn\n1 -6\n");
}

TEST(Cli, VertexPLaplacian) {
  const Result r = hgcalc("op plap_v single_arc.hg --fn single_arc_f.txt --p 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "vertexfn\n1 1.125\n2 1.125\n3 -2.25\n");
}

TEST(Cli, InfoReportsDegrees) {
  const Result r = hgcalc("info single_arc.hg");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("vertices 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("degree 3 0 1 1\n"), std::string::npos);
}

TEST(Cli, IncidenceMatrix) {
  const Result r = hgcalc("incidence single_arc.hg");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1\n1\n-1\n");
}

TEST(Cli, TensorEncodeMatchesGoldenFile) {
  const Result r = hgcalc("tensor encode oriented_six.hg");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "tensor oriented order 3 dim 6 mode simplified\n"
            "1 2 4 3/2\n2 1 4 3/2\n3 2 6 3/2\n3 6 2 3/2\n5 5 6 1/1\n5 6 6 1/1\n");
}

TEST(Cli, AmbiguousDecodeExitsThree) {
  EXPECT_EQ(hgcalc("tensor decode collision.tensor").status, 3);
  const Result greedy = hgcalc("tensor decode collision.tensor --greedy --verify");
  EXPECT_EQ(greedy.status, 0);
  EXPECT_EQ(greedy.out.rfind("hypergraph oriented\nvertices 4\n", 0), 0u);
}

TEST(Cli, ParseErrorExitsTwo) {
  EXPECT_EQ(hgcalc("validate malformed.hg").status, 2);
  EXPECT_EQ(hgcalc("validate does_not_exist.hg").status, 2);
  EXPECT_EQ(hgcalc("op grad_v single_arc.hg --fn single_arc_f.txt --p notanumber").status, 2);
  EXPECT_EQ(hgcalc("").status, 2);
}

TEST(Cli, ValidationFailureExitsOne) {
  EXPECT_EQ(hgcalc("validate overlap.hg").status, 1);
  EXPECT_EQ(hgcalc("op plap_v single_arc.hg --fn single_arc_f.txt --p 1").status, 1);
  const Result ok = hgcalc("validate single_arc.hg");
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(ok.out, "valid\n");
}

TEST(Cli, StarExpansionWritesGraph) {
  const Result star = hgcalc("represent bipartite star_collision.hg --anchors /dev/null");
  ASSERT_EQ(star.status, 0);
  EXPECT_NE(star.out.find("edge 3 10\n"), std::string::npos);
}

TEST(Cli, CheckAllPasses) {
  const Result r = hgcalc("check all --trials 50 --seed 7");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("summary 44/44 passed"), std::string::npos);
  EXPECT_EQ(r.out, hgcalc("check all --trials 50 --seed 7").out);
}
