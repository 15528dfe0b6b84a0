#include <gtest/gtest.h>

#include "hgcalc/errors.hpp"
#include "hgcalc/properties.hpp"

using namespace hgcalc;

namespace {

const PropertyOutcome* find(const PropertyReport& r, std::string_view name) {
  for (const PropertyOutcome& o : r.outcomes)
    if (o.name == name) return &o;
  return nullptr;
}

}  // namespace

TEST(PropertySuite, EverySuitePasses) {
  for (std::string_view suite : property_suite_names()) {
    const PropertyReport r = run_property_suite(suite, 7, 30);
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_FALSE(r.outcomes.empty());
  }
}

TEST(PropertySuite, AllIsUnionOfSuites) {
  const PropertyReport all = run_property_suite("all", 11, 10);
  std::size_t total = 0;
  for (std::string_view suite : property_suite_names()) {
    if (suite == "all") continue;
    const PropertyReport r = run_property_suite(suite, 11, 10);
    total += r.outcomes.size();
    for (const PropertyOutcome& o : r.outcomes) {
      const PropertyOutcome* same = find(all, o.name);
      ASSERT_NE(same, nullptr) << o.name;
      EXPECT_EQ(same->checks, o.checks);
    }
  }
  EXPECT_EQ(all.outcomes.size(), total);
}

TEST(PropertySuite, FixedFixturesRunRegardlessOfTrials) {
  const PropertyReport r = run_property_suite("tensor", 1, 1);
  const PropertyOutcome* collision = find(r, "tensor.collision");
  ASSERT_NE(collision, nullptr);
  EXPECT_EQ(collision->checks, 1);
  ASSERT_NE(find(r, "tensor.worked_oriented"), nullptr);
  ASSERT_NE(find(r, "tensor.incidence_fixture"), nullptr);
  ASSERT_NE(find(run_property_suite("representation", 1, 1), "representation.star_collision"), nullptr);
}

TEST(PropertySuite, ReportIsDeterministic) {
  const std::string a = run_property_suite("all", 99, 20).to_text();
  const std::string b = run_property_suite("all", 99, 20).to_text();
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("suite all\nseed 99\ntrials 20\n"), std::string::npos);
  EXPECT_NE(a.find("summary "), std::string::npos);
}

TEST(PropertySuite, FlippedAdjointSignIsCaught) {
  OperatorTable ops;
  ops.vertex_adjoint = [](const OrientedHypergraph& h, const WeightAssignment& w, const OperatorConfig& c,
                          const HyperarcFunction& F) {
    VertexFunction out = vertex_adjoint(h, w, c, F);
    for (double& x : out) x = -x;
    return out;
  };
  const PropertyReport r = run_property_suite("duality", 7, 20, ops);
  EXPECT_FALSE(r.passed());
  const PropertyOutcome* v = find(r, "duality.vertex");
  ASSERT_NE(v, nullptr);
  EXPECT_FALSE(v->passed);
  EXPECT_NE(v->counterexample.find("hypergraph oriented"), std::string::npos);
  EXPECT_NE(v->counterexample.find("seed"), std::string::npos);
  const PropertyOutcome* a = find(r, "duality.hyperarc");
  ASSERT_NE(a, nullptr);
  EXPECT_TRUE(a->passed);
  const std::string text = r.to_text();
  EXPECT_NE(text.find("FAIL duality.vertex"), std::string::npos);
  EXPECT_NE(text.find("  | "), std::string::npos);
}

TEST(PropertySuite, FlippedHyperarcAdjointIsCaught) {
  OperatorTable ops;
  ops.hyperarc_adjoint = [](const OrientedHypergraph& h, const WeightAssignment& w, const OperatorConfig& c,
                            const VertexFunction& f) {
    HyperarcFunction out = hyperarc_adjoint(h, w, c, f);
    for (double& x : out) x = -x;
    return out;
  };
  const PropertyReport r = run_property_suite("duality", 7, 20, ops);
  EXPECT_FALSE(find(r, "duality.hyperarc")->passed);
}

TEST(PropertySuite, InvalidArguments) {
  EXPECT_THROW(run_property_suite("nonsense", 1, 1), Error);
  EXPECT_THROW(run_property_suite("all", 1, 0), Error);
}

TEST(CloseEnough, Tolerances) {
  EXPECT_TRUE(close_enough(1.0, 1.0 + 1e-10));
  EXPECT_FALSE(close_enough(1.0, 1.0 + 1e-8));
  EXPECT_TRUE(close_enough(0.0, 1e-13));
  EXPECT_FALSE(close_enough(0.0, 1e-11));
  EXPECT_FALSE(close_enough(std::vector<double>{1, 2}, std::vector<double>{1}));
}
