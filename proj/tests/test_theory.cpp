#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <sstream>

#include "prooflab/parse.hpp"
#include "prooflab/rng.hpp"
#include "prooflab/sampling.hpp"
#include "prooflab/theory.hpp"

using namespace prooflab;

namespace {
JRepresentation jrep(std::initializer_list<int> gaps) {
  JRepresentation k;
  for (int g : gaps) k.gaps.emplace_back(g);
  return k;
}
} // namespace

TEST_CASE("j-representation maps to indices and back") {
  CHECK(indices_from_jrep(jrep({0, 0, 0})) == std::vector<BigInt>{1, 2, 3});
  CHECK(indices_from_jrep(jrep({2, 0, 1})) == std::vector<BigInt>{3, 4, 6});

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    JRepresentation k;
    int j = 1 + int(rng() % 6);
    for (int i = 0; i < j; ++i) k.gaps.emplace_back(int(rng() % 10));
    auto idx = indices_from_jrep(k);
    auto back = jrep_from_indices(idx);
    REQUIRE(back.gaps == k.gaps);
  }

  CHECK_THROWS_AS(jrep_from_indices(std::vector<BigInt>{2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(jrep_from_indices(std::vector<BigInt>{0}), std::invalid_argument);
}

TEST_CASE("separation degree sums the gaps") {
  CHECK(separation_degree(jrep({0, 0, 0})) == 0);
  CHECK(separation_degree(jrep({2, 0, 1})) == 3);
  CHECK(separation_degree(jrep({9, 0, 0, 0})) == 9);
}

TEST_CASE("theory depth is the max member depth") {
  FormulaSpace space({2, 2, OpsSet::all()});
  Theory flat{space.params(), {1, 2}, TheoryRole::base()};
  CHECK(theory_depth(flat, space) == 0);

  Theory single{space.params(), {space.index_of(parse_formula("~p1 & p2"))}, TheoryRole::base()};
  CHECK(theory_depth(single, space) == parse_formula("~p1 & p2").depth());

  Theory mixed{space.params(),
               {1, space.index_of(parse_formula("~(~p1 & p2)"))},
               TheoryRole::base()};
  CHECK(theory_depth(mixed, space) == 2);

  Theory empty{space.params(), {}, TheoryRole::base()};
  CHECK_THROWS_AS(theory_depth(empty, space), std::invalid_argument);

  // Depth of any member is bounded by the depth at the largest index.
  for (const Theory& t : {flat, single, mixed})
    CHECK(theory_depth(t, space) == space.at(t.members.back()).depth());
}

TEST_CASE("bounded draws stay in range and are deterministic") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t x = uniform_below(a, 7);
    CHECK(x < 7);
    CHECK(x == uniform_below(b, 7));
  }
  SplitMix64 c(1);
  BigInt bound = BigInt("123456789012345678901234567890");
  for (int i = 0; i < 50; ++i) {
    BigInt v = uniform_below(c, bound);
    CHECK(v >= 0);
    CHECK(v < bound);
  }
  CHECK(uniform_below(c, BigInt(1)) == 0);
}

TEST_CASE("combination sampling yields k distinct sorted values") {
  SplitMix64 rng(5);
  auto s = sample_combination(rng, BigInt(100), 10);
  CHECK(s.size() == 10);
  CHECK(*s.begin() >= 1);
  CHECK(*s.rbegin() <= 100);
  // Degenerate full pick must terminate and take everything.
  auto full = sample_combination(rng, BigInt(4), 4);
  CHECK(full == std::set<BigInt>{1, 2, 3, 4});
}

TEST_CASE("composition sampling is uniform enough and exact in sum") {
  SplitMix64 rng(11);
  std::map<std::pair<int, int>, int> counts;
  for (int i = 0; i < 3000; ++i) {
    JRepresentation k = detail::sample_composition(rng, BigInt(2), 2);
    REQUIRE(separation_degree(k) == 2);
    counts[{int(k.gaps[0]), int(k.gaps[1])}]++;
  }
  REQUIRE(counts.size() == 3);  // (0,2) (1,1) (2,0)
  for (const auto& [comp, n] : counts) {
    CHECK(n > 800);
    CHECK(n < 1200);
  }

  for (int g : {0, 5, 17}) {
    JRepresentation k = detail::sample_composition(rng, BigInt(g), 4);
    CHECK(k.size() == 4);
    CHECK(separation_degree(k) == g);
  }
}

TEST_CASE("sampled theories are satisfiable, sized, and reproducible") {
  FormulaSpace space({1, 2, OpsSet::all()});
  SampleSpec spec{2, 8, 3, 424242};
  SamplingReport report;
  auto theories = sample_theories(space, spec, &report);
  REQUIRE(theories.size() == 8);
  for (const Theory& t : theories) {
    REQUIRE(t.size() == 2);
    validate_theory(t, space);
    CHECK(is_satisfiable(t.formulas(space), 2));
    CHECK(theory_depth(t, space) <= space.at(t.members.back()).depth());
  }
  auto again = sample_theories(space, spec);
  REQUIRE(again.size() == theories.size());
  for (std::size_t i = 0; i < theories.size(); ++i)
    CHECK(again[i].members == theories[i].members);

  SampleSpec other = spec;
  other.seed = 7;
  auto different = sample_theories(space, other);
  bool same = true;
  for (std::size_t i = 0; i < theories.size(); ++i)
    same = same && different[i].members == theories[i].members;
  CHECK_FALSE(same);
}

TEST_CASE("sampled objectives are reproducible and jointly satisfiable") {
  FormulaSpace space({1, 2, OpsSet::all()});
  SampleSpec spec{2, 1, 6, 99};
  SamplingReport report;
  std::vector<BigInt> indices;
  auto objectives = sample_objectives(space, spec, &report, &indices);
  REQUIRE(!objectives.empty());
  REQUIRE(objectives.size() == indices.size());
  CHECK(objectives.size() + report.objectives_filtered == 6);
  CHECK(is_satisfiable(objectives, 2));
  for (std::size_t i = 0; i < objectives.size(); ++i)
    CHECK(space.at(indices[i]) == objectives[i]);

  auto again = sample_objectives(space, spec);
  REQUIRE(again.size() == objectives.size());
  for (std::size_t i = 0; i < objectives.size(); ++i) CHECK(again[i] == objectives[i]);

  SampleSpec one = spec;
  one.objective_count = 1;
  auto single = sample_objectives(space, one);
  REQUIRE(single.size() == 1);
  CHECK(is_satisfiable(single, 2));
}

TEST_CASE("theory text roundtrip") {
  FormulaSpace space({1, 2, OpsSet::without(Connective::Or)});
  Theory t{space.params(), {3, 4, 9}, TheoryRole::base()};
  std::string text = theory_to_text(t);
  CHECK(text.find("j-rep: 2,0,4") != std::string::npos);
  Theory back = theory_from_text(text);
  CHECK(back.params == t.params);
  CHECK(back.members == t.members);
}

TEST_CASE("params text roundtrip") {
  GenerationParams p{2, 3, OpsSet::without(Connective::Or)};
  CHECK(params_to_text(p) == "n=2 m=3 ops=iff,implies,and");
  CHECK(params_from_text(params_to_text(p)) == p);
  GenerationParams q{1, 1, OpsSet::all()};
  CHECK(params_to_text(q) == "n=1 m=1 ops=all");
  CHECK(params_from_text(params_to_text(q)) == q);
  CHECK_THROWS_AS(params_from_text("n=1"), std::invalid_argument);
  CHECK_THROWS_AS(params_from_text("n=1 m=2 ops=xor"), std::invalid_argument);
}

TEST_CASE("sample manifest is deterministic and carries the seed") {
  FormulaSpace space({1, 1, OpsSet::all()});
  SampleSpec spec{1, 2, 2, 1234};
  SamplingReport report;
  std::vector<BigInt> indices;
  auto theories = sample_theories(space, spec, &report);
  auto objectives = sample_objectives(space, spec, &report, &indices);
  (void)objectives;

  std::ostringstream a, b;
  write_sample_manifest(a, space, spec, theories, indices, report);
  write_sample_manifest(b, space, spec, theories, indices, report);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("seed: 1234") != std::string::npos);
  CHECK(a.str().find("theory-rejections:") != std::string::npos);
}

TEST_CASE("separation class draws stay in the realizable range") {
  // Every draw lands in [0, f - j]; the smallest class yields the first j
  // formulas when satisfiable.
  FormulaSpace space({1, 1, OpsSet::all()});
  SampleSpec spec{3, 20, 1, 5};
  auto theories = sample_theories(space, spec);
  for (const Theory& t : theories) {
    BigInt g = separation_degree(t.jrep());
    CHECK(g >= 0);
    CHECK(g <= space.size() - 3);
    CHECK(t.members.back() <= space.size());
  }
}
