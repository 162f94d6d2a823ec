#include <gtest/gtest.h>

#include <random>
#include <set>

#include <gpcube/dj.hpp>

#include "fixtures.hpp"

using namespace gpcube;

namespace {

  std::string fmt(GraphProduct const& gp, NormalForm const& x) {
    return gp.format(x);
  }

  NormalForm parse(GraphProduct const& gp, std::string const& w) {
    return gp.normalize(gp.parse_word(w));
  }

  Word random_word(std::mt19937& rng, GraphProduct const& gp, int max_letters) {
    std::uniform_int_distribution<int>          len(0, max_letters);
    std::uniform_int_distribution<int>          gen(0, static_cast<int>(gp.rank()) - 1);
    std::uniform_int_distribution<std::int64_t> exp(-2, 2);
    Word                                        w;
    for (int i = len(rng); i > 0; --i) {
      w.push_back(Letter{gen(rng), exp(rng)});
    }
    return w;
  }

  std::vector<std::string> dj_fixtures() {
    return {"single_inf", "z2", "z3", "free2", "z_squared", "dihedral", "mixed"};
  }

}  // namespace

TEST(DJGraphs, SingleInfiniteVertex) {
  auto g  = parse_graph("s:inf");
  auto g1 = gamma_prime(g);
  auto g2 = gamma_doubleprime(g);
  EXPECT_EQ(g1.to_text(), "s[1]:2\ns[-1]:2\n");
  EXPECT_EQ(g2.to_text(), "s[1]:2\ns[0]:2\n");
}

TEST(DJGraphs, NoInfiniteVertices) {
  auto g = parse_graph("u:3");
  EXPECT_EQ(gamma_prime(g), g);
  EXPECT_EQ(gamma_doubleprime(g), g);
}

TEST(DJGraphs, EdgeBetweenInfiniteVertices) {
  auto g  = parse_graph("s:inf; t:inf; edge s t");
  auto g2 = gamma_doubleprime(g);
  ASSERT_EQ(g2.size(), 4u);
  int s1 = g2.index_of("s[1]"), s0 = g2.index_of("s[0]");
  int t1 = g2.index_of("t[1]"), t0 = g2.index_of("t[0]");
  EXPECT_TRUE(g2.adjacent(s0, t0));
  EXPECT_TRUE(g2.adjacent(s0, t1));
  EXPECT_TRUE(g2.adjacent(s1, t0));
  EXPECT_TRUE(g2.adjacent(s1, t1));
  EXPECT_FALSE(g2.adjacent(s0, s1));
  EXPECT_FALSE(g2.adjacent(t0, t1));
  EXPECT_EQ(g2.edges().size(), 4u);
  auto g1 = gamma_prime(g);
  EXPECT_EQ(g1.edges().size(), 4u);
  EXPECT_FALSE(g1.adjacent(g1.index_of("s[1]"), g1.index_of("s[-1]")));
}

TEST(DJGraphs, FreeGroupDoublePrime) {
  auto g2 = gamma_doubleprime(parse_graph("s:inf; t:inf"));
  // (s,0) sees everything but (s,1); the copy of Gamma has no edge.
  EXPECT_EQ(g2.edges().size(), 3u);
  EXPECT_FALSE(g2.adjacent(g2.index_of("s[1]"), g2.index_of("t[1]")));
}

TEST(DJMaps, Examples) {
  DavisJanuszkiewicz dj(parse_graph("s:inf; u:3; edge s u"));
  auto const&        g2 = dj.doubleprime();
  EXPECT_EQ(fmt(g2, dj.beta(dj.gamma().generator(0))), "s[1] s[0]");
  EXPECT_EQ(fmt(g2, dj.beta(dj.gamma().generator(0, -1))), "s[0] s[1]");
  EXPECT_EQ(fmt(g2, dj.beta(dj.gamma().generator(1))), "u");
  EXPECT_EQ(fmt(g2, dj.alpha(parse(dj.prime(), "s[-1]"))), "s[0] s[1] s[0]");
  EXPECT_EQ(fmt(g2, dj.alpha(parse(dj.prime(), "s[1]"))), "s[1]");
  EXPECT_THROW(dj.beta(dj.prime().identity()), PresentationMismatch);
}

TEST(DJMaps, Projection) {
  DavisJanuszkiewicz dj(parse_graph("s:inf; u:3; edge s u"));
  auto const&        g2 = dj.doubleprime();
  EXPECT_EQ(dj.e_projection(dj.beta(dj.gamma().generator(0))).mask, 0u);
  EXPECT_EQ(dj.e_projection(parse(g2, "s[0]")).mask, bit(0));
  EXPECT_EQ(dj.e_projection(parse(g2, "u")).mask, 0u);
  EXPECT_EQ(dj.e_projection(parse(g2, "s[1]")).mask, bit(0));
}

TEST(DJMaps, Factorize) {
  DavisJanuszkiewicz dj(parse_graph("s:inf; u:3; edge s u"));
  auto const&        g2 = dj.doubleprime();
  auto               f  = dj.factorize(parse(g2, "s[1]"));
  EXPECT_EQ(fmt(dj.gamma(), f.a), "s");
  EXPECT_EQ(f.e.mask, bit(0));
  f = dj.factorize(g2.identity());
  EXPECT_TRUE(f.a.is_identity());
  EXPECT_EQ(f.e.mask, 0u);
  f = dj.factorize(parse(g2, "u"));
  EXPECT_EQ(fmt(dj.gamma(), f.a), "u");
  EXPECT_EQ(f.e.mask, 0u);
  auto fp = dj.factorize_prime(parse(g2, "s[0],s[1]"));
  EXPECT_EQ(fmt(dj.prime(), fp.a), "s[-1]");
  EXPECT_EQ(fp.e.mask, bit(0));
}

TEST(DJMaps, ConjugationAction) {
  DavisJanuszkiewicz dj(parse_graph("s:inf; t:inf"));
  auto const&        g = dj.gamma();
  EXPECT_EQ(dj.conj_action(EElement{bit(1)}, g.generator(0)), g.generator(0));
  EXPECT_EQ(dj.conj_action(EElement{bit(0)}, g.generator(0)), g.generator(0, -1));
  EXPECT_EQ(fmt(dj.prime(), dj.conj_action_prime(EElement{bit(0)}, parse(dj.prime(), "s[1]"))),
            "s[-1]");
}

TEST(DJMaps, SetIdentities) {
  DavisJanuszkiewicz dj(parse_graph("s:inf"));
  EXPECT_TRUE(dj.weirds_check(0));
  DavisJanuszkiewicz mixed(fixtures::fixture("mixed"));
  EXPECT_TRUE(mixed.weirds_check(0));
  EXPECT_THROW(mixed.weirds_check(1), InvariantViolation);
}

TEST(DJProperties, InjectiveOnRadiusFour) {
  for (auto const& name : dj_fixtures()) {
    DavisJanuszkiewicz   dj(fixtures::fixture(name));
    std::set<NormalForm> img, img1;
    auto                 ball  = enumerate_ball(dj.gamma(), 4);
    auto                 ball1 = enumerate_ball(dj.prime(), 4);
    for (auto const& x : ball) {
      img.insert(dj.beta(x));
    }
    for (auto const& x : ball1) {
      img1.insert(dj.alpha(x));
    }
    EXPECT_EQ(img.size(), ball.size()) << name;
    EXPECT_EQ(img1.size(), ball1.size()) << name;
  }
}

TEST(DJProperties, Homomorphisms) {
  std::mt19937 rng(20240611);
  for (auto const& name : dj_fixtures()) {
    DavisJanuszkiewicz dj(fixtures::fixture(name));
    auto const&        g  = dj.gamma();
    auto const&        g1 = dj.prime();
    auto const&        g2 = dj.doubleprime();
    std::vector<std::pair<Word, Word>> pairs;
    for (int a = 0; a < static_cast<int>(g.rank()); ++a) {
      for (int b = 0; b < static_cast<int>(g.rank()); ++b) {
        for (std::int64_t ea : {-1, 1}) {
          for (std::int64_t eb : {-1, 1}) {
            pairs.push_back({Word{Letter{a, ea}}, Word{Letter{b, eb}}});
          }
        }
      }
    }
    for (int i = 0; i < 200; ++i) {
      pairs.push_back({random_word(rng, g, 4), random_word(rng, g, 4)});
    }
    for (auto const& [x, y] : pairs) {
      auto a = g.normalize(x), b = g.normalize(y);
      EXPECT_EQ(dj.beta(g.multiply(a, b)), g2.multiply(dj.beta(a), dj.beta(b))) << name;
    }
    for (int i = 0; i < 200; ++i) {
      auto a = g1.normalize(random_word(rng, g1, 4));
      auto b = g1.normalize(random_word(rng, g1, 4));
      EXPECT_EQ(dj.alpha(g1.multiply(a, b)), g2.multiply(dj.alpha(a), dj.alpha(b))) << name;
    }
    for (int i = 0; i < 200; ++i) {
      auto a = g2.normalize(random_word(rng, g2, 4));
      auto b = g2.normalize(random_word(rng, g2, 4));
      auto p = g2.multiply(a, b);
      EXPECT_EQ(dj.e_projection(p), dj.e_projection(a) * dj.e_projection(b)) << name;
      EXPECT_EQ(dj.e_projection_prime(p),
                dj.e_projection_prime(a) * dj.e_projection_prime(b))
          << name;
    }
  }
}

TEST(DJProperties, FactorizationOnRadiusThree) {
  for (auto const& name : dj_fixtures()) {
    DavisJanuszkiewicz dj(fixtures::fixture(name));
    auto               rep = dj.factorization_check(3);
    EXPECT_TRUE(rep.ok) << name << ": "
                        << (rep.violations.empty() ? "" : rep.violations.front());
    EXPECT_EQ(rep.e_order, std::size_t{1} << dj.num_infinite()) << name;
    EXPECT_EQ(rep.distinct_e, rep.e_order) << name;
    EXPECT_EQ(rep.identity_fiber, rep.e_order) << name;
  }
}

TEST(DJProperties, ConjugationMatchesInsideDoublePrime) {
  for (auto const& name : dj_fixtures()) {
    DavisJanuszkiewicz dj(fixtures::fixture(name));
    auto const&        g2 = dj.doubleprime();
    for (auto e : dj.all_e()) {
      auto ew  = dj.e_element(e);
      auto inv = g2.invert(ew);
      for (auto const& a : enumerate_ball(dj.gamma(), 3)) {
        EXPECT_EQ(dj.beta(dj.conj_action(e, a)), g2.multiply(g2.multiply(ew, dj.beta(a)), inv))
            << name;
      }
      for (auto const& a : enumerate_ball(dj.prime(), 3)) {
        EXPECT_EQ(dj.alpha(dj.conj_action_prime(e, a)),
                  g2.multiply(g2.multiply(ew, dj.alpha(a)), inv))
            << name;
      }
    }
  }
}

TEST(DJProperties, SetIdentitiesAllFixtures) {
  for (auto const& name : dj_fixtures()) {
    auto               g = fixtures::fixture(name);
    DavisJanuszkiewicz dj(g);
    for (int s : bits_of(g.infinite_vertices())) {
      EXPECT_TRUE(dj.weirds_check(s)) << name;
    }
  }
}

TEST(DJIso, RealLineBothSides) {
  DavisJanuszkiewicz dj(parse_graph("s:inf"));
  for (bool prime : {false, true}) {
    auto rep = dj.iso_check(2, prime);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.x_vertices, 9u);
    EXPECT_EQ(rep.y_vertices, 9u);
  }
}

TEST(DJIso, AllFixturesRadiusTwo) {
  for (auto const& name : dj_fixtures()) {
    DavisJanuszkiewicz dj(fixtures::fixture(name));
    for (bool prime : {false, true}) {
      auto rep = dj.iso_check(2, prime);
      EXPECT_TRUE(rep.ok) << name << (prime ? " (alpha)" : " (beta)") << ": "
                          << (rep.violations.empty() ? "" : rep.violations.front());
      EXPECT_GT(rep.equivariance, 0u);
    }
  }
}

TEST(DJIso, YVertexDepth) {
  DavisJanuszkiewicz dj(parse_graph("s:inf"));
  auto               y = dj.build_y_ball(1, false);
  EXPECT_EQ(y.size(), 5u);  // {s^-1}, {1}, {s}, and two edges
  for (auto const& v : y) {
    EXPECT_LE(v.depth, 1u);
    EXPECT_EQ(v.elements.size() % dj.all_e().size(), 0u);
  }
}
