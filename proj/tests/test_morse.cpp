#include <gtest/gtest.h>

#include <gpcube/morse.hpp>

#include "fixtures.hpp"

using namespace gpcube;

namespace {

  int vertex_of(CubeBall const& ball, std::string const& word, VertexMask clique = 0) {
    auto const& gp = ball.group();
    auto        v  = ball.locate(gp.normalize(gp.parse_word(word)), Clique{clique});
    EXPECT_TRUE(v.has_value()) << word;
    return v.value_or(-1);
  }

  constexpr std::uint64_t morse_radius = 3;

  struct Line : ::testing::Test {
    CubeBall ball{GraphProduct(parse_graph("s:inf")), 3};
    int      plus  = ball.hat().index(0, 1);
    int      minus = ball.hat().index(0, -1);
  };

}  // namespace

TEST_F(Line, HeightExamples) {
  EXPECT_EQ(height(ball.vertex(vertex_of(ball, ""))), (Height{0, 0}));
  EXPECT_EQ(height(ball.vertex(vertex_of(ball, "", bit(plus)))), (Height{1, -1}));
  EXPECT_EQ(height(ball.vertex(vertex_of(ball, "s"))), (Height{1, 0}));
  EXPECT_LT((Height{1, -1}), (Height{1, 0}));
  EXPECT_LT((Height{0, 0}), (Height{1, -1}));
}

TEST_F(Line, CubeMaxExamples) {
  int one = vertex_of(ball, ""), s = vertex_of(ball, "s"), e = vertex_of(ball, "", bit(plus));
  Cube lower{one, e, 1}, upper{s, e, 1};
  EXPECT_EQ(cube_max_vertex(ball, lower), e);
  EXPECT_EQ(cube_max_vertex(ball, upper), s);
}

TEST_F(Line, DescendingLinks) {
  int s = vertex_of(ball, "s"), e = vertex_of(ball, "", bit(plus));
  auto ds = descending_link(ball, s);
  EXPECT_EQ(ds.all.faces().size(), 1u);
  EXPECT_EQ(ds.up.faces().size(), 1u);
  EXPECT_TRUE(descending_link(ball, vertex_of(ball, "")).all.faces().empty());
  auto de = descending_link(ball, e);
  EXPECT_EQ(de.down.faces().size(), 1u);
  EXPECT_EQ(de.down.support(), (std::vector<int>{de.link.local(vertex_of(ball, ""))}));
}

TEST_F(Line, DownAndUpLinkChecks) {
  EXPECT_TRUE(check_down_link_simplex(ball, vertex_of(ball, "", bit(plus))));
  EXPECT_TRUE(check_up_link_subdivided_simplex(ball, vertex_of(ball, "s")));
  EXPECT_TRUE(check_up_link_subdivided_simplex(ball, vertex_of(ball, "s^-1")));
  EXPECT_THROW(check_up_link_subdivided_simplex(ball, vertex_of(ball, "")), InvariantViolation);
  EXPECT_THROW(check_down_link_simplex(ball, vertex_of(ball, "s")), InvariantViolation);
  EXPECT_THROW(check_up_link_subdivided_simplex(ball, vertex_of(ball, "s^3")), NotInterior);
}

TEST_F(Line, SublevelEuler) {
  EXPECT_EQ(sublevel_euler(ball, Height{0, 0}), 1);
  EXPECT_EQ(sublevel_euler(ball, Height{2, 0}), 1);
  EXPECT_THROW(sublevel_euler(ball, Height{4, 0}), NotInterior);
}

TEST(Morse, SubgroupVertexOfOrderThree) {
  CubeBall ball(GraphProduct(parse_graph("u:3")), 2);
  auto     v = ball.locate(ball.group().identity(), Clique{bit(0)});
  ASSERT_TRUE(v);
  EXPECT_TRUE(check_down_link_simplex(ball, *v));
  EXPECT_EQ(descending_link(ball, *v).down.faces().size(), 1u);
}

TEST(Morse, Z2SquareMaximum) {
  CubeBall    ball(GraphProduct(fixtures::fixture("z_squared")), 3);
  auto const& hat = ball.hat();
  VertexMask  st  = bit(hat.index(0, 1)) | bit(hat.index(1, 1));
  int         top = vertex_of(ball, "", st);
  auto        sq  = ball.cube_index(vertex_of(ball, ""), top);
  ASSERT_TRUE(sq);
  // The maximum of the square {1}..<<s+,t+>> is the top: the corner whose
  // coset holds the longest element st with the most letters.
  EXPECT_EQ(cube_max_vertex(ball, ball.cubes()[*sq]), top);
  EXPECT_TRUE(check_down_link_simplex(ball, top));
  EXPECT_EQ(descending_link(ball, top).down.faces().size(), 3u);  // an edge
}

TEST(Morse, UpLinkExamples) {
  // st needs radius 4 for its star, which contains s^2 t^2.
  CubeBall    ball(GraphProduct(fixtures::fixture("z_squared")), 4);
  auto const& gp  = ball.group();
  auto const& hat = ball.hat();
  auto        st  = gp.normalize(gp.parse_word("s,t"));
  EXPECT_EQ(desc_letters(gp, hat, st), bit(hat.index(0, -1)) | bit(hat.index(1, -1)));
  int v = vertex_of(ball, "s,t");
  EXPECT_TRUE(check_up_link_subdivided_simplex(ball, v));
  auto d = descending_link(ball, v);
  // Three up-cubes at st: two edges and a square, i.e. one link edge.
  EXPECT_EQ(d.up.support().size(), 2u);
  EXPECT_EQ(d.up.faces().size(), 3u);

  CubeBall free2(GraphProduct(fixtures::fixture("free2")), 3);
  auto     x = free2.group().normalize(free2.group().parse_word("s,t"));
  EXPECT_EQ(desc_letters(free2.group(), free2.hat(), x), bit(free2.hat().index(1, -1)));
  EXPECT_TRUE(check_up_link_subdivided_simplex(free2, vertex_of(free2, "s,t")));
}

TEST(Morse, InfiniteDihedralSublevel) {
  CubeBall ball(GraphProduct(fixtures::fixture("dihedral")), 3);
  EXPECT_EQ(sublevel_euler(ball, Height{2, 0}), 1);
}

TEST(Morse, AllFixtures) {
  for (auto const& name : fixtures::fixture_names()) {
    CubeBall ball(GraphProduct(fixtures::fixture(name)), morse_radius);
    auto     rep = check_morse(ball);
    EXPECT_TRUE(rep.ok) << name << ": "
                        << (rep.violations.empty() ? "" : rep.violations.front());
    EXPECT_EQ(rep.cubes_checked, ball.cubes().size());
    EXPECT_GT(rep.down_checks + rep.up_checks, 0u) << name;
  }
}

TEST(Morse, SublevelsNestedAndExhaustive) {
  for (auto const& name : fixtures::fixture_names()) {
    CubeBall ball(GraphProduct(fixtures::fixture(name)), morse_radius);
    auto     levels = sublevel_sweep(ball);
    ASSERT_FALSE(levels.empty());
    for (std::size_t i = 1; i < levels.size(); ++i) {
      EXPECT_LT(levels[i - 1].level, levels[i].level);
      EXPECT_LE(levels[i - 1].vertices, levels[i].vertices);
      EXPECT_LE(levels[i - 1].cubes, levels[i].cubes);
    }
    EXPECT_EQ(levels.back().vertices, ball.num_vertices()) << name;
    EXPECT_EQ(levels.back().cubes, ball.cubes().size()) << name;
    for (auto const& l : levels) {
      EXPECT_EQ(l.euler, 1) << name;
      EXPECT_EQ(sublevel_euler(ball, l.level), 1) << name;
    }
  }
}

TEST(Morse, DescLettersAreCliques) {
  for (auto const& name : fixtures::fixture_names()) {
    GraphProduct gp(fixtures::fixture(name));
    HatGraph     hat(gp.graph());
    for (auto const& g : enumerate_ball(gp, 4)) {
      EXPECT_TRUE(hat.is_clique(Clique{desc_letters(gp, hat, g)})) << name;
    }
  }
}
