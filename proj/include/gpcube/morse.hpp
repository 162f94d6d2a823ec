// The height function g<<C>> -> (max l(g<<C>>), -#C) on the cube complex and
// the checks that certify contractibility of its sublevel sets: unique cube
// maxima, the shape of descending down-links and up-links, and Euler
// characteristics.

#ifndef GPCUBE_MORSE_HPP_
#define GPCUBE_MORSE_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "hat.hpp"
#include "simplicial.hpp"

namespace gpcube {

  // Compared lexicographically.
  struct Height {
    std::int64_t primary   = 0;  // max l over the coset
    std::int64_t secondary = 0;  // -#C

    friend auto operator<=>(Height const&, Height const&) = default;
  };

  inline Height height(CosetVertex const& v) {
    return Height{static_cast<std::int64_t>(v.max_length), -v.clique.size()};
  }

  // The corner of c where the height is largest.  Throws InvariantViolation if
  // the maximum is attained twice, or if the maximiser is not the unique
  // smallest corner containing a longest element of the top coset.
  inline int cube_max_vertex(CubeBall const& ball, Cube const& c) {
    auto   cc   = ball.cube_vertices(c);
    int    best = -1;
    Height hb;
    bool   tie = false;
    for (int v : cc.vertex) {
      Height h = height(ball.vertex(v));
      if (best < 0 || h > hb) {
        best = v;
        hb   = h;
        tie  = false;
      } else if (h == hb) {
        tie = true;
      }
    }
    if (tie) {
      throw InvariantViolation("height maximum on a cube is not unique");
    }
    auto const& top = ball.vertex(c.top);
    int         smallest = -1;
    int         count    = 0;
    for (int v : cc.vertex) {
      auto const& x   = ball.vertex(v);
      bool        has = x.max_length == top.max_length;
      if (!has) {
        continue;
      }
      if (smallest < 0 || x.clique.size() < ball.vertex(smallest).clique.size()) {
        smallest = v;
        count    = 1;
      } else if (x.clique.size() == ball.vertex(smallest).clique.size()) {
        ++count;
      }
    }
    if (count != 1 || smallest != best) {
      throw InvariantViolation(
          "cube maximum is not the smallest corner holding a longest element");
    }
    return best;
  }

  // Descending part of the link of v: simplices from cofaces whose unique
  // height maximum is v, split along the up/down decomposition.
  struct DescendingLink {
    VertexLink        link;  // full link, for vertex numbering
    SimplicialComplex up;
    SimplicialComplex down;
    SimplicialComplex all;
  };

  inline DescendingLink descending_link(CubeBall const& ball, int v) {
    DescendingLink d{vertex_link(ball, v), {}, {}, {}};
    int            n = d.link.link.num_vertices();
    d.up             = SimplicialComplex(n);
    d.down           = SimplicialComplex(n);
    d.all            = SimplicialComplex(n);
    for (int ci : ball.cofaces(v)) {
      auto const& c = ball.cubes()[ci];
      if (cube_max_vertex(ball, c) != v) {
        continue;
      }
      auto s = detail::link_simplex(ball.cube_vertices(c), v, d.link);
      d.all.add(s);
      if (c.bottom == v) {
        d.up.add(s);
      } else if (c.top == v) {
        d.down.add(s);
      }
    }
    return d;
  }

  // For v = g<<C>> with C nonempty: each s in C has exactly one h in <<s>>
  // such that gh<<C - s>> is in the descending down-link, and those points
  // span a full simplex.
  inline bool check_down_link_simplex(CubeBall const& ball, int v) {
    auto const& x = ball.vertex(v);
    if (x.clique.empty()) {
      throw InvariantViolation("down-link check needs a nonempty clique");
    }
    auto const&      gp = ball.group();
    DescendingLink   d  = descending_link(ball, v);
    std::vector<int> chosen;
    for (int s : bits_of(x.clique.mask)) {
      int count = 0;
      for (auto const& h : ball.hat().factor(s, gp.graph())) {
        auto w = ball.locate(gp.multiply(x.rep, h), Clique{x.clique.mask & ~bit(s)});
        if (!w) {
          throw NotInterior("down-link neighbour missing from ball");
        }
        int local = d.link.local(*w);
        if (d.down.contains({local})) {
          ++count;
          chosen.push_back(local);
        }
      }
      if (count != 1) {
        return false;
      }
    }
    return d.down == full_simplex(chosen);
  }

  // For v = {g}, g != 1: the descending up-link consists of the g<<C>> with
  // nonempty C inside desc_letters(g), and desc_letters(g) is a clique, so
  // the descending up-link is a barycentrically subdivided simplex.
  inline bool check_up_link_subdivided_simplex(CubeBall const& ball, int v) {
    auto const& x = ball.vertex(v);
    if (!x.clique.empty()) {
      throw InvariantViolation("up-link check needs a singleton vertex");
    }
    if (x.rep.is_identity()) {
      throw InvariantViolation("up-link check is for g != 1");
    }
    if (!ball.is_interior(v)) {
      throw NotInterior("vertex on the boundary of the ball");
    }
    auto const& hat  = ball.hat();
    VertexMask  desc = desc_letters(ball.group(), hat, x.rep);
    if (!hat.is_clique(Clique{desc})) {
      return false;
    }
    std::set<int> expected;
    for (VertexMask m = desc; m != 0; m = (m - 1) & desc) {
      auto w = ball.locate(x.rep, Clique{m});
      if (!w) {
        throw NotInterior("up-link vertex missing from ball");
      }
      expected.insert(*w);
    }
    std::set<int> actual;
    for (int ci : ball.cofaces(v)) {
      auto const& c = ball.cubes()[ci];
      if (c.bottom == v && cube_max_vertex(ball, c) == v) {
        actual.insert(c.top);
      }
    }
    return actual == expected;
  }

  // Sum of (-1)^dim over the cubes (vertices included) of the sublevel set
  // {height <= h}.  The sublevel must be complete inside the ball.
  inline std::int64_t sublevel_euler(CubeBall const& ball, Height h) {
    if (h.primary > static_cast<std::int64_t>(ball.radius())) {
      throw NotInterior("sublevel set is truncated by the ball");
    }
    std::int64_t chi = 0;
    for (auto const& x : ball.vertices()) {
      if (height(x) <= h) {
        ++chi;
      }
    }
    for (auto const& c : ball.cubes()) {
      if (height(ball.vertex(cube_max_vertex(ball, c))) <= h) {
        chi += (c.dim % 2 == 0) ? 1 : -1;
      }
    }
    return chi;
  }

  struct SublevelReport {
    Height       level;
    std::size_t  vertices = 0;
    std::size_t  cubes    = 0;
    std::int64_t euler    = 0;
  };

  // Euler characteristic of every distinct sublevel set of the ball, computed
  // in one sweep.  Cells are attached at the height of their maximal corner.
  inline std::vector<SublevelReport> sublevel_sweep(CubeBall const& ball) {
    std::map<Height, SublevelReport> by_level;
    for (auto const& x : ball.vertices()) {
      auto& r = by_level[height(x)];
      r.level = height(x);
      r.vertices++;
      r.euler++;
    }
    for (auto const& c : ball.cubes()) {
      Height h = height(ball.vertex(cube_max_vertex(ball, c)));
      auto&  r = by_level[h];
      r.cubes++;
      r.euler += (c.dim % 2 == 0) ? 1 : -1;
    }
    std::vector<SublevelReport> out;
    SublevelReport              acc;
    for (auto const& [h, r] : by_level) {
      acc.level = h;
      acc.vertices += r.vertices;
      acc.cubes += r.cubes;
      acc.euler += r.euler;
      out.push_back(acc);
    }
    return out;
  }

  struct MorseReport {
    bool                        ok = true;
    std::size_t                 cubes_checked        = 0;
    std::size_t                 down_checks          = 0;
    std::size_t                 up_checks            = 0;
    std::size_t                 desc_clique_checks   = 0;
    std::vector<SublevelReport> sublevels;
    std::vector<std::string>    violations;
  };

  inline MorseReport check_morse(CubeBall const& ball) {
    MorseReport rep;
    auto const& gp = ball.group();
    auto fail = [&](std::string msg) {
      rep.ok = false;
      rep.violations.push_back(std::move(msg));
    };
    for (auto const& c : ball.cubes()) {
      try {
        cube_max_vertex(ball, c);
      } catch (InvariantViolation const& e) {
        fail(std::string(e.what()) + " at cube with top "
             + gp.format(ball.vertex(c.top).rep));
      }
      ++rep.cubes_checked;
    }
    for (int v = 0; v < static_cast<int>(ball.num_vertices()); ++v) {
      auto const& x = ball.vertex(v);
      if (x.clique.empty()) {
        ++rep.desc_clique_checks;
        if (!ball.hat().is_clique(Clique{desc_letters(gp, ball.hat(), x.rep)})) {
          fail("descending letters of " + gp.format(x.rep) + " not a clique");
        }
      }
      if (!ball.is_interior(v)) {
        continue;
      }
      if (!x.clique.empty()) {
        ++rep.down_checks;
        if (!check_down_link_simplex(ball, v)) {
          fail("descending down-link is not a simplex at " + gp.format(x.rep));
        }
      } else if (!x.rep.is_identity()) {
        ++rep.up_checks;
        if (!check_up_link_subdivided_simplex(ball, v)) {
          fail("descending up-link is not a subdivided simplex at "
               + gp.format(x.rep));
        }
      } else if (!descending_link(ball, v).all.faces().empty()) {
        fail("descending link of the base vertex is not empty");
      }
    }
    rep.sublevels = sublevel_sweep(ball);
    for (auto const& s : rep.sublevels) {
      if (s.euler != 1) {
        fail("sublevel (" + std::to_string(s.level.primary) + ","
             + std::to_string(s.level.secondary) + ") has Euler characteristic "
             + std::to_string(s.euler));
      }
    }
    if (!rep.sublevels.empty()) {
      auto const& last = rep.sublevels.back();
      if (last.vertices != ball.num_vertices()
          || last.cubes != ball.cubes().size()) {
        fail("sublevel sets do not exhaust the ball");
      }
    }
    return rep;
  }

}  // namespace gpcube

#endif  // GPCUBE_MORSE_HPP_
