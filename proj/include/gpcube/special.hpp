// Edge labels, hyperplanes and the specialness conditions of the action, plus
// the torsion projection whose kernel acts freely.

#ifndef GPCUBE_SPECIAL_HPP_
#define GPCUBE_SPECIAL_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "group.hpp"
#include "hat.hpp"

namespace gpcube {

  // Every edge is g s^k<<C>> <= g s^k<<C + s>> with s a hat vertex not in C
  // and g not ending with s.  `hat` is s (generator granularity); `power` is
  // k, the exponent of the hat vertex, so s^k as a group element is
  // base^(sign * power).
  struct EdgeLabel {
    int          hat   = 0;
    std::int64_t power = 0;

    friend auto operator<=>(EdgeLabel const&, EdgeLabel const&) = default;
  };

  struct Edge {
    int       cube   = 0;  // index into ball.cubes()
    int       bottom = 0;
    int       top    = 0;
    EdgeLabel label;
  };

  inline EdgeLabel edge_label(CubeBall const& ball, Cube const& c) {
    auto const& gp     = ball.group();
    auto const& hat    = ball.hat();
    auto const& bottom = ball.vertex(c.bottom);
    auto const& top    = ball.vertex(c.top);
    VertexMask  fixed  = hat.bases(bottom.clique);
    int         base   = -1;
    for_each_bit(top.clique.mask, [&](int h) {
      if ((fixed & bit(hat[h].base)) == 0) {
        base = hat[h].base;
      }
    });
    auto const& x = bottom.rep;
    int         h = hat.index(base, 1);
    if (gp.graph().order(base).is_infinite()) {
      auto step = gp.multiply(x, gp.generator(base, 1));
      if (!std::binary_search(top.elements.begin(), top.elements.end(), step)) {
        h = hat.index(base, -1);
      }
    }
    // The trailing base-syllable is the same for every element of the
    // bottom coset, whose letters commute with base.
    std::int64_t tail = gp.tail_exponent(x, base);
    return EdgeLabel{h, tail * hat[h].sign};
  }

  inline std::vector<Edge> edges(CubeBall const& ball) {
    std::vector<Edge> out;
    for (int i = 0; i < static_cast<int>(ball.cubes().size()); ++i) {
      auto const& c = ball.cubes()[i];
      if (c.dim == 1) {
        out.push_back(Edge{i, c.bottom, c.top, edge_label(ball, c)});
      }
    }
    return out;
  }

  struct Hyperplane {
    std::vector<int> edges;  // indices into the edge list
    EdgeLabel        label;  // label of the first edge
    bool             interior = true;
  };

  struct Square {
    // Edge indices: a0 and a1 are opposite, as are b0 and b1; a0 and b0
    // start at the bottom corner.
    int a0, a1, b0, b1;
  };

  namespace detail {
    inline std::vector<Square> squares(CubeBall const&          ball,
                                       std::vector<Edge> const& es) {
      std::map<std::pair<int, int>, int> by_ends;
      for (int i = 0; i < static_cast<int>(es.size()); ++i) {
        by_ends.emplace(std::pair{es[i].bottom, es[i].top}, i);
      }
      std::vector<Square> out;
      for (auto const& c : ball.cubes()) {
        if (c.dim != 2) {
          continue;
        }
        auto cc = ball.cube_vertices(c);
        auto e  = [&](int p, int q) {
          return by_ends.at({cc.vertex[p], cc.vertex[q]});
        };
        out.push_back(Square{e(0, 1), e(2, 3), e(0, 2), e(1, 3)});
      }
      return out;
    }
  }  // namespace detail

  // Classes of edges under the opposite-sides-of-a-square relation.
  inline std::vector<Hyperplane> hyperplanes(CubeBall const&          ball,
                                             std::vector<Edge> const& es) {
    std::vector<int> parent(es.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int i) {
      while (parent[i] != i) {
        i = parent[i] = parent[parent[i]];
      }
      return i;
    };
    for (auto const& sq : detail::squares(ball, es)) {
      parent[root(sq.a1)] = root(sq.a0);
      parent[root(sq.b1)] = root(sq.b0);
    }
    std::map<int, std::size_t> slot;
    std::vector<Hyperplane>    out;
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
      int r = root(i);
      auto [it, fresh] = slot.try_emplace(r, out.size());
      if (fresh) {
        out.push_back(Hyperplane{{}, es[i].label, true});
      }
      auto& hp = out[it->second];
      hp.edges.push_back(i);
      if (!ball.is_interior(es[i].bottom) || !ball.is_interior(es[i].top)) {
        hp.interior = false;
      }
    }
    return out;
  }

  inline std::vector<Hyperplane> hyperplanes(CubeBall const& ball) {
    return hyperplanes(ball, edges(ball));
  }

  struct SpecialReport {
    bool labels_constant         = true;  // (i)
    bool no_self_crossing_or_osc = true;  // (ii)
    bool crossing_labels_commute = true;  // (iii)
    bool no_inter_osculation     = true;  // (iv)

    std::size_t hyperplanes          = 0;
    std::size_t interior_hyperplanes = 0;
    std::size_t squares              = 0;
    std::size_t vertices_checked     = 0;
    // Pairs of distinct edges at an interior vertex sharing the hat label
    // only (powers differ).  They all meet at a vertex g<u> with u of finite
    // order, entering it from the cosets g u^k.
    std::size_t generator_label_pairs_incoming = 0;
    std::size_t generator_label_pairs_other    = 0;

    std::vector<std::string> violations;
    std::vector<std::string> truncated;

    bool ok() const {
      return labels_constant && no_self_crossing_or_osc
             && crossing_labels_commute && no_inter_osculation;
    }
  };

  // Checks the four conditions on the ball using the given edge list (normally
  // edges(ball); tests inject altered labels).  Per-vertex conditions are
  // evaluated at interior vertices, per-hyperplane ones on interior
  // hyperplanes; boundary hyperplanes are listed as truncated.
  inline SpecialReport check_special(CubeBall const& ball, std::vector<Edge> const& es) {
    SpecialReport rep;
    auto const&   hat   = ball.hat();
    auto const&   delta = hat.graph();
    auto          sqs   = detail::squares(ball, es);
    auto          hps   = hyperplanes(ball, es);
    rep.hyperplanes     = hps.size();
    rep.squares         = sqs.size();

    std::vector<int> hp_of(es.size(), -1);
    for (int i = 0; i < static_cast<int>(hps.size()); ++i) {
      for (int e : hps[i].edges) {
        hp_of[e] = i;
      }
    }
    auto name = [&](EdgeLabel l) {
      return hat.name(l.hat) + "^" + std::to_string(l.power);
    };

    // Edge pairs that are adjacent sides of some square.
    std::set<std::pair<int, int>> square_adjacent;
    auto add_pair = [&](int a, int b) {
      square_adjacent.emplace(std::min(a, b), std::max(a, b));
    };
    for (auto const& sq : sqs) {
      add_pair(sq.a0, sq.b0);
      add_pair(sq.a0, sq.b1);
      add_pair(sq.a1, sq.b0);
      add_pair(sq.a1, sq.b1);
    }
    // Pairs of hyperplanes crossing in some square.
    std::set<std::pair<int, int>> crossing;
    for (auto const& sq : sqs) {
      int p = hp_of[sq.a0], q = hp_of[sq.b0];
      crossing.emplace(std::min(p, q), std::max(p, q));
      if (p == q) {
        rep.no_self_crossing_or_osc = false;
        rep.violations.push_back("hyperplane crosses itself");
      }
      if (!delta.adjacent(es[sq.a0].label.hat, es[sq.b0].label.hat)) {
        rep.crossing_labels_commute = false;
        rep.violations.push_back("square with labels " + name(es[sq.a0].label)
                                 + " and " + name(es[sq.b0].label)
                                 + " that do not commute");
      }
      // Opposite sides carry equal labels; local, so every square counts.
      if (es[sq.a0].label != es[sq.a1].label || es[sq.b0].label != es[sq.b1].label) {
        rep.labels_constant = false;
        rep.violations.push_back("square with unequal opposite labels "
                                 + name(es[sq.a0].label) + "/" + name(es[sq.a1].label)
                                 + ", " + name(es[sq.b0].label) + "/"
                                 + name(es[sq.b1].label));
      }
      // Opposite edges point the same way: their bottoms are joined by a side.
      auto joined = [&](int e, int f) {
        return square_adjacent.contains({std::min(e, f), std::max(e, f)});
      };
      if (es[sq.a0].bottom != es[sq.b0].bottom
          || es[sq.a1].bottom != es[sq.b0].top || es[sq.b1].bottom != es[sq.a0].top
          || !joined(sq.a0, sq.b0)) {
        rep.labels_constant = false;
        rep.violations.push_back("incoherent orientation in a square");
      }
    }

    // (i) label constancy on every hyperplane.
    for (auto const& hp : hps) {
      if (hp.interior) {
        ++rep.interior_hyperplanes;
      } else {
        rep.truncated.push_back("hyperplane " + name(hp.label) + " through "
                                + std::to_string(hp.edges.size())
                                + " edges meets the boundary");
        continue;
      }
      for (int e : hp.edges) {
        if (es[e].label != hp.label) {
          rep.labels_constant = false;
          rep.violations.push_back("hyperplane mixes labels " + name(hp.label)
                                   + " and " + name(es[e].label));
        }
      }
    }

    // Per-vertex conditions.
    std::vector<std::vector<int>> at(ball.num_vertices());
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
      at[es[i].bottom].push_back(i);
      at[es[i].top].push_back(i);
    }
    auto const& gp = ball.group();
    for (int v = 0; v < static_cast<int>(ball.num_vertices()); ++v) {
      if (!ball.is_interior(v)) {
        continue;
      }
      ++rep.vertices_checked;
      auto const& inc   = at[v];
      auto        where = gp.format(ball.vertex(v).rep);
      for (std::size_t i = 0; i < inc.size(); ++i) {
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
          auto const& e = es[inc[i]];
          auto const& f = es[inc[j]];
          bool adj = square_adjacent.contains(
              {std::min(inc[i], inc[j]), std::max(inc[i], inc[j])});
          bool same_hp = hp_of[inc[i]] == hp_of[inc[j]];
          // (ii) same label, or same hyperplane, at a common vertex.
          if (e.label == f.label || same_hp) {
            rep.no_self_crossing_or_osc = false;
            rep.violations.push_back(
                std::string(adj ? "self-crossing" : "self-osculation") + " of "
                + name(e.label) + " at " + where);
          } else if (e.label.hat == f.label.hat) {
            if (e.top == v && f.top == v) {
              ++rep.generator_label_pairs_incoming;
            } else {
              ++rep.generator_label_pairs_other;
            }
          }
          // (iv) crossing-capable labels meeting at a vertex span a square;
          // hyperplanes that cross somewhere never osculate.
          int  p = hp_of[inc[i]], q = hp_of[inc[j]];
          bool cross_somewhere = crossing.contains({std::min(p, q), std::max(p, q)});
          bool capable = delta.adjacent(e.label.hat, f.label.hat);
          if ((capable || cross_somewhere) && !adj) {
            rep.no_inter_osculation = false;
            rep.violations.push_back("inter-osculation of " + name(e.label)
                                     + " and " + name(f.label) + " at " + where);
          }
        }
      }
    }
    return rep;
  }

  inline SpecialReport check_special(CubeBall const& ball) {
    return check_special(ball, edges(ball));
  }

  // Image of g in the product of the finite vertex groups: exponent sums
  // modulo c(s), one coordinate per finite-order vertex in vertex order.
  inline std::vector<std::int64_t> torsion_projection(GraphProduct const& gp,
                                                      NormalForm const&   g) {
    auto const&               graph = gp.graph();
    std::vector<std::int64_t> sums(graph.size(), 0);
    for (auto const& l : g.letters()) {
      sums[l.gen] += l.exp;
    }
    std::vector<std::int64_t> out;
    for (int s = 0; s < static_cast<int>(graph.size()); ++s) {
      if (graph.order(s).is_finite()) {
        out.push_back(gp.fold(s, sums[s]));
      }
    }
    return out;
  }

  inline bool in_torsion_kernel(GraphProduct const& gp, NormalForm const& g) {
    auto p = torsion_projection(gp, g);
    return std::all_of(p.begin(), p.end(), [](std::int64_t x) { return x == 0; });
  }

  struct KernelReport {
    bool                     ok = true;
    std::size_t              vertices_checked = 0;
    std::size_t              nontrivial_stabilizers = 0;
    std::vector<std::string> violations;
  };

  // The torsion kernel meets every vertex stabilizer trivially.
  inline KernelReport check_free_kernel_action(CubeBall const& ball) {
    KernelReport rep;
    auto const&  gp = ball.group();
    for (auto const& x : ball.vertices()) {
      ++rep.vertices_checked;
      auto stab = stabilizer(gp, ball.hat(), x);
      if (stab.size() > 1) {
        ++rep.nontrivial_stabilizers;
      }
      for (auto const& h : stab) {
        if (!h.is_identity() && in_torsion_kernel(gp, h)) {
          rep.ok = false;
          rep.violations.push_back("kernel element " + gp.format(h)
                                   + " fixes " + gp.format(x.rep));
        }
      }
    }
    return rep;
  }

}  // namespace gpcube

#endif  // GPCUBE_SPECIAL_HPP_
