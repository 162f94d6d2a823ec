// Finite balls of the cube complex X: vertices are the cosets g<<C>>, ordered
// by inclusion, and cubes are the (boolean) intervals of that poset.

#ifndef GPCUBE_COMPLEX_HPP_
#define GPCUBE_COMPLEX_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "hat.hpp"
#include "simplicial.hpp"

namespace gpcube {

  // A vertex g<<C>> of X.  rep is the ShortLex-least element of the coset and
  // clique is the unique C with rep<<C>> equal to the coset, so two vertices
  // are equal iff they have the same rep and clique.
  struct CosetVertex {
    NormalForm              rep;
    Clique                  clique;
    std::vector<NormalForm> elements;  // sorted
    std::uint64_t           max_length = 0;
    // Number of elements attaining max_length.
    std::size_t longest_count = 0;

    friend bool operator==(CosetVertex const& a, CosetVertex const& b) {
      return a.clique == b.clique && a.elements == b.elements;
    }
  };

  inline CosetVertex coset_vertex(GraphProduct const& gp,
                                  HatGraph const&     hat,
                                  NormalForm const&   g,
                                  Clique              c) {
    CosetVertex v;
    detail::for_each_subset_element(gp, hat, c, [&](Word const& w, auto const&) {
      v.elements.push_back(gp.multiply(g, w));
    });
    std::sort(v.elements.begin(), v.elements.end());
    v.rep = *std::min_element(v.elements.begin(), v.elements.end(), ShortLex());
    for (auto const& x : v.elements) {
      if (x.length() > v.max_length) {
        v.max_length    = x.length();
        v.longest_count = 1;
      } else if (x.length() == v.max_length) {
        ++v.longest_count;
      }
    }
    // rep = g q with q in <<C>>; the coset is rep q^-1 <<C>>, and q^-1 <<s+>>
    // is <<s->> whenever q has an s-coordinate.
    NormalForm q = gp.multiply(gp.invert(g), v.rep);
    VertexMask m = c.mask;
    for (auto const& l : q.letters()) {
      if (gp.graph().order(l.gen).is_infinite()) {
        int plus  = hat.index(l.gen, 1);
        int minus = hat.index(l.gen, -1);
        m ^= bit(plus) | bit(minus);
      }
    }
    v.clique = Clique{m};
    return v;
  }

  // Inclusion of element sets.
  inline bool poset_leq(CosetVertex const& a, CosetVertex const& b) {
    return std::includes(b.elements.begin(), b.elements.end(),
                         a.elements.begin(), a.elements.end());
  }

  struct Cube {
    int bottom = 0;
    int top    = 0;
    int dim    = 0;
  };

  // Corners of a cube: directions are the hat vertices of the top clique
  // varying along the cube; vertex[D] is the corner whose clique adds the
  // directions in bitmask D (over positions in `directions`) to the bottom.
  struct CubeCorners {
    std::vector<int> directions;
    std::vector<int> vertex;
  };

  struct BallLimits {
    std::size_t max_elements = 1'000'000;
    std::size_t max_vertices = 2'000'000;
  };

  class CubeBall {
   public:
    CubeBall(GraphProduct gp, std::uint64_t radius, BallLimits limits = {})
        : _gp(std::move(gp)), _hat(_gp.graph()), _radius(radius) {
      build_vertices(limits);
      build_cubes();
      build_interior();
    }

    GraphProduct const& group() const noexcept {
      return _gp;
    }

    HatGraph const& hat() const noexcept {
      return _hat;
    }

    std::uint64_t radius() const noexcept {
      return _radius;
    }

    std::vector<CosetVertex> const& vertices() const noexcept {
      return _vertices;
    }

    CosetVertex const& vertex(int v) const {
      return _vertices.at(v);
    }

    std::size_t num_vertices() const noexcept {
      return _vertices.size();
    }

    // Cubes of dimension >= 1; vertices are the 0-cubes.
    std::vector<Cube> const& cubes() const noexcept {
      return _cubes;
    }

    std::vector<NormalForm> const& elements() const noexcept {
      return _elements;
    }

    std::optional<int> find(NormalForm const& rep, Clique c) const {
      auto it = _index.find({c.mask, rep.letters()});
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::optional<int> find(CosetVertex const& v) const {
      return find(v.rep, v.clique);
    }

    // Canonicalizes g<<C>> and looks it up.
    std::optional<int> locate(NormalForm const& g, Clique c) const {
      return find(coset_vertex(_gp, _hat, g, c));
    }

    std::optional<int> cube_index(int bottom, int top) const {
      auto it = _cube_index.find({bottom, top});
      if (it == _cube_index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    // Cubes (dimension >= 1) having v as a corner.
    std::vector<int> const& cofaces(int v) const {
      return _cofaces.at(v);
    }

    // Every coface of v lies in the ball, so local data at v is complete.
    bool is_interior(int v) const {
      return _interior.at(v) != 0;
    }

    CubeCorners cube_vertices(Cube const& c) const {
      auto const& top    = _vertices.at(c.top);
      auto const& bottom = _vertices.at(c.bottom);
      VertexMask  varying = 0;
      VertexMask  fixed_bases = _hat.bases(bottom.clique);
      for_each_bit(top.clique.mask, [&](int h) {
        if ((fixed_bases & bit(_hat[h].base)) == 0) {
          varying |= bit(h);
        }
      });
      CubeCorners out;
      out.directions = bits_of(varying);
      // Coordinates of bottom.rep inside the top coset.
      NormalForm q = _gp.multiply(_gp.invert(top.rep), bottom.rep);
      std::vector<Word> coord(out.directions.size());
      for (auto const& l : q.letters()) {
        for (std::size_t i = 0; i < out.directions.size(); ++i) {
          if (_hat[out.directions[i]].base == l.gen) {
            coord[i] = Word{l};
          }
        }
      }
      std::size_t n = out.directions.size();
      out.vertex.assign(std::size_t{1} << n, -1);
      for (std::size_t d = 0; d < out.vertex.size(); ++d) {
        Word       w;
        VertexMask cl = top.clique.mask & ~varying;
        for (std::size_t i = 0; i < n; ++i) {
          if ((d >> i) & 1U) {
            cl |= bit(out.directions[i]);
          } else {
            w.insert(w.end(), coord[i].begin(), coord[i].end());
          }
        }
        auto idx = locate(_gp.multiply(top.rep, w), Clique{cl});
        if (!idx) {
          throw InvariantViolation("cube corner missing from ball");
        }
        out.vertex[d] = *idx;
      }
      if (out.vertex.front() != c.bottom || out.vertex.back() != c.top) {
        throw InvariantViolation("cube corners do not match its interval");
      }
      return out;
    }

   private:
    using Key = std::pair<VertexMask, Word>;

    void build_vertices(BallLimits const& limits) {
      _elements     = enumerate_ball(_gp, _radius, limits.max_elements);
      auto cliques  = _hat.cliques();
      std::map<Key, CosetVertex> found;
      for (auto const& g : _elements) {
        for (auto c : cliques) {
          auto v = coset_vertex(_gp, _hat, g, c);
          if (v.max_length > _radius || !(v.rep == g)) {
            continue;
          }
          found.try_emplace(Key{v.clique.mask, v.rep.letters()}, std::move(v));
          if (found.size() > limits.max_vertices) {
            throw BudgetExceeded("cube ball has too many vertices",
                                 limits.max_vertices);
          }
        }
      }
      for (auto& kv : found) {
        _vertices.push_back(std::move(kv.second));
      }
      std::sort(_vertices.begin(), _vertices.end(),
                [](CosetVertex const& a, CosetVertex const& b) {
                  if (a.max_length != b.max_length) {
                    return a.max_length < b.max_length;
                  }
                  if (a.clique.size() != b.clique.size()) {
                    return a.clique.size() < b.clique.size();
                  }
                  if (!(a.rep == b.rep)) {
                    return ShortLex()(a.rep, b.rep);
                  }
                  return a.clique.mask < b.clique.mask;
                });
      for (int i = 0; i < static_cast<int>(_vertices.size()); ++i) {
        _index.emplace(Key{_vertices[i].clique.mask, _vertices[i].rep.letters()},
                       i);
      }
    }

    void build_cubes() {
      for (int t = 0; t < static_cast<int>(_vertices.size()); ++t) {
        auto const& top = _vertices[t];
        VertexMask  all = top.clique.mask;
        // Nonempty submasks S of the top clique: the varying directions.
        for (VertexMask s = all; s != 0; s = (s - 1) & all) {
          detail::for_each_subset_element(
              _gp, _hat, Clique{s}, [&](Word const& w, auto const&) {
                auto b = locate(_gp.multiply(top.rep, w), Clique{all & ~s});
                if (!b) {
                  throw InvariantViolation("cube bottom missing from ball");
                }
                _cubes.push_back(Cube{*b, t, popcount(s)});
              });
        }
      }
      std::sort(_cubes.begin(), _cubes.end(), [](Cube const& a, Cube const& b) {
        return std::tie(a.dim, a.top, a.bottom) < std::tie(b.dim, b.top, b.bottom);
      });
      _cofaces.assign(_vertices.size(), {});
      for (int i = 0; i < static_cast<int>(_cubes.size()); ++i) {
        _cube_index.emplace(std::pair{_cubes[i].bottom, _cubes[i].top}, i);
        for (int v : cube_vertices(_cubes[i]).vertex) {
          _cofaces[v].push_back(i);
        }
      }
    }

    void build_interior() {
      _interior.assign(_vertices.size(), 1);
      for (int v = 0; v < static_cast<int>(_vertices.size()); ++v) {
        auto const& x = _vertices[v];
        for (auto d : _hat.link_cliques(x.clique)) {
          if (!d.empty()
              && !locate(x.rep, Clique{x.clique.mask | d.mask})) {
            _interior[v] = 0;
            break;
          }
        }
      }
    }

    GraphProduct                       _gp;
    HatGraph                           _hat;
    std::uint64_t                      _radius;
    std::vector<NormalForm>            _elements;
    std::vector<CosetVertex>           _vertices;
    std::map<Key, int>                 _index;
    std::vector<Cube>                  _cubes;
    std::map<std::pair<int, int>, int> _cube_index;
    std::vector<std::vector<int>>      _cofaces;
    std::vector<char>                  _interior;
  };

  // Link of a vertex in the cube complex.  Link vertices are the edges at v
  // (identified with their far endpoints); each coface cube contributes the
  // simplex of its edges at v.  Cofaces above v form the up-link, cofaces
  // below v the down-link.
  struct VertexLink {
    std::vector<int>  neighbours;  // link vertex -> ball vertex
    SimplicialComplex link;
    SimplicialComplex up;
    SimplicialComplex down;

    int local(int ball_vertex) const {
      auto it = std::lower_bound(neighbours.begin(), neighbours.end(), ball_vertex);
      if (it == neighbours.end() || *it != ball_vertex) {
        return -1;
      }
      return static_cast<int>(it - neighbours.begin());
    }
  };

  namespace detail {
    // Simplex of link vertices contributed by cube c at corner v.
    inline Simplex link_simplex(CubeCorners const& cc,
                                int                v,
                                VertexLink const&  lk) {
      std::size_t d = 0;
      while (cc.vertex[d] != v) {
        ++d;
      }
      Simplex s;
      for (std::size_t i = 0; i < cc.directions.size(); ++i) {
        s.push_back(lk.local(cc.vertex[d ^ (std::size_t{1} << i)]));
      }
      return s;
    }
  }  // namespace detail

  inline VertexLink vertex_link(CubeBall const& ball, int v) {
    if (!ball.is_interior(v)) {
      throw NotInterior("vertex " + std::to_string(v)
                        + " is on the boundary of the ball");
    }
    VertexLink lk;
    for (int c : ball.cofaces(v)) {
      auto const& cube = ball.cubes()[c];
      if (cube.dim == 1) {
        lk.neighbours.push_back(cube.bottom == v ? cube.top : cube.bottom);
      }
    }
    std::sort(lk.neighbours.begin(), lk.neighbours.end());
    int n   = static_cast<int>(lk.neighbours.size());
    lk.link = SimplicialComplex(n);
    lk.up   = SimplicialComplex(n);
    lk.down = SimplicialComplex(n);
    for (int c : ball.cofaces(v)) {
      auto const& cube = ball.cubes()[c];
      auto        s    = detail::link_simplex(ball.cube_vertices(cube), v, lk);
      lk.link.add(s);
      if (cube.bottom == v) {
        lk.up.add(s);
      } else if (cube.top == v) {
        lk.down.add(s);
      }
    }
    return lk;
  }

  // Checks the link decomposition at an interior vertex v = g<<C>>:
  //   * link = up-link * down-link;
  //   * up-link is isomorphic to the link of C in the flag complex of Delta,
  //     via g<<C + t>> <-> t;
  //   * down-link is isomorphic to the join of the discrete sets <<s>>, s in
  //     C, via gh<<C - s>> <-> (s, h).
  inline bool check_link_model(CubeBall const& ball, int v) {
    auto const& gp  = ball.group();
    auto const& hat = ball.hat();
    auto const& x   = ball.vertex(v);
    VertexLink  lk  = vertex_link(ball, v);

    // Join decomposition: the link's faces are exactly unions of an up face
    // and a down face, which live on disjoint link vertices.
    SimplicialComplex joined(lk.link.num_vertices());
    {
      std::vector<Simplex> fu(lk.up.faces().begin(), lk.up.faces().end());
      std::vector<Simplex> fd(lk.down.faces().begin(), lk.down.faces().end());
      fu.emplace_back();
      fd.emplace_back();
      for (auto const& a : fu) {
        for (auto const& b : fd) {
          Simplex s = a;
          s.insert(s.end(), b.begin(), b.end());
          joined.add(s);
        }
      }
    }
    if (!(joined == lk.link)) {
      return false;
    }

    // Up-link model.
    std::vector<int>  up_map(hat.size(), -1);
    SimplicialComplex up_model(static_cast<int>(hat.size()));
    for (auto d : hat.link_cliques(x.clique)) {
      if (d.empty()) {
        continue;
      }
      up_model.add(bits_of(d.mask));
      if (d.size() == 1) {
        int  t   = bits_of(d.mask)[0];
        auto idx = ball.locate(x.rep, Clique{x.clique.mask | d.mask});
        if (!idx) {
          return false;
        }
        up_map[t] = lk.local(*idx);
      }
    }
    if (!is_isomorphism(up_model, lk.up, [&](int t) { return up_map[t]; })) {
      return false;
    }

    // Down-link model: one block of vertices per s in C.
    std::vector<int>              down_map;
    std::vector<std::vector<int>> blocks;
    for (int s : bits_of(x.clique.mask)) {
      std::vector<int> block;
      for (auto const& h : hat.factor(s, gp.graph())) {
        auto idx = ball.locate(gp.multiply(x.rep, h), Clique{x.clique.mask & ~bit(s)});
        if (!idx) {
          return false;
        }
        block.push_back(static_cast<int>(down_map.size()));
        down_map.push_back(lk.local(*idx));
      }
      blocks.push_back(std::move(block));
    }
    SimplicialComplex down_model(static_cast<int>(down_map.size()));
    for (auto const& b : blocks) {
      SimplicialComplex points;
      for (int p : b) {
        points.add({p});
      }
      down_model = join(down_model, points, 0);
    }
    return is_isomorphism(down_model, lk.down, [&](int p) { return down_map[p]; });
  }

  // {h : h x = x} for the coset x = g<<C>>, filtered from the finite candidate
  // set g q q'^-1 g^-1.
  inline std::vector<NormalForm> stabilizer(GraphProduct const& gp,
                                            HatGraph const&     hat,
                                            CosetVertex const&  x) {
    auto const& q   = std_subset(gp, hat, x.clique).elements;
    auto        gin = gp.invert(x.rep);
    std::vector<NormalForm> cand;
    for (auto const& a : q) {
      for (auto const& b : q) {
        cand.push_back(gp.multiply(gp.multiply(gp.multiply(x.rep, a), gp.invert(b)), gin));
      }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<NormalForm> out;
    for (auto const& h : cand) {
      std::vector<NormalForm> moved;
      for (auto const& e : x.elements) {
        moved.push_back(gp.multiply(h, e));
      }
      std::sort(moved.begin(), moved.end());
      if (moved == x.elements) {
        out.push_back(h);
      }
    }
    return out;
  }

  // Conjugating the stabilizer of g<<C>> by g lands in the subgroup generated
  // by the finite-order letters of C.
  inline bool stabilizer_is_proper(GraphProduct const&            gp,
                                   HatGraph const&                hat,
                                   CosetVertex const&             x,
                                   std::vector<NormalForm> const& stab) {
    VertexMask fin = 0;
    for_each_bit(x.clique.mask, [&](int h) {
      if (hat.is_finite(h)) {
        fin |= bit(h);
      }
    });
    auto sub = std_subset(gp, hat, Clique{fin}).elements;
    auto gin = gp.invert(x.rep);
    return std::all_of(stab.begin(), stab.end(), [&](NormalForm const& h) {
      auto c = gp.multiply(gp.multiply(gin, h), x.rep);
      return std::binary_search(sub.begin(), sub.end(), c);
    });
  }

  struct OrbitClass {
    std::vector<Clique> k_cliques;  // K-vertices <<C>> in this orbit
    std::size_t         ball_vertices = 0;
  };

  struct FundamentalDomainReport {
    bool                     ok = true;
    std::vector<OrbitClass>  classes;
    std::vector<std::string> violations;
  };

  // Every vertex of the ball is rep * <<C>> for a K-vertex <<C>>; K-vertices
  // are grouped into G-orbits (<<C'>> = h<<C>> for some h).
  inline FundamentalDomainReport fundamental_domain_check(CubeBall const& ball) {
    auto const& gp      = ball.group();
    auto const& hat     = ball.hat();
    auto        cliques = hat.cliques();
    std::vector<std::vector<NormalForm>> subsets;
    for (auto c : cliques) {
      subsets.push_back(std_subset(gp, hat, c).elements);
    }
    std::vector<std::size_t> parent(cliques.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t i) {
      while (parent[i] != i) {
        i = parent[i] = parent[parent[i]];
      }
      return i;
    };
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      for (std::size_t j = i + 1; j < cliques.size(); ++j) {
        if (subsets[i].size() != subsets[j].size()) {
          continue;
        }
        for (auto const& h : subsets[j]) {
          std::vector<NormalForm> moved;
          for (auto const& e : subsets[i]) {
            moved.push_back(gp.multiply(h, e));
          }
          std::sort(moved.begin(), moved.end());
          if (moved == subsets[j]) {
            parent[root(j)] = root(i);
            break;
          }
        }
      }
    }
    FundamentalDomainReport  rep;
    std::map<std::size_t, std::size_t> class_of_root;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      auto r = root(i);
      if (!class_of_root.contains(r)) {
        class_of_root.emplace(r, rep.classes.size());
        rep.classes.emplace_back();
      }
      rep.classes[class_of_root[r]].k_cliques.push_back(cliques[i]);
    }
    for (auto const& x : ball.vertices()) {
      auto pos = std::find(cliques.begin(), cliques.end(), x.clique);
      if (pos == cliques.end()) {
        rep.ok = false;
        rep.violations.push_back("vertex clique is not a clique of Delta");
        continue;
      }
      auto                    k   = static_cast<std::size_t>(pos - cliques.begin());
      auto                    gin = gp.invert(x.rep);
      std::vector<NormalForm> back;
      for (auto const& e : x.elements) {
        back.push_back(gp.multiply(gin, e));
      }
      std::sort(back.begin(), back.end());
      if (back != subsets[k]) {
        rep.ok = false;
        rep.violations.push_back("vertex " + gp.format(x.rep)
                                 + " is not a translate of its K-vertex");
        continue;
      }
      rep.classes[class_of_root[root(k)]].ball_vertices++;
    }
    return rep;
  }

  struct EquivarianceReport {
    bool        ok      = true;
    std::size_t checked = 0;
  };

  // Left multiplication by each generator power of length one maps cubes of
  // the ball that stay inside the ball onto cubes of the same dimension.
  inline EquivarianceReport check_equivariance(CubeBall const& ball) {
    auto const&        gp = ball.group();
    EquivarianceReport rep;
    for (auto const& h : ball.elements()) {
      if (h.length() != 1) {
        continue;
      }
      std::vector<std::optional<int>> image(ball.num_vertices());
      for (int v = 0; v < static_cast<int>(ball.num_vertices()); ++v) {
        auto const& x = ball.vertex(v);
        image[v]      = ball.locate(gp.multiply(h, x.rep), x.clique);
      }
      for (auto const& c : ball.cubes()) {
        if (!image[c.bottom] || !image[c.top]) {
          continue;
        }
        ++rep.checked;
        auto img = ball.cube_index(*image[c.bottom], *image[c.top]);
        if (!img || ball.cubes()[*img].dim != c.dim) {
          rep.ok = false;
        }
      }
      // Reflected as well: a cube between two images comes from a cube.
      std::vector<int> preimage(ball.num_vertices(), -1);
      for (int v = 0; v < static_cast<int>(ball.num_vertices()); ++v) {
        if (image[v]) {
          preimage[*image[v]] = v;
        }
      }
      for (auto const& c : ball.cubes()) {
        if (preimage[c.bottom] < 0 || preimage[c.top] < 0) {
          continue;
        }
        ++rep.checked;
        if (!ball.cube_index(preimage[c.bottom], preimage[c.top])) {
          rep.ok = false;
        }
      }
    }
    return rep;
  }

}  // namespace gpcube

#endif  // GPCUBE_COMPLEX_HPP_
