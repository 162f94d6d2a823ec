// Finite abstract simplicial complexes, used for vertex links.

#ifndef GPCUBE_SIMPLICIAL_HPP_
#define GPCUBE_SIMPLICIAL_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace gpcube {

  using Simplex = std::vector<int>;  // sorted, nonempty

  class SimplicialComplex {
   public:
    SimplicialComplex() = default;

    explicit SimplicialComplex(int num_vertices)
        : _num_vertices(num_vertices) {}

    int num_vertices() const noexcept {
      return _num_vertices;
    }

    // Adds the simplex and all its nonempty faces.
    void add(Simplex s) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      if (s.empty()) {
        return;
      }
      _num_vertices = std::max(_num_vertices, s.back() + 1);
      std::size_t n = s.size();
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        Simplex f;
        for (std::size_t i = 0; i < n; ++i) {
          if ((m >> i) & 1U) {
            f.push_back(s[i]);
          }
        }
        _faces.insert(std::move(f));
      }
    }

    bool contains(Simplex s) const {
      std::sort(s.begin(), s.end());
      return _faces.contains(s);
    }

    std::set<Simplex> const& faces() const noexcept {
      return _faces;
    }

    int dimension() const {
      int d = -1;
      for (auto const& f : _faces) {
        d = std::max(d, static_cast<int>(f.size()) - 1);
      }
      return d;
    }

    // Vertices that occur in some face.
    std::vector<int> support() const {
      std::vector<int> out;
      for (auto const& f : _faces) {
        if (f.size() == 1) {
          out.push_back(f[0]);
        }
      }
      return out;
    }

    std::int64_t euler_characteristic() const {
      std::int64_t chi = 0;
      for (auto const& f : _faces) {
        chi += (f.size() % 2 == 1) ? 1 : -1;
      }
      return chi;
    }

    bool adjacent(int a, int b) const {
      return _faces.contains(a < b ? Simplex{a, b} : Simplex{b, a});
    }

    friend bool operator==(SimplicialComplex const& a,
                           SimplicialComplex const& b) {
      return a._faces == b._faces;
    }

   private:
    int               _num_vertices = 0;
    std::set<Simplex> _faces;
  };

  // Every set of pairwise adjacent vertices spans a face.
  inline bool is_flag(SimplicialComplex const& k) {
    auto verts = k.support();
    bool ok    = true;
    // Grow cliques of the 1-skeleton vertex by vertex; a clique that is not a
    // face is a witness against flagness.
    std::function<void(Simplex&, std::size_t)> grow = [&](Simplex& cur,
                                                          std::size_t from) {
      for (std::size_t i = from; i < verts.size() && ok; ++i) {
        int  v    = verts[i];
        bool good = std::all_of(cur.begin(), cur.end(),
                                [&](int u) { return k.adjacent(u, v); });
        if (!good) {
          continue;
        }
        cur.push_back(v);
        if (!k.contains(cur)) {
          ok = false;
        } else {
          grow(cur, i + 1);
        }
        cur.pop_back();
      }
    };
    Simplex cur;
    grow(cur, 0);
    return ok;
  }

  // Faces of a * b, with b's vertices shifted by `offset`.
  inline SimplicialComplex join(SimplicialComplex const& a,
                                SimplicialComplex const& b,
                                int                      offset) {
    SimplicialComplex out(offset + b.num_vertices());
    std::vector<Simplex> fa(a.faces().begin(), a.faces().end());
    std::vector<Simplex> fb(b.faces().begin(), b.faces().end());
    fa.emplace_back();
    fb.emplace_back();
    for (auto const& x : fa) {
      for (auto const& y : fb) {
        Simplex s = x;
        for (int v : y) {
          s.push_back(v + offset);
        }
        out.add(s);
      }
    }
    return out;
  }

  // Faces of the full simplex on the given vertices.
  inline SimplicialComplex full_simplex(std::vector<int> const& verts) {
    SimplicialComplex out;
    out.add(verts);
    return out;
  }

  // True when `map` (old vertex -> new vertex) is injective on the support of
  // a and carries the face set of a exactly onto the face set of b.
  inline bool is_isomorphism(SimplicialComplex const& a,
                             SimplicialComplex const& b,
                             std::function<int(int)> const& map) {
    if (a.faces().size() != b.faces().size()) {
      return false;
    }
    std::set<int> image;
    for (int v : a.support()) {
      if (!image.insert(map(v)).second) {
        return false;
      }
    }
    for (auto const& f : a.faces()) {
      Simplex g;
      for (int v : f) {
        g.push_back(map(v));
      }
      if (!b.contains(g)) {
        return false;
      }
    }
    return true;
  }

}  // namespace gpcube

#endif  // GPCUBE_SIMPLICIAL_HPP_
