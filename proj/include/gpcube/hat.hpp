// The doubled generator graph Delta: infinite generators split into s+ and
// s-, which are never adjacent.  Cliques of Delta index the standard subsets
// <<C>> from which the cube complex is built.

#ifndef GPCUBE_HAT_HPP_
#define GPCUBE_HAT_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"
#include "group.hpp"

namespace gpcube {

  struct HatVertex {
    int base = 0;  // vertex of the presentation graph
    int sign = 1;  // -1 only for infinite-order bases

    friend bool operator==(HatVertex, HatVertex) = default;
  };

  // A set of pairwise adjacent vertices of Delta (possibly empty).
  struct Clique {
    VertexMask mask = 0;

    int size() const noexcept {
      return popcount(mask);
    }

    bool empty() const noexcept {
      return mask == 0;
    }

    bool contains(int h) const noexcept {
      return (mask & bit(h)) != 0;
    }

    bool subset_of(Clique other) const noexcept {
      return (mask & ~other.mask) == 0;
    }

    friend bool operator==(Clique, Clique) = default;

    friend std::strong_ordering operator<=>(Clique a, Clique b) {
      if (a.size() != b.size()) {
        return a.size() <=> b.size();
      }
      return a.mask <=> b.mask;
    }
  };

  class HatGraph {
   public:
    explicit HatGraph(LabeledGraph const& gamma) {
      _index.assign(gamma.size(), {-1, -1});
      for (int s = 0; s < static_cast<int>(gamma.size()); ++s) {
        if (gamma.order(s).is_finite()) {
          _index[s][0] = add(gamma, s, 1, gamma.name(s), gamma.order(s));
        } else {
          _index[s][0] = add(gamma, s, 1, gamma.name(s) + "+", Order::infinite());
          _index[s][1] = add(gamma, s, -1, gamma.name(s) + "-", Order::infinite());
        }
      }
      for (int a = 0; a < static_cast<int>(_hats.size()); ++a) {
        for (int b = a + 1; b < static_cast<int>(_hats.size()); ++b) {
          if (gamma.adjacent(_hats[a].base, _hats[b].base)) {
            _delta.add_edge(a, b);
          }
        }
      }
      _finite_bases = gamma.finite_vertices();
    }

    LabeledGraph const& graph() const noexcept {
      return _delta;
    }

    std::size_t size() const noexcept {
      return _hats.size();
    }

    HatVertex const& operator[](int h) const {
      return _hats.at(h);
    }

    int index(int base, int sign) const {
      return _index.at(base)[sign > 0 ? 0 : 1];
    }

    bool is_finite(int h) const {
      return (_finite_bases & bit(_hats.at(h).base)) != 0;
    }

    std::string const& name(int h) const {
      return _delta.name(h);
    }

    VertexMask bases(Clique c) const {
      VertexMask out = 0;
      for_each_bit(c.mask, [&](int h) { out |= bit(_hats[h].base); });
      return out;
    }

    // Every clique of Delta, the empty one included, ordered by size then
    // mask.
    std::vector<Clique> cliques() const {
      std::vector<Clique> out;
      extend(0, 0, _delta.all(), out);
      std::sort(out.begin(), out.end());
      return out;
    }

    // Cliques D disjoint from c such that c | D is a clique (the link of c in
    // the flag complex of Delta), the empty one included.
    std::vector<Clique> link_cliques(Clique c) const {
      VertexMask cand = _delta.all() & ~c.mask;
      for_each_bit(c.mask, [&](int h) { cand &= _delta.neighbours(h); });
      std::vector<Clique> out;
      extend(0, 0, cand, out);
      std::sort(out.begin(), out.end());
      return out;
    }

    bool is_clique(Clique c) const {
      return _delta.is_clique(c.mask);
    }

    // The elements of <<h>>: the whole cyclic group for finite h, {1, s^sign}
    // for infinite h.  Each is a single-letter (or empty) word.
    std::vector<Word> factor(int h, LabeledGraph const& gamma) const {
      auto const&       hv = _hats.at(h);
      std::vector<Word> out{Word{}};
      if (gamma.order(hv.base).is_finite()) {
        for (std::uint32_t k = 1; k < gamma.order(hv.base).value(); ++k) {
          out.push_back(Word{Letter{hv.base, k}});
        }
      } else {
        out.push_back(Word{Letter{hv.base, hv.sign}});
      }
      return out;
    }

   private:
    int add(LabeledGraph const&, int base, int sign, std::string name, Order o) {
      _hats.push_back(HatVertex{base, sign});
      return _delta.add_vertex(std::move(name), o);
    }

    void extend(VertexMask cur,
                int        from,
                VertexMask cand,
                std::vector<Clique>& out) const {
      out.push_back(Clique{cur});
      for (int h = from; h < static_cast<int>(_hats.size()); ++h) {
        if ((cand & bit(h)) != 0) {
          extend(cur | bit(h), h + 1, cand & _delta.neighbours(h), out);
        }
      }
    }

    LabeledGraph                    _delta;
    std::vector<HatVertex>          _hats;
    std::vector<std::array<int, 2>> _index;
    VertexMask                      _finite_bases = 0;
  };

  // The finite set <<C>> = <<s_1>>...<<s_k>> as sorted normal forms.
  struct StdSubset {
    Clique                  clique;
    std::vector<NormalForm> elements;
  };

  namespace detail {
    // Calls fn(word, choice) for every element of <<C>>; choice[i] is the
    // index into factor(h_i) for the i-th hat vertex of C.
    template <typename Fn>
    void for_each_subset_element(GraphProduct const& gp,
                                 HatGraph const&     hat,
                                 Clique              c,
                                 Fn&&                fn) {
      auto                           hs = bits_of(c.mask);
      std::vector<std::vector<Word>> factors;
      for (int h : hs) {
        factors.push_back(hat.factor(h, gp.graph()));
      }
      std::vector<std::size_t> choice(hs.size(), 0);
      while (true) {
        Word w;
        for (std::size_t i = 0; i < hs.size(); ++i) {
          auto const& f = factors[i][choice[i]];
          w.insert(w.end(), f.begin(), f.end());
        }
        fn(w, choice);
        std::size_t i = 0;
        for (; i < hs.size(); ++i) {
          if (++choice[i] < factors[i].size()) {
            break;
          }
          choice[i] = 0;
        }
        if (i == hs.size()) {
          return;
        }
      }
    }
  }  // namespace detail

  inline StdSubset std_subset(GraphProduct const& gp,
                              HatGraph const&     hat,
                              Clique              c) {
    StdSubset out{c, {}};
    detail::for_each_subset_element(
        gp, hat, c, [&](Word const& w, auto const&) {
          out.elements.push_back(gp.normalize(w));
        });
    std::sort(out.elements.begin(), out.elements.end());
    return out;
  }

  // Hat vertices h with max l(g<<h>>) = l(g): the directions in which the
  // coset of g does not get longer.
  inline VertexMask desc_letters(GraphProduct const& gp,
                                 HatGraph const&     hat,
                                 NormalForm const&   g) {
    VertexMask out = 0;
    for (int h = 0; h < static_cast<int>(hat.size()); ++h) {
      std::uint64_t longest = 0;
      for (auto const& w : hat.factor(h, gp.graph())) {
        longest = std::max(longest, gp.multiply(g, w).length());
      }
      if (longest == g.length()) {
        out |= bit(h);
      }
    }
    return out;
  }

}  // namespace gpcube

#endif  // GPCUBE_HAT_HPP_
