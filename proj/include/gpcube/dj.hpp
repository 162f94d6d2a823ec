// Comparison with the Davis-Januszkiewicz embedding.  Every infinite-order
// vertex s is replaced by involutions: Gamma' has (s,1) and (s,-1), Gamma''
// has (s,1) and (s,0).  The homomorphisms
//   beta  : W(Gamma)  -> W(Gamma''),  s -> (s,1)(s,0)
//   alpha : W(Gamma') -> W(Gamma''),  (s,-1) -> (s,0)(s,1)(s,0)
// together with E = <(s,0)> = (Z/2)^{V_inf} split W(Gamma'') as
// beta(W(Gamma)) x| E = alpha(W(Gamma')) x| E, and the complex Y of cosets
// of the sets <u>E, <<s+>>E, <<s->>E in W(Gamma'') is equivariantly
// isomorphic to X(Gamma) and to X(Gamma').

#ifndef GPCUBE_DJ_HPP_
#define GPCUBE_DJ_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "hat.hpp"

namespace gpcube {

  // Element of E: the infinite-order vertices s (of Gamma) whose (s,0) occurs.
  struct EElement {
    VertexMask mask = 0;

    friend auto operator<=>(EElement, EElement) = default;
  };

  inline EElement operator*(EElement a, EElement b) {
    return EElement{a.mask ^ b.mask};
  }

  inline std::string tagged_name(std::string const& base, int tag) {
    return base + "[" + std::to_string(tag) + "]";
  }

  // Vertices V_fin + V_inf x {-1, 1}; edges pulled back from Gamma.
  inline LabeledGraph gamma_prime(LabeledGraph const& g) {
    LabeledGraph     out;
    std::vector<std::vector<int>> img(g.size());
    for (int s = 0; s < static_cast<int>(g.size()); ++s) {
      if (g.order(s).is_finite()) {
        img[s].push_back(out.add_vertex(g.name(s), g.order(s)));
      } else {
        img[s].push_back(out.add_vertex(tagged_name(g.name(s), 1), Order::finite(2)));
        img[s].push_back(out.add_vertex(tagged_name(g.name(s), -1), Order::finite(2)));
      }
    }
    for (auto [a, b] : g.edges()) {
      for (int x : img[a]) {
        for (int y : img[b]) {
          out.add_edge(x, y);
        }
      }
    }
    return out;
  }

  // Vertices V_fin + V_inf x {0, 1}.  The part on V_fin + V_inf x {1} is a
  // copy of Gamma; (s,0) is adjacent to everything except (s,1).
  inline LabeledGraph gamma_doubleprime(LabeledGraph const& g) {
    LabeledGraph     out;
    std::vector<int> one(g.size(), -1), zero(g.size(), -1);
    for (int s = 0; s < static_cast<int>(g.size()); ++s) {
      if (g.order(s).is_finite()) {
        one[s] = out.add_vertex(g.name(s), g.order(s));
      } else {
        one[s]  = out.add_vertex(tagged_name(g.name(s), 1), Order::finite(2));
        zero[s] = out.add_vertex(tagged_name(g.name(s), 0), Order::finite(2));
      }
    }
    for (auto [a, b] : g.edges()) {
      out.add_edge(one[a], one[b]);
    }
    for (int s = 0; s < static_cast<int>(g.size()); ++s) {
      if (zero[s] < 0) {
        continue;
      }
      for (int v = 0; v < static_cast<int>(out.size()); ++v) {
        if (v != zero[s] && v != one[s]) {
          out.add_edge(zero[s], v);
        }
      }
    }
    return out;
  }

  struct Factorization {
    NormalForm a;  // in W(Gamma) or W(Gamma')
    EElement   e;
  };

  struct YVertex {
    Clique                  clique;  // a clique of Delta(Gamma) realising it
    std::vector<NormalForm> elements;
    std::uint64_t           depth = 0;
  };

  struct IsoReport {
    bool                     ok           = true;
    std::size_t              x_vertices   = 0;
    std::size_t              y_vertices   = 0;
    std::size_t              order_pairs  = 0;
    std::size_t              equivariance = 0;
    std::vector<std::string> violations;
  };

  struct FactorizationReport {
    bool                     ok            = true;
    std::size_t              elements      = 0;
    std::size_t              distinct_e    = 0;
    std::size_t              e_order       = 0;
    std::size_t              identity_fiber = 0;
    std::size_t              max_fiber     = 0;
    std::vector<std::string> violations;
  };

  class DavisJanuszkiewicz {
   public:
    explicit DavisJanuszkiewicz(LabeledGraph const& gamma)
        : _gp(gamma),
          _gp1(gamma_prime(gamma)),
          _gp2(gamma_doubleprime(gamma)),
          _inf(gamma.infinite_vertices()) {
      auto const& g1 = _gp1.graph();
      auto const& g2 = _gp2.graph();
      _fin1.assign(gamma.size(), -1);
      _fin2.assign(gamma.size(), -1);
      _plus1.assign(gamma.size(), -1);
      _minus1.assign(gamma.size(), -1);
      _one2.assign(gamma.size(), -1);
      _zero2.assign(gamma.size(), -1);
      _from1.assign(g1.size(), {-1, 0});
      for (int s = 0; s < static_cast<int>(gamma.size()); ++s) {
        auto const& n = gamma.name(s);
        if (gamma.order(s).is_finite()) {
          _fin1[s]          = g1.index_of(n);
          _fin2[s]          = g2.index_of(n);
          _from1[_fin1[s]] = {s, 0};
        } else {
          _plus1[s]           = g1.index_of(tagged_name(n, 1));
          _minus1[s]          = g1.index_of(tagged_name(n, -1));
          _one2[s]            = g2.index_of(tagged_name(n, 1));
          _zero2[s]           = g2.index_of(tagged_name(n, 0));
          _from1[_plus1[s]]  = {s, 1};
          _from1[_minus1[s]] = {s, -1};
        }
      }
    }

    GraphProduct const& gamma() const noexcept {
      return _gp;
    }

    GraphProduct const& prime() const noexcept {
      return _gp1;
    }

    GraphProduct const& doubleprime() const noexcept {
      return _gp2;
    }

    std::size_t num_infinite() const noexcept {
      return static_cast<std::size_t>(popcount(_inf));
    }

    std::vector<EElement> all_e() const {
      std::vector<EElement> out;
      // Submasks of _inf, in increasing order.
      VertexMask m = 0;
      do {
        out.push_back(EElement{m});
        m = (m - _inf) & _inf;
      } while (m != 0);
      std::sort(out.begin(), out.end());
      return out;
    }

    Word e_word(EElement e) const {
      Word w;
      for_each_bit(e.mask, [&](int s) { w.push_back(Letter{_zero2.at(s), 1}); });
      return w;
    }

    NormalForm e_element(EElement e) const {
      return _gp2.normalize(e_word(e));
    }

    Word beta_word(Word const& w) const {
      Word out;
      for (auto const& l : w) {
        if (_fin2.at(l.gen) >= 0) {
          out.push_back(Letter{_fin2[l.gen], l.exp});
          continue;
        }
        Letter a{_one2[l.gen], 1}, b{_zero2[l.gen], 1};
        for (std::int64_t i = 0; i < std::llabs(l.exp); ++i) {
          if (l.exp > 0) {
            out.push_back(a);
            out.push_back(b);
          } else {
            out.push_back(b);
            out.push_back(a);
          }
        }
      }
      return out;
    }

    NormalForm beta(NormalForm const& g) const {
      if (g.presentation() != _gp.presentation()) {
        throw PresentationMismatch();
      }
      return _gp2.normalize(beta_word(g.letters()));
    }

    Word alpha_word(Word const& w) const {
      Word out;
      for (auto const& l : w) {
        auto [s, tag] = _from1.at(l.gen);
        if (tag == 0) {
          out.push_back(Letter{_fin2[s], l.exp});
          continue;
        }
        // Images of (s, +-1) are involutions.
        if (l.exp % 2 == 0) {
          continue;
        }
        if (tag == 1) {
          out.push_back(Letter{_one2[s], 1});
        } else {
          out.push_back(Letter{_zero2[s], 1});
          out.push_back(Letter{_one2[s], 1});
          out.push_back(Letter{_zero2[s], 1});
        }
      }
      return out;
    }

    NormalForm alpha(NormalForm const& g) const {
      if (g.presentation() != _gp1.presentation()) {
        throw PresentationMismatch();
      }
      return _gp2.normalize(alpha_word(g.letters()));
    }

    // Retraction W(Gamma'') -> E killing V_fin and sending (s,0), (s,1) to
    // (s,0).
    EElement e_projection(NormalForm const& g) const {
      if (g.presentation() != _gp2.presentation()) {
        throw PresentationMismatch();
      }
      VertexMask m = 0;
      for (auto const& l : g.letters()) {
        int s = base_of2(l.gen);
        if (s >= 0 && (l.exp % 2) != 0) {
          m ^= bit(s);
        }
      }
      return EElement{m};
    }

    // Retraction W(Gamma'') -> E killing V_fin and every (s,1); its kernel
    // contains alpha(W(Gamma')).
    EElement e_projection_prime(NormalForm const& g) const {
      if (g.presentation() != _gp2.presentation()) {
        throw PresentationMismatch();
      }
      VertexMask m = 0;
      for (auto const& l : g.letters()) {
        int s = base_of2(l.gen);
        if (s >= 0 && l.gen == _zero2[s] && (l.exp % 2) != 0) {
          m ^= bit(s);
        }
      }
      return EElement{m};
    }

    // g = beta(a) e.  Rewrites g e^-1 over {u} + {(s,1)(s,0)}, pushing each
    // (s,0) to the right through beta-images via (t,0) beta(s) (t,0) =
    // beta(s^(t,0)).
    Factorization factorize(NormalForm const& g) const {
      EElement e = e_projection(g);
      Word     a;
      EElement acc;
      for (auto const& l : g.letters()) {
        int s = base_of2(l.gen);
        if (s < 0) {
          a.push_back(Letter{fin_base2(l.gen), l.exp});
        } else if (l.gen == _one2[s]) {
          a.push_back(Letter{s, (acc.mask & bit(s)) ? -1 : 1});
          acc.mask ^= bit(s);
        } else {
          acc.mask ^= bit(s);
        }
      }
      if (acc != e) {
        throw InvariantViolation("factorization left a nontrivial E-part");
      }
      Factorization f{_gp.normalize(a), e};
      if (!(_gp2.multiply(beta(f.a), e_word(e)) == g)) {
        throw InvariantViolation("beta(a) e does not recover " + _gp2.format(g));
      }
      return f;
    }

    // g = alpha(a') e, the same rewriting over {u} + {(s,1)} + E, using
    // (s,0) alpha((s,+-1)) (s,0) = alpha((s,-+1)).
    Factorization factorize_prime(NormalForm const& g) const {
      EElement e = e_projection_prime(g);
      Word     a;
      EElement acc;
      for (auto const& l : g.letters()) {
        int s = base_of2(l.gen);
        if (s < 0) {
          a.push_back(Letter{_fin1[fin_base2(l.gen)], l.exp});
        } else if (l.gen == _one2[s]) {
          a.push_back(Letter{(acc.mask & bit(s)) ? _minus1[s] : _plus1[s], 1});
        } else {
          acc.mask ^= bit(s);
        }
      }
      if (acc != e) {
        throw InvariantViolation("factorization left a nontrivial E-part");
      }
      Factorization f{_gp1.normalize(a), e};
      if (!(_gp2.multiply(alpha(f.a), e_word(e)) == g)) {
        throw InvariantViolation("alpha(a') e does not recover "
                                 + _gp2.format(g));
      }
      return f;
    }

    // The E-action on W(Gamma): s -> s^-1 for s in e, trivial otherwise.
    NormalForm conj_action(EElement e, NormalForm const& g) const {
      if (g.presentation() != _gp.presentation()) {
        throw PresentationMismatch();
      }
      Word w = g.letters();
      for (auto& l : w) {
        if (e.mask & bit(l.gen)) {
          l.exp = -l.exp;
        }
      }
      return _gp.normalize(w);
    }

    // The E-action on W(Gamma'): (s,+-1) -> (s,-+1) for s in e.
    NormalForm conj_action_prime(EElement e, NormalForm const& g) const {
      if (g.presentation() != _gp1.presentation()) {
        throw PresentationMismatch();
      }
      Word w = g.letters();
      for (auto& l : w) {
        auto [s, tag] = _from1[l.gen];
        if (tag != 0 && (e.mask & bit(s))) {
          l.gen = tag == 1 ? _minus1[s] : _plus1[s];
        }
      }
      return _gp1.normalize(w);
    }

    // <<s>>E = <(s,1)>E and <<s^-1>>E = <alpha((s,-1))>E in W(Gamma'').
    bool weirds_check(int s) const {
      if (_one2.at(s) < 0) {
        throw InvariantViolation("weirds_check needs an infinite-order vertex");
      }
      auto times_e = [&](std::vector<NormalForm> const& xs) {
        std::vector<NormalForm> out;
        for (auto const& x : xs) {
          for (auto e : all_e()) {
            out.push_back(_gp2.multiply(x, e_word(e)));
          }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      };
      auto one   = _gp2.identity();
      auto lhs_p = times_e({beta(_gp.identity()), beta(_gp.generator(s, 1))});
      auto rhs_p = times_e({one, _gp2.generator(_one2[s], 1)});
      auto lhs_m = times_e({beta(_gp.identity()), beta(_gp.generator(s, -1))});
      auto rhs_m = times_e({one, alpha(_gp1.generator(_minus1[s], 1))});
      std::size_t expect = 2 * all_e().size();
      return lhs_p == rhs_p && lhs_m == rhs_m && lhs_p.size() == expect
             && lhs_m.size() == expect;
    }

    // Words for the factors of the Y-sets: the whole <u> for finite u,
    // {1, (s,1)} for s+, {1, (s,0)(s,1)(s,0)} for s-.
    std::vector<Word> y_factor(HatGraph const& hat, int h) const {
      auto const&       hv = hat[h];
      std::vector<Word> out{Word{}};
      if (_fin2[hv.base] >= 0) {
        auto c = _gp.graph().order(hv.base).value();
        for (std::uint32_t k = 1; k < c; ++k) {
          out.push_back(Word{Letter{_fin2[hv.base], k}});
        }
      } else if (hv.sign > 0) {
        out.push_back(Word{Letter{_one2[hv.base], 1}});
      } else {
        out.push_back(alpha_word(Word{Letter{_minus1[hv.base], 1}}));
      }
      return out;
    }

    // x S_C as a sorted element set.
    std::vector<NormalForm> y_set(HatGraph const& hat, NormalForm const& x,
                                  Clique c) const {
      std::vector<Word> prefixes{Word{}};
      for (int h : bits_of(c.mask)) {
        std::vector<Word> next;
        for (auto const& p : prefixes) {
          for (auto const& f : y_factor(hat, h)) {
            Word w = p;
            w.insert(w.end(), f.begin(), f.end());
            next.push_back(std::move(w));
          }
        }
        prefixes = std::move(next);
      }
      std::vector<NormalForm> out;
      for (auto const& p : prefixes) {
        for (auto e : all_e()) {
          Word w = p;
          auto ew = e_word(e);
          w.insert(w.end(), ew.begin(), ew.end());
          out.push_back(_gp2.multiply(x, w));
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    // Vertices x S_C of Y whose depth (max length of the W(Gamma)-part, or of
    // the W(Gamma')-part when `prime`) is at most r.  Enumerated from the
    // W(Gamma'') ball large enough to contain an element of each.
    std::vector<YVertex> build_y_ball(std::uint64_t r, bool prime,
                                      std::size_t max_elements = 1'000'000) const {
      HatGraph      hat(_gp.graph());
      std::uint64_t reach = (prime ? 3 : 2) * r + num_infinite();
      auto          xs    = enumerate_ball(_gp2, reach, max_elements);
      std::map<std::vector<Word>, YVertex> found;
      for (auto const& x : xs) {
        for (auto c : hat.cliques()) {
          auto          set   = y_set(hat, x, c);
          std::uint64_t depth = 0;
          for (auto const& y : set) {
            auto f = prime ? factorize_prime(y) : factorize(y);
            depth  = std::max(depth, f.a.length());
          }
          if (depth > r) {
            continue;
          }
          std::vector<Word> key;
          for (auto const& y : set) {
            key.push_back(y.letters());
          }
          found.try_emplace(std::move(key), YVertex{c, std::move(set), depth});
        }
      }
      std::vector<YVertex> out;
      for (auto& kv : found) {
        out.push_back(std::move(kv.second));
      }
      return out;
    }

    // beta(v) E, for a vertex v of X(Gamma).
    std::vector<NormalForm> image_in_y(CosetVertex const& v, bool prime) const {
      std::vector<NormalForm> out;
      for (auto const& x : v.elements) {
        auto bx = prime ? alpha(x) : beta(x);
        for (auto e : all_e()) {
          out.push_back(_gp2.multiply(bx, e_word(e)));
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    // Checks that v -> beta(v)E (alpha(v)E when `prime`) is a bijection from
    // the radius-r ball of X(Gamma) (X(Gamma')) onto the depth-r ball of Y,
    // preserving and reflecting inclusion, equivariant for the generators of
    // the source group, with the Y-ball stable under E.
    IsoReport iso_check(std::uint64_t r, bool prime) const {
      IsoReport rep;
      auto      fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
      };
      CubeBall x(prime ? _gp1 : _gp, r);
      auto     y   = build_y_ball(r, prime);
      rep.x_vertices = x.num_vertices();
      rep.y_vertices = y.size();
      std::map<std::vector<NormalForm>, int> y_index;
      for (int i = 0; i < static_cast<int>(y.size()); ++i) {
        y_index.emplace(y[i].elements, i);
      }
      std::vector<std::vector<NormalForm>> img(x.num_vertices());
      std::vector<int>                     hit(y.size(), 0);
      for (int v = 0; v < static_cast<int>(x.num_vertices()); ++v) {
        img[v] = image_in_y(x.vertex(v), prime);
        auto it = y_index.find(img[v]);
        if (it == y_index.end()) {
          fail("image of " + x.group().format(x.vertex(v).rep)
               + " is not a vertex of the Y-ball");
          continue;
        }
        if (hit[it->second]++ != 0) {
          fail("two X-vertices share an image");
        }
      }
      if (rep.x_vertices != rep.y_vertices) {
        fail("ball sizes differ: X " + std::to_string(rep.x_vertices) + ", Y "
             + std::to_string(rep.y_vertices));
      }
      for (int a = 0; a < static_cast<int>(x.num_vertices()); ++a) {
        for (int b = 0; b < static_cast<int>(x.num_vertices()); ++b) {
          bool in_x = poset_leq(x.vertex(a), x.vertex(b));
          bool in_y = std::includes(img[b].begin(), img[b].end(),
                                    img[a].begin(), img[a].end());
          ++rep.order_pairs;
          if (in_x != in_y) {
            fail("inclusion not preserved between vertices "
                 + std::to_string(a) + " and " + std::to_string(b));
          }
        }
      }
      // Equivariance under the length-one elements of the source group.
      auto const& src = x.group();
      for (auto const& h : x.elements()) {
        if (h.length() != 1) {
          continue;
        }
        auto hy = prime ? alpha(h) : beta(h);
        for (int v = 0; v < static_cast<int>(x.num_vertices()); ++v) {
          auto const& xv = x.vertex(v);
          auto        w  = x.locate(src.multiply(h, xv.rep), xv.clique);
          if (!w) {
            continue;
          }
          std::vector<NormalForm> moved;
          for (auto const& e : img[v]) {
            moved.push_back(_gp2.multiply(hy, e));
          }
          std::sort(moved.begin(), moved.end());
          ++rep.equivariance;
          if (moved != img[*w]) {
            fail("map is not equivariant for " + src.format(h));
          }
        }
      }
      // E permutes the Y-ball.
      for (auto e : all_e()) {
        auto ew = e_word(e);
        for (auto const& yv : y) {
          std::vector<NormalForm> moved;
          for (auto const& el : yv.elements) {
            moved.push_back(_gp2.multiply(_gp2.normalize(ew), el));
          }
          std::sort(moved.begin(), moved.end());
          ++rep.equivariance;
          if (!y_index.contains(moved)) {
            fail("E does not preserve the Y-ball");
          }
        }
      }
      return rep;
    }

    // Factorization of every element of the radius-r ball of W(Gamma''):
    // existence (checked inside factorize), uniqueness of the E-part, and the
    // fibre structure over W(Gamma).
    FactorizationReport factorization_check(std::uint64_t r) const {
      FactorizationReport rep;
      auto                es = all_e();
      rep.e_order         = es.size();
      std::map<EElement, std::size_t> e_count;
      std::map<Word, std::size_t>     fiber;
      for (auto const& g : enumerate_ball(_gp2, r)) {
        ++rep.elements;
        std::optional<Factorization> f, fp;
        try {
          f  = factorize(g);
          fp = factorize_prime(g);
        } catch (InvariantViolation const& ex) {
          rep.ok = false;
          rep.violations.push_back(ex.what());
          continue;
        }
        e_count[f->e]++;
        fiber[f->a.letters()]++;
        // g e2^-1 must not be a beta- (alpha-) image for any other e2, i.e.
        // must leave a nonzero E-part.
        for (auto e2 : es) {
          auto ge = _gp2.multiply(g, e_word(e2));
          if (e2 != f->e && e_projection(ge).mask == 0) {
            rep.ok = false;
            rep.violations.push_back("second factorization of " + _gp2.format(g));
          }
          if (e2 != fp->e && e_projection_prime(ge).mask == 0) {
            rep.ok = false;
            rep.violations.push_back("second alpha-factorization of "
                                     + _gp2.format(g));
          }
        }
      }
      rep.distinct_e     = e_count.size();
      rep.identity_fiber = fiber[Word{}];
      for (auto const& [a, n] : fiber) {
        rep.max_fiber = std::max(rep.max_fiber, n);
      }
      if (rep.distinct_e != rep.e_order || rep.identity_fiber != rep.e_order
          || rep.max_fiber > rep.e_order) {
        rep.ok = false;
        rep.violations.push_back("fibres over W(Gamma) do not have size |E|");
      }
      return rep;
    }

   private:
    // Gamma vertex behind a Gamma'' vertex, or -1 for finite-order ones.
    int base_of2(int v) const {
      for (int s = 0; s < static_cast<int>(_one2.size()); ++s) {
        if (_one2[s] == v || _zero2[s] == v) {
          return s;
        }
      }
      return -1;
    }

    int fin_base2(int v) const {
      for (int s = 0; s < static_cast<int>(_fin2.size()); ++s) {
        if (_fin2[s] == v) {
          return s;
        }
      }
      throw UnknownGenerator("not a finite-order vertex of Gamma''");
    }

    GraphProduct                     _gp;
    GraphProduct                     _gp1;
    GraphProduct                     _gp2;
    VertexMask                       _inf;
    std::vector<int>                 _fin1, _fin2, _plus1, _minus1, _one2, _zero2;
    std::vector<std::pair<int, int>> _from1;  // Gamma' vertex -> (s, tag)
  };

}  // namespace gpcube

#endif  // GPCUBE_DJ_HPP_
