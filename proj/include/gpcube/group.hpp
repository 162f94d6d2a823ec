// Graph products of cyclic groups: words, the word problem, canonical normal
// forms, the length function and end letters.

#ifndef GPCUBE_GROUP_HPP_
#define GPCUBE_GROUP_HPP_

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace gpcube {

  // One syllable s^e.  Ordered by (vertex position, exponent), which is the
  // order used for lexicographic tie-breaking between words.
  struct Letter {
    int          gen = 0;
    std::int64_t exp = 1;

    friend auto operator<=>(Letter const&, Letter const&) = default;
  };

  using Word = std::vector<Letter>;

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      std::uint64_t h = 1469598103934665603ULL;
      for (auto const& l : w) {
        h = (h ^ static_cast<std::uint64_t>(l.gen)) * 1099511628211ULL;
        h = (h ^ static_cast<std::uint64_t>(l.exp)) * 1099511628211ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };

  class GraphProduct;

  // Canonical representative of a group element: the lexicographically least
  // reduced word.  Only a GraphProduct constructs these.
  class NormalForm {
   public:
    NormalForm() = default;

    Word const& letters() const noexcept {
      return _letters;
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }

    bool is_identity() const noexcept {
      return _letters.empty();
    }

    // The length l: |e| summed over infinite-order letters plus one per
    // finite-order letter.
    std::uint64_t length() const noexcept {
      return _length;
    }

    std::uint64_t presentation() const noexcept {
      return _presentation;
    }

    friend bool operator==(NormalForm const& a, NormalForm const& b) {
      return a._presentation == b._presentation && a._letters == b._letters;
    }

    // Lexicographic on letters.
    friend std::strong_ordering operator<=>(NormalForm const& a,
                                            NormalForm const& b) {
      return a._letters <=> b._letters;
    }

   private:
    friend class GraphProduct;

    NormalForm(Word letters, std::uint64_t length, std::uint64_t presentation)
        : _letters(std::move(letters)),
          _length(length),
          _presentation(presentation) {}

    Word          _letters;
    std::uint64_t _length       = 0;
    std::uint64_t _presentation = 0;
  };

  // (length, then lex) order, used for coset representatives and ball order.
  struct ShortLex {
    bool operator()(NormalForm const& a, NormalForm const& b) const {
      if (a.length() != b.length()) {
        return a.length() < b.length();
      }
      return a < b;
    }
  };

  struct NormalFormHash {
    std::size_t operator()(NormalForm const& g) const noexcept {
      return WordHash()(g.letters());
    }
  };

  using ElementSet = std::unordered_set<NormalForm, NormalFormHash>;

  class GraphProduct {
   public:
    explicit GraphProduct(LabeledGraph graph)
        : _graph(std::make_shared<LabeledGraph const>(std::move(graph))),
          _tag(_graph->fingerprint()) {}

    LabeledGraph const& graph() const noexcept {
      return *_graph;
    }

    std::uint64_t presentation() const noexcept {
      return _tag;
    }

    std::size_t rank() const noexcept {
      return _graph->size();
    }

    bool commute(int s, int t) const {
      return _graph->adjacent(s, t);
    }

    // Representative of s^e: finite exponents folded into {0, ..., c-1}.
    std::int64_t fold(int gen, std::int64_t e) const {
      Order c = _graph->order(gen);
      if (c.is_infinite()) {
        return e;
      }
      auto n = static_cast<std::int64_t>(c.value());
      return ((e % n) + n) % n;
    }

    void validate(Word const& w) const {
      for (auto const& l : w) {
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= rank()) {
          throw UnknownGenerator("generator index " + std::to_string(l.gen)
                                 + " out of range");
        }
      }
    }

    // Length formula applied to an arbitrary word.
    std::uint64_t word_length(Word const& w) const {
      std::uint64_t n = 0;
      for (auto const& l : w) {
        if (_graph->order(l.gen).is_infinite()) {
          n += static_cast<std::uint64_t>(std::llabs(l.exp));
        } else {
          n += 1;
        }
      }
      return n;
    }

    // Reduced word equal to w.  Letters are pushed onto a stack; a new letter
    // travels down past commuting letters and either merges with a letter of
    // the same generator or stops at the first non-commuting one.  The stack
    // never contains two letters of one generator separated only by letters
    // commuting with it, which is the reducedness criterion.
    Word reduce(Word const& w) const {
      validate(w);
      Word stack;
      stack.reserve(w.size());
      for (auto const& l : w) {
        push(stack, l);
      }
      return stack;
    }

    NormalForm normalize(Word const& w) const {
      return make(canonical_order(reduce(w)));
    }

    NormalForm identity() const {
      return make({});
    }

    NormalForm generator(int gen, std::int64_t exp = 1) const {
      return normalize(Word{Letter{gen, exp}});
    }

    NormalForm multiply(NormalForm const& a, NormalForm const& b) const {
      check(a);
      check(b);
      Word stack = a.letters();
      for (auto const& l : b.letters()) {
        push(stack, l);
      }
      return make(canonical_order(std::move(stack)));
    }

    NormalForm multiply(NormalForm const& a, Word const& w) const {
      check(a);
      validate(w);
      Word stack = a.letters();
      for (auto const& l : w) {
        push(stack, l);
      }
      return make(canonical_order(std::move(stack)));
    }

    NormalForm invert(NormalForm const& a) const {
      check(a);
      return normalize(inverse_word(a.letters()));
    }

    Word inverse_word(Word const& w) const {
      Word out(w.rbegin(), w.rend());
      for (auto& l : out) {
        l.exp = -l.exp;
      }
      return out;
    }

    bool equal(Word const& a, Word const& b) const {
      return normalize(a) == normalize(b);
    }

    // Generators s such that some reduced word for g ends with a power of s:
    // the letters that can be shuffled to the end.
    VertexMask end_letters(NormalForm const& g) const {
      check(g);
      VertexMask after = 0;
      VertexMask out   = 0;
      auto const& w    = g.letters();
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if ((after & ~_graph->neighbours(it->gen)) == 0) {
          out |= bit(it->gen);
        }
        after |= bit(it->gen);
      }
      return out;
    }

    // Exponent of the trailing s-syllable of g, or 0 if g does not end with s.
    std::int64_t tail_exponent(NormalForm const& g, int s) const {
      VertexMask  after = 0;
      auto const& w     = g.letters();
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->gen == s) {
          return (after & ~_graph->neighbours(s)) == 0 ? it->exp : 0;
        }
        after |= bit(it->gen);
      }
      return 0;
    }

    // Word text "s^e t u^-1"; the identity prints as "1".
    std::string format(Word const& w) const {
      if (w.empty()) {
        return "1";
      }
      std::ostringstream os;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
          os << ' ';
        }
        os << _graph->name(w[i].gen);
        if (w[i].exp != 1) {
          os << '^' << w[i].exp;
        }
      }
      return os.str();
    }

    std::string format(NormalForm const& g) const {
      return format(g.letters());
    }

    // Comma-separated tokens "s^e" (exponent optional, default 1).  Empty or
    // all-whitespace text is the empty word.
    Word parse_word(std::string_view text) const {
      Word w;
      if (detail::trim(text).empty()) {
        return w;
      }
      std::size_t start = 0;
      while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        auto tok = detail::trim(text.substr(start, end - start));
        if (tok.empty()) {
          throw ParseError(ParseError::Kind::syntax, "empty token in word");
        }
        std::int64_t e     = 1;
        auto         caret = tok.find('^');
        auto         name  = detail::trim(tok.substr(0, caret));
        if (caret != std::string_view::npos) {
          auto num = detail::trim(tok.substr(caret + 1));
          auto [ptr, ec]
              = std::from_chars(num.data(), num.data() + num.size(), e);
          if (num.empty() || ec != std::errc() || ptr != num.data() + num.size()) {
            throw ParseError(ParseError::Kind::syntax,
                             "bad exponent in '" + std::string(tok) + "'");
          }
        }
        w.push_back(Letter{_graph->index_of(name), e});
        start = end + 1;
      }
      return w;
    }

   private:
    void check(NormalForm const& g) const {
      if (g.presentation() != _tag) {
        throw PresentationMismatch();
      }
    }

    void push(Word& stack, Letter l) const {
      l.exp = fold(l.gen, l.exp);
      if (l.exp == 0) {
        return;
      }
      VertexMask nbrs = _graph->neighbours(l.gen);
      for (auto j = stack.size(); j-- > 0;) {
        if (stack[j].gen == l.gen) {
          std::int64_t e = fold(l.gen, stack[j].exp + l.exp);
          if (e == 0) {
            stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(j));
          } else {
            stack[j].exp = e;
          }
          return;
        }
        if ((nbrs & bit(stack[j].gen)) == 0) {
          break;
        }
      }
      stack.push_back(l);
    }

    // Lexicographically least rearrangement of a reduced word under
    // commutations: repeatedly emit the least letter that commutes with every
    // letter before it.
    Word canonical_order(Word w) const {
      Word out;
      out.reserve(w.size());
      std::vector<char> used(w.size(), 0);
      for (std::size_t step = 0; step < w.size(); ++step) {
        VertexMask  seen = 0;
        std::size_t best = w.size();
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (used[i]) {
            continue;
          }
          if ((seen & ~_graph->neighbours(w[i].gen)) == 0
              && (best == w.size() || w[i] < w[best])) {
            best = i;
          }
          seen |= bit(w[i].gen);
        }
        used[best] = 1;
        out.push_back(w[best]);
      }
      return out;
    }

    NormalForm make(Word w) const {
      auto len = word_length(w);
      return NormalForm(std::move(w), len, _tag);
    }

    std::shared_ptr<LabeledGraph const> _graph;
    std::uint64_t                       _tag;
  };

  // All elements of length <= radius, sorted by ShortLex.  Spheres are grown
  // one step at a time: every element of length n+1 is an element of length
  // n times a single generator power of length 1.
  inline std::vector<NormalForm> enumerate_ball(GraphProduct const& gp,
                                                std::uint64_t       radius,
                                                std::size_t max_elements
                                                = 1'000'000) {
    auto const&             g = gp.graph();
    std::vector<NormalForm> steps;
    for (int s = 0; s < static_cast<int>(g.size()); ++s) {
      if (g.order(s).is_infinite()) {
        steps.push_back(gp.generator(s, 1));
        steps.push_back(gp.generator(s, -1));
      } else {
        for (std::uint32_t k = 1; k < g.order(s).value(); ++k) {
          steps.push_back(gp.generator(s, k));
        }
      }
    }
    std::vector<NormalForm> ball{gp.identity()};
    std::vector<NormalForm> sphere{gp.identity()};
    ElementSet              seen{gp.identity()};
    for (std::uint64_t n = 0; n < radius; ++n) {
      std::vector<NormalForm> next;
      for (auto const& x : sphere) {
        for (auto const& s : steps) {
          auto y = gp.multiply(x, s);
          if (y.length() == n + 1 && seen.insert(y).second) {
            if (seen.size() > max_elements) {
              throw BudgetExceeded("element ball too large", max_elements);
            }
            next.push_back(std::move(y));
          }
        }
      }
      std::sort(next.begin(), next.end(), ShortLex());
      ball.insert(ball.end(), next.begin(), next.end());
      sphere = std::move(next);
    }
    return ball;
  }

}  // namespace gpcube

#endif  // GPCUBE_GROUP_HPP_
