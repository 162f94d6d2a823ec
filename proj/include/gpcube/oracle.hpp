// Brute-force word-problem oracle.  Two words represent the same element iff
// the sets of words reachable from them by the elementary moves (drop a
// trivial letter, merge neighbouring letters of one generator, swap
// neighbouring letters of adjacent generators) intersect.  This shares no code
// with GraphProduct::reduce/normalize and serves as their ground truth.

#ifndef GPCUBE_ORACLE_HPP_
#define GPCUBE_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "group.hpp"

namespace gpcube {

  inline constexpr std::size_t default_oracle_budget = 100'000;

  using WordSet = std::unordered_set<Word, WordHash>;

  namespace detail {
    // Exponents of finite-order letters are elements of Z/c; store them in
    // {0, ..., c-1}.  Zero exponents are kept until a move removes them.
    inline Word oracle_letters(LabeledGraph const& g, Word w) {
      for (auto& l : w) {
        if (static_cast<std::size_t>(l.gen) >= g.size() || l.gen < 0) {
          throw UnknownGenerator("generator index out of range");
        }
        if (g.order(l.gen).is_finite()) {
          auto c = static_cast<std::int64_t>(g.order(l.gen).value());
          l.exp  = ((l.exp % c) + c) % c;
        }
      }
      return w;
    }

    template <typename Fn>
    void for_each_move(LabeledGraph const& g, Word const& w, Fn&& fn) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].exp == 0) {
          Word v = w;
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
          fn(std::move(v));
        }
      }
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i].gen == w[i + 1].gen) {
          Word         v = w;
          std::int64_t e = w[i].exp + w[i + 1].exp;
          if (g.order(w[i].gen).is_finite()) {
            e %= static_cast<std::int64_t>(g.order(w[i].gen).value());
          }
          v[i].exp = e;
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          fn(std::move(v));
        } else if (g.adjacent(w[i].gen, w[i + 1].gen)) {
          Word v = w;
          std::swap(v[i], v[i + 1]);
          fn(std::move(v));
        }
      }
    }
  }  // namespace detail

  // Every word reachable from w by the moves.  Throws BudgetExceeded when the
  // set outgrows the budget; that is never reported as an answer.
  inline WordSet oracle_closure(LabeledGraph const& g,
                                Word const&         w,
                                std::size_t budget = default_oracle_budget) {
    WordSet          seen{detail::oracle_letters(g, w)};
    std::deque<Word> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
      Word cur = std::move(queue.front());
      queue.pop_front();
      detail::for_each_move(g, cur, [&](Word v) {
        if (seen.insert(v).second) {
          if (seen.size() > budget) {
            throw BudgetExceeded("oracle word budget exhausted", budget);
          }
          queue.push_back(std::move(v));
        }
      });
    }
    return seen;
  }

  inline bool oracle_equal(LabeledGraph const& g,
                           Word const&         a,
                           Word const&         b,
                           std::size_t         budget = default_oracle_budget) {
    WordSet closure = oracle_closure(g, a, budget);
    Word    start   = detail::oracle_letters(g, b);
    if (closure.contains(start)) {
      return true;
    }
    WordSet          seen{start};
    std::deque<Word> queue{start};
    while (!queue.empty()) {
      Word cur = std::move(queue.front());
      queue.pop_front();
      bool hit = false;
      detail::for_each_move(g, cur, [&](Word v) {
        if (hit) {
          return;
        }
        if (closure.contains(v)) {
          hit = true;
          return;
        }
        if (seen.insert(v).second) {
          if (seen.size() > budget) {
            throw BudgetExceeded("oracle word budget exhausted", budget);
          }
          queue.push_back(std::move(v));
        }
      });
      if (hit) {
        return true;
      }
    }
    return false;
  }

}  // namespace gpcube

#endif  // GPCUBE_ORACLE_HPP_
