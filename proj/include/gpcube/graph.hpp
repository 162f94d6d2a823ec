// Vertex-labelled simplicial graphs: the presentation graph of a graph
// product of cyclic groups, and the graphs derived from it.

#ifndef GPCUBE_GRAPH_HPP_
#define GPCUBE_GRAPH_HPP_

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace gpcube {

  // Sets of vertices are bitmasks; every graph is capped at 64 vertices.
  using VertexMask = std::uint64_t;

  inline constexpr std::size_t max_vertices = 64;

  constexpr VertexMask bit(int v) noexcept {
    return VertexMask{1} << v;
  }

  constexpr int popcount(VertexMask m) noexcept {
    return std::popcount(m);
  }

  template <typename Fn>
  void for_each_bit(VertexMask m, Fn&& fn) {
    while (m != 0) {
      int v = std::countr_zero(m);
      fn(v);
      m &= m - 1;
    }
  }

  inline std::vector<int> bits_of(VertexMask m) {
    std::vector<int> out;
    for_each_bit(m, [&out](int v) { out.push_back(v); });
    return out;
  }

  // Order of a vertex group: an integer >= 2, or infinity.
  class Order {
   public:
    static constexpr Order infinite() noexcept {
      return Order();
    }

    static Order finite(std::uint32_t n) {
      if (n < 2) {
        throw ParseError(ParseError::Kind::bad_order,
                         "vertex order must be >= 2 or inf, got "
                             + std::to_string(n));
      }
      return Order(n);
    }

    bool is_infinite() const noexcept {
      return _value == 0;
    }

    bool is_finite() const noexcept {
      return _value != 0;
    }

    // Only meaningful for finite orders.
    std::uint32_t value() const noexcept {
      return _value;
    }

    std::string to_string() const {
      return is_infinite() ? std::string("inf") : std::to_string(_value);
    }

    friend bool operator==(Order, Order) = default;

   private:
    constexpr Order() noexcept = default;
    explicit constexpr Order(std::uint32_t n) noexcept : _value(n) {}

    std::uint32_t _value = 0;
  };

  class LabeledGraph {
   public:
    LabeledGraph() = default;

    int add_vertex(std::string name, Order order) {
      if (_names.size() == max_vertices) {
        throw ParseError(ParseError::Kind::too_many_vertices,
                         "graphs are limited to 64 vertices");
      }
      if (!valid_name(name)) {
        throw ParseError(ParseError::Kind::syntax,
                         "invalid vertex name '" + name + "'");
      }
      if (_index.contains(name)) {
        throw ParseError(ParseError::Kind::duplicate_vertex,
                         "duplicate vertex '" + name + "'");
      }
      int v = static_cast<int>(_names.size());
      _index.emplace(name, v);
      _names.push_back(std::move(name));
      _orders.push_back(order);
      _adjacent.push_back(0);
      return v;
    }

    void add_edge(int a, int b) {
      if (a == b) {
        throw ParseError(ParseError::Kind::self_loop,
                         "self-loop at '" + _names.at(a) + "'");
      }
      _adjacent.at(a) |= bit(b);
      _adjacent.at(b) |= bit(a);
    }

    std::size_t size() const noexcept {
      return _names.size();
    }

    std::string const& name(int v) const {
      return _names.at(v);
    }

    Order order(int v) const {
      return _orders.at(v);
    }

    bool adjacent(int a, int b) const {
      return (_adjacent.at(a) & bit(b)) != 0;
    }

    // Neighbourhood of v, never containing v itself.
    VertexMask neighbours(int v) const {
      return _adjacent.at(v);
    }

    VertexMask all() const noexcept {
      return size() == 64 ? ~VertexMask{0} : bit(static_cast<int>(size())) - 1;
    }

    VertexMask infinite_vertices() const {
      VertexMask m = 0;
      for (std::size_t v = 0; v < size(); ++v) {
        if (_orders[v].is_infinite()) {
          m |= bit(static_cast<int>(v));
        }
      }
      return m;
    }

    VertexMask finite_vertices() const {
      return all() & ~infinite_vertices();
    }

    bool is_clique(VertexMask m) const {
      bool ok = true;
      for_each_bit(m, [&](int v) {
        if ((m & ~bit(v) & ~_adjacent[v]) != 0) {
          ok = false;
        }
      });
      return ok;
    }

    int index_of(std::string_view name) const {
      auto it = _index.find(std::string(name));
      if (it == _index.end()) {
        throw UnknownGenerator("unknown generator '" + std::string(name)
                               + "'");
      }
      return it->second;
    }

    bool contains(std::string_view name) const {
      return _index.contains(std::string(name));
    }

    std::vector<std::pair<int, int>> edges() const {
      std::vector<std::pair<int, int>> out;
      for (int a = 0; a < static_cast<int>(size()); ++a) {
        for_each_bit(_adjacent[a] & ~(bit(a + 1) - 1),
                     [&](int b) { out.emplace_back(a, b); });
      }
      return out;
    }

    // Canonical text in the graph file format; parse_graph(to_text()) gives
    // back an identical graph.
    std::string to_text() const {
      std::ostringstream os;
      for (std::size_t v = 0; v < size(); ++v) {
        os << _names[v] << ':' << _orders[v].to_string() << '\n';
      }
      for (auto [a, b] : edges()) {
        os << "edge " << _names[a] << ' ' << _names[b] << '\n';
      }
      return os.str();
    }

    // FNV-1a of to_text(); stable across platforms and runs.
    std::uint64_t fingerprint() const {
      std::uint64_t h = 14695981039346656037ULL;
      for (unsigned char c : to_text()) {
        h ^= c;
        h *= 1099511628211ULL;
      }
      return h;
    }

    friend bool operator==(LabeledGraph const& a, LabeledGraph const& b) {
      return a._names == b._names && a._orders == b._orders
             && a._adjacent == b._adjacent;
    }

    static bool valid_name(std::string_view name) {
      if (name.empty()) {
        return false;
      }
      return std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isgraph(c) && c != ':' && c != '#' && c != ','
               && c != '^' && c != ';';
      });
    }

   private:
    std::vector<std::string>             _names;
    std::vector<Order>                   _orders;
    std::vector<VertexMask>              _adjacent;
    std::unordered_map<std::string, int> _index;
  };

  namespace detail {
    inline std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    inline std::vector<std::string_view> split_ws(std::string_view s) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
          ++j;
        }
        if (j > i) {
          out.push_back(s.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }
  }  // namespace detail

  // Graph file format: statements "name:order" (order a decimal >= 2 or "inf")
  // and "edge name name", separated by newlines or ';'.  '#' starts a comment
  // running to the end of the line.  Vertex order is file order.
  inline LabeledGraph parse_graph(std::string_view text) {
    using Kind = ParseError::Kind;
    LabeledGraph                  g;
    std::vector<std::string_view> statements;
    std::size_t                   line_start = 0;
    while (line_start <= text.size()) {
      std::size_t line_end = text.find('\n', line_start);
      if (line_end == std::string_view::npos) {
        line_end = text.size();
      }
      std::string_view line = text.substr(line_start, line_end - line_start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      std::size_t s = 0;
      while (s <= line.size()) {
        std::size_t e = line.find(';', s);
        if (e == std::string_view::npos) {
          e = line.size();
        }
        auto st = detail::trim(line.substr(s, e - s));
        if (!st.empty()) {
          statements.push_back(st);
        }
        s = e + 1;
      }
      line_start = line_end + 1;
    }

    std::vector<std::pair<std::string, std::string>> edges;
    for (auto st : statements) {
      auto words = detail::split_ws(st);
      if (words.size() == 3 && words[0] == "edge") {
        edges.emplace_back(std::string(words[1]), std::string(words[2]));
        continue;
      }
      auto colon = st.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(Kind::syntax,
                         "cannot parse statement '" + std::string(st) + "'");
      }
      auto name  = detail::trim(st.substr(0, colon));
      auto order = detail::trim(st.substr(colon + 1));
      if (!LabeledGraph::valid_name(name) || order.empty()) {
        throw ParseError(Kind::syntax,
                         "cannot parse statement '" + std::string(st) + "'");
      }
      if (order == "inf") {
        g.add_vertex(std::string(name), Order::infinite());
        continue;
      }
      std::uint32_t n = 0;
      auto [ptr, ec]  = std::from_chars(order.data(), order.data() + order.size(), n);
      if (ec != std::errc() || ptr != order.data() + order.size()) {
        throw ParseError(Kind::syntax,
                         "bad order '" + std::string(order) + "' for vertex '"
                             + std::string(name) + "'");
      }
      g.add_vertex(std::string(name), Order::finite(n));
    }
    // Edges are resolved after all vertices so that they may appear anywhere.
    for (auto const& [a, b] : edges) {
      if (!g.contains(a) || !g.contains(b)) {
        throw ParseError(Kind::unknown_vertex,
                         "edge mentions unknown vertex '"
                             + (g.contains(a) ? b : a) + "'");
      }
      g.add_edge(g.index_of(a), g.index_of(b));
    }
    return g;
  }

  inline LabeledGraph read_graph_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot read graph file " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return parse_graph(os.str());
  }

}  // namespace gpcube

#endif  // GPCUBE_GRAPH_HPP_
