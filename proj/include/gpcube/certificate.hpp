// JSON / DOT / text exports of balls and JSON certificates for the checks.
// Needs nlohmann/json; everything else in the library is dependency free.

#ifndef GPCUBE_CERTIFICATE_HPP_
#define GPCUBE_CERTIFICATE_HPP_

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "complex.hpp"
#include "dj.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "hat.hpp"
#include "morse.hpp"
#include "simplicial.hpp"
#include "special.hpp"

namespace gpcube {

  using Json = nlohmann::ordered_json;

  inline constexpr char const* tool_version = "gpcube 0.1.0";

  inline std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
  }

  inline Json certificate_header(LabeledGraph const& g, std::uint64_t radius,
                                 std::string const& check) {
    Json j;
    j["tool"]              = tool_version;
    j["check"]             = check;
    j["graph_fingerprint"] = hex64(g.fingerprint());
    j["radius"]            = radius;
    return j;
  }

  inline Json clique_json(HatGraph const& hat, Clique c) {
    Json out = Json::array();
    for (int h : bits_of(c.mask)) {
      out.push_back(hat.name(h));
    }
    return out;
  }

  // rep<<C>> shorthand, "{rep}" for singletons.
  inline std::string vertex_label(CubeBall const& ball, CosetVertex const& v) {
    auto rep = ball.group().format(v.rep);
    if (v.clique.empty()) {
      return "{" + rep + "}";
    }
    std::string names;
    for (int h : bits_of(v.clique.mask)) {
      names += (names.empty() ? "" : ",") + ball.hat().name(h);
    }
    return rep + "<<" + names + ">>";
  }

  inline Json ball_json(CubeBall const& ball) {
    auto const& gp = ball.group();
    Json        j  = certificate_header(gp.graph(), ball.radius(), "build");
    j["elements"]  = ball.elements().size();
    Json vs        = Json::array();
    for (int i = 0; i < static_cast<int>(ball.num_vertices()); ++i) {
      auto const& v = ball.vertex(i);
      Json        x;
      x["id"]         = i;
      x["rep"]        = gp.format(v.rep);
      x["clique"]     = clique_json(ball.hat(), v.clique);
      x["max_length"] = v.max_length;
      x["interior"]   = ball.is_interior(i);
      Json els        = Json::array();
      for (auto const& e : v.elements) {
        els.push_back(gp.format(e));
      }
      x["elements"] = std::move(els);
      vs.push_back(std::move(x));
    }
    j["vertices"] = std::move(vs);
    Json cs       = Json::array();
    for (auto const& c : ball.cubes()) {
      cs.push_back(Json{{"bottom", c.bottom}, {"top", c.top}, {"dim", c.dim}});
    }
    j["cubes"] = std::move(cs);
    return j;
  }

  inline std::string dot_escape(std::string const& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') {
        out += '\\';
      }
      out += c;
    }
    return out;
  }

  // 1-skeleton, edges oriented bottom -> top.
  inline std::string ball_dot(CubeBall const& ball) {
    std::ostringstream os;
    os << "digraph X {\n";
    os << "  // " << tool_version << ", graph " << hex64(ball.group().graph().fingerprint())
       << ", radius " << ball.radius() << "\n";
    for (int i = 0; i < static_cast<int>(ball.num_vertices()); ++i) {
      os << "  v" << i << " [label=\"" << dot_escape(vertex_label(ball, ball.vertex(i)))
         << "\"];\n";
    }
    for (auto const& c : ball.cubes()) {
      if (c.dim == 1) {
        os << "  v" << c.bottom << " -> v" << c.top << ";\n";
      }
    }
    os << "}\n";
    return os.str();
  }

  inline std::string ball_text(CubeBall const& ball) {
    std::ostringstream os;
    os << "# " << tool_version << ", graph " << hex64(ball.group().graph().fingerprint())
       << ", radius " << ball.radius() << "\n";
    os << "elements " << ball.elements().size() << "\n";
    os << "vertices " << ball.num_vertices() << "\n";
    std::vector<std::size_t> by_dim;
    for (auto const& c : ball.cubes()) {
      if (by_dim.size() <= static_cast<std::size_t>(c.dim)) {
        by_dim.resize(c.dim + 1, 0);
      }
      ++by_dim[c.dim];
    }
    for (std::size_t d = 1; d < by_dim.size(); ++d) {
      os << "cubes[" << d << "] " << by_dim[d] << "\n";
    }
    for (int i = 0; i < static_cast<int>(ball.num_vertices()); ++i) {
      os << "v" << i << " " << vertex_label(ball, ball.vertex(i)) << "\n";
    }
    return os.str();
  }

  inline std::size_t boundary_vertices(CubeBall const& ball) {
    std::size_t n = 0;
    for (int v = 0; v < static_cast<int>(ball.num_vertices()); ++v) {
      n += ball.is_interior(v) ? 0 : 1;
    }
    return n;
  }

  inline Json links_certificate(CubeBall const& ball) {
    Json j = certificate_header(ball.group().graph(), ball.radius(), "links");
    bool ok = true;
    Json vs = Json::array();
    for (int v = 0; v < static_cast<int>(ball.num_vertices()); ++v) {
      if (!ball.is_interior(v)) {
        continue;
      }
      auto lk    = vertex_link(ball, v);
      bool flag  = is_flag(lk.link);
      bool model = check_link_model(ball, v);
      ok         = ok && flag && model;
      vs.push_back(Json{{"vertex", v},
                        {"label", vertex_label(ball, ball.vertex(v))},
                        {"link_vertices", lk.neighbours.size()},
                        {"link_faces", lk.link.faces().size()},
                        {"flag", flag},
                        {"join_model", model}});
    }
    j["ok"]         = ok;
    j["vertices"]   = std::move(vs);
    j["truncation"] = Json::array(
        {std::to_string(boundary_vertices(ball))
         + " boundary vertices skipped (star leaves the ball)"});
    return j;
  }

  inline Json morse_certificate(CubeBall const& ball) {
    Json j   = certificate_header(ball.group().graph(), ball.radius(), "morse");
    auto rep = check_morse(ball);
    j["ok"]  = rep.ok;
    Json cs  = Json::array();
    for (int i = 0; i < static_cast<int>(ball.cubes().size()); ++i) {
      auto const& c = ball.cubes()[i];
      Json        x{{"cube", i}, {"bottom", c.bottom}, {"top", c.top}};
      try {
        x["max"]    = cube_max_vertex(ball, c);
        x["verdict"] = "unique";
      } catch (InvariantViolation const&) {
        x["verdict"] = "violation";
      }
      cs.push_back(std::move(x));
    }
    j["cubes"] = std::move(cs);
    Json vs    = Json::array();
    for (int v = 0; v < static_cast<int>(ball.num_vertices()); ++v) {
      if (!ball.is_interior(v)) {
        continue;
      }
      auto const& x = ball.vertex(v);
      Json        e{{"vertex", v}, {"label", vertex_label(ball, x)}};
      if (!x.clique.empty()) {
        e["check"]   = "down_link_simplex";
        e["verdict"] = check_down_link_simplex(ball, v);
      } else if (!x.rep.is_identity()) {
        e["check"]   = "up_link_subdivided_simplex";
        e["verdict"] = check_up_link_subdivided_simplex(ball, v);
      } else {
        e["check"]   = "base_vertex_empty_descending_link";
        e["verdict"] = descending_link(ball, v).all.faces().empty();
      }
      vs.push_back(std::move(e));
    }
    j["vertices"] = std::move(vs);
    Json ls       = Json::array();
    for (auto const& s : rep.sublevels) {
      ls.push_back(Json{{"level", {s.level.primary, s.level.secondary}},
                        {"vertices", s.vertices},
                        {"cubes", s.cubes},
                        {"euler", s.euler}});
    }
    j["sublevels"]  = std::move(ls);
    j["violations"] = rep.violations;
    j["truncation"] = Json::array(
        {std::to_string(boundary_vertices(ball))
         + " boundary vertices skipped for link checks"});
    return j;
  }

  inline Json special_certificate(CubeBall const& ball) {
    Json j   = certificate_header(ball.group().graph(), ball.radius(), "special");
    auto es  = edges(ball);
    auto rep = check_special(ball, es);
    auto hps = hyperplanes(ball, es);
    j["ok"]  = rep.ok();
    j["conditions"] = Json{{"labels_constant", rep.labels_constant},
                           {"no_self_crossing_or_osculation", rep.no_self_crossing_or_osc},
                           {"crossing_labels_commute", rep.crossing_labels_commute},
                           {"no_inter_osculation", rep.no_inter_osculation}};
    j["census"]     = Json{{"edges", es.size()},
                           {"squares", rep.squares},
                           {"hyperplanes", rep.hyperplanes},
                           {"interior_hyperplanes", rep.interior_hyperplanes},
                           {"vertices_checked", rep.vertices_checked},
                           {"generator_label_pairs_incoming",
                            rep.generator_label_pairs_incoming},
                           {"generator_label_pairs_other", rep.generator_label_pairs_other}};
    Json hs = Json::array();
    for (auto const& hp : hps) {
      hs.push_back(Json{{"label", ball.hat().name(hp.label.hat)},
                        {"power", hp.label.power},
                        {"edges", hp.edges.size()},
                        {"interior", hp.interior}});
    }
    j["hyperplanes"] = std::move(hs);
    j["violations"]  = rep.violations;
    j["truncation"]  = rep.truncated;
    return j;
  }

  inline Json kernel_certificate(CubeBall const& ball) {
    Json j   = certificate_header(ball.group().graph(), ball.radius(), "kernel");
    auto rep = check_free_kernel_action(ball);
    j["ok"]  = rep.ok;
    j["vertices_checked"]       = rep.vertices_checked;
    j["nontrivial_stabilizers"] = rep.nontrivial_stabilizers;
    j["violations"]             = rep.violations;
    j["truncation"]             = Json::array();
    return j;
  }

  inline std::size_t max_clique_size(LabeledGraph const& g) {
    return static_cast<std::size_t>(HatGraph(g).cliques().back().size());
  }

  inline Json iso_json(IsoReport const& r) {
    return Json{{"ok", r.ok},
                {"x_vertices", r.x_vertices},
                {"y_vertices", r.y_vertices},
                {"order_pairs", r.order_pairs},
                {"equivariance_checks", r.equivariance},
                {"violations", r.violations}};
  }

  // Embedding certificate: the maps on generators, the factorization table
  // of the radius-r ball of W(Gamma''), the set identities for the weird
  // generators, and the vertex correspondence X(Gamma) -> Y at radius r.
  inline Json dj_certificate(DavisJanuszkiewicz const& dj, std::uint64_t r) {
    auto const& g  = dj.gamma().graph();
    auto const& g2 = dj.doubleprime();
    Json        j  = certificate_header(g, r, "dj");
    j["gamma_prime"]       = dj.prime().graph().to_text();
    j["gamma_doubleprime"] = g2.graph().to_text();
    bool ok                = true;

    Json maps = Json::array();
    for (int s = 0; s < static_cast<int>(g.size()); ++s) {
      auto x = dj.gamma().generator(s, 1);
      Json m{{"generator", g.name(s)}, {"beta", g2.format(dj.beta(x))}};
      if (g.order(s).is_infinite()) {
        m["beta_inverse"] = g2.format(dj.beta(dj.gamma().invert(x)));
      }
      maps.push_back(std::move(m));
    }
    for (int v = 0; v < static_cast<int>(dj.prime().graph().size()); ++v) {
      maps.push_back(Json{{"generator", dj.prime().graph().name(v)},
                          {"alpha", g2.format(dj.alpha(dj.prime().generator(v, 1)))}});
    }
    j["maps"] = std::move(maps);

    Json table = Json::array();
    for (auto const& x : enumerate_ball(g2, r)) {
      auto f  = dj.factorize(x);
      auto fp = dj.factorize_prime(x);
      table.push_back(Json{{"element", g2.format(x)},
                           {"beta_part", dj.gamma().format(f.a)},
                           {"e", g2.format(dj.e_element(f.e))},
                           {"alpha_part", dj.prime().format(fp.a)},
                           {"e_alpha", g2.format(dj.e_element(fp.e))}});
    }
    j["factorization"] = std::move(table);
    auto fr            = dj.factorization_check(r);
    ok                 = ok && fr.ok;
    j["factorization_check"] = Json{{"ok", fr.ok},
                                    {"elements", fr.elements},
                                    {"distinct_e", fr.distinct_e},
                                    {"e_order", fr.e_order},
                                    {"identity_fiber", fr.identity_fiber},
                                    {"max_fiber", fr.max_fiber},
                                    {"violations", fr.violations}};

    Json weird = Json::array();
    for (int s : bits_of(g.infinite_vertices())) {
      bool w = dj.weirds_check(s);
      ok     = ok && w;
      weird.push_back(Json{{"generator", g.name(s)}, {"ok", w}});
    }
    j["set_identities"] = std::move(weird);

    CubeBall x(dj.gamma(), r);
    Json     corr = Json::array();
    for (int v = 0; v < static_cast<int>(x.num_vertices()); ++v) {
      Json els = Json::array();
      for (auto const& e : dj.image_in_y(x.vertex(v), false)) {
        els.push_back(g2.format(e));
      }
      corr.push_back(Json{{"vertex", vertex_label(x, x.vertex(v))}, {"image", std::move(els)}});
    }
    j["correspondence"] = std::move(corr);
    auto iso            = dj.iso_check(r, false);
    auto iso_prime      = dj.iso_check(r, true);
    ok                  = ok && iso.ok && iso_prime.ok;
    j["iso"]            = iso_json(iso);
    j["iso_prime"]      = iso_json(iso_prime);
    j["dimensions"]     = Json{{"x_gamma", max_clique_size(g)},
                               {"x_gamma_prime", max_clique_size(dj.prime().graph())},
                               {"x_gamma_doubleprime", max_clique_size(g2.graph())}};
    j["ok"]             = ok;
    j["truncation"]     = Json::array(
        {"Y enumerated from the W(Gamma'') ball of radius "
         + std::to_string(2 * r + dj.num_infinite()) + " (beta side) and "
         + std::to_string(3 * r + dj.num_infinite()) + " (alpha side)"});
    return j;
  }

}  // namespace gpcube

#endif  // GPCUBE_CERTIFICATE_HPP_
