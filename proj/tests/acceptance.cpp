// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gpcube/certificate.hpp>
#include <gpcube/gpcube.hpp>

#include "fixtures.hpp"
#include "growth_oracle.hpp"
#include "oracle_agreement.hpp"

using namespace gpcube;
using gpcube::fixtures::fixture;
using gpcube::fixtures::fixture_names;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;
  };

  std::string join(std::vector<std::string> const& xs, std::string const& sep) {
    std::string out;
    for (auto const& x : xs) {
      out += (out.empty() ? "" : sep) + x;
    }
    return out;
  }

  constexpr std::uint64_t morse_radius = 3;

  Outcome oracle_equivalence() {
    Outcome                  o;
    std::vector<std::string> parts;
    for (auto const& name : fixture_names()) {
      auto res = gpcube::fixtures::oracle_agreement(fixture(name), 3, {-2, -1, 0, 1, 2});
      if (res.disagreements != 0) {
        o.pass = false;
        parts.push_back(name + ": " + std::to_string(res.disagreements)
                        + " disagreements, e.g. " + res.example);
      } else {
        parts.push_back(name + " " + std::to_string(res.words) + " words");
      }
    }
    o.detail = join(parts, "; ");
    return o;
  }

  Outcome growth() {
    Outcome o;
    // Independent models first.
    auto f2_ref = gpcube::fixtures::free_group_growth(2);
    auto z2_ref = gpcube::fixtures::free_abelian_growth(2);
    auto d_ref  = gpcube::fixtures::infinite_dihedral_growth(2);
    auto sizes  = [](std::string const& name) {
      GraphProduct             gp(fixture(name));
      std::vector<std::size_t> out;
      for (int r = 0; r <= 2; ++r) {
        out.push_back(enumerate_ball(gp, r).size());
      }
      return out;
    };
    auto show = [](std::vector<std::size_t> const& v) {
      std::vector<std::string> s;
      for (auto x : v) {
        s.push_back(std::to_string(x));
      }
      return join(s, "/");
    };
    std::vector<std::size_t> f2{1, 5, 17}, z2{1, 5, 13}, dinf{1, 3, 5};
    auto f2_lib = sizes("free2"), z2_lib = sizes("z_squared"), d_lib = sizes("dihedral");
    o.pass = f2_ref == f2 && z2_ref == z2 && d_ref == dinf && f2_lib == f2
             && z2_lib == z2 && d_lib == dinf;
    o.detail = "F2 " + show(f2_lib) + " (model " + show(f2_ref) + "), Z^2 " + show(z2_lib)
               + " (model " + show(z2_ref) + "), D_inf " + show(d_lib) + " (model "
               + show(d_ref) + ")";
    return o;
  }

  Outcome real_line() {
    Outcome          o;
    CubeBall         ball(GraphProduct(fixture("single_inf")), 3);
    std::vector<int> degree(ball.num_vertices(), 0);
    std::size_t      edges = 0;
    for (auto const& c : ball.cubes()) {
      if (c.dim != 1) {
        o.pass = false;
        continue;
      }
      ++edges;
      degree[c.bottom]++;
      degree[c.top]++;
    }
    // Simple path: connected, n-1 edges, degrees at most 2.
    std::vector<int> comp(ball.num_vertices());
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
      comp[i] = i;
    }
    std::function<int(int)> root = [&](int i) { return comp[i] == i ? i : comp[i] = root(comp[i]); };
    for (auto const& c : ball.cubes()) {
      comp[root(c.bottom)] = root(c.top);
    }
    std::set<int> roots;
    int           ends = 0;
    for (int v = 0; v < static_cast<int>(ball.num_vertices()); ++v) {
      roots.insert(root(v));
      o.pass = o.pass && degree[v] >= 1 && degree[v] <= 2;
      ends += degree[v] == 1 ? 1 : 0;
    }
    o.pass = o.pass && roots.size() == 1 && edges + 1 == ball.num_vertices() && ends == 2;
    std::size_t interior_singletons = 0;
    for (int v = 0; v < static_cast<int>(ball.num_vertices()); ++v) {
      if (ball.vertex(v).clique.empty() && ball.is_interior(v)) {
        ++interior_singletons;
        o.pass = o.pass && degree[v] == 2;
      }
    }
    o.detail = std::to_string(ball.num_vertices()) + " vertices, " + std::to_string(edges)
               + " edges, connected, 2 endpoints; " + std::to_string(interior_singletons)
               + " interior singletons all of degree 2";
    return o;
  }

  Outcome flag_links() {
    Outcome     o;
    std::size_t total = 0, flag = 0;
    for (auto const& name : fixture_names()) {
      CubeBall ball(GraphProduct(fixture(name)), 2);
      for (int v = 0; v < static_cast<int>(ball.num_vertices()); ++v) {
        if (!ball.is_interior(v)) {
          continue;
        }
        ++total;
        flag += is_flag(vertex_link(ball, v).link) ? 1 : 0;
      }
    }
    o.pass   = total > 0 && flag == total;
    o.detail = std::to_string(flag) + "/" + std::to_string(total)
               + " interior links flag across 8 fixtures at r=2";
    return o;
  }

  Outcome morse() {
    Outcome                  o;
    std::vector<std::string> parts;
    for (auto const& name : fixture_names()) {
      CubeBall ball(GraphProduct(fixture(name)), morse_radius);
      auto     rep = check_morse(ball);
      o.pass       = o.pass && rep.ok;
      parts.push_back(name + " r=" + std::to_string(morse_radius) + ": "
                      + std::to_string(rep.cubes_checked) + " cubes, "
                      + std::to_string(rep.down_checks) + " down, "
                      + std::to_string(rep.up_checks) + " up, "
                      + std::to_string(rep.sublevels.size()) + " sublevels"
                      + (rep.ok ? "" : " FAILED: " + rep.violations.front()));
    }
    o.detail = join(parts, "; ");
    return o;
  }

  Outcome special() {
    Outcome                  o;
    std::vector<std::string> parts;
    std::size_t              interior = 0;
    for (auto const& name : fixture_names()) {
      CubeBall ball(GraphProduct(fixture(name)), 2);
      auto     rep = check_special(ball);
      o.pass       = o.pass && rep.ok();
      interior += rep.interior_hyperplanes;
      if (!rep.ok()) {
        parts.push_back(name + " FAILED: " + rep.violations.front());
      }
    }
    // Negative control: duplicate one edge label at the base vertex of F2.
    CubeBall ball(GraphProduct(fixture("free2")), 2);
    auto     es  = edges(ball);
    int      one = *ball.locate(ball.group().identity(), Clique{});
    std::vector<int> at;
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
      if (es[i].bottom == one) {
        at.push_back(i);
      }
    }
    es[at[1]].label = es[at[0]].label;
    auto neg        = check_special(ball, es);
    bool control    = !neg.no_self_crossing_or_osc;
    o.pass          = o.pass && control;
    parts.push_back("all 4 conditions on 8 fixtures, " + std::to_string(interior)
                    + " interior hyperplanes");
    parts.push_back(std::string("negative control ")
                    + (control ? "fails (ii) as required" : "NOT rejected"));
    o.detail = join(parts, "; ");
    return o;
  }

  Outcome kernel() {
    Outcome     o;
    std::size_t vertices = 0, nontrivial = 0;
    for (auto const& name : fixture_names()) {
      CubeBall ball(GraphProduct(fixture(name)), morse_radius);
      auto     rep = check_free_kernel_action(ball);
      o.pass       = o.pass && rep.ok;
      vertices += rep.vertices_checked;
      nontrivial += rep.nontrivial_stabilizers;
    }
    o.detail = std::to_string(vertices) + " vertices, " + std::to_string(nontrivial)
               + " with nontrivial stabilizer, none meeting the kernel";
    return o;
  }

  Outcome davis_januszkiewicz() {
    Outcome                  o;
    std::vector<std::string> parts;
    bool inj = true, fact = true, weird = true;
    for (auto const& name : fixture_names()) {
      auto               g = fixture(name);
      DavisJanuszkiewicz dj(g);
      std::set<NormalForm> img, img1;
      auto b  = enumerate_ball(dj.gamma(), 4);
      auto b1 = enumerate_ball(dj.prime(), 4);
      for (auto const& x : b) {
        img.insert(dj.beta(x));
      }
      for (auto const& x : b1) {
        img1.insert(dj.alpha(x));
      }
      inj      = inj && img.size() == b.size() && img1.size() == b1.size();
      auto fr  = dj.factorization_check(3);
      fact     = fact && fr.ok && fr.distinct_e == (std::size_t{1} << dj.num_infinite());
      for (int s : bits_of(g.infinite_vertices())) {
        weird = weird && dj.weirds_check(s);
      }
    }
    parts.push_back(std::string("injective r=4 ") + (inj ? "ok" : "FAILED"));
    parts.push_back(std::string("factorization r=3 with 2^|V_inf| fibres ")
                    + (fact ? "ok" : "FAILED"));
    parts.push_back(std::string("set identities ") + (weird ? "ok" : "FAILED"));
    bool iso = true;
    for (auto const& name : {"single_inf", "z_squared"}) {
      DavisJanuszkiewicz dj(fixture(name));
      for (bool prime : {false, true}) {
        auto r = dj.iso_check(2, prime);
        iso    = iso && r.ok;
        parts.push_back(std::string(name) + (prime ? " X(G')" : " X(G)") + " r=2 "
                        + std::to_string(r.x_vertices) + "<->" + std::to_string(r.y_vertices)
                        + (r.ok ? " ok" : " FAILED"));
      }
    }
    o.pass   = inj && fact && weird && iso;
    o.detail = join(parts, "; ");
    return o;
  }

  std::string all_certificates(std::string const& name) {
    auto        g = fixture(name);
    CubeBall    ball(GraphProduct(g), 2);
    std::string out = ball_json(ball).dump() + ball_dot(ball) + ball_text(ball)
                      + links_certificate(ball).dump() + morse_certificate(ball).dump()
                      + special_certificate(ball).dump() + kernel_certificate(ball).dump();
    out += dj_certificate(DavisJanuszkiewicz(g), 2).dump();
    return out;
  }

  Outcome determinism() {
    Outcome     o;
    std::size_t bytes = 0;
    for (auto const& name : fixture_names()) {
      auto a = all_certificates(name);
      auto b = all_certificates(name);
      o.pass = o.pass && a == b;
      bytes += a.size();
    }
    o.detail = "two independent runs over 8 fixtures, " + std::to_string(bytes)
               + " bytes per run, byte-identical";
    return o;
  }

}  // namespace

int main() {
  struct Criterion {
    char const*         name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"oracle-equivalence", oracle_equivalence},
      {"growth-numbers", growth},
      {"real-line", real_line},
      {"flag-links", flag_links},
      {"morse-certificates", morse},
      {"specialness", special},
      {"virtually-special-kernel", kernel},
      {"davis-januszkiewicz", davis_januszkiewicz},
      {"determinism", determinism},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto    t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char   buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << " [" << buf << "] " << o.detail
              << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
