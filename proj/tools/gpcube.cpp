// gpcube: word problem, ball export and property checks from the command line.
//
// Exit codes: 0 pass / equal, 1 check failure / not equal, 2 usage or parse
// error, 3 resource budget exhausted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <gpcube/certificate.hpp>
#include <gpcube/gpcube.hpp>

namespace {

  using namespace gpcube;

  constexpr int exit_pass     = 0;
  constexpr int exit_fail     = 1;
  constexpr int exit_usage    = 2;
  constexpr int exit_exhausted = 3;

  struct RunConfig {
    std::string   graph;
    std::uint64_t radius          = 2;
    std::size_t   budget_elements = 1'000'000;
    std::size_t   budget_words    = default_oracle_budget;
    std::string   format          = "json";
    std::string   out;
    std::string   which = "all";
    std::string   word_a, word_b;
    bool          oracle = false;
  };

  void emit(RunConfig const& cfg, std::string const& text) {
    if (cfg.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      throw Error("cannot write " + cfg.out);
    }
    f << text;
  }

  std::string dump(Json const& j) {
    return j.dump(2) + "\n";
  }

  int cmd_normalize(RunConfig const& cfg) {
    GraphProduct gp(read_graph_file(cfg.graph));
    emit(cfg, gp.format(gp.normalize(gp.parse_word(cfg.word_a))) + "\n");
    return exit_pass;
  }

  int cmd_equal(RunConfig const& cfg) {
    auto         g = read_graph_file(cfg.graph);
    GraphProduct gp(g);
    auto         a  = gp.parse_word(cfg.word_a);
    auto         b  = gp.parse_word(cfg.word_b);
    bool         eq = gp.equal(a, b);
    std::string  text = eq ? "equal\n" : "not equal\n";
    if (cfg.oracle) {
      bool ref = oracle_equal(g, a, b, cfg.budget_words);
      if (ref != eq) {
        throw InvariantViolation("normal forms and rewriting closure disagree");
      }
      text += "oracle agrees\n";
    }
    emit(cfg, text);
    return eq ? exit_pass : exit_fail;
  }

  BallLimits limits(RunConfig const& cfg) {
    BallLimits l;
    l.max_elements = cfg.budget_elements;
    return l;
  }

  int cmd_build(RunConfig const& cfg) {
    CubeBall ball(GraphProduct(read_graph_file(cfg.graph)), cfg.radius, limits(cfg));
    if (cfg.format == "dot") {
      emit(cfg, ball_dot(ball));
    } else if (cfg.format == "text") {
      emit(cfg, ball_text(ball));
    } else {
      emit(cfg, dump(ball_json(ball)));
    }
    return exit_pass;
  }

  int cmd_check(RunConfig const& cfg) {
    auto     g = read_graph_file(cfg.graph);
    CubeBall ball(GraphProduct(g), cfg.radius, limits(cfg));
    Json     out = certificate_header(g, cfg.radius, cfg.which);
    std::vector<std::pair<std::string, Json>> parts;
    bool all = cfg.which == "all";
    if (all || cfg.which == "links") {
      parts.emplace_back("links", links_certificate(ball));
    }
    if (all || cfg.which == "morse") {
      parts.emplace_back("morse", morse_certificate(ball));
    }
    if (all || cfg.which == "special") {
      parts.emplace_back("special", special_certificate(ball));
    }
    if (all || cfg.which == "kernel") {
      parts.emplace_back("kernel", kernel_certificate(ball));
    }
    if (all || cfg.which == "dj") {
      parts.emplace_back("dj", dj_certificate(DavisJanuszkiewicz(g), cfg.radius));
    }
    bool ok = true;
    for (auto const& [name, j] : parts) {
      ok = ok && j.at("ok").get<bool>();
    }
    out["ok"] = ok;
    if (parts.size() == 1) {
      out = parts.front().second;
    } else {
      for (auto& [name, j] : parts) {
        out[name] = std::move(j);
      }
    }
    emit(cfg, dump(out));
    return ok ? exit_pass : exit_fail;
  }

  int cmd_dj(RunConfig const& cfg) {
    auto g = read_graph_file(cfg.graph);
    if (cfg.format == "text") {
      emit(cfg, "# Gamma'\n" + gamma_prime(g).to_text() + "# Gamma''\n"
                    + gamma_doubleprime(g).to_text());
      return exit_pass;
    }
    auto cert = dj_certificate(DavisJanuszkiewicz(g), cfg.radius);
    emit(cfg, dump(cert));
    return cert.at("ok").get<bool>() ? exit_pass : exit_fail;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph products of cyclic groups and their cube complexes"};
  app.set_version_flag("--version", std::string(tool_version));
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph, "graph file")->required();
    sub->add_option("--budget-elements", cfg.budget_elements,
                    "maximum group elements to enumerate")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget-words", cfg.budget_words,
                    "maximum words explored by the rewriting oracle")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "output file (default stdout)");
  };
  auto radius = [&](CLI::App* sub) {
    sub->add_option("--radius", cfg.radius, "ball radius")->check(CLI::NonNegativeNumber);
  };

  auto* normalize = app.add_subcommand("normalize", "print the normal form of a word");
  common(normalize);
  normalize->add_option("word", cfg.word_a, "comma-separated s^e tokens")->required();

  auto* equal = app.add_subcommand("equal", "exit 0 iff two words are equal");
  common(equal);
  equal->add_option("first", cfg.word_a)->required();
  equal->add_option("second", cfg.word_b)->required();
  equal->add_flag("--oracle", cfg.oracle, "cross-check with the rewriting oracle");

  auto* build = app.add_subcommand("build", "export a ball of the cube complex");
  common(build);
  radius(build);
  build->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot", "text"}));

  auto* check = app.add_subcommand("check", "run property checks and write a certificate");
  common(check);
  radius(check);
  check->add_option("which", cfg.which)
      ->check(CLI::IsMember({"links", "morse", "special", "kernel", "dj", "all"}));
  check->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));

  auto* dj = app.add_subcommand("dj", "emit Gamma' and Gamma'' or the embedding certificate");
  common(dj);
  radius(dj);
  dj->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    if (*normalize) {
      return cmd_normalize(cfg);
    }
    if (*equal) {
      return cmd_equal(cfg);
    }
    if (*build) {
      return cmd_build(cfg);
    }
    if (*check) {
      return cmd_check(cfg);
    }
    return cmd_dj(cfg);
  } catch (BudgetExceeded const& e) {
    std::cerr << "gpcube: budget exhausted: " << e.what() << "\n";
    return exit_exhausted;
  } catch (InvariantViolation const& e) {
    std::cerr << "gpcube: invariant violated: " << e.what() << "\n";
    return exit_fail;
  } catch (Error const& e) {
    std::cerr << "gpcube: " << e.what() << "\n";
    return exit_usage;
  }
}
