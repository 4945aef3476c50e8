#include "toral/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "toral/assemble.hpp"
#include "toral/certificate.hpp"
#include "toral/error.hpp"
#include "toral/gaff.hpp"
#include "toral/problem.hpp"
#include "toral/report.hpp"
#include "toral/structure.hpp"

namespace toral {

namespace {

using report::Json;

struct Options {
  std::string file;
  std::string certificate;
  std::string format = "text";
  std::size_t max_support = 9;
  unsigned threads = 1;
  std::optional<std::size_t> element;
};

// What a subcommand produces: the JSON result plus its text rendering.
struct Outcome {
  Json result;
  std::string text;
};

struct Hypersurface {
  LaurentPoly h;
  std::vector<std::string> vars;
  bool split = false;
};

// The hypersurface GAff is computed for. Without a torus factor the input
// generator is used as written so certificates refer to the input
// coordinates; otherwise the residual of the splitting, in variables y1..yl.
Hypersurface hypersurface_of(const ProblemInput &problem) {
  const SplitResult split = split_torus_factor(problem.generators, problem.rank());
  if (split.is_torus) throw ScopeError("X is a torus; GAff(M, h) needs a hypersurface");
  if (split.residual_generators.size() != 1)
    throw ScopeError("the residual ideal has " + std::to_string(split.residual_generators.size()) +
                     " generators; GAff(M, h) needs a hypersurface");
  if (split.torus_rank == 0) return {problem.generators.front(), problem.variables, false};
  const std::size_t l = problem.rank() - split.torus_rank;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < l; ++k) names.push_back("y" + std::to_string(k + 1));
  return {split.residual_generators.front(), names, true};
}

std::string join_vector(const LatticeVector &v) { return v.to_string(); }

std::string matrix_rows(const IntMatrix &m, const std::string &indent) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += indent + "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += " ";
      out += m(r, c).get_str();
    }
    out += "]\n";
  }
  return out;
}

Outcome do_parse(const Options &o) {
  const ProblemInput problem = load_problem(o.file);
  return {report::to_json(problem), problem.to_string()};
}

Outcome do_hx(const Options &o) {
  const ProblemInput problem = load_problem(o.file);
  const auto basis = lattice_MX(problem.generators, problem.rank());
  const Quasitorus q = quasitorus_HX(basis, problem.rank());
  Json result = report::to_json(q);
  Json mx = Json::array();
  for (const auto &b : basis) mx.push_back(report::to_json(b));
  result["mx_basis"] = std::move(mx);

  std::string text = "M(X) basis:";
  if (basis.empty()) text += " (empty)";
  for (const auto &b : basis) text += " " + join_vector(b);
  text += "\nH(X) ≅ " + report::describe_finite_part(q) + ", torus rank " + std::to_string(q.torus_rank) + "\n";
  text += "order: " + (q.order() ? q.order()->get_str() : std::string("infinite")) + "\n";
  return {std::move(result), std::move(text)};
}

Outcome do_split(const Options &o) {
  const ProblemInput problem = load_problem(o.file);
  const SplitResult split = split_torus_factor(problem.generators, problem.rank());
  Json result = report::to_json(split, problem.variables);

  std::string text = "torus rank s: " + std::to_string(split.torus_rank) + "\n";
  text += "is torus: " + std::string(split.is_torus ? "true" : "false") + "\n";
  text += "change of basis:\n" + matrix_rows(split.change_of_basis, "  ");
  const auto &names = result["residual_variables"];
  text += "residual variables:";
  for (const auto &n : names) text += " " + n.get<std::string>();
  text += "\n";
  for (const auto &g : result["residual_generators"]) text += "gen " + g["text"].get<std::string>() + "\n";
  return {std::move(result), std::move(text)};
}

Outcome do_gaff(const Options &o) {
  const ProblemInput problem = load_problem(o.file);
  const Hypersurface hs = hypersurface_of(problem);
  const GaffGroup group = enumerate_gaff(hs.h, {o.max_support, o.threads});
  Json result = report::to_json(group);
  result["variables"] = hs.vars;
  result["h"] = hs.h.to_string(hs.vars);

  std::ostringstream t;
  t << "h = " << hs.h.to_string(hs.vars) << (hs.split ? "  (after splitting the torus factor)" : "") << "\n";
  t << "support:";
  for (std::size_t i = 0; i < group.support.size(); ++i) t << " " << i + 1 << ":" << group.support[i].to_string();
  t << "\nGAff order: " << group.order() << "\n";
  t << "abelian: " << (group.is_abelian() ? "yes" : "no") << "\n";
  t << "element orders:";
  for (auto k : group.element_orders()) t << " " << k;
  t << "\n";
  for (std::size_t k = 0; k < group.elements.size(); ++k) {
    t << "element " << k + 1 << ": " << cycle_notation(group.perm_action[k]) << "\n";
    t << "  linear:\n" << matrix_rows(group.elements[k].linear(), "    ");
    t << "  translation: " << group.elements[k].translation().to_string() << "\n";
  }
  return {std::move(result), t.str()};
}

Outcome do_aut(const Options &o) {
  const ProblemInput problem = load_problem(o.file);
  const AutStructure a = aut_structure(problem.generators, problem.rank(), {o.max_support, o.threads});
  std::ostringstream t;
  t << "torus factor rank s: " << a.torus_rank_s << "\n";
  t << "rank E(Y): " << a.rank_E_Y << "\n";
  t << "H(Y) ≅ " << report::describe_finite_part(a.h_y) << ", torus rank " << a.h_y.torus_rank << "\n";
  t << "|GAff(M, h)|: " << (a.gaff_order ? a.gaff_order->get_str() : std::string("n/a")) << "\n";
  t << "|Aut(Y)|: " << (a.aut_y_order ? a.aut_y_order->get_str() : std::string("unknown")) << "\n";
  t << "Aut(X) ≅ " << a.formula.text << "\n";
  for (const auto &n : a.notes) t << "note: " << n << "\n";
  return {report::to_json(a), t.str()};
}

Outcome do_lift(const Options &o) {
  const ProblemInput problem = load_problem(o.file);
  const Hypersurface hs = hypersurface_of(problem);
  const GaffGroup group = enumerate_gaff(hs.h, {o.max_support, o.threads});
  if (o.element && (*o.element == 0 || *o.element > group.order()))
    throw InputError("--element must lie in 1.." + std::to_string(group.order()));

  Json certs = Json::array();
  std::string text;
  for (std::size_t k = 0; k < group.order(); ++k) {
    if (o.element && *o.element != k + 1) continue;
    const AutoCertificate cert = lift_certificate(hs.h, group.elements[k]);
    certs.push_back(Json{{"element", k + 1},
                         {"cycles", cycle_notation(group.perm_action[k])},
                         {"certificate", report::to_json(cert)}});
    text += "element " + std::to_string(k + 1) + " " + cycle_notation(group.perm_action[k]) + "\n";
    text += "  " + report::to_json(cert).dump() + "\n";
  }
  return {Json{{"h", hs.h.to_string(hs.vars)}, {"certificates", std::move(certs)}}, std::move(text)};
}

Outcome do_verify(const Options &o) {
  const ProblemInput problem = load_problem(o.file);
  const Hypersurface hs = hypersurface_of(problem);
  std::ifstream in(o.certificate);
  if (!in) throw InputError("cannot read '" + o.certificate + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw InputError(std::string("certificate is not valid JSON: ") + e.what());
  }
  const AutoCertificate cert = report::certificate_from_json(j, hs.h);
  const bool ok = verify_certificate(hs.h, cert);
  return {Json{{"valid", ok}}, ok ? "true\n" : "false\n"};
}

void add_common(CLI::App *sub, Options &o, bool enumeration) {
  sub->add_option("file", o.file, "problem file (vars/gen lines)")->required();
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  if (enumeration) {
    sub->add_option("--max-support", o.max_support, "largest support GAff enumeration accepts")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", o.threads, "enumeration worker threads")->check(CLI::PositiveNumber);
  }
}

} // namespace

int run_cli(std::span<const std::string> argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Automorphism groups of toral varieties", "toral-aut"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    CLI::App *app;
    std::function<Outcome(const Options &)> run;
  };
  std::vector<Command> commands;
  auto add = [&](const char *name, const char *help, bool enumeration, std::function<Outcome(const Options &)> run) {
    CLI::App *sub = app.add_subcommand(name, help);
    add_common(sub, o, enumeration);
    commands.push_back({sub, std::move(run)});
    return sub;
  };
  add("parse", "echo the input in canonical form", false, do_parse);
  add("hx", "compute M(X) and the quasitorus H(X)", false, do_hx);
  add("split", "split off the maximal torus factor", false, do_split);
  add("gaff", "enumerate GAff(M, h)", true, do_gaff);
  add("aut", "report the structure of Aut(X)", true, do_aut);
  add("lift", "lift GAff elements to automorphism certificates", true, do_lift)
      ->add_option("--element", o.element, "1-based element index (default: all)");
  add("verify", "check an automorphism certificate", false, do_verify)
      ->add_option("certificate", o.certificate, "certificate JSON file")
      ->required();

  std::vector<const char *> raw;
  raw.reserve(argv.size());
  for (const auto &a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  for (const auto &cmd : commands) {
    if (!cmd.app->parsed()) continue;
    try {
      const auto start = std::chrono::steady_clock::now();
      Outcome outcome = cmd.run(o);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (o.format == "json") {
        Json doc{{"command", cmd.app->get_name()},
                 {"argv", std::vector<std::string>(argv.begin() + 1, argv.end())},
                 {"result", std::move(outcome.result)},
                 {"timing_ms", ms}};
        out << doc.dump(2) << "\n";
      } else {
        out << outcome.text;
      }
      return kExitOk;
    } catch (const ScopeError &e) {
      err << "toral-aut: out of method scope: " << e.what() << "\n";
      return kExitScopeError;
    } catch (const Error &e) {
      err << "toral-aut: " << e.what() << "\n";
      return kExitInputError;
    } catch (const std::exception &e) {
      err << "toral-aut: " << e.what() << "\n";
      return kExitInputError;
    }
  }
  return kExitInputError;
}

} // namespace toral
