#pragma once

// Command-line front end. run() is kept separate from main() so tests can
// drive it in-process with captured streams.
//
// Exit status: 0 ok, 1 domain error (bad graph file, disconnected input, ...),
// 2 usage error, 3 a verification found a counterexample.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hhnum/hhnum.hpp"
#include "json.hpp"

namespace hhnum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCounterexample = 3;

namespace detail {

// `cycle` / `path` expand to C_n / P_{n-1}; anything else is a file.
inline Graph resolve_h(const std::string& source, int n) {
  if (source == "cycle") return make_cycle(n);
  if (source == "path") return make_path(n);
  return load_graph(source);
}

inline Pseudoordering parse_perm(const std::string& text, int n) {
  std::vector<Vertex> image;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    token = std::string(hhnum::detail::trim(token));
    if (token.empty()) throw ParseError("--f: empty entry");
    image.push_back(hhnum::detail::parse_int(token, 1));
  }
  if (static_cast<int>(image.size()) != n) {
    throw PreconditionError("--f has " + std::to_string(image.size()) +
                            " entries but the graphs have " +
                            std::to_string(n) + " vertices");
  }
  return Pseudoordering(std::move(image));
}

inline std::string perm_text(const Pseudoordering& f) {
  std::string out;
  for (Vertex y : f.image()) {
    if (!out.empty()) out += ',';
    out += std::to_string(y);
  }
  return out;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"H-Hamiltonian spectra, extremal numbers and tree-to-path traces"};
  app.name("hhnum");
  app.require_subcommand(1);
  // `--h` names the H graph, so help is `--help` only; subcommands inherit it
  app.set_help_flag("--help", "Print this help message and exit");

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Full H-Hamiltonian spectrum of G");
  std::string h_src, g_src;
  int cap = kDefaultExhaustiveCap;
  int jobs = 1;
  spectrum_cmd->add_option("--h", h_src, "H: .g6/.edges file, or cycle/path")->required();
  spectrum_cmd->add_option("--g", g_src, "G: .g6/.edges file")->required();
  spectrum_cmd->add_option("--cap", cap, "Largest n for exhaustive enumeration");
  spectrum_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // number
  auto* number_cmd = app.add_subcommand("number", "Lower or upper H-Hamiltonian number of G");
  std::string sense = "max";
  std::string method = "exhaustive";
  number_cmd->add_option("--h", h_src, "H: .g6/.edges file, or cycle/path")->required();
  number_cmd->add_option("--g", g_src, "G: .g6/.edges file")->required();
  number_cmd->add_option("--sense", sense)->check(CLI::IsMember({"min", "max"}));
  number_cmd->add_option("--method", method)->check(CLI::IsMember({"exhaustive", "bnb"}));
  number_cmd->add_option("--cap", cap, "Largest n for exhaustive enumeration");
  number_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // transform
  auto* transform_cmd = app.add_subcommand("transform", "Tree-to-path surgery with trace");
  std::string tree_src, f_text;
  bool trace_flag = false;
  transform_cmd->add_option("--tree", tree_src, "Tree (or connected graph) file")->required();
  transform_cmd->add_option("--h", h_src, "H: .g6/.edges file, or cycle/path")->required();
  transform_cmd->add_option("--f", f_text, "Pseudoordering as comma-separated images (default identity)");
  transform_cmd->add_flag("--trace", trace_flag, "Print every surgery step");
  transform_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive / seeded theorem checks");
  std::string kind;
  int n_arg = 0;
  std::string resume;
  std::string h_family = "canonical";
  int samples = 0;
  std::uint64_t seed = 1;
  verify_cmd
      ->add_option("kind", kind,
                   "closed-forms | upper-bound | spanning-trees | articulation | "
                   "iso | solvers | pathify | surgery")
      ->required()
      ->check(CLI::IsMember({"closed-forms", "upper-bound", "spanning-trees",
                             "articulation", "iso", "solvers", "pathify",
                             "surgery"}));
  verify_cmd->add_option("--n", n_arg, "Largest vertex count (solvers: exact n)")->required();
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--resume", resume, "Progress file for upper-bound runs");
  verify_cmd->add_option("--h-family", h_family, "upper-bound H family")
      ->check(CLI::IsMember({"canonical", "all"}));
  verify_cmd->add_option("--samples", samples, "Random instances (solvers/pathify/surgery)");
  verify_cmd->add_option("--seed", seed, "Seed for randomized checks");
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // iso
  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test through h_H(G) = |E(H)|");
  std::string first_src, second_src;
  iso_cmd->add_option("first", first_src)->required();
  iso_cmd->add_option("second", second_src)->required();
  iso_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  const bool json = format == "json";

  try {
    if (*spectrum_cmd) {
      Graph g = load_graph(g_src);
      Graph h = detail::resolve_h(h_src, g.order());
      if (!is_connected(g)) throw PreconditionError("G must be connected");
      auto report = spectrum(h, g, {cap, jobs});
      if (json) {
        out << nlohmann::json(report).dump() << "\n";
      } else {
        out << "values";
        for (const auto& [v, c] : report.values) out << ' ' << v << 'x' << c;
        out << "\nmin " << report.min << "\nmax " << report.max
            << "\nmin_witness " << detail::perm_text(report.min_witness)
            << "\nmax_witness " << detail::perm_text(report.max_witness)
            << "\nenumerated " << report.enumerated << "\n";
      }
      return kExitOk;
    }

    if (*number_cmd) {
      Graph g = load_graph(g_src);
      Graph h = detail::resolve_h(h_src, g.order());
      if (!is_connected(g)) throw PreconditionError("G must be connected");
      ExtremalQuery q{sense == "min" ? Sense::kMin : Sense::kMax,
                      method == "bnb" ? Method::kBranchAndBound : Method::kExhaustive,
                      cap};
      auto best = extremal_number(h, g, q);
      if (json) {
        out << nlohmann::json{{"sense", sense},
                              {"method", method},
                              {"value", best.value},
                              {"witness", best.witness}}
                   .dump()
            << "\n";
      } else {
        out << best.value << "\n";
      }
      return kExitOk;
    }

    if (*transform_cmd) {
      Graph t = load_graph(tree_src);
      Graph h = detail::resolve_h(h_src, t.order());
      Pseudoordering f = f_text.empty() ? Pseudoordering::identity(t.order())
                                        : detail::parse_perm(f_text, t.order());
      TransformTrace trace = is_tree(t) ? pathify(t, h, f) : pathify_general(t, h, f);
      if (json) {
        nlohmann::json j = trace;
        j["step_count"] = trace.steps.size();
        if (!trace_flag) j.erase("steps");
        out << j.dump() << "\n";
      } else {
        out << render_trace_text(trace, trace_flag);
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      std::vector<VerificationReport> reports;
      RandomRunOptions random_options;
      random_options.seed = seed;
      random_options.n_max = n_arg;
      if (kind == "closed-forms") {
        reports.push_back(verify_closed_forms(n_arg));
      } else if (kind == "upper-bound") {
        UpperBoundOptions options;
        options.jobs = jobs;
        if (!resume.empty()) options.progress_file = resume;
        HFamily family = h_family == "all" ? HFamily::kConnectedAll : HFamily::kCanonical;
        for (int n = 2; n <= n_arg; ++n) {
          reports.push_back(verify_upper_bound(n, family, options));
        }
      } else if (kind == "spanning-trees") {
        reports.push_back(verify_spanning_tree_characterization(n_arg));
      } else if (kind == "articulation") {
        reports.push_back(verify_non_articulation(n_arg));
      } else if (kind == "iso") {
        reports.push_back(verify_isomorphism_characterization(n_arg));
      } else if (kind == "solvers") {
        auto instances = random_instances(samples > 0 ? samples : 200, n_arg, seed);
        reports.push_back(verify_solver_agreement(
            instances, std::to_string(instances.size()) + " random (G, H) pairs, n=" +
                           std::to_string(n_arg) + ", seed " + std::to_string(seed)));
      } else if (kind == "pathify") {
        random_options.samples = samples > 0 ? samples : 1000;
        reports.push_back(verify_pathify_soundness(random_options));
      } else {
        random_options.samples = samples > 0 ? samples : 500;
        reports.push_back(verify_surgery_lemmas(random_options));
      }
      bool passed = true;
      for (const auto& r : reports) passed = passed && r.passed();
      if (json) {
        out << nlohmann::json{{"reports", reports}, {"passed", passed}}.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
          if (i > 0) out << "\n";
          out << render_report_text(reports[i]);
        }
      }
      return passed ? kExitOk : kExitCounterexample;
    }

    if (*iso_cmd) {
      Graph a = load_graph(first_src);
      Graph b = load_graph(second_src);
      bool iso = false;
      if (a.order() == b.order() && a.size() == b.size()) {
        if (is_connected(b)) {
          iso = isomorphic_via_h(a, b);
        } else if (is_connected(a)) {
          iso = isomorphic_via_h(b, a);
        } else {
          throw PreconditionError("iso needs at least one connected graph");
        }
      }
      if (json) {
        out << nlohmann::json{{"isomorphic", iso}}.dump() << "\n";
      } else {
        out << (iso ? "isomorphic" : "not isomorphic") << "\n";
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const InternalInvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace hhnum::cli
