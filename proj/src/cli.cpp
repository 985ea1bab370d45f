#include "seidel/cli.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <thread>

#include "seidel/edge_list.hpp"
#include "seidel/errors.hpp"
#include "seidel/extremal.hpp"
#include "seidel/oracle.hpp"
#include "seidel/spectra.hpp"

namespace seidel::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return Format::text;
}

// Compact JSON with sorted keys (nlohmann objects are ordered maps) and
// floats rendered through format_real.
void dump(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += json(key).dump();
        out += ':';
        dump(value, out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ',';
        first = false;
        dump(value, out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float:
      out += format_real(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

std::string dump(const json& j) {
  std::string out;
  dump(j, out);
  return out;
}

json envelope(const std::string& command, json parameters, json result) {
  return json{{"command", command},
              {"parameters", std::move(parameters)},
              {"result", std::move(result)},
              {"version", kVersion}};
}

json edges_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
  return edges;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("SEIDEL_JOBS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------- max-index

int cmd_max_index(int n, int m, Format format, std::ostream& out) {
  const auto params = extremal_params(n, m);
  const auto sol = max_index(n, m);
  const json b = params.b ? json(*params.b) : json(nullptr);

  switch (format) {
    case Format::json:
      out << dump(envelope("max-index", {{"n", n}, {"m", m}},
                           {{"rho", sol.rho},
                            {"xi", sol.xi},
                            {"xi_lo", sol.xi_lo},
                            {"xi_hi", sol.xi_hi},
                            {"d", params.d},
                            {"t", params.t},
                            {"r", params.r},
                            {"a", params.a},
                            {"b", b},
                            {"tie", params.tie}}))
          << '\n';
      break;
    case Format::csv:
      out << "n,m,rho,xi,xi_lo,xi_hi,d,t,r,a,b,tie\n";
      out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", n, m, format_real(sol.rho),
                         format_real(sol.xi), format_real(sol.xi_lo), format_real(sol.xi_hi),
                         params.d, params.t, params.r, params.a,
                         params.b ? std::to_string(*params.b) : "", params.tie);
      break;
    case Format::text:
      out << fmt::format("n = {}, m = {}\n", n, m);
      out << "rho = " << format_real(sol.rho) << '\n';
      out << "xi = " << format_real(sol.xi) << "  in [" << format_real(sol.xi_lo) << ", "
          << format_real(sol.xi_hi) << "]\n";
      out << fmt::format("d = {}, t = {}, r = {}, a = {}, b = {}{}\n", params.d, params.t,
                         params.r, params.a, params.b ? std::to_string(*params.b) : "-",
                         params.tie ? " (tie)" : "");
      break;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- construct

int cmd_construct(int n, int m, const std::filesystem::path& dir, Format format,
                  std::ostream& out) {
  const auto variants = hnm_variants(n, m);
  std::filesystem::create_directories(dir);

  json listed = json::array();
  for (std::size_t k = 0; k < variants.size(); ++k) {
    const auto& v = variants[k];
    const auto path = dir / fmt::format("H_n{}_m{}_v{}.txt", n, m, k);
    write_edge_list(path, v.graph);
    listed.push_back({{"path", path.string()},
                      {"d", v.d},
                      {"t", v.t},
                      {"placement", to_string(v.placement)},
                      {"edges", v.graph.size()}});
  }

  switch (format) {
    case Format::json:
      out << dump(envelope("construct", {{"n", n}, {"m", m}, {"out", dir.string()}},
                           {{"variant_count", variants.size()}, {"variants", listed}}))
          << '\n';
      break;
    case Format::csv:
      out << "path,d,t,placement,edges\n";
      for (const auto& v : listed) {
        out << fmt::format("{},{},{},{},{}\n", v["path"].get<std::string>(), v["d"].get<int>(),
                           v["t"].get<int>(), v["placement"].get<std::string>(),
                           v["edges"].get<std::size_t>());
      }
      break;
    case Format::text:
      out << "variants: " << variants.size() << '\n';
      for (const auto& v : listed) {
        out << fmt::format("  {}  d={} t={} {} ({} edges)\n", v["path"].get<std::string>(),
                           v["d"].get<int>(), v["t"].get<int>(),
                           v["placement"].get<std::string>(), v["edges"].get<std::size_t>());
      }
      break;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const std::filesystem::path& path, Format format, std::ostream& out) {
  const auto g = read_edge_list(path);
  const auto values = eigenvalues(seidel_matrix(g));

  switch (format) {
    case Format::json:
      out << dump(envelope("spectrum", {{"path", path.string()}},
                           {{"n", g.order()},
                            {"m", g.size()},
                            {"index", values.front()},
                            {"eigenvalues", values}}))
          << '\n';
      break;
    case Format::csv:
      out << "position,eigenvalue,is_index\n";
      for (std::size_t k = 0; k < values.size(); ++k) {
        out << fmt::format("{},{},{}\n", k, format_real(values[k]), k == 0);
      }
      break;
    case Format::text:
      out << fmt::format("n = {}, m = {}\n", g.order(), g.size());
      out << "index = " << format_real(values.front()) << '\n';
      for (std::size_t k = 0; k < values.size(); ++k) {
        out << (k == 0 ? "* " : "  ") << format_real(values[k]) << '\n';
      }
      break;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- verify

json report_json(const VerificationReport& r) {
  json classes = json::array();
  for (const auto& cls : r.maximizer_classes) {
    classes.push_back({{"edges", edges_json(cls.representative)},
                       {"labeled_count", cls.labeled_count},
                       {"rank", cls.rank}});
  }
  auto opt_bool = [](const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); };
  return json{{"n", r.n},
              {"m", r.m},
              {"true_max", r.true_max},
              {"theory_max", r.theory_max ? json(*r.theory_max) : json(nullptr)},
              {"theory_variants", r.theory_variants ? json(*r.theory_variants) : json(nullptr)},
              {"value_matches", opt_bool(r.value_matches)},
              {"classes_match", opt_bool(r.classes_match)},
              {"theorem_holds", opt_bool(r.theorem_holds)},
              {"maximizer_classes", classes},
              {"graphs_scanned", r.graphs_scanned},
              {"candidates_rechecked", r.candidates_rechecked},
              {"tolerance_disagreements", r.tolerance_disagreements}};
}

int cmd_verify(int n, std::vector<int> ms, bool all_m, double tol, unsigned jobs,
               Format format, std::ostream& out) {
  if (n > kEnumerationCap) {
    throw CapacityError("verify supports n <= " + std::to_string(kEnumerationCap),
                        static_cast<std::size_t>(n), kEnumerationCap);
  }
  if (all_m) {
    ms.clear();
    for (int m = 0; m <= n * n / 4; ++m) ms.push_back(m);
  }
  if (ms.empty()) throw DomainError("give --m or --all-m");
  for (const int m : ms) extremal_params(n, m);

  if (format == Format::csv) {
    out << "n,m,true_max,theory_max,classes,theory_variants,value_matches,classes_match,"
           "theorem_holds,graphs_scanned\n";
  }
  bool all_hold = true;
  for (const int m : ms) {
    const auto r = verify_theorem(n, m, tol, jobs);
    all_hold = all_hold && r.theorem_holds.value_or(false);
    switch (format) {
      case Format::json:
        out << dump(envelope("verify", {{"n", n}, {"m", m}, {"tol", tol}}, report_json(r)))
            << '\n';
        break;
      case Format::csv:
        out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", n, m, format_real(r.true_max),
                           format_real(*r.theory_max), r.maximizer_classes.size(),
                           *r.theory_variants, *r.value_matches, *r.classes_match,
                           *r.theorem_holds, r.graphs_scanned);
        break;
      case Format::text:
        out << fmt::format(
            "n={} m={} true_max={} theory_max={} classes={} variants={} holds={} "
            "scanned={} ({:.2f}s)\n",
            n, m, format_real(r.true_max), format_real(*r.theory_max),
            r.maximizer_classes.size(), *r.theory_variants, *r.theorem_holds ? "yes" : "NO",
            r.graphs_scanned, r.elapsed.count());
        break;
    }
  }
  return all_hold ? kSuccess : kVerificationFailed;
}

// ---------------------------------------------------------------- compare-conjecture

int cmd_compare_conjecture(int n, int m, Format format, std::ostream& out) {
  const auto conjectured = conjecture_graph(n, m);
  const double conjecture_index = seidel_index(conjectured);
  double theory_index = -1.0;
  for (const auto& g : construct_hnm(n, m)) theory_index = std::max(theory_index, seidel_index(g));
  const double closed_form = max_index(n, m).rho;

  std::string verdict = "AGREE";
  int status = kSuccess;
  if (conjecture_index < theory_index - 1e-8) {
    verdict = "CONJECTURE_LOWER";
  } else if (conjecture_index > theory_index + 1e-8) {
    verdict = "CONJECTURE_HIGHER";
    status = kVerificationFailed;
  }

  switch (format) {
    case Format::json:
      out << dump(envelope("compare-conjecture", {{"n", n}, {"m", m}},
                           {{"conjecture_index", conjecture_index},
                            {"conjecture_edges", edges_json(conjectured)},
                            {"theory_index", theory_index},
                            {"closed_form_index", closed_form},
                            {"verdict", verdict}}))
          << '\n';
      break;
    case Format::csv:
      out << "n,m,conjecture_index,theory_index,closed_form_index,verdict\n";
      out << fmt::format("{},{},{},{},{},{}\n", n, m, format_real(conjecture_index),
                         format_real(theory_index), format_real(closed_form), verdict);
      break;
    case Format::text:
      out << fmt::format("n = {}, m = {}\n", n, m);
      out << "conjecture index = " << format_real(conjecture_index) << '\n';
      out << "theory index     = " << format_real(theory_index) << '\n';
      out << "verdict: " << verdict << '\n';
      break;
  }
  return status;
}

}  // namespace

std::string format_real(double value) {
  if (std::abs(value) < 5e-13) value = 0.0;
  return fmt::format("{:.12f}", value);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal Seidel index of signed complete graphs", "seidel"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string format_name = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
  };

  int n = 0;
  int m = 0;
  std::vector<int> ms;
  bool all_m = false;
  double tol = kDefaultMaximizerTolerance;
  unsigned jobs = 0;
  std::string out_dir;
  std::string in_path;

  auto* max_index_cmd = app.add_subcommand("max-index", "Closed-form maximal index for (n, m)");
  max_index_cmd->add_option("--n", n, "Order")->required();
  max_index_cmd->add_option("--m", m, "Number of negative edges")->required();
  add_format(max_index_cmd);

  auto* construct_cmd = app.add_subcommand("construct", "Write every extremal graph for (n, m)");
  construct_cmd->add_option("--n", n, "Order")->required();
  construct_cmd->add_option("--m", m, "Number of negative edges")->required();
  construct_cmd->add_option("--out", out_dir, "Output directory")->required();
  add_format(construct_cmd);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Seidel spectrum of an edge-list file");
  spectrum_cmd->add_option("path", in_path, "Edge-list file")->required();
  add_format(spectrum_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive check of the maximizers");
  verify_cmd->add_option("--n", n, "Order (at most 8)")->required();
  auto* m_opt = verify_cmd->add_option("--m", ms, "Sizes to check")->delimiter(',');
  auto* all_opt = verify_cmd->add_flag("--all-m", all_m, "Check every m up to floor(n^2/4)");
  m_opt->excludes(all_opt);
  verify_cmd->add_option("--tol", tol, "Maximizer tolerance")->capture_default_str();
  verify_cmd->add_option("--jobs", jobs, "Worker threads (default: SEIDEL_JOBS or all cores)");
  add_format(verify_cmd);

  auto* compare_cmd =
      app.add_subcommand("compare-conjecture", "Conjectured graph against the extremal graphs");
  compare_cmd->add_option("--n", n, "Order")->required();
  compare_cmd->add_option("--m", m, "Number of negative edges")->required();
  add_format(compare_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const auto format = parse_format(format_name);
  try {
    if (max_index_cmd->parsed()) return cmd_max_index(n, m, format, out);
    if (construct_cmd->parsed()) return cmd_construct(n, m, out_dir, format, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(in_path, format, out);
    if (verify_cmd->parsed()) {
      return cmd_verify(n, ms, all_m, tol, jobs == 0 ? default_jobs() : jobs, format, out);
    }
    if (compare_cmd->parsed()) return cmd_compare_conjecture(n, m, format, out);
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const seidel::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsageError;
}

}  // namespace seidel::cli
