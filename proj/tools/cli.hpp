#ifndef PWO_TOOLS_CLI_HPP
#define PWO_TOOLS_CLI_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pwo/pwo.hpp"

namespace pwo::cli {

/// Exit codes.
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int usage = 2;

class usage_error : public error {
public:
  using error::error;
};

/// "9,13,17", "9-25" and "9-25:4" (every 4th), mixed freely.
inline std::vector<std::size_t> parse_ns(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw usage_error("bad size '" + s + "' in --ns");
    }
    return static_cast<std::size_t>(std::stoull(s));
  };
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    const auto colon = item.find(':', dash);
    const std::size_t lo = number(item.substr(0, dash));
    const std::size_t hi = number(item.substr(dash + 1, colon == std::string::npos ? std::string::npos : colon - dash - 1));
    const std::size_t step = colon == std::string::npos ? 1 : number(item.substr(colon + 1));
    if (step == 0 || hi < lo) throw usage_error("bad range '" + item + "' in --ns");
    for (std::size_t n = lo; n <= hi; n += step) out.push_back(n);
  }
  if (out.empty()) throw usage_error("--ns is empty");
  return out;
}

/// "r,c"
inline Cell parse_cell(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw usage_error("");
    std::size_t used = 0;
    const int r = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw usage_error("");
    const std::string rest = text.substr(comma + 1);
    const int c = std::stoi(rest, &used);
    if (used != rest.size()) throw usage_error("");
    return {r, c};
  } catch (const std::exception&) {
    throw usage_error("bad cell '" + text + "'; expected r,c");
  }
}

/// Flags shared by generate, verify and plot.
struct GenerateArgs {
  std::string matrix_path;
  std::size_t n = 0;
  std::string ns;
  std::string start_cell;
  std::string start_yearn;
  std::string first_step = "row";
  bool auto_double = false;
  std::string word;
  int thue = -1;
  std::string mode = "cycle";
  bool expand = true;

  void attach(CLI::App& sub, bool multi) {
    sub.add_option("-m,--matrix", matrix_path, "matrix file")->required();
    auto* n_opt = sub.add_option("-n", n, "number of batches");
    if (multi) {
      auto* ns_opt = sub.add_option("--ns", ns, "sizes: 9,13,17 or 9-25 or 9-25:4");
      n_opt->excludes(ns_opt);
    }
    sub.add_option("--start-cell", start_cell, "first batch cell r,c");
    sub.add_option("--start-yearn", start_yearn, "first batch yearn, e.g. top-left");
    sub.add_option("--first-step", first_step, "row or col")->check(CLI::IsMember({"row", "col"}));
    sub.add_flag("--auto-double", auto_double, "double M when it has an odd number of -1s");
    auto* word_opt = sub.add_option("--word", word, "direction word over 0,1,2");
    auto* thue_opt = sub.add_option("--thue", thue, "use the substituted Thue-Morse word of this generation");
    word_opt->excludes(thue_opt);
    sub.add_option("--mode", mode, "cycle, flower or shared-edge")
        ->check(CLI::IsMember({"cycle", "flower", "shared-edge"}));
    sub.add_flag("--expand,!--no-expand", expand, "expand the end batches (default on)");
  }

  std::vector<std::size_t> sizes() const {
    if (!ns.empty()) return parse_ns(ns);
    if (n == 0) throw usage_error("give -n or --ns");
    return {n};
  }

  std::string direction_word(std::size_t n_max) const {
    if (!word.empty()) return word;
    if (thue >= 0) return tm_substitute(thue_morse(thue));
    // shortest Thue-Morse word long enough for n_max cells
    for (int g = 1; g <= 24; ++g) {
      std::string w = tm_substitute(thue_morse(g));
      if (w.size() * 2 >= n_max + 4) return w;
    }
    throw resource_error("size too large for a Thue-Morse direction word");
  }

  GeneratorOptions options() const {
    GeneratorOptions opts;
    if (!start_cell.empty()) opts.start_cell = parse_cell(start_cell);
    if (!start_yearn.empty()) opts.start_yearn = parse_yearn(start_yearn);
    opts.first_step = first_step == "col" ? Axis::col : Axis::row;
    opts.auto_double = auto_double;
    return opts;
  }

  GeneratorState state(const SignMatrix& m, std::size_t size) const {
    if (mode == "cycle") {
      if (!word.empty() || thue >= 0) throw usage_error("--word and --thue need --mode flower or shared-edge");
      return generate_pbar(m, size, options());
    }
    const WordMode wm = mode == "flower" ? WordMode::flower : WordMode::shared_edge;
    const GeneratorOptions opts = options();
    return generate_from_word(m, direction_word(size), wm, size, opts.start_yearn);
  }
};

inline nlohmann::json perm_json(const Permutation& p) { return p.values(); }

inline void print_lines(std::ostream& out, const std::vector<Permutation>& perms) {
  for (const auto& p : perms) out << to_string(p) << '\n';
}

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Profile classes of 0/+-1 matrices: pwo decisions, M-partitions and antichains", "pwo"};
  app.require_subcommand(1);
  std::string format = "text";
  unsigned threads = 1;
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
  };
  auto add_threads = [&](CLI::App* sub) { sub->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber); };
  SearchBudget budget;
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-free-cuts", budget.max_free_cuts, "partition search cap on free cuts");
    sub->add_option("--max-n", budget.max_n, "partition search cap on matrix size");
  };

  std::string matrix_path;
  std::size_t n = 0;

  auto* decide = app.add_subcommand("decide", "is Pr(M) partially well-ordered?");
  decide->add_option("-m,--matrix", matrix_path, "matrix file")->required();
  bool show_edges = false;
  decide->add_flag("--edges", show_edges, "also list the edges of G(M)");
  add_format(decide, {"text", "json"});

  auto* enumerate = app.add_subcommand("enumerate", "permutations of length n in Pr(M)");
  enumerate->add_option("-m,--matrix", matrix_path, "matrix file")->required();
  enumerate->add_option("-n", n, "length")->required();
  bool complement = false;
  enumerate->add_flag("--complement", complement, "list the permutations of length n not in Pr(M)");
  add_format(enumerate, {"text", "json"});
  add_threads(enumerate);
  add_budget(enumerate);

  GenerateArgs gen;
  bool one_line = false;
  auto* generate = app.add_subcommand("generate", "antichain elements P_n");
  gen.attach(*generate, true);
  generate->add_flag("--one-line", one_line, "print one-line notation instead of matrices");
  add_format(generate, {"text", "json", "svg"});
  generate->footer("Sizes in one residue class modulo the cycle length give a family that can be shown to be "
                   "fundamental; this is not checked.");

  std::string perm_text;
  std::string perm_matrix_path;
  bool count_only = false;
  bool all = false;
  std::size_t limit = 0;
  auto* partitions = app.add_subcommand("partitions", "M-partitions of a permutation");
  partitions->add_option("-m,--matrix", matrix_path, "matrix file")->required();
  auto* p_opt = partitions->add_option("-p,--perm", perm_text, "permutation, e.g. \"3 1 4 2\"");
  auto* pm_opt = partitions->add_option("-P,--perm-matrix", perm_matrix_path, "permutation matrix file");
  p_opt->excludes(pm_opt);
  auto* count_opt = partitions->add_flag("--count", count_only, "print only the number of partitions");
  auto* all_opt = partitions->add_flag("--all", all, "list every partition (default)");
  count_opt->excludes(all_opt);
  partitions->add_option("--limit", limit, "stop after this many partitions");
  add_format(partitions, {"text", "json"});
  add_budget(partitions);

  GenerateArgs ver;
  auto* verify = app.add_subcommand("verify", "check that generated elements form an antichain");
  ver.attach(*verify, true);
  add_format(verify, {"text", "json"});
  add_threads(verify);

  GenerateArgs plt;
  auto* plot = app.add_subcommand("plot", "SVG dot plot of P_n with batch arrows");
  plt.attach(*plot, false);

  int k = 0;
  auto* widder = app.add_subcommand("widderschin", "the Widderschin permutation w_k");
  widder->add_option("-k", k, "index")->required();
  add_format(widder, {"text", "json"});

  int generation = 0;
  bool substitute = false;
  auto* thue = app.add_subcommand("thue", "Thue-Morse words");
  thue->add_option("-g", generation, "generation")->required();
  thue->add_flag("--substitute", substitute, "apply abb->2, ab->1, a->0");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (decide->parsed()) {
      const SignMatrix m = load_matrix(matrix_path);
      const GraphShape shape = classify_graph(m);
      const bool yes = shape.kind == ShapeKind::forest;
      if (format == "json") {
        nlohmann::json j{{"schema", "pwo.decide/1"}, {"pwo", yes}, {"graph", describe(shape)},
                         {"cycle_count", shape.cycle_count}};
        out << j.dump(2) << '\n';
      } else {
        out << "pwo: " << (yes ? "yes" : "no") << " (" << describe(shape) << ")\n";
        if (show_edges) out << edge_list(bipartite_graph(m));
      }
      return ok;
    }

    if (enumerate->parsed()) {
      const SignMatrix m = load_matrix(matrix_path);
      std::vector<Permutation> perms = enumerate_profile_class(m, n, threads, default_exhaustive_bound, budget);
      if (complement) {
        std::vector<Permutation> rest;
        for (auto& p : all_permutations(n)) {
          if (!std::binary_search(perms.begin(), perms.end(), p)) rest.push_back(p);
        }
        perms = std::move(rest);
      }
      if (format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& p : perms) list.push_back(perm_json(p));
        out << nlohmann::json{{"schema", "pwo.enumerate/1"}, {"n", n}, {"complement", complement},
                              {"count", perms.size()}, {"permutations", list}}
                   .dump(2)
            << '\n';
      } else {
        print_lines(out, perms);
      }
      return ok;
    }

    if (generate->parsed()) {
      const SignMatrix m = load_matrix(gen.matrix_path);
      const auto sizes = gen.sizes();
      if (format == "svg" && sizes.size() != 1) throw usage_error("--format svg needs a single -n");
      nlohmann::json elements = nlohmann::json::array();
      bool first = true;
      for (std::size_t size : sizes) {
        const GeneratorState st = gen.state(m, size);
        if (first && st.doubled()) err << "note: M has an odd number of -1 entries; generating on double_matrix(M)\n";
        const QuasiPermMatrix p = gen.expand ? expand_endpoints(st) : st.pbar();
        if (format == "svg") {
          out << plot_svg(plot_spec(st, gen.expand));
        } else if (format == "json") {
          nlohmann::json e{{"n", size}, {"permutation", perm_json(matrix_perm(p))}};
          if (gen.expand) e["partition"] = partition_json(natural_partition(st));
          elements.push_back(e);
        } else {
          if (!first && !one_line) out << '\n';
          out << (one_line ? to_string(matrix_perm(p)) + "\n" : format_matrix(p));
        }
        first = false;
      }
      if (format == "json") {
        out << nlohmann::json{{"schema", "pwo.generate/1"}, {"expanded", gen.expand}, {"elements", elements}}.dump(2)
            << '\n';
      }
      return ok;
    }

    if (partitions->parsed()) {
      const SignMatrix m = load_matrix(matrix_path);
      QuasiPermMatrix p;
      if (!perm_text.empty()) p = perm_matrix(parse_permutation(perm_text));
      else if (!perm_matrix_path.empty()) p = to_quasi_perm(load_matrix(perm_matrix_path));
      else throw usage_error("give -p or -P");
      const auto parts =
          enumerate_m_partitions(p, m, limit > 0 ? std::optional<std::size_t>(limit) : std::nullopt, budget);
      if (format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& part : parts) list.push_back(partition_json(part));
        nlohmann::json j{{"schema", "pwo.partitions/1"}, {"count", parts.size()}};
        if (!count_only) j["partitions"] = list;
        out << j.dump(2) << '\n';
      } else if (count_only) {
        out << parts.size() << '\n';
      } else {
        for (const auto& part : parts) out << to_string(part) << '\n';
      }
      return parts.empty() ? failure : ok;
    }

    if (verify->parsed()) {
      const SignMatrix m = load_matrix(ver.matrix_path);
      const auto sizes = ver.sizes();
      std::vector<QuasiPermMatrix> elements;
      for (std::size_t size : sizes) {
        const GeneratorState st = ver.state(m, size);
        elements.push_back(ver.expand ? expand_endpoints(st) : st.pbar());
      }
      const AntichainReport report = verify_antichain(elements, threads);
      if (format == "json") {
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& [i, j] : report.comparable) pairs.push_back({sizes[i], sizes[j]});
        out << nlohmann::json{{"schema", "pwo.verify/1"}, {"ns", sizes}, {"antichain", report.is_antichain()},
                              {"comparable", pairs}}
                   .dump(2)
            << '\n';
      } else {
        out << "antichain: " << (report.is_antichain() ? "yes" : "no") << '\n';
        for (const auto& [i, j] : report.comparable) out << "P_" << sizes[i] << " <= P_" << sizes[j] << '\n';
      }
      return report.is_antichain() ? ok : failure;
    }

    if (plot->parsed()) {
      const SignMatrix m = load_matrix(plt.matrix_path);
      const auto sizes = plt.sizes();
      out << plot_svg(plot_spec(plt.state(m, sizes.front()), plt.expand));
      return ok;
    }

    if (widder->parsed()) {
      const Permutation w = widderschin(k);
      if (format == "json") {
        out << nlohmann::json{{"schema", "pwo.widderschin/1"}, {"k", k}, {"permutation", perm_json(w)}}.dump(2) << '\n';
      } else {
        out << to_string(w) << '\n';
      }
      return ok;
    }

    if (thue->parsed()) {
      const std::string w = thue_morse(generation);
      out << (substitute ? tm_substitute(w) : w) << '\n';
      return ok;
    }
  } catch (const usage_error& e) {
    err << "pwo: " << e.what() << '\n';
    return usage;
  } catch (const parse_error& e) {
    err << "pwo: " << e.what() << '\n';
    return usage;
  } catch (const error& e) {
    err << "pwo: " << e.what() << '\n';
    return failure;
  }
  return usage;
}

}  // namespace pwo::cli

#endif  // PWO_TOOLS_CLI_HPP
