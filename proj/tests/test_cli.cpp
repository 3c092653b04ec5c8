#include <catch_amalgamated.hpp>

#include <sstream>

#include "cli.hpp"
#include "reference_matrices.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pwo::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PWO_DATA_DIR) + "/" + name; }

std::string lines(const std::vector<pwo::Permutation>& perms) {
  std::string s;
  for (const auto& p : perms) s += pwo::to_string(p) + "\n";
  return s;
}

}  // namespace

TEST_CASE("cli decide", "[cli]") {
  auto r = run({"decide", "-m", data("fig1.mat")});
  CHECK(r.code == 0);
  CHECK(r.out == "pwo: yes (forest)\n");
  r = run({"decide", "-m", data("w.mat")});
  CHECK(r.out == "pwo: no (single cycle, c=4)\n");
  r = run({"decide", "-m", data("flower.mat"), "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema") == "pwo.decide/1");
  CHECK(j.at("pwo") == false);
  CHECK(j.at("cycle_count") == 3);
  r = run({"decide", "-m", data("w.mat"), "--edges"});
  CHECK(r.out == "pwo: no (single cycle, c=4)\n" + pwo::edge_list(pwo::bipartite_graph(reference::w)));
}

TEST_CASE("cli enumerate", "[cli]") {
  const auto m = pwo::load_matrix(data("column_up_up_down.mat"));
  auto r = run({"enumerate", "-m", data("column_up_up_down.mat"), "-n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == lines(pwo::enumerate_profile_class(m, 4)));
  r = run({"enumerate", "-m", data("column_up_up_down.mat"), "-n", "4", "--complement"});
  CHECK(r.out == "3 2 1 4\n4 2 1 3\n4 3 1 2\n");
  r = run({"enumerate", "-m", data("column_up_down_up.mat"), "-n", "4", "--complement", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("count") == 5);
  CHECK(j.at("permutations")[0] == std::vector<int>{2, 1, 4, 3});
  r = run({"enumerate", "-m", data("column_up_up_down.mat"), "-n", "4", "--threads", "3"});
  CHECK(r.out == lines(pwo::enumerate_profile_class(m, 4)));
  r = run({"enumerate", "-m", data("column_up_up_down.mat"), "-n", "10"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("cli generate", "[cli]") {
  auto r = run({"generate", "-m", data("w.mat"), "-n", "6", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == pwo::format_matrix(pwo::expand_endpoints(pwo::generate_pbar(reference::w, 6))));
  r = run({"generate", "-m", data("w.mat"), "-n", "6", "--one-line", "--no-expand"});
  CHECK(r.out == "5 1 4 2 6 3\n");
  r = run({"generate", "-m", data("w.mat"), "--ns", "9-17:4", "--one-line"});
  std::string expect;
  for (const auto& p : pwo::generate_antichain(reference::w, {9, 13, 17})) expect += pwo::to_string(pwo::matrix_perm(p)) + "\n";
  CHECK(r.out == expect);
  r = run({"generate", "-m", data("w.mat"), "-n", "6", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema") == "pwo.generate/1");
  CHECK(j.at("elements")[0].at("permutation") == std::vector<int>{7, 1, 2, 6, 5, 3, 8, 4});
  CHECK(j.at("elements")[0].at("partition") == pwo::partition_json(pwo::natural_partition(pwo::generate_pbar(reference::w, 6))));
  r = run({"generate", "-m", data("w.mat"), "-n", "6", "--format", "svg"});
  CHECK(r.out == pwo::plot_svg(pwo::plot_spec(pwo::generate_pbar(reference::w, 6))));
}

TEST_CASE("cli generate options", "[cli]") {
  auto r = run({"generate", "-m", data("one_minus.mat"), "-n", "8"});
  CHECK(r.code == 1);
  r = run({"generate", "-m", data("one_minus.mat"), "-n", "8", "--auto-double", "--one-line"});
  CHECK(r.code == 0);
  CHECK(r.err.find("double_matrix") != std::string::npos);
  pwo::GeneratorOptions opts;
  opts.auto_double = true;
  CHECK(r.out == pwo::to_string(pwo::matrix_perm(pwo::expand_endpoints(pwo::generate_pbar(reference::one_minus, 8, opts)))) + "\n");

  r = run({"generate", "-m", data("w.mat"), "-n", "7", "--start-cell", "2,2", "--start-yearn", "top-left",
           "--first-step", "col", "--one-line"});
  opts = {};
  opts.start_cell = pwo::Cell{2, 2};
  opts.start_yearn = pwo::parse_yearn("top-left");
  opts.first_step = pwo::Axis::col;
  CHECK(r.out == pwo::to_string(pwo::matrix_perm(pwo::expand_endpoints(pwo::generate_pbar(reference::w, 7, opts)))) + "\n");

  r = run({"generate", "-m", data("shared_edge.mat"), "-n", "11", "--mode", "shared-edge", "--word", "21", "--one-line"});
  CHECK(r.out == pwo::to_string(pwo::matrix_perm(pwo::expand_endpoints(
                     pwo::generate_from_word(reference::shared_edge, "21", pwo::WordMode::shared_edge, 11)))) + "\n");
  r = run({"generate", "-m", data("flower.mat"), "-n", "20", "--mode", "flower", "--thue", "8", "--one-line"});
  const auto word = pwo::tm_substitute(pwo::thue_morse(8));
  CHECK(r.out == pwo::to_string(pwo::matrix_perm(pwo::expand_endpoints(
                     pwo::generate_from_word(reference::flower, word, pwo::WordMode::flower, 20)))) + "\n");
  r = run({"generate", "-m", data("flower.mat"), "-n", "20", "--mode", "flower", "--one-line"});
  CHECK(r.code == 0);

  CHECK(run({"generate", "-m", data("w.mat"), "-n", "6", "--word", "01"}).code == 2);
  CHECK(run({"generate", "-m", data("w.mat"), "-n", "6", "--start-cell", "x"}).code == 2);
  CHECK(run({"generate", "-m", data("w.mat"), "-n", "6", "--start-yearn", "up"}).code == 2);
  CHECK(run({"generate", "-m", data("w.mat"), "-n", "6", "--ns", "9"}).code == 2);
  CHECK(run({"generate", "-m", data("w.mat"), "--ns", "9,13", "--format", "svg"}).code == 2);
  CHECK(run({"generate", "-m", data("fig1.mat"), "-n", "6"}).code == 1);
  CHECK(run({"generate", "-m", data("w.mat")}).code == 2);
}

TEST_CASE("cli partitions", "[cli]") {
  auto r = run({"partitions", "-m", data("profile_example.mat"), "-p", "5 3 2 4 8 1 6 9 7"});
  CHECK(r.code == 0);
  std::string expect;
  for (const auto& part : pwo::enumerate_m_partitions(pwo::perm_matrix(pwo::Permutation{5, 3, 2, 4, 8, 1, 6, 9, 7}),
                                                      reference::profile_example))
    expect += pwo::to_string(part) + "\n";
  CHECK(r.out == expect);
  CHECK(r.out.find("I=[1,5,10] J=[1,4,6,8,10]") != std::string::npos);

  r = run({"partitions", "-m", data("w.mat"), "-p", "1", "--count"});
  CHECK(r.out == std::to_string(pwo::enumerate_m_partitions(pwo::perm_matrix(pwo::Permutation{1}), reference::w).size()) + "\n");
  r = run({"partitions", "-m", data("column_up_up_down.mat"), "-p", "3214"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  r = run({"partitions", "-m", data("w.mat"), "-p", "2,1", "--format", "json", "--limit", "1"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("count") == 1);
  CHECK(j.at("partitions").size() == 1);
  CHECK(run({"partitions", "-m", data("w.mat")}).code == 2);
  CHECK(run({"partitions", "-m", data("w.mat"), "-p", "1 1"}).code == 2);
  CHECK(run({"partitions", "-m", data("w.mat"), "-p", "1", "--count", "--all"}).code == 2);

  r = run({"partitions", "-m", data("w.mat"), "-P", data("w.mat")});
  CHECK(r.code == 1);
}

TEST_CASE("cli verify", "[cli]") {
  auto r = run({"verify", "-m", data("w.mat"), "--ns", "9,13,17,21"});
  CHECK(r.code == 0);
  CHECK(r.out == "antichain: yes\n");
  r = run({"verify", "-m", data("w.mat"), "--ns", "2,6,9", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  const auto report = pwo::verify_antichain(pwo::generate_antichain(reference::w, {2, 6, 9}));
  CHECK(j.at("antichain") == false);
  CHECK(j.at("comparable") == nlohmann::json::parse("[[2,6],[2,9]]"));
  CHECK(report.comparable.size() == 2);
  CHECK(r.code == 1);
  r = run({"verify", "-m", data("w.mat"), "--ns", "2,6,9"});
  CHECK(r.out == "antichain: no\nP_2 <= P_6\nP_2 <= P_9\n");
  r = run({"verify", "-m", data("w.mat"), "--ns", "9-25:4", "--threads", "4"});
  CHECK(r.out == "antichain: yes\n");
}

TEST_CASE("cli plot, widderschin and thue", "[cli]") {
  auto r = run({"plot", "-m", data("w.mat"), "-n", "6"});
  CHECK(r.out == pwo::plot_svg(pwo::plot_spec(pwo::generate_pbar(reference::w, 6))));
  r = run({"plot", "-m", data("w.mat"), "-n", "6", "--no-expand"});
  CHECK(r.out == pwo::plot_svg(pwo::plot_spec(pwo::generate_pbar(reference::w, 6), false)));
  r = run({"widderschin", "-k", "1"});
  CHECK(r.out == "8 1 5 3 6 7 9 4 10 11 2\n");
  r = run({"widderschin", "-k", "2", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out).at("permutation") == pwo::widderschin(2).values());
  CHECK(run({"widderschin", "-k", "0"}).code == 1);
  r = run({"thue", "-g", "6"});
  CHECK(r.out == pwo::thue_morse(6) + "\n");
  r = run({"thue", "-g", "6", "--substitute"});
  CHECK(r.out == pwo::tm_substitute(pwo::thue_morse(6)) + "\n");
}

TEST_CASE("cli usage errors", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  auto r = run({"decide", "--nope"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"decide"}).code == 2);
  CHECK(run({"decide", "-m", "/nonexistent.mat"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify", "-m", data("w.mat"), "--ns", "9-"}).code == 2);
  CHECK(run({"verify", "-m", data("w.mat"), "--ns", "25-9"}).code == 2);
}

TEST_CASE("parse_ns", "[cli]") {
  CHECK(pwo::cli::parse_ns("9,13") == std::vector<std::size_t>{9, 13});
  CHECK(pwo::cli::parse_ns("9-13") == std::vector<std::size_t>{9, 10, 11, 12, 13});
  CHECK(pwo::cli::parse_ns("9-25:8,30") == std::vector<std::size_t>{9, 17, 25, 30});
  CHECK_THROWS_AS(pwo::cli::parse_ns("a"), pwo::cli::usage_error);
  CHECK_THROWS_AS(pwo::cli::parse_ns("9-25:0"), pwo::cli::usage_error);
  CHECK(pwo::cli::parse_cell("2,3") == pwo::Cell{2, 3});
  CHECK_THROWS_AS(pwo::cli::parse_cell("2;3"), pwo::cli::usage_error);
}
