#include <doctest.h>

#include <filesystem>

#include "support/support.hpp"

using namespace latnet;
using support::fixture;
using support::fixture_path;
using support::run_cli;

TEST_CASE("solve prints the solution tuples one per line") {
  const auto r = run_cli("solve " + fixture_path("table1.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output == "(f,f,t,t,f)\n(f,t,t,t,f)\n");
}

TEST_CASE("validate succeeds quietly on the example") {
  const auto r = run_cli("validate " + fixture_path("table1.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output == "ok\n");
}

TEST_CASE("validate distinguishes unreadable, unparsable, and invalid input") {
  CHECK(run_cli("validate /nonexistent/net.json").exit_code == 2);

  const std::string bad_syntax = "/tmp/latnet_cli_bad.json";
  write_file(bad_syntax, "{ not json");
  CHECK(run_cli("validate " + bad_syntax).exit_code == 2);

  DistributedRelation net = parse_network(fixture("table1.json"));
  net.signature.preorder = Poset::from_pairs(net.signature.names, {{1, 0}}, false);
  const std::string invalid = "/tmp/latnet_cli_invalid.json";
  write_file(invalid, emit_network(net));
  const auto r = run_cli("validate " + invalid);
  CHECK(r.exit_code == 1);
  CHECK(r.output == "preorder pair e2 <= e1: projection is not contained\n");
  std::filesystem::remove(bad_syntax);
  std::filesystem::remove(invalid);
}

TEST_CASE("check reports both candidate conditions with their truth") {
  const auto before = run_cli("check " + fixture_path("table1.json"));
  CHECK(before.exit_code == 0);
  CHECK(before.output == "e2 <= e1: false\ne3 <= e1: false\n");
  const auto after = run_cli("check " + fixture_path("table3.json"));
  CHECK(after.exit_code == 0);
  CHECK(after.output == "e2 <= e1: true\ne3 <= e1: true\n");
}

TEST_CASE("interior emits the canonical table3 fixture document") {
  const auto r = run_cli("interior " + fixture_path("table1.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output == fixture("table3.json"));

  const std::string out = "/tmp/latnet_cli_interior.json";
  CHECK(run_cli("interior " + fixture_path("table1.json") + " -o " + out).exit_code == 0);
  CHECK(read_file(out) == fixture("table3.json"));
  std::filesystem::remove(out);
}

TEST_CASE("context emits the satisfaction context in cxt form") {
  const auto r = run_cli("context " + fixture_path("table1.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output == fixture("table2.cxt"));
}

TEST_CASE("context --all-tuples ranges over every sub-arity") {
  const auto r = run_cli("context --all-tuples " + fixture_path("table1.json"));
  CHECK(r.exit_code == 0);
  const FormalContext ctx = parse_context(r.output);
  CHECK(ctx.objects.size() == 243);
  // Sub-arity objects are tagged with their scheme.
  CHECK(ctx.objects.index_of("(f,t):{a1,a2}") >= 0);
}

TEST_CASE("the cap flag turns huge enumerations into exit code 3") {
  const auto r = run_cli("solve --cap 10 " + fixture_path("table1.json"));
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("exceeds the cap") != std::string::npos);
}

TEST_CASE("lattice prints a summary and writes tables and graph on request") {
  const auto summary = run_cli("lattice " + fixture_path("table1.json"));
  CHECK(summary.exit_code == 0);
  CHECK(summary.output == "objects: 32\nattributes: 5\nconcepts: 23\n");

  // A context file is accepted directly.
  const auto from_cxt = run_cli("lattice " + fixture_path("table2.cxt"));
  CHECK(from_cxt.output == summary.output);

  const std::string dir = "/tmp/latnet_cli_tables";
  const std::string dot = "/tmp/latnet_cli_lattice.dot";
  const auto r = run_cli("lattice " + fixture_path("table1.json") + " --tables " + dir +
                         " --dot " + dot);
  CHECK(r.exit_code == 0);
  CHECK(read_file(dir + "/generators.csv") == fixture("table4_generators.csv"));
  CHECK(read_file(dir + "/successors.csv") == fixture("table5_successors.csv"));
  CHECK(read_file(dir + "/order.csv") == fixture("table6_order.csv"));
  CHECK(read_file(dot).find("rankdir=BT") != std::string::npos);
  std::filesystem::remove_all(dir);
  std::filesystem::remove(dot);
}

TEST_CASE("image moves networks along a morphism in both directions") {
  const std::string args = fixture_path("table1.json") + " --morphism " +
                           fixture_path("diag_morphism.json");
  const auto inv = run_cli("image " + args + " --direction inverse");
  CHECK(inv.exit_code == 0);
  const DistributedRelation moved = parse_network(inv.output);
  CHECK(moved.domain.sorts == std::vector<std::string>{"b"});
  CHECK(moved.rels[0].tuples == std::vector<std::vector<int>>{{0}});
  CHECK(moved.rels[1].tuples == std::vector<std::vector<int>>{{1}});

  CHECK(run_cli("image " + args + " --direction sideways").exit_code == 2);
  // Moving the pinned network back out fans each constraint over the
  // nonempty sub-arities: five constraints times 31 each.
  const std::string one = "/tmp/latnet_cli_one.json";
  write_file(one, inv.output);
  const auto direct = run_cli("image " + one + " --morphism " +
                              fixture_path("diag_morphism.json") + " --direction direct");
  CHECK(direct.exit_code == 0);
  CHECK(parse_network(direct.output).signature.names.size() == 155);
  std::filesystem::remove(one);
}

TEST_CASE("participation filters incidence through a concept ideal") {
  const auto full = run_cli("participation " + fixture_path("table1.json"));
  CHECK(full.exit_code == 0);
  CHECK(full.output == fixture("table2.cxt"));

  const auto bottom =
      run_cli("participation " + fixture_path("table1.json") + " --ideal 23");
  CHECK(bottom.exit_code == 0);
  int crosses = 0;
  for (char c : bottom.output) crosses += c == 'X';
  CHECK(crosses == 10);

  CHECK(run_cli("participation " + fixture_path("table1.json") + " --ideal 24")
            .exit_code == 2);
}

TEST_CASE("usage errors exit with the parse code, help with success") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("solve").exit_code == 2);  // missing required argument
}
