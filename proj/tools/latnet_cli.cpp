#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <string>

#include "latnet/errors.hpp"
#include "latnet/interior.hpp"
#include "latnet/io.hpp"
#include "latnet/participation.hpp"

using namespace latnet;

namespace {

void put(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

int run(int argc, char** argv) {
  CLI::App app{"constraint networks as distributed relations"};
  app.require_subcommand(1);

  std::size_t cap = kDefaultCap;
  bool complete = false;
  app.add_option("--cap", cap, "enumeration cap")->capture_default_str();
  app.add_flag("--complete-down", complete, "close relations downward before validating");

  std::string net_path, out_path, morphism_path, direction, dot_path, tables_dir;
  bool all_tuples = false;
  int ideal = 0;

  const auto load = [&] { return load_network(net_path, complete, cap); };

  CLI::App* validate = app.add_subcommand("validate", "check a network document");
  validate->fallthrough();
  validate->add_option("net", net_path, "network document")->required();
  validate->callback([&] {
    load();
    std::cout << "ok\n";
  });

  CLI::App* solve = app.add_subcommand("solve", "list the solution set");
  solve->fallthrough();
  solve->add_option("net", net_path, "network document")->required();
  solve->callback([&] {
    const DistributedRelation net = load();
    const Relation sols = solution_set(net, cap);
    for (const auto& t : sols.tuples)
      std::cout << render_values(net.domain, sols.arity, t) << "\n";
  });

  CLI::App* inter = app.add_subcommand("interior", "replace every relation by its interior");
  inter->fallthrough();
  inter->add_option("net", net_path, "network document")->required();
  inter->add_option("-o,--out", out_path, "output file, stdout when omitted");
  inter->callback([&] { put(out_path, emit_network(interior(load(), cap))); });

  CLI::App* context = app.add_subcommand("context", "emit the satisfaction context");
  context->fallthrough();
  context->add_option("net", net_path, "network document")->required();
  context->add_flag("--all-tuples", all_tuples,
                    "objects are tuples over every sub-arity, not just full ones");
  context->add_option("-o,--out", out_path, "output file, stdout when omitted");
  context->callback([&] {
    const DistributedRelation net = load();
    const FormalContext ctx = satisfaction_context(
        net, all_tuples ? TupleUniverse::All : TupleUniverse::Full, cap);
    put(out_path, emit_context(ctx));
  });

  CLI::App* lattice = app.add_subcommand("lattice", "enumerate the concept lattice");
  lattice->fallthrough();
  lattice->add_option("input", net_path, "network document or .cxt context")->required();
  lattice->add_option("--dot", dot_path, "write the cover graph here");
  lattice->add_option("--tables", tables_dir, "write generators/successors/order CSVs here");
  lattice->callback([&] {
    FormalContext ctx;
    if (net_path.size() >= 4 && net_path.substr(net_path.size() - 4) == ".cxt")
      ctx = parse_context(read_file(net_path));
    else
      ctx = satisfaction_context(load(), TupleUniverse::Full, cap);
    const ConceptLattice lat = enumerate_concepts(ctx);
    std::cout << "objects: " << ctx.objects.size() << "\n"
              << "attributes: " << ctx.attributes.size() << "\n"
              << "concepts: " << lat.concepts.size() << "\n";
    if (!dot_path.empty()) write_file(dot_path, emit_dot(lat));
    if (!tables_dir.empty()) {
      std::filesystem::create_directories(tables_dir);
      const LatticeTables tables = emit_lattice_tables(lat);
      write_file(tables_dir + "/generators.csv", tables.generators);
      write_file(tables_dir + "/successors.csv", tables.successors);
      write_file(tables_dir + "/order.csv", tables.order);
    }
  });

  CLI::App* check = app.add_subcommand(
      "check", "test every scheme-compatible projective containment");
  check->fallthrough();
  check->add_option("net", net_path, "network document")->required();
  check->callback([&] {
    const DistributedRelation net = load();
    const std::size_t n = net.signature.names.size();
    for (std::size_t d = 0; d < n; ++d)
      for (std::size_t e = 0; e < n; ++e) {
        if (d == e || !arity_subset(net.signature.tau[e], net.signature.tau[d])) continue;
        const bool holds = projective_containment(net.rels[d], net.rels[e]);
        std::cout << net.signature.names[d] << " <= " << net.signature.names[e] << ": "
                  << (holds ? "true" : "false") << "\n";
      }
  });

  CLI::App* image = app.add_subcommand("image", "move a network along a domain morphism");
  image->fallthrough();
  image->add_option("net", net_path, "network document")->required();
  image->add_option("--morphism", morphism_path, "morphism document")->required();
  image->add_option("--direction", direction, "direct or inverse")
      ->required()
      ->check(CLI::IsMember({"direct", "inverse"}));
  image->callback([&] {
    const DomainMorphism m = parse_morphism(read_file(morphism_path));
    ValidationReport report = validate_morphism(m, cap);
    if (!report.empty()) throw ValidationError(std::move(report));
    const DistributedRelation net = load();
    const DistributedRelation out =
        direction == "direct" ? direct_image(m, net, cap) : inverse_image(m, net, cap);
    std::cout << emit_network(out);
  });

  CLI::App* participation =
      app.add_subcommand("participation", "incidence filtered through emphasized concepts");
  participation->fallthrough();
  participation->add_option("net", net_path, "network document")->required();
  participation->add_option("--ideal", ideal,
                            "restrict members to the principal ideal of this concept");
  participation->callback([&] {
    const FormalContext ctx = satisfaction_context(load(), TupleUniverse::Full, cap);
    const ConceptLattice lat = enumerate_concepts(ctx);
    SubLattice sub;
    if (participation->count("--ideal")) {
      if (ideal < 1 || ideal > static_cast<int>(lat.concepts.size()))
        throw InputError("no concept C_" + std::to_string(ideal) + " in this lattice");
      sub = principal_ideal(lat, ideal - 1);
    } else {
      std::vector<int> all(lat.concepts.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
      sub = make_sublattice(lat, std::move(all));
    }
    std::cout << emit_context(participation_context(ctx, lat, sub));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ValidationError& e) {
    for (const auto& line : e.report) std::cerr << line << "\n";
    return 1;
  } catch (const CapacityError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
