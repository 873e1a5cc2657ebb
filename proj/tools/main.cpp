#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "brauer/gluing.hpp"
#include "brauer/io.hpp"
#include "brauer/verify.hpp"

using namespace brauer;

namespace {

struct TreeSource {
  std::string file;
  std::size_t line = 0;
  std::size_t star = 0;
  std::size_t random = 0;
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* app) {
    app->add_option("--tree", file, "tree document");
    app->add_option("--line", line, "path with n edges");
    app->add_option("--star", star, "star with n edges");
    app->add_option("--random", random, "random plane tree with n edges");
    app->add_option("--seed", seed, "seed for --random");
  }

  PlaneTree load() const {
    const int given = !file.empty() + (line > 0) + (star > 0) + (random > 0);
    if (given != 1) throw InputError("give exactly one of --tree, --line, --star, --random");
    if (!file.empty()) return read_tree_file(file);
    if (line > 0) return line_tree(line);
    if (star > 0) return star_tree(star);
    if (!seed) throw InputError("--random needs --seed");
    return random_tree(random, *seed);
  }
};

struct Output {
  std::string path;
  bool table = false;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
  }
  void write(const Json& doc) const { write(doc.dump(2) + "\n"); }
};

EdgeId edge_in(const PlaneTree& g, int id) {
  const EdgeId e{id};
  if (!g.contains(e)) throw InputError("no edge " + std::to_string(id) + " in the tree");
  return e;
}

int emit(const Output& out, const Report& r) {
  if (out.table)
    out.write(report_table(r));
  else
    out.write(report_to_json(r));
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-term tilting complexes over Brauer tree algebras"};
  app.require_subcommand(1);

  TreeSource src;
  Output out;
  std::size_t bound = 10;
  std::string field = "Q";

  auto common = [&](CLI::App* sub) {
    src.attach(sub);
    sub->add_option("--out", out.path, "write to a file instead of stdout");
    sub->add_flag("--table", out.table, "aligned text instead of JSON");
    sub->add_option("--bound", bound, "largest tree to enumerate")->capture_default_str();
    sub->add_option("--field", field, "rank field: Q, GF2 or GF3")->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "check a tree document");
  common(validate);
  auto* enumerate = app.add_subcommand("enumerate", "dump all complete collections");
  common(enumerate);
  int edge = 0;
  auto* count = app.add_subcommand("count", "distribution of g_e over all collections");
  common(count);
  count->add_option("--edge", edge, "edge id")->required();
  std::string suite;
  bool all_edges = false;
  long max_p = 12, max_q = 12;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"main", "gluing", "flip", "opposite", "lemma2", "lemma1"}));
  verify->add_flag("--all-edges", all_edges, "run edge suites on every edge");
  verify->add_option("--edge", edge, "edge id for edge suites");
  verify->add_option("--max-p", max_p)->capture_default_str();
  verify->add_option("--max-q", max_q)->capture_default_str();
  auto* glue = app.add_subcommand("glue", "gluing decomposition report at an edge");
  common(glue);
  glue->add_option("--edge", edge, "edge id")->required();
  auto* flipc = app.add_subcommand("flip", "write the flipped tree");
  common(flipc);
  flipc->add_option("--edge", edge, "edge id")->required();
  bool relations = false;
  auto* quiver = app.add_subcommand("quiver", "export the quiver or its relations");
  common(quiver);
  quiver->add_flag("--relations", relations, "relation generators instead of the graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    EnumerateOptions opts;
    opts.max_edges = bound;
    opts.field = parse_field(field);

    if (verify->parsed() && suite == "lemma2") return emit(out, verify_lemma2(max_p, max_q));

    const PlaneTree g = src.load();
    if (validate->parsed()) {
      if (out.table)
        out.write("valid: " + std::to_string(g.vertex_count()) + " vertices, " +
                  std::to_string(g.edge_count()) + " edges\n");
      else
        out.write(tree_to_json(g));
      return 0;
    }
    if (flipc->parsed()) {
      out.write(tree_to_json(flip(g, edge_in(g, edge))));
      return 0;
    }
    if (quiver->parsed()) {
      const Quiver q = build_quiver(g);
      if (relations)
        out.write(relations_to_json(g, q));
      else
        out.write(quiver_dot(g, q));
      return 0;
    }

    auto set = std::make_shared<const CollectionSet>(CollectionSet::enumerate(g, opts));
    if (enumerate->parsed()) {
      out.write(Json{{"count", set->size()}, {"collections", collections_to_json(*set)}});
      return 0;
    }
    if (count->parsed()) {
      const EdgeId e = edge_in(g, edge);
      const auto c = set->counts_by_gvector(e);
      if (out.table)
        out.write(counts_table(e, c));
      else
        out.write(counts_to_json(e, c));
      return 0;
    }
    if (glue->parsed())
      return emit(out, verify_gluing_decomposition(GluingContext::build(set, edge_in(g, edge), opts)));

    // verify
    std::vector<EdgeId> edges;
    if (all_edges)
      edges.assign(g.edges().begin(), g.edges().end());
    else if (edge != 0)
      edges.push_back(edge_in(g, edge));
    const bool per_edge = suite == "gluing" || suite == "flip" || suite == "lemma1";
    if (per_edge && edges.empty()) throw InputError("suite '" + suite + "' needs --edge or --all-edges");

    Report rep;
    rep.suite = suite;
    if (suite == "main") rep = verify_main_theorem(*set);
    if (suite == "opposite")
      rep = verify_opposite(*set, CollectionSet::enumerate(opposite(g), opts));
    for (EdgeId e : edges) {
      if (suite == "gluing") rep.append(verify_gluing_decomposition(GluingContext::build(set, e, opts)));
      if (suite == "flip") rep.append(verify_flip(*set, CollectionSet::enumerate(flip(g, e), opts), e));
      if (suite == "lemma1") {
        auto f = lemma1_partner(g, e);
        if (!f) {
          if (!all_edges) throw InputError("lemma1 needs an external edge of a tree with n >= 2");
          continue;
        }
        rep.append(verify_lemma1_subsets(*set, e, *f, opts));
      }
    }
    return emit(out, rep);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TheoremViolation& e) {
    std::cerr << "claim failed: " << e.what() << "\n";
    return 1;
  }
}
