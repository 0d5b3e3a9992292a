// Command-line front end: validate, homs, rewrite, compose, colimit,
// gen-mesh and bench.
#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "catrw/io.hpp"
#include "catrw/mesh.hpp"

using namespace catrw;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kInputError = 2;

// Thrown to exit with code 1 after the violations have been printed.
struct ViolationsReported {};

void load_schemas(Workspace& ws, const std::vector<std::string>& files) {
  for (const auto& f : files) ws.add_schema(schema_from_json(read_json_file(f)));
}

CSetPtr load_instance(const std::string& file, const Workspace& ws) {
  return share(instance_from_json(read_json_file(file), ws));
}

enum class FileKind { Schema, Instance, Rule, Cospan, Diagram };

FileKind detect(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (j.contains("objects")) return FileKind::Schema;
  if (j.contains("kind")) return FileKind::Rule;
  if (j.contains("apex")) return FileKind::Cospan;
  if (j.contains("nodes")) return FileKind::Diagram;
  if (j.contains("schema")) return FileKind::Instance;
  throw ParseError("cannot tell what this file contains");
}

// Prints one line per problem; returns the number of problems.
std::size_t validate_file(const std::string& file, Workspace& ws) {
  const Json j = read_json_file(file);
  std::vector<std::string> problems;
  switch (detect(j)) {
    case FileKind::Schema: {
      const auto p = schema_presentation_from_json(j);
      problems = validate_schema(p);
      if (problems.empty() && p.name) ws.add_schema(Schema::make(p));
      break;
    }
    case FileKind::Instance: {
      const CSet x = instance_from_json_unchecked(j, ws);
      for (const auto& v : validate_instance(x)) problems.push_back(to_string(v, x.schema()));
      break;
    }
    case FileKind::Rule:
      try {
        rule_from_json(j, ws);
      } catch (const InvalidInstance& e) {
        problems.push_back(e.what());
      } catch (const NotMonic& e) {
        problems.push_back(e.what());
      } catch (const std::invalid_argument& e) {
        problems.push_back(e.what());
      }
      break;
    case FileKind::Cospan:
      try {
        const auto c = cospan_from_json(j, ws);
        problems = validate_cospan(c, default_interface(c.apex->schema()));
      } catch (const InvalidInstance& e) {
        problems.push_back(e.what());
      }
      break;
    case FileKind::Diagram:
      try {
        problems = diagram_from_json(j, ws).validate();
      } catch (const InvalidInstance& e) {
        problems.push_back(e.what());
      }
      break;
  }
  if (problems.empty()) std::cout << file << ": ok\n";
  for (const auto& p : problems) std::cout << file << ": " << p << "\n";
  return problems.size();
}

Json outcome_to_json(const RewriteOutcome& o) {
  Json j = Json::object();
  j["result"] = instance_to_json(*o.result);
  j["K"] = instance_to_json(*o.k);
  j["match"] = transformation_to_json(o.match);
  j["k_to_g"] = transformation_to_json(o.k_to_g);
  j["k_to_h"] = transformation_to_json(o.k_to_h);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catrw: rewriting of C-sets"};
  app.require_subcommand(1);
  app.fallthrough();
  std::vector<std::string> schema_files;
  app.add_option("--schema", schema_files, "Extra schema files to load")->check(CLI::ExistingFile);

  // validate
  auto* validate = app.add_subcommand("validate", "Check schema, instance, rule, cospan or diagram files");
  std::vector<std::string> validate_files;
  validate->add_option("files", validate_files)->required();

  // homs
  auto* homs = app.add_subcommand("homs", "Enumerate homomorphisms X -> Y");
  std::string homs_x, homs_y;
  bool homs_monic = false, homs_count = false;
  std::size_t homs_limit = 0;
  homs->add_option("X", homs_x)->required()->check(CLI::ExistingFile);
  homs->add_option("Y", homs_y)->required()->check(CLI::ExistingFile);
  homs->add_flag("--monic", homs_monic, "Only monomorphisms");
  homs->add_flag("--count", homs_count, "Print only the number of results");
  auto* limit_opt = homs->add_option("--limit", homs_limit, "At most N results");

  // rewrite
  auto* rw = app.add_subcommand("rewrite", "Apply a rule at one match or at every match");
  std::string rw_rule, rw_host, rw_match, rw_kind, rw_out;
  bool rw_all = false;
  rw->add_option("RULE", rw_rule)->required()->check(CLI::ExistingFile);
  rw->add_option("G", rw_host)->required()->check(CLI::ExistingFile);
  auto* match_opt = rw->add_option("--match", rw_match, "Match L -> G")->check(CLI::ExistingFile);
  auto* all_opt = rw->add_flag("--all", rw_all, "Rewrite independently at every applicable match");
  match_opt->excludes(all_opt);
  rw->add_option("--kind", rw_kind, "Override the rule's kind")->check(CLI::IsMember({"dpo", "spo", "sqpo"}));
  rw->add_option("--out", rw_out, "Directory for result files");

  // compose
  auto* comp = app.add_subcommand("compose", "Compose structured cospans left to right");
  std::vector<std::string> comp_files;
  comp->add_option("cospans", comp_files)->required()->check(CLI::ExistingFile);

  // colimit
  auto* colim = app.add_subcommand("colimit", "Colimit of a diagram");
  std::string colim_file;
  colim->add_option("diagram", colim_file)->required()->check(CLI::ExistingFile);

  // gen-mesh
  auto* mesh = app.add_subcommand("gen-mesh", "Triangulated grid on Delta2");
  std::size_t mesh_rows = 0, mesh_cols = 0;
  mesh->add_option("rows", mesh_rows)->required()->check(CLI::PositiveNumber);
  mesh->add_option("cols", mesh_cols)->required()->check(CLI::PositiveNumber);

  // bench
  auto* bench = app.add_subcommand("bench", "Quadrilateral search / edge-flip timings as CSV");
  std::string bench_task = "homsearch", bench_sizes;
  double bench_batch = 0.02;
  bench->add_option("--task", bench_task)->check(CLI::IsMember({"homsearch", "rewrite"}));
  bench->add_option("--sizes", bench_sizes, "e.g. 2x2,2x3");
  bench->add_option("--min-batch", bench_batch, "Minimum seconds per timing batch");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; usage errors are input errors.
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    Workspace ws;
    load_schemas(ws, schema_files);

    if (*validate) {
      std::size_t problems = 0;
      for (const auto& f : validate_files) problems += validate_file(f, ws);
      return problems == 0 ? kOk : kViolations;
    }

    if (*homs) {
      const auto X = load_instance(homs_x, ws);
      const auto Y = load_instance(homs_y, ws);
      if (!same_schema(X->schema_ptr(), Y->schema_ptr())) throw SchemaMismatch("X and Y are on different schemas");
      SearchOptions opts;
      opts.monic = homs_monic;
      if (*limit_opt) opts.limit = homs_limit;
      if (homs_count) {
        std::cout << count_homomorphisms(X, Y, opts) << "\n";
      } else {
        Json out = Json::array();
        for (const auto& h : homomorphisms(X, Y, opts)) out.push_back(transformation_to_json(h));
        std::cout << dump(out);
      }
      return kOk;
    }

    if (*rw) {
      Rule rule = rule_from_json(read_json_file(rw_rule), ws);
      if (!rw_kind.empty()) rule = Rule(rule.l, rule.r, parse_rewrite_kind(rw_kind));
      const auto G = load_instance(rw_host, ws);
      std::vector<RewriteOutcome> outcomes;
      if (rw_all) {
        outcomes = find_and_rewrite(rule, G);
      } else {
        if (rw_match.empty()) throw ParseError("rewrite needs --match FILE or --all");
        const auto m = transformation_from_json(read_json_file(rw_match), rule.L(), G);
        try {
          outcomes.push_back(rewrite(rule, m));
        } catch (const ComplementViolations& e) {
          std::cerr << "rewrite refused: " << e.what() << "\n";
          for (const auto& v : e.violations()) std::cout << to_string(v, G->schema()) << "\n";
          throw ViolationsReported{};
        } catch (const MatchNotNatural& e) {
          std::cerr << e.what() << "\n";
          throw ViolationsReported{};
        } catch (const NotMonic& e) {
          std::cerr << e.what() << "\n";
          throw ViolationsReported{};
        }
      }
      if (!rw_out.empty()) {
        fs::create_directories(rw_out);
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
          const std::string suffix = rw_all ? "_" + std::to_string(i + 1) : "";
          write_text_file(fs::path(rw_out) / ("result" + suffix + ".json"), dump(instance_to_json(*outcomes[i].result)));
          write_text_file(fs::path(rw_out) / ("outcome" + suffix + ".json"), dump(outcome_to_json(outcomes[i])));
        }
        std::cout << outcomes.size() << " outcome(s) written to " << rw_out << "\n";
      } else if (rw_all) {
        Json out = Json::array();
        for (const auto& o : outcomes) out.push_back(instance_to_json(*o.result));
        std::cout << dump(out);
      } else {
        std::cout << dump(instance_to_json(*outcomes.front().result));
      }
      return kOk;
    }

    if (*comp) {
      StructuredCospan acc = cospan_from_json(read_json_file(comp_files.front()), ws);
      for (std::size_t i = 1; i < comp_files.size(); ++i) {
        const auto next = cospan_from_json(read_json_file(comp_files[i]), ws);
        try {
          acc = compose_cospans(acc, next);
        } catch (const FootMismatch& e) {
          std::cerr << comp_files[i] << ": " << e.what() << "\n";
          throw ViolationsReported{};
        }
      }
      std::cout << dump(cospan_to_json(acc));
      return kOk;
    }

    if (*colim) {
      const Diagram d = diagram_from_json(read_json_file(colim_file), ws);
      if (auto problems = d.validate(); !problems.empty()) {
        for (const auto& p : problems) std::cout << colim_file << ": " << p << "\n";
        return kViolations;
      }
      const auto c = diagram_colimit(d);
      Json legs = Json::array();
      for (const auto& leg : c.legs) legs.push_back(transformation_to_json(leg));
      std::cout << dump(Json{{"apex", instance_to_json(*c.apex)}, {"legs", legs}});
      return kOk;
    }

    if (*mesh) {
      std::cout << dump(instance_to_json(gen_mesh(mesh_rows, mesh_cols)));
      return kOk;
    }

    if (*bench) {
      std::cout << bench_csv(run_bench(parse_bench_task(bench_task), parse_sizes(bench_sizes), bench_batch));
      return kOk;
    }
  } catch (const ViolationsReported&) {
    return kViolations;
  } catch (const InvalidInstance& e) {
    std::cerr << e.what() << "\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v.message << "\n";
    return kViolations;
  } catch (const InvalidSchema& e) {
    std::cerr << e.what() << "\n";
    return kViolations;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnknownReference& e) {
    std::cerr << "unknown reference: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
