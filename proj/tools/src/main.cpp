#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tf/cli/query.hpp"

using tf::cli::ExitCode;
using tf::cli::Json;
using tf::cli::SchemaError;

namespace {

enum class Kind { Json, Int, String, JsonOrString };

struct Flag {
  const char* name;
  const char* key;
  Kind kind;
  const char* help;
};

const std::map<std::string, std::pair<std::string, std::vector<Flag>>>& subcommands() {
  static const std::map<std::string, std::pair<std::string, std::vector<Flag>>> table{
      {"form-invariants", {"Dimension, determinant, signature, Hasse support and Witt class of a form",
                           {{"--form", "form", Kind::Json, "form as {\"diagonal\":[..]} or {\"gram\":[[..]]}"}}}},
      {"form-isomorphic", {"Whether two forms are isomorphic over Q",
                           {{"--a", "a", Kind::Json, "first form"}, {"--b", "b", Kind::Json, "second form"}}}},
      {"form-split", {"Find V' with V = U + V'",
                      {{"--v", "v", Kind::Json, "ambient form"}, {"--u", "u", Kind::Json, "summand"}}}},
      {"represents-zero", {"Hasse-Minkowski isotropy decision with witness or obstruction",
                           {{"--form", "form", Kind::Json, "form"},
                            {"--height", "height", Kind::Int, "coordinate bound for the witness search"}}}},
      {"transfer-compute", {"Explicit trace form of a diagonal form over a quadratic field",
                            {{"--field", "field", Kind::Json, "quadratic field"},
                             {"--W", "W", Kind::Json, "entries: [a,b] for a+b*sqrt(d), or rationals"}}}},
      {"transfer-feasible", {"Whether a form is a transfer, alone or inside an ambient space",
                             {{"--field", "field", Kind::Json, "number field"},
                              {"--form", "form", Kind::Json, "candidate transfer U"},
                              {"--ambient", "ambient", Kind::JsonOrString, "family name, {family,n} or form"},
                              {"--m", "m", Kind::Int, "dimension over the field"},
                              {"--mode", "mode", Kind::String, "rm or cm"},
                              {"--complement", "complement", Kind::Json, "prescribed complement"},
                              {"--witness", "witness", Kind::Json, "totally positive element (coefficients)"}}}},
      {"k3", {"Realizability of T(W) on K3 surfaces",
              {{"--field", "field", Kind::Json, "number field"},
               {"--m", "m", Kind::Int, "dimension over the field"},
               {"--mode", "mode", Kind::String, "rm or cm"}}}},
      {"hk", {"Realizability of T(W) for hyperkaehler families",
              {{"--family", "family", Kind::String, "K3, Kummer, OG6, HilbK3 or OG10"},
               {"--n", "n", Kind::Int, "n for Kummer and HilbK3 types"},
               {"--field", "field", Kind::Json, "number field"},
               {"--m", "m", Kind::Int, "dimension over the field"},
               {"--mode", "mode", Kind::String, "rm or cm"}}}},
      {"picard", {"Compatibility of a K3 Picard lattice with real or complex multiplication",
                  {{"--lattice", "lattice", Kind::Json, "Gram matrix"},
                   {"--field", "field", Kind::Json, "number field"},
                   {"--m", "m", Kind::Int, "dimension over the field"},
                   {"--mode", "mode", Kind::String, "rm or cm"},
                   {"--witness", "witness", Kind::Json, "totally positive element (coefficients)"},
                   {"--primitive-embedding", "primitive_embedding", Kind::Json,
                    "true (default) asserts L embeds primitively in the K3 lattice"}}}},
      {"elliptic", {"Elliptic fibration verdict for K3 surfaces with CM",
                    {{"--case", "case", Kind::String, "named example"},
                     {"--field", "field", Kind::Json, "CM field"},
                     {"--m", "m", Kind::Int, "dimension over the field"},
                     {"--rho", "rho", Kind::Int, "Picard rank"},
                     {"--picard", "picard", Kind::Json, "Picard Gram matrix"}}}},
      {"tabulate", {"Realizability tables over a field catalog",
                    {{"--family", "family", Kind::JsonOrString, "family name, \"all\" or a list"},
                     {"--n", "n", Kind::Int, "n for Kummer and HilbK3 types"},
                     {"--mode", "mode", Kind::String, "rm, cm or both"},
                     {"--catalog", "catalog", Kind::JsonOrString, "catalog file or inline catalog"},
                     {"--field", "field", Kind::Json, "single field instead of a catalog"},
                     {"--md-bound", "md_bound", Kind::Int, "largest md tabulated"}}}},
  };
  return table;
}

Json flag_value(const Flag& f, const std::string& text) {
  const std::string path = std::string("/") + f.key;
  switch (f.kind) {
    case Kind::String: return text;
    case Kind::Int: {
      try {
        std::size_t used = 0;
        const long v = std::stol(text, &used);
        if (used == text.size()) return v;
      } catch (const std::exception&) {
      }
      throw SchemaError(path, "expected an integer, got \"" + text + "\"");
    }
    case Kind::Json:
      try {
        return Json::parse(text);
      } catch (const Json::parse_error& e) {
        throw SchemaError(path, std::string("invalid JSON: ") + e.what());
      }
    case Kind::JsonOrString:
      if (!text.empty() && (text.front() == '{' || text.front() == '[')) {
        try {
          return Json::parse(text);
        } catch (const Json::parse_error& e) {
          throw SchemaError(path, std::string("invalid JSON: ") + e.what());
        }
      }
      return text;
  }
  return text;
}

tf::cli::Query read_query(const std::string& file) {
  std::string text;
  if (file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(file);
    if (!in) throw SchemaError("/", "cannot open " + file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("/", std::string("invalid JSON: ") + e.what());
  }
  const tf::cli::Node root(doc);
  tf::cli::Query q;
  q.command = root.at("command").as_string();
  if (auto p = root.find("payload")) q.payload = p->json();
  return q;
}

int emit(const tf::cli::Report& rep, tf::cli::Format format) {
  std::cout << tf::cli::render(rep, format);
  return static_cast<int>(rep.exit);
}

tf::cli::Report schema_failure(const std::string& path, const std::string& message) {
  tf::cli::Report rep;
  rep.status = "error";
  rep.exit = ExitCode::Schema;
  rep.result = Json{{"error", "schema"}, {"message", message}, {"path", path}};
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transfer forms: rational quadratic forms, transfers and K3/hyperkaehler realizability"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_text = "json";
  std::uint64_t budget = 0;
  unsigned threads = 0;
  app.add_option("--format", format_text, "json, csv or markdown");
  app.add_option("--budget", budget, "work limit for factorization and bounded searches");
  app.add_option("--threads", threads, "worker threads for tabulate (0: all cores)");

  std::map<std::string, std::map<std::string, std::string>> values;
  for (const auto& [name, spec] : subcommands()) {
    CLI::App* sub = app.add_subcommand(name, spec.first);
    for (const auto& f : spec.second) sub->add_option(f.name, values[name][f.key], f.help);
  }
  std::string query_file;
  CLI::App* query = app.add_subcommand("query", "Run a query document {\"command\": ..., \"payload\": {...}}");
  query->add_option("file", query_file, "query file, or - for standard input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit(schema_failure("/", e.what()), tf::cli::Format::Json);
  }

  tf::cli::Format format = tf::cli::Format::Json;
  try {
    format = tf::cli::parse_format(format_text);
  } catch (const SchemaError& e) {
    return emit(schema_failure(e.path(), e.what()), tf::cli::Format::Json);
  }
  tf::cli::RunOptions options;
  if (budget) options.budget = budget;
  options.threads = threads;

  try {
    tf::cli::Query q;
    if (query->parsed()) {
      q = read_query(query_file);
    } else {
      const CLI::App* sub = app.get_subcommands().front();
      q.command = sub->get_name();
      for (const auto& f : subcommands().at(q.command).second) {
        if (sub->count(f.name)) q.payload[f.key] = flag_value(f, values[q.command][f.key]);
      }
    }
    return emit(tf::cli::run_query(q, options), format);
  } catch (const SchemaError& e) {
    return emit(schema_failure(e.path(), e.what()), format);
  }
}
