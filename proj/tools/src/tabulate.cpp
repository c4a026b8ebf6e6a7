#include "tf/cli/tabulate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>
#include <tuple>

#include "tf/errors.hpp"


namespace tf::cli {

Catalog parse_catalog(const Node& n) {
  Catalog c;
  c.version = static_cast<int>(n.at("version").as_long());
  if (auto tr = n.find("totally_real")) {
    for (std::size_t i = 0; i < tr->size(); ++i) {
      auto E = parse_field(tr->at(i));
      if (E.is_cm()) tr->at(i).fail("expected a totally real field");
      c.totally_real.push_back(std::move(E));
    }
  }
  if (auto cm = n.find("cm")) {
    for (std::size_t i = 0; i < cm->size(); ++i) {
      auto E = parse_field(cm->at(i));
      if (!E.is_cm()) cm->at(i).fail("expected a CM field");
      c.cm.push_back(std::move(E));
    }
  }
  if (c.totally_real.empty() && c.cm.empty()) n.fail("catalog is empty");
  return c;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("/catalog", "cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("/catalog", path + ": " + e.what());
  }
  return parse_catalog(Node(doc, "/catalog"));
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("TF_CATALOG")) return env;
  if (std::filesystem::exists(TF_INSTALLED_CATALOG)) return TF_INSTALLED_CATALOG;
  return TF_SOURCE_CATALOG;
}

namespace {

struct Task {
  k3::Family family;
  tr::Mode mode;
  const nf::NumberField* field;
  std::size_t index;
  int m;
};

TableRow evaluate(const Task& t, long n) {
  const bool k3 = t.family == k3::Family::K3;
  const auto rep = k3 ? k3::k3_realizable(*t.field, t.m, t.mode)
                      : k3::hk_realizable(t.family, n, *t.field, t.m, t.mode);
  TableRow row;
  row.family = t.family;
  row.mode = t.mode;
  row.field = t.field->name();
  row.degree = t.field->degree();
  row.m = t.m;
  row.feasible = rep.feasible;
  row.family_dimension = rep.family_dimension;
  if (rep.pic_rank >= 0) row.pic_rank = rep.pic_rank;
  row.countable = rep.countable;
  row.criterion = rep.criterion;
  return row;
}

}  // namespace

std::vector<TableRow> tabulate(const TableConfig& config) {
  if (config.md_bound < 1) throw PreconditionError("md bound must be positive");
  std::vector<Task> tasks;
  for (k3::Family f : config.families) {
    for (tr::Mode mode : config.modes) {
      const auto& fields = mode == tr::Mode::RM ? config.catalog.totally_real : config.catalog.cm;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        for (int m = 1; m * fields[i].degree() <= config.md_bound; ++m) tasks.push_back({f, mode, &fields[i], i, m});
      }
    }
  }
  std::stable_sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    return std::tuple(a.family, a.mode, a.field->degree(), a.m, a.index) <
           std::tuple(b.family, b.mode, b.field->degree(), b.m, b.index);
  });

  std::vector<TableRow> rows(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        rows[i] = evaluate(tasks[i], config.n);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

const std::vector<std::string>& table_columns() {
  static const std::vector<std::string> cols{"family", "mode",     "field", "degree",    "m",
                                             "md",     "feasible", "family_dim", "pic_rank", "countable",
                                             "criterion"};
  return cols;
}

Json to_json(const TableRow& r) {
  return Json{{"family", k3::to_string(r.family)},
              {"mode", tr::to_string(r.mode)},
              {"field", r.field},
              {"degree", r.degree},
              {"m", r.m},
              {"md", r.m * r.degree},
              {"feasible", r.feasible},
              {"family_dim", r.family_dimension ? Json(*r.family_dimension) : Json(nullptr)},
              {"pic_rank", r.pic_rank ? Json(*r.pic_rank) : Json(nullptr)},
              {"countable", r.countable},
              {"criterion", r.criterion}};
}

std::vector<std::string> table_cells(const TableRow& r) {
  return {k3::to_string(r.family),
          tr::to_string(r.mode),
          r.field,
          std::to_string(r.degree),
          std::to_string(r.m),
          std::to_string(r.m * r.degree),
          r.feasible ? "true" : "false",
          r.family_dimension ? std::to_string(*r.family_dimension) : "",
          r.pic_rank ? std::to_string(*r.pic_rank) : "",
          r.countable ? "true" : "false",
          r.criterion};
}

}  // namespace tf::cli
