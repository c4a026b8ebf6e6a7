#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tf/cli/codec.hpp"

namespace tf::cli {

/// Totally real and CM fields a table runs over, in file order.
struct Catalog {
  int version = 0;
  std::vector<nf::NumberField> totally_real;
  std::vector<nf::NumberField> cm;
};

/// {"version": 1, "totally_real": [field, ...], "cm": [field, ...]}.
Catalog parse_catalog(const Node& n);
Catalog load_catalog(const std::string& path);
/// $TF_CATALOG, else the installed catalog, else the one in the source tree.
std::string default_catalog_path();

struct TableConfig {
  std::vector<k3::Family> families{k3::Family::K3};
  /// n for Kummer and HilbK3 types.
  long n = 2;
  std::vector<tr::Mode> modes{tr::Mode::RM, tr::Mode::CM};
  Catalog catalog;
  /// Rows cover m = 1, 2, ... with md <= md_bound.
  int md_bound = 24;
  unsigned threads = 0;
};

struct TableRow {
  k3::Family family = k3::Family::K3;
  tr::Mode mode = tr::Mode::RM;
  std::string field;
  int degree = 0;
  int m = 0;
  bool feasible = false;
  std::optional<int> family_dimension;
  /// Absent when md exceeds b2.
  std::optional<int> pic_rank;
  bool countable = false;
  std::string criterion;
};

/// One row per (family, field, m), sorted by family, mode, degree and m
/// with catalog order breaking ties. Rows are evaluated in parallel; the
/// result does not depend on the thread count.
std::vector<TableRow> tabulate(const TableConfig& config);

const std::vector<std::string>& table_columns();
Json to_json(const TableRow& row);
std::vector<std::string> table_cells(const TableRow& row);

}  // namespace tf::cli
