#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tf/cli/codec.hpp"

namespace tf::cli {

/// Commands accepted by run_query.
const std::vector<std::string>& commands();

struct Query {
  std::string command;
  Json payload = Json::object();
};

enum class ExitCode { Ok = 0, Schema = 2, Criterion = 3, Budget = 4 };

struct Report {
  /// "ok" or "error".
  std::string status = "ok";
  Json result = Json::object();
  /// Deciding criterion, obstruction and notes of the underlying verdict.
  Json provenance = Json::object();
  ExitCode exit = ExitCode::Ok;

  Json to_json() const;
};

struct RunOptions {
  /// Work limit for factorization and bounded searches; library defaults
  /// when absent.
  std::optional<std::uint64_t> budget;
  /// Worker threads for tabulate (0: hardware concurrency).
  unsigned threads = 0;
};

/// Validates the payload against the command's schema and dispatches.
/// Never throws: failures come back as error reports with an exit code.
Report run_query(const Query& q, const RunOptions& options = {});

enum class Format { Json, Csv, Markdown };
/// Throws SchemaError for anything but "json", "csv" and "markdown".
Format parse_format(const std::string& text);

/// Renders a report. Tables (tabulate results) render as CSV or markdown
/// tables; other results as two-column key/value tables.
std::string render(const Report& r, Format format);

}  // namespace tf::cli
