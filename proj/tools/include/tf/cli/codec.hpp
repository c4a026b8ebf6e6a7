#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tf/k3hk/realizability.hpp"
#include "tf/qforms/witt.hpp"

namespace tf::cli {

using Json = nlohmann::ordered_json;

/// A payload does not have the expected shape. `path` is a JSON pointer to
/// the offending value, e.g. "/field/d".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Read access to a JSON value that remembers where it came from, so that
/// every schema error names the failing field.
class Node {
 public:
  Node(const Json& value, std::string path = "") : value_(&value), path_(std::move(path)) {}

  const Json& json() const { return *value_; }
  const std::string& path() const { return path_; }
  std::string where() const { return path_.empty() ? "/" : path_; }

  bool has(const std::string& key) const;
  Node at(const std::string& key) const;
  std::optional<Node> find(const std::string& key) const;
  Node at(std::size_t i) const;
  std::size_t size() const;

  void expect_object() const;
  void expect_array() const;
  [[noreturn]] void fail(const std::string& message) const;

  std::string as_string() const;
  long as_long() const;
  bool as_bool() const;
  arith::Integer as_integer() const;
  /// An integer or a string "p/q".
  arith::Rational as_rational() const;

 private:
  const Json* value_;
  std::string path_;
};

arith::Polynomial parse_polynomial(const Node& n);
qf::Matrix parse_matrix(const Node& n);
/// {"diagonal": [...]} or {"gram": [[...], ...]}.
qf::QuadraticForm parse_form(const Node& n);
/// {"kind": "real_quadratic", "d": 5}, {"kind": "imag_quadratic", "D": 1},
/// {"kind": "cyclotomic", "n": 44}, {"kind": "totally_real", "minpoly": [...]}
/// or {"kind": "cm", "real_minpoly": [...], "theta": [...]}.
nf::NumberField parse_field(const Node& n);
tr::Mode parse_mode(const Node& n);
k3::Family parse_family(const Node& n);

Json to_json(const arith::Rational& r);
Json to_json(const arith::Integer& z);
Json to_json(const arith::SquareClass& c);
Json to_json(const arith::BrauerSupport& s);
Json to_json(const arith::Polynomial& p);
Json to_json(const qf::Matrix& m);
Json to_json(const qf::QuadraticForm& f);
Json to_json(const qf::FormInvariants& inv);
Json to_json(const qf::WittClass& w);
Json to_json(const nf::NumberField& E);
Json to_json(const tr::Certificate& c);
Json to_json(const tr::Obstruction& o);

}  // namespace tf::cli
