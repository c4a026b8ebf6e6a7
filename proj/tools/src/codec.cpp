#include "tf/cli/codec.hpp"

#include "tf/errors.hpp"

namespace tf::cli {

using arith::Integer;
using arith::Rational;

bool Node::has(const std::string& key) const { return value_->is_object() && value_->contains(key); }

Node Node::at(const std::string& key) const {
  expect_object();
  auto it = value_->find(key);
  if (it == value_->end()) throw SchemaError(path_ + "/" + key, "required field is missing");
  return Node(*it, path_ + "/" + key);
}

std::optional<Node> Node::find(const std::string& key) const {
  expect_object();
  auto it = value_->find(key);
  if (it == value_->end() || it->is_null()) return std::nullopt;
  return Node(*it, path_ + "/" + key);
}

Node Node::at(std::size_t i) const {
  expect_array();
  if (i >= value_->size()) fail("index " + std::to_string(i) + " out of range");
  return Node((*value_)[i], path_ + "/" + std::to_string(i));
}

std::size_t Node::size() const {
  expect_array();
  return value_->size();
}

void Node::expect_object() const {
  if (!value_->is_object()) fail("expected an object");
}

void Node::expect_array() const {
  if (!value_->is_array()) fail("expected an array");
}

void Node::fail(const std::string& message) const { throw SchemaError(where(), message); }

std::string Node::as_string() const {
  if (!value_->is_string()) fail("expected a string");
  return value_->get<std::string>();
}

long Node::as_long() const {
  if (!value_->is_number_integer()) fail("expected an integer");
  return value_->get<long>();
}

bool Node::as_bool() const {
  if (!value_->is_boolean()) fail("expected a boolean");
  return value_->get<bool>();
}

Integer Node::as_integer() const {
  if (value_->is_number_unsigned()) return Integer(value_->get<unsigned long>());
  if (value_->is_number_integer()) return Integer(value_->get<long>());
  if (value_->is_string()) {
    Integer z;
    const std::string s = value_->get<std::string>();
    if (s.empty() || z.set_str(s, 10) != 0) fail("expected an integer, got \"" + s + "\"");
    return z;
  }
  fail("expected an integer");
}

Rational Node::as_rational() const {
  if (value_->is_number_integer()) return Rational(as_integer());
  if (value_->is_string()) {
    try {
      return arith::parse_rational(value_->get<std::string>());
    } catch (const PreconditionError& e) {
      fail(e.what());
    }
  }
  fail("expected an integer or a string \"p/q\"");
}

arith::Polynomial parse_polynomial(const Node& n) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < n.size(); ++i) c.push_back(n.at(i).as_rational());
  arith::Polynomial p(c);
  if (p.is_zero()) n.fail("polynomial must be nonzero");
  return p;
}

qf::Matrix parse_matrix(const Node& n) {
  const std::size_t rows = n.size();
  if (rows == 0) n.fail("matrix must be nonempty");
  qf::Matrix m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const Node row = n.at(i);
    if (row.size() != rows) row.fail("matrix must be square");
    for (std::size_t j = 0; j < rows; ++j) m[i].push_back(row.at(j).as_rational());
  }
  return m;
}

qf::QuadraticForm parse_form(const Node& n) {
  n.expect_object();
  const bool diag = n.has("diagonal"), gram = n.has("gram");
  if (diag == gram) n.fail("give exactly one of \"diagonal\" or \"gram\"");
  if (gram) return qf::diagonalize(parse_matrix(n.at("gram")));
  const Node d = n.at("diagonal");
  if (d.size() == 0) d.fail("form must be nonempty");
  std::vector<Rational> entries;
  for (std::size_t i = 0; i < d.size(); ++i) entries.push_back(d.at(i).as_rational());
  return qf::QuadraticForm::diagonal(entries);
}

nf::NumberField parse_field(const Node& n) {
  const std::string kind = n.at("kind").as_string();
  if (kind == "real_quadratic") return nf::NumberField::real_quadratic(n.at("d").as_integer());
  if (kind == "imag_quadratic") return nf::NumberField::imag_quadratic(n.at("D").as_integer());
  if (kind == "cyclotomic") return nf::NumberField::cyclotomic(n.at("n").as_long());
  if (kind == "totally_real") {
    std::optional<arith::SquareClass> disc;
    if (auto d = n.find("disc")) disc = arith::SquareClass(d->as_rational());
    std::vector<arith::Polynomial> witnesses;
    if (auto w = n.find("witnesses")) {
      for (std::size_t i = 0; i < w->size(); ++i) witnesses.push_back(parse_polynomial(w->at(i)));
    }
    return nf::NumberField::general_totally_real(parse_polynomial(n.at("minpoly")), disc, std::move(witnesses));
  }
  if (kind == "cm") {
    std::optional<arith::Polynomial> theta;
    if (auto t = n.find("theta")) theta = parse_polynomial(*t);
    std::optional<arith::SquareClass> disc;
    if (auto d = n.find("disc")) disc = arith::SquareClass(d->as_rational());
    std::map<Integer, bool> split;
    if (auto s = n.find("split_primes")) {
      s->expect_object();
      for (const auto& [key, value] : s->json().items()) {
        const Node entry(value, s->path() + "/" + key);
        Integer p;
        if (p.set_str(key, 10) != 0) entry.fail("keys must be primes");
        split[p] = entry.as_bool();
      }
    }
    return nf::NumberField::general_cm(parse_polynomial(n.at("real_minpoly")), theta, disc, std::move(split));
  }
  n.at("kind").fail("unknown field kind \"" + kind + "\"");
}

tr::Mode parse_mode(const Node& n) {
  const std::string s = n.as_string();
  if (s == "rm" || s == "RM") return tr::Mode::RM;
  if (s == "cm" || s == "CM") return tr::Mode::CM;
  n.fail("mode must be \"rm\" or \"cm\"");
}

k3::Family parse_family(const Node& n) {
  try {
    return k3::parse_family(n.as_string());
  } catch (const PreconditionError& e) {
    n.fail(e.what());
  }
}

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json to_json(const Rational& r) {
  if (r.get_den() == 1) return to_json(r.get_num());
  return arith::to_string(r);
}

Json to_json(const arith::SquareClass& c) { return to_json(c.value()); }

Json to_json(const arith::BrauerSupport& s) {
  Json out = Json::array();
  for (const auto& v : s.places()) out.push_back(v.to_string());
  return out;
}

Json to_json(const arith::Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const qf::Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

Json to_json(const qf::QuadraticForm& f) {
  Json d = Json::array();
  for (const auto& c : f.entries()) d.push_back(to_json(c));
  return Json{{"diagonal", std::move(d)}};
}

Json to_json(const qf::FormInvariants& inv) {
  return Json{{"dim", inv.dim}, {"det", to_json(inv.det)}, {"signature", {inv.r, inv.s}}, {"hasse", to_json(inv.hasse)}};
}

Json to_json(const qf::WittClass& w) {
  return Json{{"dim_parity", w.dim_parity}, {"disc", to_json(w.disc)}, {"signature", w.signature},
              {"hasse", to_json(w.hasse)},    {"torsion", w.torsion()},    {"zero", w.is_zero()}};
}

Json to_json(const nf::NumberField& E) {
  return Json{{"name", E.name()}, {"degree", E.degree()}, {"cm", E.is_cm()}, {"disc_class", to_json(E.disc_class())}};
}

Json to_json(const tr::Certificate& c) {
  Json out = Json::object();
  if (c.W) {
    Json w = Json::array();
    for (const auto& x : *c.W) w.push_back({to_json(x.a), to_json(x.b)});
    out["W"] = std::move(w);
  }
  if (c.transfer) out["transfer"] = to_json(*c.transfer);
  if (c.complement) out["complement"] = to_json(*c.complement);
  if (c.complement_form) out["complement_form"] = to_json(*c.complement_form);
  out["complement_forced"] = c.complement_forced;
  out["infinitely_many"] = c.infinitely_many;
  return out;
}

Json to_json(const tr::Obstruction& o) {
  Json out{{"condition", o.condition}};
  out["place"] = o.place ? Json(o.place->to_string()) : Json(nullptr);
  out["detail"] = o.detail;
  return out;
}

}  // namespace tf::cli
