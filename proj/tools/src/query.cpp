#include "tf/cli/query.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "tf/arith/factor.hpp"
#include "tf/cli/tabulate.hpp"
#include "tf/errors.hpp"
#include "tf/qforms/isotropy.hpp"

namespace tf::cli {

using arith::Rational;
using arith::SquareClass;
using nf::NumberField;
using qf::QuadraticForm;

Json Report::to_json() const { return Json{{"status", status}, {"result", result}, {"provenance", provenance}}; }

namespace {

struct Context {
  RunOptions options;
};

void allow_keys(const Node& payload, std::initializer_list<const char*> keys) {
  payload.expect_object();
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : payload.json().items()) {
    if (!allowed.count(key)) throw SchemaError(payload.path() + "/" + key, "unknown field");
  }
}

int positive_int(const Node& n) {
  const long v = n.as_long();
  if (v < 1 || v > 1000) n.fail("expected an integer in 1..1000");
  return static_cast<int>(v);
}

tr::Mode mode_for(const Node& payload, const NumberField& E) {
  if (auto m = payload.find("mode")) return parse_mode(*m);
  return E.is_cm() ? tr::Mode::CM : tr::Mode::RM;
}

std::optional<arith::Polynomial> witness_of(const Node& payload) {
  if (auto w = payload.find("witness")) return parse_polynomial(*w);
  return std::nullopt;
}

Json verdict_provenance(const tr::TransferVerdict& v) {
  Json p{{"criterion", v.criterion}};
  if (v.obstruction) p["obstruction"] = to_json(*v.obstruction);
  p["notes"] = v.notes;
  return p;
}

Json verdict_result(const tr::TransferVerdict& v) {
  Json r{{"status", tr::to_string(v.status)}, {"feasible", v.feasible()}};
  if (v.certificate) r["certificate"] = to_json(*v.certificate);
  return r;
}

Report verdict_report(const tr::TransferVerdict& v) {
  Report rep;
  rep.result = verdict_result(v);
  rep.provenance = verdict_provenance(v);
  return rep;
}

Report form_invariants(const Node& p, Context&) {
  allow_keys(p, {"form"});
  const QuadraticForm f = parse_form(p.at("form"));
  const auto inv = qf::invariants(f);
  Report rep;
  rep.result = to_json(inv);
  rep.result["diagonal"] = to_json(f)["diagonal"];
  rep.result["witt"] = to_json(qf::witt_class(inv));
  rep.provenance = Json{{"criterion", "invariants"}};
  return rep;
}

Report form_isomorphic(const Node& p, Context&) {
  allow_keys(p, {"a", "b"});
  const auto a = qf::invariants(parse_form(p.at("a")));
  const auto b = qf::invariants(parse_form(p.at("b")));
  Report rep;
  rep.result = Json{{"isomorphic", a == b}};
  rep.provenance = Json{{"criterion", "invariants"}};
  if (a.dim != b.dim) {
    rep.provenance["obstruction"] = Json{{"condition", "dimension"}, {"place", nullptr}, {"detail", ""}};
  } else if (a.det != b.det) {
    rep.provenance["obstruction"] = Json{{"condition", "determinant"}, {"place", nullptr},
                                         {"detail", a.det.to_string() + " vs " + b.det.to_string()}};
  } else if (a.r != b.r) {
    rep.provenance["obstruction"] = Json{{"condition", "signature"}, {"place", "inf"}, {"detail", ""}};
  } else if (a.hasse != b.hasse) {
    const auto diff = a.hasse + b.hasse;
    rep.provenance["obstruction"] =
        Json{{"condition", "hasse"}, {"place", diff.places().front().to_string()}, {"detail", ""}};
  }
  return rep;
}

Report form_split(const Node& p, Context&) {
  allow_keys(p, {"v", "u"});
  const auto split = qf::split_complement(parse_form(p.at("v")), parse_form(p.at("u")));
  Report rep;
  rep.result = Json{{"splits", bool(split)}};
  rep.result["complement"] = split.complement ? to_json(*split.complement) : Json(nullptr);
  rep.result["required"] = split.required ? to_json(*split.required) : Json(nullptr);
  rep.provenance = Json{{"criterion", "complement"}};
  if (!split) {
    rep.provenance["obstruction"] = Json{{"condition", split.violation}, {"place", nullptr}, {"detail", ""}};
  }
  return rep;
}

Report represents_zero(const Node& p, Context& ctx) {
  allow_keys(p, {"form", "height"});
  const QuadraticForm f = parse_form(p.at("form"));
  qf::IsotropyOptions opt;
  if (auto h = p.find("height")) opt.height = positive_int(*h);
  if (ctx.options.budget) opt.work = *ctx.options.budget;
  const auto v = qf::represents_zero(f, opt);
  Report rep;
  rep.result = Json{{"represents_zero", v.represents_zero}};
  if (v.witness) {
    Json w = Json::array();
    for (const auto& x : *v.witness) w.push_back(to_json(x));
    rep.result["witness"] = std::move(w);
  } else {
    rep.result["witness"] = nullptr;
  }
  rep.result["obstruction"] = v.obstruction ? Json(v.obstruction->to_string()) : Json(nullptr);
  rep.provenance = Json{{"criterion", "local-global"}};
  if (v.obstruction) {
    rep.provenance["obstruction"] =
        Json{{"condition", "local-anisotropy"}, {"place", v.obstruction->to_string()}, {"detail", ""}};
  }
  return rep;
}

tr::QuadFieldElement parse_element(const Node& n) {
  if (n.json().is_array()) {
    if (n.size() != 2) n.fail("expected [a, b] for a + b sqrt d");
    return {n.at(0).as_rational(), n.at(1).as_rational()};
  }
  return {n.as_rational(), Rational(0)};
}

Report transfer_compute(const Node& p, Context&) {
  allow_keys(p, {"field", "W"});
  const NumberField E = parse_field(p.at("field"));
  const Node w = p.at("W");
  if (w.size() == 0) w.fail("W must be nonempty");
  const int m = static_cast<int>(w.size());
  QuadraticForm T;
  tr::ConditionC cond;
  tr::PredictedInvariants predicted;
  if (E.kind() == nf::FieldKind::RealQuadratic) {
    const auto& d = E.quadratic_parameter();
    std::vector<tr::QuadFieldElement> W;
    Rational norm = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      W.push_back(parse_element(w.at(i)));
      if (W.back().is_zero()) w.at(i).fail("entries must be nonzero");
      norm *= W.back().norm(d);
    }
    T = tr::transfer_quadratic(d, W);
    cond = tr::condition_C_profile(d, W);
    predicted = tr::predicted_invariants(E, m, SquareClass(norm));
  } else if (E.kind() == nf::FieldKind::ImagQuadratic) {
    std::vector<Rational> W;
    for (std::size_t i = 0; i < w.size(); ++i) {
      W.push_back(w.at(i).as_rational());
      if (W.back() == 0) w.at(i).fail("entries must be nonzero");
    }
    T = tr::transfer_hermitian_imagquad(E.quadratic_parameter(), W);
    cond = tr::condition_C_profile_hermitian(W);
    predicted = tr::predicted_invariants(E, m);
  } else {
    p.at("field").fail("explicit transfers are available for quadratic fields");
  }
  Report rep;
  rep.result = Json{{"transfer", to_json(T)}, {"invariants", to_json(qf::invariants(T))}};
  rep.result["predicted"] = Json{{"dim", predicted.dim}};
  rep.result["predicted"]["det"] = predicted.det ? to_json(*predicted.det) : Json(nullptr);
  Json profile = Json::array();
  for (const auto& [r, s] : cond.profile.per_embedding) profile.push_back({r, s});
  rep.result["condition_C"] = Json{{"profile", std::move(profile)}, {"holds", cond.holds}};
  rep.provenance = Json{{"criterion", E.is_cm() ? "hermitian-trace-form" : "trace-form"}};
  return rep;
}

QuadraticForm parse_ambient(const Node& n) {
  if (n.json().is_string()) return k3::ambient(parse_family(n)).rational_form;
  if (n.has("family")) {
    allow_keys(n, {"family", "n"});
    std::optional<long> size;
    if (auto s = n.find("n")) size = s->as_long();
    return k3::ambient(parse_family(n.at("family")), size).rational_form;
  }
  return parse_form(n);
}

Report transfer_feasible(const Node& p, Context&) {
  allow_keys(p, {"field", "form", "ambient", "m", "mode", "complement", "witness"});
  const NumberField E = parse_field(p.at("field"));
  if (auto a = p.find("ambient")) {
    if (p.has("form")) p.at("form").fail("give either \"form\" or \"ambient\"");
    const QuadraticForm V = parse_ambient(*a);
    std::optional<QuadraticForm> complement;
    if (auto c = p.find("complement")) complement = parse_form(*c);
    return verdict_report(tr::split_transfer_feasible(V, E, positive_int(p.at("m")), mode_for(p, E), complement));
  }
  const QuadraticForm U = parse_form(p.at("form"));
  const tr::Mode mode = mode_for(p, E);
  if ((mode == tr::Mode::CM) != E.is_cm()) {
    throw PreconditionError("mode " + tr::to_string(mode) + " does not match the field " + E.name());
  }
  if (mode == tr::Mode::CM) return verdict_report(tr::cm_transfer_feasible(E, U));
  return verdict_report(tr::rm_transfer_feasible(E, U, witness_of(p)));
}

Report realizability_report(const k3::RealizabilityReport& r) {
  Report rep;
  rep.result = Json{{"feasible", r.feasible}};
  rep.result["family_dim"] = r.family_dimension ? Json(*r.family_dimension) : Json(nullptr);
  rep.result["pic_rank"] = r.pic_rank;
  rep.result["countable"] = r.countable;
  rep.result["hodge_group"] = r.hodge_group_label;
  if (r.verdict) rep.result["verdict"] = verdict_result(*r.verdict);
  rep.provenance = Json{{"criterion", r.criterion}};
  if (r.verdict && r.verdict->obstruction) rep.provenance["obstruction"] = to_json(*r.verdict->obstruction);
  rep.provenance["notes"] = r.notes;
  return rep;
}

Report k3_query(const Node& p, Context&) {
  allow_keys(p, {"field", "m", "mode"});
  const NumberField E = parse_field(p.at("field"));
  return realizability_report(k3::k3_realizable(E, positive_int(p.at("m")), mode_for(p, E)));
}

Report hk_query(const Node& p, Context&) {
  allow_keys(p, {"family", "n", "field", "m", "mode"});
  const k3::Family family = parse_family(p.at("family"));
  std::optional<long> n;
  if (auto s = p.find("n")) n = s->as_long();
  const NumberField E = parse_field(p.at("field"));
  auto rep = realizability_report(k3::hk_realizable(family, n, E, positive_int(p.at("m")), mode_for(p, E)));
  const auto A = k3::ambient(family, n);
  rep.result["b2"] = A.b2;
  rep.result["lattice"] = A.integral_label;
  return rep;
}

Report picard_query(const Node& p, Context&) {
  allow_keys(p, {"lattice", "field", "m", "mode", "witness", "primitive_embedding"});
  const qf::Matrix L = parse_matrix(p.at("lattice"));
  const NumberField E = parse_field(p.at("field"));
  if (auto e = p.find("primitive_embedding"); e && !e->as_bool()) {
    throw PreconditionError("the criterion needs L to embed primitively in the K3 lattice");
  }
  auto rep = verdict_report(k3::picard_compatible(L, E, positive_int(p.at("m")), mode_for(p, E), witness_of(p)));
  rep.provenance["notes"].push_back("primitive embedding of L into the K3 lattice assumed by the caller");
  return rep;
}

Report elliptic_query(const Node& p, Context&) {
  allow_keys(p, {"case", "field", "m", "rho", "picard"});
  Report rep;
  if (auto c = p.find("case")) {
    if (p.has("field") || p.has("picard")) c->fail("a named case takes no other inputs");
    const auto& ex = k3::famous_example(c->as_string());
    const std::string got = k3::evaluate_example(ex);
    rep.result = Json{{"verdict", got}, {"expected", ex.expected}, {"description", ex.description}};
    rep.provenance = Json{{"criterion", ex.kind == "elliptic" ? "elliptic-rules" : "picard-compatibility"}};
    return rep;
  }
  k3::EllipticContext ctx;
  if (auto f = p.find("field")) ctx.field = parse_field(*f);
  if (auto m = p.find("m")) ctx.m = positive_int(*m);
  if (auto r = p.find("rho")) ctx.rho = positive_int(*r);
  if (auto l = p.find("picard")) ctx.picard = parse_matrix(*l);
  rep.result = Json{{"verdict", k3::to_string(k3::elliptic_fibration_verdict(ctx))}};
  rep.provenance = Json{{"criterion", ctx.picard ? "binary-isotropy" : "elliptic-rules"}};
  return rep;
}

std::vector<k3::Family> parse_families(const Node& n) {
  const std::vector<k3::Family> all{k3::Family::K3, k3::Family::Kummer, k3::Family::OG6, k3::Family::HilbK3,
                                    k3::Family::OG10};
  if (n.json().is_string()) {
    if (n.as_string() == "all") return all;
    return {parse_family(n)};
  }
  std::vector<k3::Family> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(parse_family(n.at(i)));
  if (out.empty()) n.fail("expected at least one family");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Report tabulate_query(const Node& p, Context& ctx) {
  allow_keys(p, {"family", "n", "mode", "catalog", "field", "md_bound"});
  TableConfig config;
  config.threads = ctx.options.threads;
  if (auto f = p.find("family")) config.families = parse_families(*f);
  if (auto n = p.find("n")) config.n = n->as_long();
  if (auto m = p.find("mode")) {
    if (m->json().is_string() && m->as_string() == "both") {
      config.modes = {tr::Mode::RM, tr::Mode::CM};
    } else {
      config.modes = {parse_mode(*m)};
    }
  }
  if (auto b = p.find("md_bound")) config.md_bound = positive_int(*b);
  std::string source;
  if (auto f = p.find("field")) {
    if (p.has("catalog")) f->fail("give either \"field\" or \"catalog\"");
    NumberField E = parse_field(*f);
    (E.is_cm() ? config.catalog.cm : config.catalog.totally_real).push_back(std::move(E));
    source = "inline field";
  } else if (auto c = p.find("catalog")) {
    if (c->json().is_string()) {
      source = c->as_string();
      config.catalog = load_catalog(source);
    } else {
      config.catalog = parse_catalog(*c);
      source = "inline";
    }
  } else {
    source = default_catalog_path();
    config.catalog = load_catalog(source);
  }
  const auto rows = tabulate(config);
  Report rep;
  Json jrows = Json::array();
  for (const auto& r : rows) jrows.push_back(to_json(r));
  rep.result = Json{{"columns", table_columns()}, {"row_count", rows.size()}, {"rows", std::move(jrows)}};
  rep.provenance = Json{{"criterion", "realizability-grid"}, {"catalog", source},
                        {"catalog_version", config.catalog.version}};
  return rep;
}

using Handler = std::function<Report(const Node&, Context&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"form-invariants", form_invariants}, {"form-isomorphic", form_isomorphic},
      {"form-split", form_split},           {"represents-zero", represents_zero},
      {"transfer-compute", transfer_compute}, {"transfer-feasible", transfer_feasible},
      {"k3", k3_query},                     {"hk", hk_query},
      {"picard", picard_query},             {"elliptic", elliptic_query},
      {"tabulate", tabulate_query}};
  return table;
}

Report error_report(ExitCode code, const std::string& kind, const std::string& message) {
  Report rep;
  rep.status = "error";
  rep.exit = code;
  rep.result = Json{{"error", kind}, {"message", message}};
  return rep;
}

/// Applies a work budget for the duration of one query.
class BudgetScope {
 public:
  explicit BudgetScope(const std::optional<std::uint64_t>& budget) : saved_(arith::factor_budget()) {
    if (budget) {
      arith::FactorBudget b = saved_;
      b.rho_iterations = *budget;
      arith::set_factor_budget(b);
    }
  }
  ~BudgetScope() { arith::set_factor_budget(saved_); }

 private:
  arith::FactorBudget saved_;
};

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"form-invariants", "form-isomorphic", "form-split", "represents-zero",
                                              "transfer-compute", "transfer-feasible", "k3", "hk", "picard",
                                              "elliptic", "tabulate"};
  return names;
}

Report run_query(const Query& q, const RunOptions& options) {
  auto it = handlers().find(q.command);
  if (it == handlers().end()) {
    auto rep = error_report(ExitCode::Schema, "schema", "unknown command \"" + q.command + "\"");
    rep.result["path"] = "/command";
    return rep;
  }
  Context ctx{options};
  try {
    BudgetScope scope(options.budget);
    Report rep = it->second(Node(q.payload, ""), ctx);
    rep.provenance["command"] = q.command;
    return rep;
  } catch (const SchemaError& e) {
    auto rep = error_report(ExitCode::Schema, "schema", e.what());
    rep.result["path"] = e.path();
    return rep;
  } catch (const AdmissibilityError& e) {
    auto rep = error_report(ExitCode::Criterion, "criterion", e.what());
    rep.result["condition"] = e.condition();
    return rep;
  } catch (const BudgetExceeded& e) {
    return error_report(ExitCode::Budget, "budget", e.what());
  } catch (const Error& e) {
    return error_report(ExitCode::Criterion, "criterion", e.what());
  }
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "markdown") return Format::Markdown;
  throw SchemaError("/format", "unknown format \"" + text + "\"");
}

namespace {

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                         Format format) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    if (format == Format::Csv) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
    } else {
      out << "|";
      for (const auto& c : cells) out << " " << md_cell(c) << " |";
    }
    out << "\n";
  };
  line(header);
  if (format == Format::Markdown) line(std::vector<std::string>(header.size(), "---"));
  for (const auto& r : rows) line(r);
  return out.str();
}

}  // namespace

std::string render(const Report& r, Format format) {
  if (format == Format::Json) return r.to_json().dump(2) + "\n";
  const Json& res = r.result;
  if (res.is_object() && res.contains("columns") && res.contains("rows")) {
    std::vector<std::string> header = res["columns"].get<std::vector<std::string>>();
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : res["rows"]) {
      std::vector<std::string> cells;
      for (const auto& c : header) cells.push_back(cell_text(row[c]));
      rows.push_back(std::move(cells));
    }
    return render_table(header, rows, format);
  }
  std::vector<std::vector<std::string>> rows{{"status", r.status}};
  for (const auto& [k, v] : res.items()) rows.push_back({k, cell_text(v)});
  for (const auto& [k, v] : r.provenance.items()) rows.push_back({"provenance." + k, cell_text(v)});
  return render_table({"key", "value"}, rows, format);
}

}  // namespace tf::cli
