#include <doctest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

#include "tf/cli/query.hpp"
#include "tf/cli/tabulate.hpp"

using tf::cli::ExitCode;
using tf::cli::Json;
using tf::cli::Query;
using tf::cli::run_query;

namespace {

struct Run {
  int exit = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

Run run_tf(const std::vector<std::string>& args) {
  std::string cmd = TF_BINARY;
  for (const auto& a : args) cmd += " " + quote(a);
  Run r;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json run_json(const std::vector<std::string>& args, int expected_exit = 0) {
  const Run r = run_tf(args);
  CHECK_MESSAGE(r.exit == expected_exit, r.out);
  return Json::parse(r.out);
}

Query q(const std::string& command, Json payload) { return Query{command, std::move(payload)}; }

}  // namespace

TEST_CASE("documented examples through the binary") {
  auto k3 = run_json({"k3", "--field", R"({"kind":"imag_quadratic","D":1})", "--m", "10", "--mode", "cm"});
  CHECK(k3["status"] == "ok");
  CHECK(k3["result"]["feasible"] == true);
  CHECK(k3["result"]["family_dim"] == 9);
  CHECK(k3["result"]["pic_rank"] == 2);
  CHECK(k3["provenance"]["criterion"].get<std::string>().size() > 0);

  auto ell = run_json({"elliptic", "--case", "kondo-44"});
  CHECK(ell["result"]["verdict"] == "yes");

  auto iso = run_json({"form-isomorphic", "--a", R"({"gram":[[-2,1],[1,-2]]})", "--b", R"({"diagonal":["-2","-6"]})"});
  CHECK(iso["result"]["isomorphic"] == true);
}

TEST_CASE("exit codes and error reports") {
  auto schema = run_json({"k3", "--field", R"({"kind":"real_quadratic","dd":5})", "--m", "3"}, 2);
  CHECK(schema["status"] == "error");
  CHECK(schema["result"]["path"] == "/field/d");

  auto bad_json = run_json({"k3", "--field", "{oops", "--m", "3"}, 2);
  CHECK(bad_json["result"]["path"] == "/field");

  auto bad_int = run_json({"k3", "--field", R"({"kind":"real_quadratic","d":5})", "--m", "three"}, 2);
  CHECK(bad_int["result"]["path"] == "/m");

  auto mismatch = run_json({"k3", "--field", R"({"kind":"real_quadratic","d":5})", "--m", "3", "--mode", "cm"}, 3);
  CHECK(mismatch["result"]["error"] == "criterion");

  auto not_squarefree = run_json({"k3", "--field", R"({"kind":"real_quadratic","d":8})", "--m", "3"}, 3);
  CHECK(not_squarefree["status"] == "error");

  const std::string huge = "1000000000000000000000000000000000000000000000000000000000000000000000000000000007";
  auto budget = run_json({"--budget", "10", "form-invariants", "--form",
                          R"({"diagonal":[")" + huge + R"(","1"]})"}, 4);
  CHECK(budget["result"]["error"] == "budget");

  auto fmt = run_tf({"--format", "xml", "elliptic", "--case", "kondo-44"});
  CHECK(fmt.exit == 2);

  auto unknown = run_query(q("k3", Json{{"field", {{"kind", "cyclotomic"}, {"n", 7}}}, {"m", 1}, {"extra", 1}}));
  CHECK(unknown.exit == ExitCode::Schema);
  CHECK(unknown.result["path"] == "/extra");

  auto cmd = run_query(q("frobnicate", Json::object()));
  CHECK(cmd.exit == ExitCode::Schema);

  auto adm = run_query(q("form-invariants", Json{{"form", {{"diagonal", {0, 1}}}}}));
  CHECK(adm.exit == ExitCode::Criterion);
}

TEST_CASE("form commands") {
  auto inv = run_query(q("form-invariants", Json{{"form", {{"diagonal", {1, 1, 1, -1, -1, -1}}}}}));
  CHECK(inv.result["dim"] == 6);
  CHECK(inv.result["det"] == -1);
  CHECK(inv.result["signature"] == Json{3, 3});
  CHECK(inv.result["witt"]["torsion"] == true);

  auto notiso = run_query(q("form-isomorphic", Json{{"a", {{"diagonal", {1, 1}}}}, {"b", {{"diagonal", {3, 3}}}}}));
  CHECK(notiso.result["isomorphic"] == false);
  CHECK(notiso.provenance["obstruction"]["condition"] == "hasse");
  CHECK(notiso.provenance["obstruction"]["place"] == "2");

  auto split = run_query(q("form-split", Json{{"v", {{"diagonal", {1, 1, -1, -1}}}}, {"u", {{"diagonal", {1, -1}}}}}));
  CHECK(split.result["splits"] == true);
  auto nosplit = run_query(q("form-split", Json{{"v", {{"diagonal", {1, -1}}}}, {"u", {{"diagonal", {1, 1}}}}}));
  CHECK(nosplit.result["splits"] == false);
  CHECK(nosplit.provenance["obstruction"]["condition"] == "signature");

  auto iso = run_query(q("represents-zero", Json{{"form", {{"diagonal", {1, 1, -2}}}}}));
  CHECK(iso.result["represents_zero"] == true);
  CHECK(iso.result["witness"].is_array());
  auto aniso = run_query(q("represents-zero", Json{{"form", {{"diagonal", {1, 1, -3}}}}}));
  CHECK(aniso.result["represents_zero"] == false);
  CHECK(aniso.result["obstruction"] == "3");
}

TEST_CASE("transfer commands") {
  auto t = run_query(q("transfer-compute", Json{{"field", {{"kind", "real_quadratic"}, {"d", 2}}},
                                                {"W", {Json{1, 1}, Json{1, 0}, -1}}}));
  CHECK(t.exit == ExitCode::Ok);
  CHECK(t.result["invariants"]["dim"] == 6);
  CHECK(t.result["invariants"]["det"] == t.result["predicted"]["det"]);
  CHECK(t.result["condition_C"]["holds"] == false);

  auto h = run_query(q("transfer-compute", Json{{"field", {{"kind", "imag_quadratic"}, {"D", 3}}}, {"W", {1, -1, -1}}}));
  CHECK(h.result["invariants"]["signature"] == Json{2, 4});
  CHECK(h.result["condition_C"]["holds"] == true);

  auto cm = run_query(q("transfer-feasible", Json{{"field", {{"kind", "imag_quadratic"}, {"D", 1}}},
                                                   {"form", {{"diagonal", {1, 1, -1, -1}}}}}));
  CHECK(cm.result["status"] == "feasible");
  CHECK(cm.provenance["criterion"] == "cm-realization");

  auto rm = run_query(q("transfer-feasible", Json{{"field", {{"kind", "real_quadratic"}, {"d", 3}}},
                                                   {"form", {{"diagonal", {1, 1, -1, -1, -1, -1}}}}}));
  CHECK(rm.result["feasible"] == false);
  CHECK(rm.provenance["obstruction"]["condition"] == "norm");

  auto split = run_query(q("transfer-feasible", Json{{"field", {{"kind", "cyclotomic"}, {"n", 44}}},
                                                      {"ambient", "K3"}, {"m", 1}}));
  CHECK(split.result["feasible"] == true);
  CHECK(split.result["certificate"]["complement_forced"] == true);

  auto hk = run_query(q("hk", Json{{"family", "Kummer"}, {"n", 2}, {"field", {{"kind", "cyclotomic"}, {"n", 7}}},
                                   {"m", 1}}));
  CHECK(hk.result["feasible"] == true);
  CHECK(hk.result["b2"] == 7);

  auto pic = run_query(q("picard", Json{{"lattice", {Json{0, 1}, Json{1, 0}}},
                                        {"field", {{"kind", "imag_quadratic"}, {"D", 1}}}, {"m", 10}}));
  CHECK(pic.result["status"] == "feasible");
  auto denied = run_query(q("picard", Json{{"lattice", {Json{0, 1}, Json{1, 0}}},
                                           {"field", {{"kind", "imag_quadratic"}, {"D", 1}}},
                                           {"m", 10},
                                           {"primitive_embedding", false}}));
  CHECK(denied.exit == ExitCode::Criterion);
}

TEST_CASE("tabulate") {
  auto grid = run_query(q("tabulate", Json{{"family", "K3"}, {"mode", "cm"},
                                           {"field", {{"kind", "imag_quadratic"}, {"D", 1}}}, {"md_bound", 20}}));
  REQUIRE(grid.exit == ExitCode::Ok);
  REQUIRE(grid.result["row_count"] == 10);
  for (int m = 1; m <= 10; ++m) {
    const auto& row = grid.result["rows"][m - 1];
    CHECK(row["m"] == m);
    CHECK(row["feasible"] == true);
    CHECK(row["family_dim"] == m - 1);
    CHECK(row["countable"] == (m == 1));
  }

  auto kummer = run_query(q("tabulate", Json{{"family", "Kummer"}, {"n", 2}, {"mode", "cm"},
                                             {"field", {{"kind", "cyclotomic"}, {"n", 15}}}, {"md_bound", 8}}));
  REQUIRE(kummer.result["row_count"] == 1);
  CHECK(kummer.result["rows"][0]["feasible"] == false);
  CHECK(kummer.result["rows"][0]["criterion"] == "projectivity-bound");

  const auto catalog = tf::cli::load_catalog(tf::cli::default_catalog_path());
  auto rm = run_query(q("tabulate", Json{{"family", "K3"}, {"mode", "rm"}, {"md_bound", 21}}));
  std::size_t expected = 0;
  for (const auto& E : catalog.totally_real) expected += 21 / E.degree();
  CHECK(rm.result["row_count"] == expected);
  int last_degree = 0;
  for (const auto& row : rm.result["rows"]) {
    CHECK(row["feasible"] == (row["m"].get<int>() >= 3));
    CHECK(row["degree"].get<int>() >= last_degree);
    last_degree = row["degree"].get<int>();
  }

  // Determinism across thread counts and repeated runs.
  const Json all{{"family", "all"}, {"mode", "both"}};
  const auto one = run_query(q("tabulate", all), {std::nullopt, 1}).to_json().dump();
  const auto many = run_query(q("tabulate", all), {std::nullopt, 8}).to_json().dump();
  CHECK(one == many);
  auto a = run_tf({"--format", "csv", "tabulate", "--family", "all"});
  auto b = run_tf({"--format", "csv", "tabulate", "--family", "all", "--threads", "3"});
  CHECK(a.exit == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("family,mode,field,degree,m,md,feasible", 0) == 0);

  auto md = run_tf({"--format", "markdown", "tabulate", "--field", R"({"kind":"real_quadratic","d":5})",
                    "--md-bound", "8"});
  CHECK(md.out.find("| K3 | rm | Q(sqrt5) | 2 | 3 | 6 | true | 1 | 16 | false |") != std::string::npos);
}

TEST_CASE("query documents") {
  auto r = run_json({"query", "/nonexistent/query.json"}, 2);
  CHECK(r["status"] == "error");
  const std::string doc = R"({"command":"elliptic","payload":{"case":"vorontsov-25"}})";
  const std::string cmd = std::string("echo ") + quote(doc) + " | " + TF_BINARY + " query -";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 1024> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  CHECK(Json::parse(out)["result"]["verdict"] == "no");
}
