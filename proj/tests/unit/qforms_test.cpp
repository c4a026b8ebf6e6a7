#include <doctest.h>

#include "oracles.hpp"
#include "tf/arith/hilbert.hpp"
#include "tf/errors.hpp"
#include "tf/qforms/classify.hpp"
#include "tf/qforms/isotropy.hpp"
#include "tf/qforms/witt.hpp"

using namespace tf::qf;
using tf::arith::squarefree_class;

namespace {

Place P(unsigned long p) { return Place::prime(p); }
const Place kInf = Place::infinity();
SquareClass sc(long v) { return SquareClass::from_squarefree(v); }

QuadraticForm v_k3() { return direct_sum(hyperbolic(3), negative_unit(16)); }

std::vector<long> random_entries(std::mt19937_64& g, int n, long bound) {
  std::vector<long> out;
  for (int i = 0; i < n; ++i) out.push_back(oracle::nonzero(g, bound));
  return out;
}

QuadraticForm from_longs(const std::vector<long>& a) {
  std::vector<Rational> r(a.begin(), a.end());
  return QuadraticForm::diagonal(r);
}

std::vector<long> hasse_as_longs(const BrauerSupport& s) {
  std::vector<long> out;
  for (const Place& v : s.places()) out.push_back(v.is_infinite() ? 0 : v.p().get_si());
  return out;
}

FormInvariants inv(int dim, long det, int r, int s, BrauerSupport h) {
  return FormInvariants{dim, sc(det), r, s, std::move(h)};
}

}  // namespace

TEST_CASE("diagonalize examples") {
  auto h = diagonalize(hyperbolic_gram());
  CHECK(invariants(h) == inv(2, -1, 1, 1, {}));
  CHECK(h.source().has_value());
  CHECK(invariants(diagonalize({{1, 0}, {0, 1}})) == invariants(QuadraticForm::diagonal({1, 1})));
  CHECK(is_isomorphic(diagonalize(negative_e8_gram()), negative_unit(8)));
  CHECK_THROWS_AS(diagonalize({{1, 1}, {1, 1}}), tf::PreconditionError);
  CHECK_THROWS_AS(diagonalize({{1, 2}, {3, 1}}), tf::PreconditionError);
  CHECK_THROWS_AS(QuadraticForm::diagonal({1, 0}), tf::PreconditionError);
}

TEST_CASE("diagonalize preserves determinant and signature of random Gram matrices") {
  auto g = oracle::rng(7);
  int checked = 0;
  while (checked < 150) {
    int n = static_cast<int>(oracle::uniform(g, 1, 6));
    Matrix m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) m[i][j] = m[j][i] = Rational(oracle::uniform(g, -4, 4));
    }
    std::vector<std::vector<mpq_class>> mm(m.begin(), m.end());
    mpq_class det = oracle::determinant(mm);
    if (det == 0) continue;
    ++checked;
    Matrix p;
    std::vector<Rational> piv;
    QuadraticForm f = diagonalize(m, p, piv);
    FormInvariants fi = invariants(f);
    CHECK(fi.det == squarefree_class(det));
    auto [pos, neg] = oracle::signature(mm);
    CHECK(fi.r == pos);
    CHECK(fi.s == neg);
    // P M P^T is the diagonal of pivots.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Rational e = 0;
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) e += p[i][a] * m[a][b] * p[j][b];
        }
        CHECK(e == (i == j ? piv[i] : Rational(0)));
      }
    }
  }
}

TEST_CASE("invariants examples") {
  CHECK(invariants(v_k3()) == inv(22, -1, 3, 19, {P(2), kInf}));
  for (int n = 1; n <= 12; ++n) {
    FormInvariants h = invariants(hyperbolic(n));
    CHECK(h.det == sc(n % 2 == 0 ? 1 : -1));
    CHECK(hasse_bit(h, P(2)) == ((n % 4 == 2 || n % 4 == 3) ? 1 : 0));
  }
  FormInvariants a = invariants(QuadraticForm::diagonal({-2, -6}));
  CHECK(a.hasse == tf::arith::hilbert_support(Rational(-2), Rational(-6)));
  CHECK(a == invariants(diagonalize(negative_a2_gram())));
  CHECK(invariants(QuadraticForm()) == inv(0, 1, 0, 0, {}));
}

TEST_CASE("Hasse invariant matches the definition evaluated by brute force") {
  auto g = oracle::rng(31);
  for (int i = 0; i < 40; ++i) {
    auto a = random_entries(g, static_cast<int>(oracle::uniform(g, 1, 5)), 15);
    CHECK(hasse_as_longs(invariants(from_longs(a)).hasse) == oracle::hasse_brute(a, 13));
  }
}

TEST_CASE("is_isomorphic examples") {
  CHECK(is_isomorphic(QuadraticForm::diagonal({-2, -2}), QuadraticForm::diagonal({-1, -1})));
  CHECK(is_isomorphic(diagonalize(negative_a2_gram()), QuadraticForm::diagonal({-2, -6})));
  CHECK_FALSE(is_isomorphic(QuadraticForm::diagonal({1, -5}), QuadraticForm::diagonal({1, -1})));
  CHECK_FALSE(is_isomorphic(QuadraticForm::diagonal({1, 1}), QuadraticForm::diagonal({1, 1, 1})));
  // Same det and signature, different Hasse invariant.
  CHECK_FALSE(is_isomorphic(QuadraticForm::diagonal({1, 1}), QuadraticForm::diagonal({3, 3})));
}

TEST_CASE("local isomorphism examples") {
  auto a = QuadraticForm::diagonal({1, -5});
  auto b = QuadraticForm::diagonal({1, -1});
  CHECK_FALSE(is_locally_isomorphic(a, b, P(3)));
  CHECK(is_locally_isomorphic(a, b, P(11)));
  CHECK(is_locally_isomorphic(a, a, P(2)));
  CHECK_FALSE(is_locally_isomorphic(hyperbolic(), QuadraticForm::diagonal({1, 1}), kInf));
}

TEST_CASE("global iso iff local iso at the relevant places; equivalence relation") {
  auto g = oracle::rng(77);
  std::vector<QuadraticForm> forms;
  for (int i = 0; i < 60; ++i) forms.push_back(from_longs(random_entries(g, 3, 6)));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    CHECK(is_isomorphic(forms[i], forms[i]));
    for (std::size_t j = 0; j < forms.size(); ++j) {
      const auto& f = forms[i];
      const auto& h = forms[j];
      bool local = is_locally_isomorphic(f, h, kInf);
      for (const Place& v : tf::arith::bad_primes({f.det(), h.det()})) local = local && is_locally_isomorphic(f, h, v);
      // Entries are bounded by 6, so all relevant primes divide 2*3*5.
      for (long p : {3, 5}) local = local && is_locally_isomorphic(f, h, P(p));
      CHECK(is_isomorphic(f, h) == local);
      CHECK(is_isomorphic(f, h) == is_isomorphic(h, f));
    }
  }
}

TEST_CASE("local hyperbolicity") {
  CHECK(is_locally_hyperbolic(v_k3(), P(3)));
  CHECK(is_locally_hyperbolic(v_k3(), P(2)));
  CHECK_FALSE(is_locally_hyperbolic(QuadraticForm::diagonal({1, 1}), P(3)));
  CHECK(is_locally_hyperbolic(QuadraticForm::diagonal({1, 1}), P(5)));
  CHECK_FALSE(is_locally_hyperbolic(QuadraticForm::diagonal({1, 1, 1}), P(5)));
  for (int n = 1; n <= 12; ++n) {
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) CHECK(is_locally_hyperbolic(hyperbolic(n), P(p)));
    CHECK(is_locally_hyperbolic(hyperbolic(n), kInf));
  }
}

TEST_CASE("form_from_invariants examples and errors") {
  CHECK(is_isomorphic(form_from_invariants(inv(2, -1, 1, 1, {})), hyperbolic()));
  CHECK(form_from_invariants(inv(1, 5, 1, 0, {})).entries() == std::vector<SquareClass>{sc(5)});
  auto expect_condition = [](const FormInvariants& t, const std::string& name) {
    try {
      form_from_invariants(t);
      FAIL("expected rejection " << name);
    } catch (const tf::AdmissibilityError& e) {
      CHECK(e.condition() == name);
    }
  };
  expect_condition(inv(2, -1, 1, 1, {P(2), P(3)}), "condition-3");
  expect_condition(inv(2, 1, 1, 1, {}), "condition-1");
  expect_condition(inv(3, -1, 0, 3, {}), "condition-2");
  expect_condition(inv(4, 1, 4, 0, {P(3)}), "reciprocity");
  expect_condition(inv(4, 1, 2, 1, {}), "signature-dimension");
  expect_condition(inv(1, 3, 1, 0, {P(2), P(3)}), "condition-3");
  // Deterministic output.
  auto t = inv(5, -7, 2, 3, {P(7), kInf});
  CHECK(form_from_invariants(t).entries() == form_from_invariants(t).entries());
  CHECK(invariants(form_from_invariants(t)) == t);
}

TEST_CASE("form_from_invariants round trip on random admissible tuples") {
  auto g = oracle::rng(4242);
  const std::vector<long> primes{2, 3, 5, 7, 11, 13};
  int built = 0;
  while (built < 300) {
    int dim = static_cast<int>(oracle::uniform(g, 1, 7));
    int r = static_cast<int>(oracle::uniform(g, 0, dim));
    int s = dim - r;
    long mag = 0;
    do {
      mag = oracle::uniform(g, 1, 200);
    } while (!oracle::is_squarefree_small(mag));
    FormInvariants t;
    t.dim = dim;
    t.r = r;
    t.s = s;
    t.det = sc(s % 2 == 0 ? mag : -mag);
    for (long p : primes) {
      if (oracle::uniform(g, 0, 1)) t.hasse.toggle(P(p));
    }
    if ((s * (s - 1) / 2) % 2 == 1) t.hasse.toggle(kInf);
    // Independent admissibility: even support, small-dimension constraints.
    bool ok = t.hasse.is_even();
    if (dim == 1) ok = ok && t.hasse.empty();
    if (dim == 2) {
      long minus_det = -t.det.value().get_si();
      for (const Place& v : t.hasse.places()) {
        if (!v.is_infinite() && oracle::padic_square_or_zero(mpz_class(minus_det), v.p().get_si())) ok = false;
      }
    }
    CHECK(is_admissible(t) == ok);
    if (!ok) continue;
    ++built;
    QuadraticForm f = form_from_invariants(t);
    CHECK(invariants(f) == t);
  }
}

TEST_CASE("split_complement") {
  auto r = split_complement(v_k3(), QuadraticForm::diagonal({1, 1, -1}));
  REQUIRE(r);
  CHECK(invariants(*r.complement).dim == 19);
  CHECK(invariants(*r.complement).det == sc(1));
  CHECK(invariants(*r.complement).r == 1);
  CHECK(is_isomorphic(direct_sum(QuadraticForm::diagonal({1, 1, -1}), *r.complement), v_k3()));

  auto h = split_complement(hyperbolic(), QuadraticForm::diagonal({3}));
  REQUIRE(h);
  CHECK(h.complement->entries() == std::vector<SquareClass>{sc(-3)});

  auto bad = split_complement(QuadraticForm::diagonal({1, 1}), QuadraticForm::diagonal({-1}));
  CHECK_FALSE(bad);
  CHECK(bad.violation == "signature");

  // <1,1> does not contain <3>: the complement <3> would need Hasse (3,3) at 3.
  auto clash = split_complement(QuadraticForm::diagonal({1, 1}), QuadraticForm::diagonal({3}));
  CHECK_FALSE(clash);
  CHECK(clash.violation == "condition-3");
}

TEST_CASE("split_complement always succeeds in codimension >= 3") {
  auto g = oracle::rng(12);
  for (int i = 0; i < 80; ++i) {
    auto u = from_longs(random_entries(g, static_cast<int>(oracle::uniform(g, 1, 4)), 30));
    int r = u.positive_count() + static_cast<int>(oracle::uniform(g, 1, 3));
    int s = u.negative_count() + static_cast<int>(oracle::uniform(g, 1, 3));
    if (r + s - u.dim() < 3) ++r;
    std::vector<long> vv;
    for (int k = 0; k < r; ++k) vv.push_back(oracle::uniform(g, 1, 20));
    for (int k = 0; k < s; ++k) vv.push_back(-oracle::uniform(g, 1, 20));
    auto v = from_longs(vv);
    auto res = split_complement(v, u);
    REQUIRE(res);
    CHECK(is_isomorphic(direct_sum(u, *res.complement), v));
  }
}

TEST_CASE("represents_zero examples") {
  auto a = represents_zero(QuadraticForm::diagonal({1, -1}));
  CHECK(a.represents_zero);
  REQUIRE(a.witness);
  CHECK(*a.witness == std::vector<Integer>{1, 1});
  auto b = represents_zero(QuadraticForm::diagonal({1, 1, 1}));
  CHECK_FALSE(b.represents_zero);
  CHECK(b.obstruction == kInf);
  auto c = represents_zero(QuadraticForm::diagonal({1, 1, -7}));
  CHECK_FALSE(c.represents_zero);
  CHECK(c.obstruction == P(7));
  CHECK_FALSE(oracle::isotropic_search({1, 1, -7}, 30).has_value());
  auto d = represents_zero(QuadraticForm::diagonal({1, 1, 1, 1, -1}));
  CHECK(d.represents_zero);
  auto e = represents_zero(QuadraticForm::diagonal({5}));
  CHECK_FALSE(e.represents_zero);
  CHECK(e.obstruction == kInf);
  auto k3 = represents_zero(v_k3());
  CHECK(k3.represents_zero);
  CHECK(k3.witness.has_value());
}

TEST_CASE("local isotropy agrees with Springer and 2-adic lifting oracles") {
  auto g = oracle::rng(808);
  for (int i = 0; i < 150; ++i) {
    int n = static_cast<int>(oracle::uniform(g, 2, 4));
    std::vector<long> a;
    for (int k = 0; k < n; ++k) {
      long v = 0;
      do {
        v = oracle::nonzero(g, 30);
      } while (!oracle::is_squarefree_small(v));
      a.push_back(v);
    }
    auto f = from_longs(a);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
      INFO("p=" << p << " n=" << n);
      CHECK(is_locally_isotropic(f, P(p)) == !oracle::anisotropic_at(a, p));
    }
    CHECK(is_locally_isotropic(f, kInf) == !oracle::anisotropic_at(a, 0));
  }
}

TEST_CASE("represents_zero against brute-force search") {
  auto g = oracle::rng(1001);
  for (int i = 0; i < 100; ++i) {
    int n = static_cast<int>(oracle::uniform(g, 1, 4));
    auto a = random_entries(g, n, 30);
    auto f = from_longs(a);
    auto verdict = represents_zero(f);
    auto found = oracle::isotropic_search(a, 50);
    if (found) CHECK(verdict.represents_zero);
    if (!verdict.represents_zero) {
      REQUIRE(verdict.obstruction);
      std::vector<long> classes;
      for (long v : a) classes.push_back(oracle::squarefree_small(v));
      long p = verdict.obstruction->is_infinite() ? 0 : verdict.obstruction->p().get_si();
      CHECK(oracle::anisotropic_at(classes, p));
    }
    if (verdict.witness) {
      Integer s = 0;
      for (std::size_t k = 0; k < a.size(); ++k) s += f.entries()[k].value() * (*verdict.witness)[k] * (*verdict.witness)[k];
      CHECK(s == 0);
    }
  }
}

TEST_CASE("Witt classes") {
  WittClass w = witt_reduce(QuadraticForm::diagonal({1, -5}));
  CHECK(w.torsion());
  CHECK(witt_add(w, w).is_zero());
  CHECK(witt_reduce(hyperbolic()).is_zero());
  CHECK(witt_reduce(hyperbolic()).disc == sc(1));
  WittClass two = witt_reduce(QuadraticForm::diagonal({1, 1}));
  CHECK(two.signature == 2);
  CHECK_FALSE(two.torsion());
  WittClass zero;
  CHECK(witt_add(two, zero) == two);
  CHECK(witt_add(witt_reduce(QuadraticForm::diagonal({1})), witt_reduce(QuadraticForm::diagonal({-1}))).is_zero());
  for (int n = 0; n <= 10; ++n) CHECK(witt_reduce(hyperbolic(n)).is_zero());
}

TEST_CASE("Witt arithmetic is compatible with direct sums") {
  auto g = oracle::rng(55);
  for (int i = 0; i < 200; ++i) {
    auto a = from_longs(random_entries(g, static_cast<int>(oracle::uniform(g, 0, 5)), 40));
    auto b = from_longs(random_entries(g, static_cast<int>(oracle::uniform(g, 0, 5)), 40));
    WittClass wa = witt_reduce(a), wb = witt_reduce(b);
    CHECK(witt_reduce(direct_sum(a, b)) == witt_add(wa, wb));
    CHECK(wa.torsion() == (a.positive_count() == a.negative_count()));
    // Adding hyperbolic planes does not change the class.
    CHECK(witt_reduce(direct_sum(a, hyperbolic(static_cast<int>(oracle::uniform(g, 1, 3))))) == wa);
    // Equal classes in equal dimension means isomorphic forms.
    if (a.dim() == b.dim()) CHECK((wa == wb) == is_isomorphic(a, b));
    // The discriminant is a homomorphism on even-dimensional classes.
    if (a.dim() % 2 == 0 && b.dim() % 2 == 0) CHECK(witt_add(wa, wb).disc == wa.disc * wb.disc);
  }
}
