#include "tf/qforms/form.hpp"

#include "tf/errors.hpp"

namespace tf::qf {

QuadraticForm QuadraticForm::diagonal(const std::vector<Rational>& entries) {
  std::vector<SquareClass> d;
  d.reserve(entries.size());
  for (const Rational& r : entries) {
    if (r == 0) throw PreconditionError("degenerate form: zero diagonal entry");
    d.emplace_back(r);
  }
  return QuadraticForm(std::move(d));
}

QuadraticForm QuadraticForm::diagonal(std::initializer_list<long> entries) {
  std::vector<Rational> r;
  for (long e : entries) r.emplace_back(e);
  return diagonal(r);
}

int QuadraticForm::positive_count() const {
  int n = 0;
  for (const SquareClass& c : diag_) n += c.sign() > 0 ? 1 : 0;
  return n;
}

SquareClass QuadraticForm::det() const {
  SquareClass d;
  for (const SquareClass& c : diag_) d *= c;
  return d;
}

std::string QuadraticForm::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    if (i > 0) out += ",";
    out += diag_[i].to_string();
  }
  return out + ">";
}

QuadraticForm diagonalize(const Matrix& gram) {
  Matrix p;
  std::vector<Rational> pivots;
  return diagonalize(gram, p, pivots);
}

QuadraticForm diagonalize(const Matrix& gram, Matrix& transform, std::vector<Rational>& pivots) {
  const std::size_t n = gram.size();
  for (const auto& row : gram) {
    if (row.size() != n) throw PreconditionError("Gram matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram[i][j] != gram[j][i]) throw PreconditionError("Gram matrix is not symmetric");
    }
  }
  Matrix m = gram;
  Matrix p(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
  // Row op on p and congruence on m: row/col dst += f * row/col src.
  auto add = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t k = 0; k < n; ++k) m[dst][k] += f * m[src][k];
    for (std::size_t k = 0; k < n; ++k) m[k][dst] += f * m[k][src];
    for (std::size_t k = 0; k < n; ++k) p[dst][k] += f * p[src][k];
  };
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c][c] == 0) {
      std::size_t j = c + 1;
      while (j < n && m[j][c] == 0) ++j;
      if (j == n) throw PreconditionError("degenerate form");
      if (m[j][j] != 0) {
        std::swap(m[c], m[j]);
        for (auto& row : m) std::swap(row[c], row[j]);
        std::swap(p[c], p[j]);
      } else {
        // m[c][c] = m[j][j] = 0 and m[c][j] != 0: e_c + e_j is anisotropic.
        add(c, j, Rational(1));
      }
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] != 0) add(r, c, Rational(-m[r][c] / m[c][c]));
    }
  }
  pivots.clear();
  std::vector<SquareClass> d;
  for (std::size_t i = 0; i < n; ++i) {
    pivots.push_back(m[i][i]);
    d.emplace_back(m[i][i]);
  }
  transform = std::move(p);
  return QuadraticForm(std::move(d), gram);
}

QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b) {
  std::vector<SquareClass> d = a.entries();
  d.insert(d.end(), b.entries().begin(), b.entries().end());
  return QuadraticForm(std::move(d));
}

QuadraticForm direct_sum(const std::vector<QuadraticForm>& parts) {
  std::vector<SquareClass> d;
  for (const QuadraticForm& f : parts) d.insert(d.end(), f.entries().begin(), f.entries().end());
  return QuadraticForm(std::move(d));
}

QuadraticForm repeat(const QuadraticForm& f, int n) {
  std::vector<QuadraticForm> parts(std::max(n, 0), f);
  return direct_sum(parts);
}

QuadraticForm hyperbolic(int n) { return repeat(QuadraticForm::diagonal({1, -1}), n); }

QuadraticForm negative_unit(int n) {
  return QuadraticForm(std::vector<SquareClass>(std::max(n, 0), SquareClass::from_squarefree(-1)));
}

Matrix negative_e8_gram() {
  // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
  static const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  Matrix m(8, std::vector<Rational>(8, Rational(0)));
  for (int i = 0; i < 8; ++i) m[i][i] = -2;
  for (const auto& e : edges) m[e[0]][e[1]] = m[e[1]][e[0]] = 1;
  return m;
}

Matrix negative_a2_gram() { return {{-2, 1}, {1, -2}}; }

Matrix hyperbolic_gram() { return {{0, 1}, {1, 0}}; }

Matrix block_sum(const std::vector<Matrix>& blocks) {
  std::size_t n = 0;
  for (const Matrix& b : blocks) n += b.size();
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  std::size_t off = 0;
  for (const Matrix& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) m[off + i][off + j] = b[i][j];
    }
    off += b.size();
  }
  return m;
}

}  // namespace tf::qf
