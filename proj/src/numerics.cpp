#include "fewdist/numerics.hpp"

#include <algorithm>
#include <utility>

namespace fewdist {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer multinomial(long n, long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0 || a + b + c > n) return 0;
  return binomial(n, a) * binomial(n - a, b) * binomial(n - a - b, c);
}

Integer power_of_two(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  }
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  return make_rational(p, q);
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RatMatrix RatMatrix::principal_submatrix(const std::vector<std::size_t>& idx) const {
  RatMatrix s(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) s(a, b) = (*this)(idx[a], idx[b]);
  return s;
}

std::vector<double> RatMatrix::to_doubles() const {
  std::vector<double> out;
  out.reserve(data_.size());
  for (const auto& q : data_) out.push_back(q.get_d());
  return out;
}

namespace {

Integer lcm_of_denominators(const RatMatrix& m, std::size_t row) {
  Integer l = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(row, j).get_den_mpz_t());
  return l;
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  if (!m.square()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row: det(m) = det(a) / prod(scale).
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = lcm_of_denominators(m, i);
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Integer det = a[n - 1][n - 1] * sign;
  return make_rational(det, scale);
}

bool psd_check(const RatMatrix& m) {
  if (!m.is_symmetric()) throw InvalidArgument("psd_check needs a symmetric matrix");
  const std::size_t n = m.rows();

  // Congruence by diag(l_i), l_i the row denominator lcm, gives an integer
  // symmetric matrix with the same inertia.
  std::vector<Integer> l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = lcm_of_denominators(m, i);
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = m(i, j).get_num() * (l[i] / m(i, j).get_den()) * l[j];

  // Symmetric Bareiss with diagonal pivots. A zero pivot must sit on a zero
  // row, which is then dropped; the remaining steps stay exact.
  std::vector<bool> active(n, true);
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer& p = a[k][k];
    if (p < 0) return false;
    if (p == 0) {
      for (std::size_t j = 0; j < n; ++j)
        if (active[j] && a[k][j] != 0) return false;
      active[k] = false;
      continue;
    }
    active[k] = false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i; j < n; ++j) {
        if (!active[j]) continue;
        Integer v = p * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[j][i] = a[i][j];
      }
    }
    prev = p;
  }
  return true;
}

std::vector<Rational> solve_linear(const RatMatrix& m, const std::vector<Rational>& rhs) {
  if (!m.square() || rhs.size() != m.rows()) throw InvalidArgument("solve_linear: dimension mismatch");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n] = rhs[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw InvalidArgument("solve_linear: singular matrix");
    std::swap(a[k], a[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Unbounded: return "unbounded";
    case LPStatus::Infeasible: return "infeasible";
  }
  return "unknown";
}

namespace {

// Dense tableau for: maximize obj.x subject to rows.x = rhs, x >= 0, rhs >= 0,
// with a feasible starting basis. Bland's rule throughout.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return rows_.empty() ? 0 : rows_[0].size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const std::vector<Rational>& rhs() const { return rhs_; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

  // Returns false if unbounded. Columns in `blocked` never enter.
  bool optimize(const std::vector<Rational>& obj, const std::vector<bool>& blocked) {
    const std::size_t nc = num_cols();
    for (;;) {
      std::vector<Rational> reduced = reduced_costs(obj);
      std::size_t enter = nc;
      for (std::size_t c = 0; c < nc; ++c) {
        if (!blocked[c] && reduced[c] > 0) {
          enter = c;
          break;
        }
      }
      if (enter == nc) return true;

      std::size_t leave = num_rows();
      Rational best;
      for (std::size_t r = 0; r < num_rows(); ++r) {
        if (rows_[r][enter] <= 0) continue;
        Rational ratio = rhs_[r] / rows_[r][enter];
        if (leave == num_rows() || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == num_rows()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = rows_[r][c];
    for (auto& v : rows_[r]) v /= p;
    rhs_[r] /= p;
    for (std::size_t i = 0; i < num_rows(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      Rational f = rows_[i][c];
      for (std::size_t j = 0; j < num_cols(); ++j) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  Rational objective_value(const std::vector<Rational>& obj) const {
    Rational v = 0;
    for (std::size_t r = 0; r < num_rows(); ++r) v += obj[basis_[r]] * rhs_[r];
    return v;
  }

 private:
  std::vector<Rational> reduced_costs(const std::vector<Rational>& obj) const {
    std::vector<Rational> red(obj);
    for (std::size_t r = 0; r < num_rows(); ++r) {
      const Rational& cb = obj[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < num_cols(); ++j) red[j] -= cb * rows_[r][j];
    }
    return red;
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LPResult lp_maximize(const LPProblem& p) {
  const std::size_t nv = p.objective.size();
  const std::size_t m = p.constraints.rows();
  if (p.constraints.cols() != nv || p.rhs.size() != m) throw InvalidArgument("lp_maximize: dimension mismatch");

  // Columns: variables, one surplus per row, then one artificial per row
  // whose right-hand side is positive.
  std::vector<std::size_t> art_row;
  for (std::size_t k = 0; k < m; ++k)
    if (p.rhs[k] > 0) art_row.push_back(k);
  const std::size_t na = art_row.size();
  const std::size_t nc = nv + m + na;

  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(nc));
  std::vector<Rational> rhs(m);
  std::vector<std::size_t> basis(m);
  std::size_t next_art = 0;
  for (std::size_t k = 0; k < m; ++k) {
    if (p.rhs[k] > 0) {
      // a.f - s + art = b
      for (std::size_t j = 0; j < nv; ++j) rows[k][j] = p.constraints(k, j);
      rows[k][nv + k] = -1;
      rows[k][nv + m + next_art] = 1;
      rhs[k] = p.rhs[k];
      basis[k] = nv + m + next_art;
      ++next_art;
    } else {
      // -a.f + s = -b
      for (std::size_t j = 0; j < nv; ++j) rows[k][j] = -p.constraints(k, j);
      rows[k][nv + k] = 1;
      rhs[k] = -p.rhs[k];
      basis[k] = nv + k;
    }
  }
  Tableau tab(std::move(rows), std::move(rhs), std::move(basis));

  std::vector<bool> blocked(nc, false);
  if (na > 0) {
    std::vector<Rational> phase1(nc);
    for (std::size_t a = 0; a < na; ++a) phase1[nv + m + a] = -1;
    tab.optimize(phase1, blocked);
    if (tab.objective_value(phase1) < 0) return {LPStatus::Infeasible, 0, {}};
    // Drive artificial variables out of the basis.
    for (std::size_t r = 0; r < tab.num_rows();) {
      if (tab.basis()[r] < nv + m) {
        ++r;
        continue;
      }
      std::size_t c = 0;
      while (c < nv + m && tab.at(r, c) == 0) ++c;
      if (c == nv + m) {
        tab.drop_row(r);
      } else {
        tab.pivot(r, c);
        ++r;
      }
    }
    for (std::size_t a = 0; a < na; ++a) blocked[nv + m + a] = true;
  }

  std::vector<Rational> obj(nc);
  for (std::size_t j = 0; j < nv; ++j) obj[j] = p.objective[j];
  if (!tab.optimize(obj, blocked)) return {LPStatus::Unbounded, 0, {}};

  LPResult res;
  res.status = LPStatus::Optimal;
  res.solution.assign(nv, 0);
  for (std::size_t r = 0; r < tab.num_rows(); ++r)
    if (tab.basis()[r] < nv) res.solution[tab.basis()[r]] = tab.rhs()[r];
  res.value = 0;
  for (std::size_t j = 0; j < nv; ++j) res.value += p.objective[j] * res.solution[j];

  for (std::size_t k = 0; k < m; ++k) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < nv; ++j) lhs += p.constraints(k, j) * res.solution[j];
    if (lhs < p.rhs[k]) throw InternalError("simplex produced an infeasible point");
  }
  for (const auto& v : res.solution)
    if (v < 0) throw InternalError("simplex produced a negative variable");
  return res;
}

}  // namespace fewdist
