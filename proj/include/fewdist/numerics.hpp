#pragma once

// Exact integer/rational arithmetic, dense rational matrices and a small
// exact simplex solver. Integer and Rational are GMP types; every mpq_class
// produced by arithmetic is already canonical (lowest terms, positive
// denominator).

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fewdist {

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown for violated preconditions. The C API maps it to FD_ERR_INVALID.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an internal consistency check fails.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Integer binomial(long n, long k);
// n! / (a! b! c! (n-a-b-c)!), zero when any part is negative.
Integer multinomial(long n, long a, long b, long c);
Integer power_of_two(unsigned long e);

Rational make_rational(const Integer& num, const Integer& den);
Integer floor_of(const Rational& q);
bool is_integer(const Rational& q);

// "p/q", or "p" when q = 1, with a leading '-' for negatives.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
// Inverse of to_string; throws InvalidArgument on malformed text.
Rational parse_rational(std::string_view text);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const;
  RatMatrix principal_submatrix(const std::vector<std::size_t>& idx) const;
  std::vector<double> to_doubles() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Fraction-free (Bareiss) determinant. Rows are first scaled to integers.
Rational determinant(const RatMatrix& m);

// Exact positive-semidefiniteness test for a symmetric matrix.
bool psd_check(const RatMatrix& m);

// Solves m x = rhs for square nonsingular m; throws InvalidArgument otherwise.
std::vector<Rational> solve_linear(const RatMatrix& m, const std::vector<Rational>& rhs);

// maximize c.f subject to A f >= b, f >= 0.
struct LPProblem {
  std::vector<Rational> objective;
  RatMatrix constraints;
  std::vector<Rational> rhs;
};

enum class LPStatus { Optimal, Unbounded, Infeasible };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational value;
  std::vector<Rational> solution;
};

LPResult lp_maximize(const LPProblem& p);

const char* to_string(LPStatus s);

}  // namespace fewdist
