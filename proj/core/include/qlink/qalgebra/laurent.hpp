#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qlink {

using BigInt = mpz_class;
using Rational = mpq_class;

// long is 64-bit on the supported targets
inline BigInt big(long long v) { return BigInt(static_cast<long>(v)); }
inline Rational rat(long long v) { return Rational(static_cast<long>(v)); }
inline Rational rat(long long num, long long den) {
  Rational q(big(num), big(den));
  q.canonicalize();
  return q;
}

// Sparse Laurent polynomial in one variable with big-integer coefficients.
// Terms are kept sorted by exponent with no zero coefficients, so equality
// is structural.
class LaurentPoly {
 public:
  using Term = std::pair<int, BigInt>;

  explicit LaurentPoly(char var = 'A') : var_(var) {}
  LaurentPoly(char var, std::vector<Term> terms);

  static LaurentPoly constant(const BigInt& c, char var = 'A');
  static LaurentPoly monomial(int exp, const BigInt& c, char var = 'A');

  char var() const { return var_; }
  void set_var(char v) { var_ = v; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int min_deg() const;
  int max_deg() const;
  BigInt coeff(int exp) const;
  BigInt eval_at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const BigInt& c);
  LaurentPoly operator-() const;

  // this += c * x^shift * p
  void add_scaled_shifted(const LaurentPoly& p, int shift, const BigInt& c);
  void add_shifted(const LaurentPoly& p, int shift);

  LaurentPoly shifted(int shift) const;
  // x -> x^{-1}, optionally renaming the variable.
  LaurentPoly inverted(char new_var) const;
  // x -> x^k
  LaurentPoly power_substituted(int k) const;
  LaurentPoly pow(unsigned k) const;

  // Exact division; returns {quotient, remainder-is-zero}.
  std::pair<LaurentPoly, bool> divide_exact(const LaurentPoly& d) const;

  bool operator==(const LaurentPoly& o) const {
    return var_ == o.var_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void prune();
  char var_;
  std::vector<Term> terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const BigInt& c);

}  // namespace qlink
