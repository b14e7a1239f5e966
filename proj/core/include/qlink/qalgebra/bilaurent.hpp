#pragma once

#include <map>
#include <string>
#include <utility>

#include "qlink/qalgebra/laurent.hpp"

namespace qlink {

// Two-variable Laurent polynomial keyed by (first exponent, second exponent),
// used for the Kauffman polynomial in (a, z) and the Tutte polynomial in (x, y).
class BiLaurentPoly {
 public:
  using Key = std::pair<int, int>;

  explicit BiLaurentPoly(char v1 = 'a', char v2 = 'z') : v1_(v1), v2_(v2) {}
  static BiLaurentPoly constant(const BigInt& c, char v1 = 'a', char v2 = 'z');
  static BiLaurentPoly monomial(int e1, int e2, const BigInt& c, char v1 = 'a',
                                char v2 = 'z');

  char var1() const { return v1_; }
  char var2() const { return v2_; }
  const std::map<Key, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(int e1, int e2) const;
  // Coefficient of var2^e2 as a polynomial in var1.
  LaurentPoly slice2(int e2) const;
  int max_deg2() const;
  int min_deg2() const;

  BiLaurentPoly& operator+=(const BiLaurentPoly& o);
  BiLaurentPoly& operator-=(const BiLaurentPoly& o);
  BiLaurentPoly operator*(const BiLaurentPoly& o) const;
  BiLaurentPoly operator+(const BiLaurentPoly& o) const;
  BiLaurentPoly operator-(const BiLaurentPoly& o) const;
  BiLaurentPoly operator-() const;
  BiLaurentPoly shifted(int d1, int d2) const;
  // var1 -> var1^{-1}
  BiLaurentPoly inverted1() const;
  // Substitute var1 = p1(A), var2 = p2(A); p1, p2 must be Laurent in one variable.
  LaurentPoly specialize(const LaurentPoly& p1, const LaurentPoly& p2) const;

  bool operator==(const BiLaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const BiLaurentPoly& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  void add_term(const Key& k, const BigInt& c);
  char v1_, v2_;
  std::map<Key, BigInt> terms_;
};

}  // namespace qlink
