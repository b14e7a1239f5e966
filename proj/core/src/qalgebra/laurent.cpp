#include "qlink/qalgebra/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qlink/errors.hpp"

namespace qlink {

LaurentPoly::LaurentPoly(char var, std::vector<Term> terms)
    : var_(var), terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  terms_ = std::move(merged);
  prune();
}

LaurentPoly LaurentPoly::constant(const BigInt& c, char var) {
  return monomial(0, c, var);
}

LaurentPoly LaurentPoly::monomial(int exp, const BigInt& c, char var) {
  LaurentPoly p(var);
  if (c != 0) p.terms_.emplace_back(exp, c);
  return p;
}

void LaurentPoly::prune() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) { return t.second == 0; }),
               terms_.end());
}

int LaurentPoly::min_deg() const {
  if (terms_.empty()) throw ArgumentError("min_deg of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_deg() const {
  if (terms_.empty()) throw ArgumentError("max_deg of zero polynomial");
  return terms_.back().first;
}

BigInt LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return 0;
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

void LaurentPoly::add_scaled_shifted(const LaurentPoly& p, int shift,
                                     const BigInt& c) {
  if (p.terms_.empty() || c == 0) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + p.terms_.size());
  auto i = terms_.begin();
  auto j = p.terms_.begin();
  while (i != terms_.end() || j != p.terms_.end()) {
    if (j == p.terms_.end() || (i != terms_.end() && i->first < j->first + shift)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == terms_.end() || j->first + shift < i->first) {
      out.emplace_back(j->first + shift, j->second * c);
      ++j;
    } else {
      BigInt v = i->second + j->second * c;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

void LaurentPoly::add_shifted(const LaurentPoly& p, int shift) {
  if (p.terms_.empty()) return;
  if (terms_.empty()) {
    terms_ = p.terms_;
    for (auto& t : terms_) t.first += shift;
    return;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + p.terms_.size());
  auto i = terms_.begin();
  auto j = p.terms_.begin();
  while (i != terms_.end() || j != p.terms_.end()) {
    if (j == p.terms_.end() || (i != terms_.end() && i->first < j->first + shift)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == terms_.end() || j->first + shift < i->first) {
      out.emplace_back(j->first + shift, j->second);
      ++j;
    } else {
      BigInt v = i->second + j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_shifted(o, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled_shifted(o, 0, BigInt(-1));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += shift;
  return r;
}

LaurentPoly LaurentPoly::inverted(char new_var) const {
  LaurentPoly r(new_var);
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.emplace_back(-it->first, it->second);
  return r;
}

LaurentPoly LaurentPoly::power_substituted(int k) const {
  if (k == 0) return constant(eval_at_one(), var_);
  std::vector<Term> ts;
  for (const auto& t : terms_) ts.emplace_back(t.first * k, t.second);
  return LaurentPoly(var_, std::move(ts));
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(1, var_);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

std::pair<LaurentPoly, bool> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw ArgumentError("division by zero polynomial");
  LaurentPoly q(var_);
  if (is_zero()) return {q, true};
  // Long division from the top degree down; Laurent shifts are free.
  std::map<int, BigInt> rem;
  for (const auto& t : terms_) rem.emplace(t.first, t.second);
  const int dlo = d.min_deg();
  const int dhi = d.max_deg();
  const BigInt& lead = d.terms_.back().second;
  std::vector<Term> qt;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (top->first - dhi < rem.begin()->first - dlo) return {q, false};
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead.get_mpz_t()))
      return {q, false};
    BigInt c = top->second / lead;
    int e = top->first - dhi;
    for (const auto& t : d.terms_) {
      auto& slot = rem[t.first + e];
      slot -= c * t.second;
      if (slot == 0) rem.erase(t.first + e);
    }
    qt.emplace_back(e, std::move(c));
  }
  q = LaurentPoly(var_, std::move(qt));
  return {q, true};
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const BigInt& c = it->second;
    const int e = it->first;
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    BigInt a = abs(c);
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var_;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a.var());
  if (a.is_zero() || b.is_zero()) return r;
  if (a.size() < b.size()) {
    for (const auto& t : a.terms()) r.add_scaled_shifted(b, t.first, t.second);
  } else {
    for (const auto& t : b.terms()) r.add_scaled_shifted(a, t.first, t.second);
  }
  return r;
}

LaurentPoly operator*(LaurentPoly a, const BigInt& c) { return a *= c; }

}  // namespace qlink
