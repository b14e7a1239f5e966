#include "qlink/qalgebra/bilaurent.hpp"

#include <sstream>

namespace qlink {

BiLaurentPoly BiLaurentPoly::constant(const BigInt& c, char v1, char v2) {
  return monomial(0, 0, c, v1, v2);
}

BiLaurentPoly BiLaurentPoly::monomial(int e1, int e2, const BigInt& c, char v1,
                                      char v2) {
  BiLaurentPoly p(v1, v2);
  if (c != 0) p.terms_.emplace(Key{e1, e2}, c);
  return p;
}

void BiLaurentPoly::add_term(const Key& k, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt BiLaurentPoly::coeff(int e1, int e2) const {
  auto it = terms_.find({e1, e2});
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly BiLaurentPoly::slice2(int e2) const {
  std::vector<LaurentPoly::Term> ts;
  for (const auto& [k, c] : terms_)
    if (k.second == e2) ts.emplace_back(k.first, c);
  return LaurentPoly(v1_, std::move(ts));
}

int BiLaurentPoly::max_deg2() const {
  int m = 0;
  bool any = false;
  for (const auto& [k, c] : terms_) {
    if (!any || k.second > m) m = k.second;
    any = true;
  }
  return m;
}

int BiLaurentPoly::min_deg2() const {
  int m = 0;
  bool any = false;
  for (const auto& [k, c] : terms_) {
    if (!any || k.second < m) m = k.second;
    any = true;
  }
  return m;
}

BiLaurentPoly& BiLaurentPoly::operator+=(const BiLaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

BiLaurentPoly& BiLaurentPoly::operator-=(const BiLaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

BiLaurentPoly BiLaurentPoly::operator*(const BiLaurentPoly& o) const {
  BiLaurentPoly r(v1_, v2_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      r.add_term({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
  return r;
}

BiLaurentPoly BiLaurentPoly::operator+(const BiLaurentPoly& o) const {
  BiLaurentPoly r = *this;
  return r += o;
}

BiLaurentPoly BiLaurentPoly::operator-(const BiLaurentPoly& o) const {
  BiLaurentPoly r = *this;
  return r -= o;
}

BiLaurentPoly BiLaurentPoly::operator-() const {
  BiLaurentPoly r(v1_, v2_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

BiLaurentPoly BiLaurentPoly::shifted(int d1, int d2) const {
  BiLaurentPoly r(v1_, v2_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first + d1, k.second + d2}, c);
  return r;
}

BiLaurentPoly BiLaurentPoly::inverted1() const {
  BiLaurentPoly r(v1_, v2_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{-k.first, k.second}, c);
  return r;
}

LaurentPoly BiLaurentPoly::specialize(const LaurentPoly& p1,
                                      const LaurentPoly& p2) const {
  // Powers of p1 may be negative; p1 must then be a monomial.
  auto power = [](const LaurentPoly& p, int e) {
    if (e >= 0) return p.pow(static_cast<unsigned>(e));
    const auto& t = p.terms();
    if (t.size() != 1 || (t[0].second != 1 && t[0].second != -1))
      throw std::invalid_argument("negative power of a non-unit");
    LaurentPoly inv = LaurentPoly::monomial(-t[0].first, t[0].second, p.var());
    return inv.pow(static_cast<unsigned>(-e));
  };
  LaurentPoly r(p1.var());
  for (const auto& [k, c] : terms_) {
    LaurentPoly term = power(p1, k.first) * power(p2, k.second);
    r.add_scaled_shifted(term, 0, c);
  }
  return r;
}

std::string BiLaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    BigInt a = abs(c);
    bool printed = false;
    if (a != 1 || (k.first == 0 && k.second == 0)) {
      os << a.get_str();
      printed = true;
    }
    auto var = [&](char v, int e) {
      if (e == 0) return;
      if (printed) os << "*";
      os << v;
      if (e != 1) os << "^" << e;
      printed = true;
    };
    var(v1_, k.first);
    var(v2_, k.second);
    first = false;
  }
  return os.str();
}

}  // namespace qlink
