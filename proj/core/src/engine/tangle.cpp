#include "qlink/engine/tangle.hpp"

#include <algorithm>

#include "qlink/errors.hpp"
#include "qlink/qalgebra/skein.hpp"

namespace qlink {

std::size_t MatchKeyHash::operator()(const MatchKey& k) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint8_t b : k) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

MatchKey blank_key() {
  MatchKey k;
  k.fill(0xff);
  return k;
}

Tangle Tangle::empty() {
  Tangle t;
  t.terms.emplace(blank_key(), LaurentPoly::constant(1));
  return t;
}

LaurentPoly Tangle::value() const {
  if (!boundary.empty()) throw ConsistencyError("tangle still has open arcs");
  auto it = terms.find(blank_key());
  return it == terms.end() ? LaurentPoly('A') : it->second;
}

namespace {

// Joins nodes that carry the same arc label and traces the resulting strands.
class Merger {
 public:
  explicit Merger(const std::vector<int>& labels) : n_(static_cast<int>(labels.size())) {
    ident_.assign(n_, -1);
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return std::pair(labels[x], x) < std::pair(labels[y], y); });
    std::vector<int> ends;
    for (int i = 0; i < n_;) {
      int j = i;
      while (j < n_ && labels[order[j]] == labels[order[i]]) ++j;
      if (j - i == 1) {
        ends.push_back(order[i]);
      } else if (j - i == 2) {
        ident_[order[i]] = order[i + 1];
        ident_[order[i + 1]] = order[i];
      } else {
        throw StructuralError("arc " + std::to_string(labels[order[i]]) + " met more than twice");
      }
      i = j;
    }
    if (static_cast<int>(ends.size()) > kMaxBoundary)
      throw CapacityError("open boundary exceeds " + std::to_string(kMaxBoundary) + " arcs");
    newpos_.assign(n_, -1);
    for (int e : ends) boundary_.push_back(labels[e]);
    // ends come out sorted by label already
    for (int p = 0; p < static_cast<int>(ends.size()); ++p) newpos_[ends[p]] = p;
    ends_ = ends;
    seen_.assign(n_, 0);
  }

  const std::vector<int>& boundary() const { return boundary_; }

  // partner[i] is the node matched to i inside its own piece.
  int run(const std::vector<std::uint8_t>& partner, MatchKey& key) {
    key = blank_key();
    std::fill(seen_.begin(), seen_.end(), 0);
    for (int e : ends_) {
      if (seen_[e]) continue;
      int cur = e;
      while (true) {
        seen_[cur] = 1;
        const int p = partner[cur];
        seen_[p] = 1;
        if (ident_[p] < 0) {
          key[newpos_[e]] = static_cast<std::uint8_t>(newpos_[p]);
          key[newpos_[p]] = static_cast<std::uint8_t>(newpos_[e]);
          break;
        }
        cur = ident_[p];
      }
    }
    int loops = 0;
    for (int s = 0; s < n_; ++s) {
      if (seen_[s]) continue;
      ++loops;
      int cur = s;
      while (!seen_[cur]) {
        seen_[cur] = 1;
        const int p = partner[cur];
        seen_[p] = 1;
        cur = ident_[p];
      }
    }
    return loops;
  }

 private:
  int n_;
  std::vector<int> ident_, newpos_, ends_, boundary_;
  std::vector<char> seen_;
};

void add_term(Tangle& t, const MatchKey& k, const LaurentPoly& p) {
  auto [it, fresh] = t.terms.try_emplace(k, p);
  if (!fresh) it->second += p;
}

void prune(Tangle& t) {
  for (auto it = t.terms.begin(); it != t.terms.end();) {
    if (it->second.is_zero()) it = t.terms.erase(it);
    else ++it;
  }
}

}  // namespace

Tangle crossing_tangle(const Crossing& x) {
  std::vector<int> labels(x.arcs.begin(), x.arcs.end());
  Merger m(labels);
  Tangle t;
  t.boundary = m.boundary();
  const std::vector<std::uint8_t> a_pairs{1, 0, 3, 2}, b_pairs{3, 2, 1, 0};
  MatchKey k;
  int loops = m.run(a_pairs, k);
  add_term(t, k, LaurentPoly::monomial(1, 1) * loop_power(loops));
  loops = m.run(b_pairs, k);
  add_term(t, k, LaurentPoly::monomial(-1, 1) * loop_power(loops));
  prune(t);
  return t;
}

namespace {

// Sparse copy with machine-word coefficients when every |c| < 2^50, so that
// sums of up to 2^26 products stay exact in 128 bits.
struct Packed {
  const LaurentPoly* poly = nullptr;
  bool small = true;
  std::vector<std::pair<int, std::int64_t>> terms;
};

Packed pack(const LaurentPoly& p) {
  Packed r;
  r.poly = &p;
  for (const auto& [e, c] : p.terms()) {
    if (mpz_sizeinbase(c.get_mpz_t(), 2) > 50) {
      r.small = false;
      r.terms.clear();
      return r;
    }
    r.terms.emplace_back(e, c.get_si());
  }
  return r;
}

BigInt from_i128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<unsigned long>(u >> 64);
  r <<= 64;
  r += static_cast<unsigned long>(u & 0xffffffffffffffffull);
  return neg ? BigInt(-r) : r;
}

// Dense coefficient buffer for one output key.
struct DenseAcc {
  int lo = 0;
  std::vector<__int128> small;
  std::vector<BigInt> big;
  std::int64_t products = 0;

  void reserve_range(int need_lo, int need_hi) {
    if (small.empty()) {
      lo = need_lo;
      small.resize(need_hi - need_lo + 1);
      return;
    }
    if (need_lo < lo) {
      small.insert(small.begin(), lo - need_lo, 0);
      if (!big.empty()) big.insert(big.begin(), lo - need_lo, BigInt());
      lo = need_lo;
    }
    const int hi = lo + static_cast<int>(small.size()) - 1;
    if (need_hi > hi) small.resize(need_hi - lo + 1);
  }

  void addmul(const Packed& x, const Packed& y) {
    if (x.poly->is_zero() || y.poly->is_zero()) return;
    reserve_range(x.poly->min_deg() + y.poly->min_deg(), x.poly->max_deg() + y.poly->max_deg());
    if (x.small && y.small && products < (std::int64_t{1} << 26)) {
      products += static_cast<std::int64_t>(x.terms.size());
      for (const auto& [ex, cx] : x.terms)
        for (const auto& [ey, cy] : y.terms)
          small[ex + ey - lo] += static_cast<__int128>(cx) * cy;
      return;
    }
    big.resize(small.size());
    for (const auto& [ex, cx] : x.poly->terms())
      for (const auto& [ey, cy] : y.poly->terms())
        mpz_addmul(big[ex + ey - lo].get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
  }

  LaurentPoly take(char var) {
    std::vector<LaurentPoly::Term> t;
    for (int i = 0; i < static_cast<int>(small.size()); ++i) {
      BigInt v = small[i] == 0 ? BigInt() : from_i128(small[i]);
      if (i < static_cast<int>(big.size())) v += big[i];
      if (sgn(v) != 0) t.emplace_back(lo + i, std::move(v));
    }
    return LaurentPoly(var, std::move(t));
  }
};

}  // namespace

Tangle glue(const Tangle& a, const Tangle& b, std::int64_t* work) {
  const int f = a.width(), g = b.width();
  std::vector<int> labels(a.boundary);
  labels.insert(labels.end(), b.boundary.begin(), b.boundary.end());
  Merger m(labels);
  Tangle out;
  out.boundary = m.boundary();
  std::vector<std::pair<const MatchKey*, const LaurentPoly*>> bt;
  bt.reserve(b.terms.size());
  for (const auto& [k, p] : b.terms) bt.emplace_back(&k, &p);
  // b's coefficient times the loop power, cached per (term, loops)
  std::vector<std::vector<LaurentPoly>> scaled(bt.size());
  std::vector<std::vector<Packed>> packed(bt.size());
  std::unordered_map<MatchKey, DenseAcc, MatchKeyHash> acc;
  std::vector<std::uint8_t> partner(f + g);
  MatchKey key;
  char var = 'A';
  for (const auto& [ka, pa] : a.terms) {
    var = pa.var();
    const Packed pka = pack(pa);
    for (int i = 0; i < f; ++i) partner[i] = ka[i];
    for (std::size_t j = 0; j < bt.size(); ++j) {
      const MatchKey& kb = *bt[j].first;
      for (int i = 0; i < g; ++i) partner[f + i] = static_cast<std::uint8_t>(f + kb[i]);
      const int loops = m.run(partner, key);
      auto& cache = scaled[j];
      if (static_cast<int>(cache.size()) <= loops) {
        // keep the cached polys at stable addresses
        cache.reserve(kMaxBoundary + 1);
        while (static_cast<int>(cache.size()) <= loops) {
          cache.push_back(*bt[j].second * loop_power(static_cast<int>(cache.size())));
          packed[j].push_back(pack(cache.back()));
        }
      }
      acc[key].addmul(pka, packed[j][loops]);
    }
    if (work) *work += static_cast<std::int64_t>(bt.size());
  }
  for (auto& [k, d] : acc) {
    LaurentPoly p = d.take(var);
    if (!p.is_zero()) out.terms.emplace(k, std::move(p));
  }
  return out;
}

Tangle relabel(const Tangle& t, const std::map<int, int>& rename) {
  std::vector<int> labels = t.boundary;
  for (int& l : labels) {
    auto it = rename.find(l);
    if (it != rename.end()) l = it->second;
  }
  const int w = t.width();
  std::vector<int> order(w);
  for (int i = 0; i < w; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return labels[x] < labels[y]; });
  std::vector<int> pos(w);
  Tangle out;
  for (int p = 0; p < w; ++p) {
    pos[order[p]] = p;
    out.boundary.push_back(labels[order[p]]);
  }
  for (int p = 1; p < w; ++p)
    if (out.boundary[p] == out.boundary[p - 1]) throw ArgumentError("relabel merges two arcs");
  for (const auto& [k, poly] : t.terms) {
    MatchKey nk = blank_key();
    for (int i = 0; i < w; ++i) nk[pos[i]] = static_cast<std::uint8_t>(pos[k[i]]);
    out.terms.emplace(nk, poly);
  }
  return out;
}

bool operator==(const Tangle& a, const Tangle& b) {
  if (a.boundary != b.boundary || a.terms.size() != b.terms.size()) return false;
  for (const auto& [k, p] : a.terms) {
    auto it = b.terms.find(k);
    if (it == b.terms.end() || it->second != p) return false;
  }
  return true;
}

}  // namespace qlink
