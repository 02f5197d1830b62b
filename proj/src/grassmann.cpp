#include "ffproj/grassmann.hpp"

#include <algorithm>

namespace ffproj {

namespace {

std::uint64_t pow_u64_checked(std::uint64_t base, std::uint64_t exp) {
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > UINT64_MAX) throw RangeError("power overflows 64 bits");
  }
  return std::uint64_t(r);
}

// All m-subsets of {0..n-1} sorted by indicator string, i.e. the subset whose
// characteristic vector reads lexicographically smallest comes first.
std::vector<std::vector<std::size_t>> pivot_patterns(std::size_t n,
                                                     std::size_t m) {
  std::vector<std::vector<std::size_t>> all;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == m) {
      all.push_back(cur);
      return;
    }
    for (std::size_t c = start; c + (m - cur.size()) <= n; ++c) {
      cur.push_back(c);
      self(self, c + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(all.begin(), all.end(),
            [n](const std::vector<std::size_t>& a,
                const std::vector<std::size_t>& b) {
              std::size_t ia = 0, ib = 0;
              for (std::size_t c = 0; c < n; ++c) {
                bool in_a = ia < a.size() && a[ia] == c;
                bool in_b = ib < b.size() && b[ib] == c;
                if (in_a != in_b) return in_b;
                if (in_a) ++ia;
                if (in_b) ++ib;
              }
              return false;
            });
  return all;
}

}  // namespace

std::uint64_t gr_count(std::size_t n, std::size_t m, Prime p) {
  if (m > n) throw RangeError("subspace dimension exceeds ambient dimension");
  // Product form with integer prefix quotients: multiply (p^(n-m+i) - 1),
  // divide (p^i - 1); every prefix is itself a Gaussian binomial.
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    unsigned __int128 num = 1;
    for (std::size_t k = 0; k < n - m + i; ++k) num *= p.value();
    unsigned __int128 den = 1;
    for (std::size_t k = 0; k < i; ++k) den *= p.value();
    acc = acc * (num - 1) / (den - 1);
    if (acc > UINT64_MAX) throw RangeError("Grassmannian count overflows 64 bits");
  }
  return std::uint64_t(acc);
}

GrassmannCursor::GrassmannCursor(Ambient amb, std::size_t m)
    : amb_(amb), m_(m) {
  if (m > amb.n) throw RangeError("subspace dimension exceeds ambient dimension");
  patterns_ = pivot_patterns(amb.n, m);
}

std::optional<Subspace> GrassmannCursor::next() {
  std::uint32_t p = amb_.p.value();
  for (;;) {
    if (pattern_idx_ >= patterns_.size()) return std::nullopt;
    const auto& piv = patterns_[pattern_idx_];
    if (!cell_open_) {
      free_pos_.clear();
      std::vector<bool> is_pivot(amb_.n, false);
      for (auto c : piv) is_pivot[c] = true;
      for (std::size_t r = 0; r < m_; ++r)
        for (std::size_t c = piv[r] + 1; c < amb_.n; ++c)
          if (!is_pivot[c]) free_pos_.emplace_back(r, c);
      odo_.assign(free_pos_.size(), 0);
      cell_open_ = true;
    } else {
      // Advance the odometer; on wrap move to the next pivot pattern.
      std::size_t i = odo_.size();
      bool wrapped = true;
      while (i > 0) {
        --i;
        if (++odo_[i] < p) {
          wrapped = false;
          break;
        }
        odo_[i] = 0;
      }
      if (wrapped) {
        cell_open_ = false;
        ++pattern_idx_;
        continue;
      }
    }
    Matrix basis(amb_.p, m_, amb_.n);
    for (std::size_t r = 0; r < m_; ++r) basis.set(r, piv[r], 1);
    for (std::size_t i = 0; i < free_pos_.size(); ++i)
      basis.set(free_pos_[i].first, free_pos_[i].second, odo_[i]);
    return Subspace::from_rref_unchecked(amb_, std::move(basis), piv);
  }
}

std::vector<Subspace> gr_enumerate(Ambient amb, std::size_t m,
                                   std::uint64_t budget) {
  std::vector<Subspace> out;
  out.reserve(std::size_t(std::min<std::uint64_t>(gr_count(amb.n, m, amb.p),
                                                  budget)));
  gr_for_each(amb, m, [&](const Subspace& w) { out.push_back(w); }, budget);
  return out;
}

void gr_for_each(Ambient amb, std::size_t m,
                 const std::function<void(const Subspace&)>& fn,
                 std::uint64_t budget) {
  std::uint64_t total = gr_count(amb.n, m, amb.p);
  if (total > budget)
    throw BudgetExceeded("Grassmannian of size " + std::to_string(total) +
                         " exceeds budget " + std::to_string(budget));
  GrassmannCursor cur(amb, m);
  while (auto w = cur.next()) fn(*w);
}

Subspace gr_sample_uniform(Ambient amb, std::size_t m, Rng& rng) {
  if (m > amb.n) throw RangeError("subspace dimension exceeds ambient dimension");
  if (m == 0) return Subspace::zero(amb);
  for (;;) {
    std::vector<std::vector<std::uint32_t>> rows(
        m, std::vector<std::uint32_t>(amb.n));
    for (auto& row : rows)
      for (auto& x : row) x = rng.below(amb.p.value());
    Subspace w = Subspace::from_rows(amb, rows);
    if (w.dim() == m) return w;
  }
}

BigUint gr_count_big(std::size_t n, std::size_t m, Prime p) {
  if (m > n) throw RangeError("subspace dimension exceeds ambient");
  // G(n, m) = G(n-1, m-1) + p^m G(n-1, m), one row at a time.
  std::vector<BigUint> row(m + 1);
  row[0] = BigUint(1);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, m); j >= 1; --j) {
      BigUint upper = j <= i - 1 ? row[j] : BigUint(0);
      row[j] = row[j - 1] + BigUint::pow(p.value(), j) * upper;
    }
  }
  return row[m];
}

IntersectingCount gr_count_intersecting(const Subspace& v, std::size_t m,
                                        std::uint64_t budget) {
  const Ambient& amb = v.ambient();
  std::size_t mp = v.dim();
  if (m < 1 || mp < 1)
    throw RangeError("count_intersecting needs positive dimensions");
  if (m + mp > amb.n)
    throw RangeError("count_intersecting needs m + dim V <= n");

  std::uint64_t total = gr_count(amb.n, m, amb.p);
  std::uint64_t exact;
  if (total <= budget) {
    std::uint64_t hits = 0;
    GrassmannCursor cur(amb, m);
    while (auto w = cur.next())
      if (intersect(*w, v).dim() > 0) ++hits;
    exact = hits;
  } else {
    std::uint64_t transverse =
        pow_u64_checked(amb.p.value(), std::uint64_t(m) * mp);
    unsigned __int128 t =
        (unsigned __int128)transverse * gr_count(amb.n - mp, m, amb.p);
    if (t > total) throw RangeError("inconsistent transverse count");
    exact = total - std::uint64_t(t);
  }
  std::uint64_t bound = pow_u64_checked(
      amb.p.value(), std::uint64_t(mp - 1 + (m - 1) * (amb.n - m)));
  return IntersectingCount{exact, bound};
}

}  // namespace ffproj
