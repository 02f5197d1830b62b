#include "ffproj/families.hpp"

#include <algorithm>

#include "ffproj/bigint.hpp"

namespace ffproj {

SubspaceFamily::SubspaceFamily(Ambient amb, std::size_t member_dim,
                               std::vector<Subspace> members)
    : amb_(amb), mdim_(member_dim), members_(std::move(members)) {
  if (member_dim > amb.n)
    throw RangeError("member dimension exceeds ambient dimension");
  for (const auto& w : members_) {
    if (w.ambient() != amb_)
      throw AmbientMismatch("family member ambient mismatch");
    if (w.dim() != mdim_)
      throw RangeError("family member of dimension " +
                       std::to_string(w.dim()) + ", expected " +
                       std::to_string(mdim_));
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool SubspaceFamily::contains(const Subspace& w) const {
  return std::binary_search(members_.begin(), members_.end(), w);
}

NondegeneracyResult is_nondegenerate(const SubspaceFamily& e,
                                     std::uint64_t budget) {
  const Ambient& amb = e.ambient();
  std::size_t vdim = amb.n - e.member_dim();
  std::size_t last_hit = 0;
  NondegeneracyResult res{true, std::nullopt};
  gr_for_each(
      amb, vdim,
      [&](const Subspace& v) {
        if (!res.nondegenerate) return;
        if (e.size() > 0 && is_transverse(e[last_hit], v)) return;
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (is_transverse(e[i], v)) {
            last_hit = i;
            return;
          }
        }
        res.nondegenerate = false;
        res.witness = v;
      },
      budget);
  return res;
}

NonconcentrationResult nonconcentration_check(const SubspaceFamily& e,
                                              const Rational& kappa,
                                              std::uint64_t budget) {
  if (kappa.num < 0) throw RangeError("kappa must be nonnegative");
  const Ambient& amb = e.ambient();
  std::size_t vdim = amb.n - e.member_dim();
  std::optional<Subspace> worst;
  std::uint64_t worst_count = 0;
  bool first = true;
  gr_for_each(
      amb, vdim,
      [&](const Subspace& v) {
        std::uint64_t count = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
          if (!is_transverse(e[i], v)) ++count;
        if (first || count > worst_count) {
          worst = v;
          worst_count = count;
          first = false;
        }
      },
      budget);
  // worst_count <= p^(-a/b) |E|  <=>  worst_count^b * p^a <= |E|^b.
  BigUint lhs = BigUint::pow(worst_count, std::uint64_t(kappa.den)) *
                BigUint::pow(amb.p.value(), std::uint64_t(kappa.num));
  BigUint rhs = BigUint::pow(e.size(), std::uint64_t(kappa.den));
  return NonconcentrationResult{lhs <= rhs, *worst, worst_count};
}

Subspace common_intersection(const SubspaceFamily& e) {
  if (e.empty()) throw EmptyFamily("common intersection of an empty family");
  Subspace acc = e[0];
  for (std::size_t i = 1; i < e.size(); ++i) acc = intersect(acc, e[i]);
  return acc;
}

SubspaceFamily sum_family(const SubspaceFamily& e1, const SubspaceFamily& e2) {
  if (e1.ambient() != e2.ambient())
    throw AmbientMismatch("family ambient mismatch");
  std::size_t n = e1.ambient().n;
  if (e1.member_dim() + e2.member_dim() >= n)
    throw DimOverflow("sum_family needs m1 + m2 < n");
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < e1.size(); ++i)
    for (std::size_t j = 0; j < e2.size(); ++j)
      if (is_transverse(e1[i], e2[j])) out.push_back(sum(e1[i], e2[j]));
  return SubspaceFamily(e1.ambient(), e1.member_dim() + e2.member_dim(),
                        std::move(out));
}

SubspaceFamily cap_family(const SubspaceFamily& e1, const SubspaceFamily& e2) {
  if (e1.ambient() != e2.ambient())
    throw AmbientMismatch("family ambient mismatch");
  std::size_t n = e1.ambient().n;
  if (e1.member_dim() + e2.member_dim() <= n)
    throw DimUnderflow("cap_family needs m1 + m2 > n");
  std::size_t target = e1.member_dim() + e2.member_dim() - n;
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < e1.size(); ++i)
    for (std::size_t j = 0; j < e2.size(); ++j) {
      Subspace cap = intersect(e1[i], e2[j]);
      if (cap.dim() == target) out.push_back(std::move(cap));
    }
  return SubspaceFamily(e1.ambient(), target, std::move(out));
}

SubspaceFamily perp_family(const SubspaceFamily& e) {
  std::vector<Subspace> out;
  out.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) out.push_back(e[i].perp());
  return SubspaceFamily(e.ambient(), e.ambient().n - e.member_dim(),
                        std::move(out));
}

SubspaceFamily coordinate_family(Ambient amb, std::size_t m) {
  if (m > amb.n) throw RangeError("member dimension exceeds ambient dimension");
  std::vector<Subspace> out;
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (idx.size() == m) {
      std::vector<std::vector<std::uint32_t>> rows;
      for (auto i : idx) {
        std::vector<std::uint32_t> row(amb.n, 0);
        row[i] = 1;
        rows.push_back(std::move(row));
      }
      out.push_back(Subspace::from_rows(amb, rows));
      return;
    }
    for (std::size_t i = start; i + (m - idx.size()) <= amb.n; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return SubspaceFamily(amb, m, std::move(out));
}

}  // namespace ffproj
