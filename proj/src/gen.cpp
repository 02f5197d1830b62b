#include "ffproj/gen.hpp"

#include <set>

#include "ffproj/grassmann.hpp"

namespace ffproj {

PointSet random_pointset(Ambient amb, std::size_t size, Rng& rng) {
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < amb.n; ++i) {
    total *= amb.p.value();
    if (total > (unsigned __int128)UINT64_MAX) break;
  }
  if (total <= (unsigned __int128)UINT64_MAX && size > (std::uint64_t)total)
    throw RangeError("more points requested than the space holds");

  std::set<Vector> seen;
  while (seen.size() < size) {
    std::vector<std::uint32_t> coords(amb.n);
    for (std::size_t i = 0; i < amb.n; ++i)
      coords[i] = std::uint32_t(rng.below(amb.p.value()));
    seen.emplace(amb, std::move(coords));
  }
  return PointSet(amb, std::vector<Vector>(seen.begin(), seen.end()));
}

PointSet product_set(Prime p,
                     const std::vector<std::vector<std::uint32_t>>& factors) {
  if (factors.empty()) throw RangeError("product of zero factors");
  Ambient amb{p, factors.size()};
  std::vector<std::vector<std::uint32_t>> clean;
  std::size_t total = 1;
  for (const auto& f : factors) {
    if (f.empty()) throw EmptySet("empty factor in product set");
    std::vector<std::uint32_t> v = f;
    for (auto x : v)
      if (x >= p.value()) throw RangeError("factor value out of range");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (total > (std::size_t(1) << 24) / v.size())
      throw BudgetExceeded("product set too large to materialize");
    total *= v.size();
    clean.push_back(std::move(v));
  }

  std::vector<Vector> pts;
  pts.reserve(total);
  std::vector<std::size_t> idx(factors.size(), 0);
  while (true) {
    std::vector<std::uint32_t> coords(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
      coords[i] = clean[i][idx[i]];
    pts.emplace_back(amb, std::move(coords));
    std::size_t i = factors.size();
    while (i > 0) {
      --i;
      if (++idx[i] < clean[i].size()) break;
      idx[i] = 0;
      if (i == 0) return PointSet(amb, std::move(pts));
    }
  }
}

ExtremalPair extremal_pair(Ambient amb, std::size_t d, std::uint64_t budget) {
  if (d < 1 || d + 1 > amb.n)
    throw RangeError("need 1 <= d <= n - 1 for the extremal pair");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i <= d; ++i) rows.push_back(Vector::unit(amb, i));
  Subspace span = Subspace::from_vectors(amb, rows);

  PointSet k = subspace_points(span);
  std::vector<Subspace> lines;
  gr_for_each(amb, 1, [&](const Subspace& w) {
    if (intersect(w, span) == w) lines.push_back(w);
  }, budget);
  return {std::move(k), SubspaceFamily(amb, 1, std::move(lines))};
}

SubspaceFamily random_family(Ambient amb, std::size_t m, std::size_t count,
                             Rng& rng, std::uint64_t budget) {
  BigUint total = gr_count_big(amb.n, m, amb.p);
  if (BigUint(std::uint64_t(count)) > total)
    throw RangeError("more subspaces requested than the Grassmannian holds");
  (void)budget;
  std::set<Subspace> seen;
  while (seen.size() < count) seen.insert(gr_sample_uniform(amb, m, rng));
  return SubspaceFamily(amb, m,
                        std::vector<Subspace>(seen.begin(), seen.end()));
}

}  // namespace ffproj
