#include "ffproj/project.hpp"

#include <algorithm>
#include <set>

namespace ffproj {

PointSet::PointSet(Ambient amb, std::vector<Vector> points)
    : amb_(amb), pts_(std::move(points)) {
  for (const auto& v : pts_)
    if (v.ambient() != amb_) throw AmbientMismatch("point ambient mismatch");
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool PointSet::contains(const Vector& v) const {
  return std::binary_search(pts_.begin(), pts_.end(), v);
}

PointSet full_grid(Ambient amb) {
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < amb.n; ++i) {
    total *= amb.p.value();
    if (total > (1u << 24)) throw RangeError("full grid too large");
  }
  std::vector<Vector> pts;
  pts.reserve(std::size_t(total));
  std::vector<std::uint32_t> x(amb.n, 0);
  for (;;) {
    pts.emplace_back(amb, x);
    std::size_t i = amb.n;
    bool done = true;
    while (i > 0) {
      --i;
      if (++x[i] < amb.p.value()) {
        done = false;
        break;
      }
      x[i] = 0;
    }
    if (done) break;
  }
  return PointSet(amb, std::move(pts));
}

PointSet subspace_points(const Subspace& w) {
  return PointSet(w.ambient(), w.elements());
}

Vector coset_rep(const Vector& x, const Subspace& w) {
  if (x.ambient() != w.ambient())
    throw AmbientMismatch("vector ambient mismatch");
  std::uint32_t p = w.ambient().p.value();
  std::vector<std::uint32_t> r = x.coords();
  for (std::size_t i = 0; i < w.dim(); ++i) {
    std::uint32_t f = r[w.pivots()[i]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < w.ambient().n; ++c)
      r[c] = detail::subm(r[c], detail::mulm(f, w.basis().at(i, c), p), p);
  }
  return Vector(x.ambient(), std::move(r));
}

ProjectionImage project(const PointSet& k, const Subspace& w) {
  if (k.ambient() != w.ambient())
    throw AmbientMismatch("point set and subspace ambient mismatch");
  std::map<Vector, std::vector<Vector>> buckets;
  for (const auto& x : k.points()) buckets[coset_rep(x, w)].push_back(x);
  ProjectionImage img{w, {}, {}};
  for (auto& [rep, pts] : buckets) {
    img.representatives.push_back(rep);
    img.fibers.emplace(rep, PointSet(k.ambient(), std::move(pts)));
  }
  return img;
}

std::size_t projection_size(const PointSet& k, const Subspace& w) {
  if (k.ambient() != w.ambient())
    throw AmbientMismatch("point set and subspace ambient mismatch");
  std::set<Vector> reps;
  for (const auto& x : k.points()) reps.insert(coset_rep(x, w));
  return reps.size();
}

SubspaceFamily exceptional_set(const PointSet& k, std::size_t m,
                               std::uint64_t threshold, ExceptionalMode mode,
                               std::uint64_t budget) {
  if (k.empty()) throw EmptySet("exceptional_set of an empty point set");
  const Ambient& amb = k.ambient();
  if (m < 1 || m >= amb.n)
    throw RangeError("exceptional_set needs 1 <= m <= n - 1");
  if (mode == ExceptionalMode::AtMost && threshold < 1)
    throw RangeError("at-most mode needs threshold >= 1");
  std::uint64_t full = 1;
  for (std::size_t i = 0; i < m; ++i) full *= amb.p.value();
  std::vector<Subspace> hits;
  gr_for_each(
      amb, amb.n - m,
      [&](const Subspace& w) {
        std::uint64_t sz = projection_size(k, w);
        bool keep = mode == ExceptionalMode::AtMost ? sz <= threshold
                                                    : sz != full;
        if (keep) hits.push_back(w);
      },
      budget);
  return SubspaceFamily(amb, amb.n - m, std::move(hits));
}

std::vector<Vector> nice_basis(const std::vector<Subspace>& ws) {
  if (ws.empty()) throw EmptyFamily("nice_basis of an empty tuple");
  const Ambient& amb = ws[0].ambient();
  if (ws.size() != amb.n)
    throw RangeError("nice_basis needs exactly n hyperplanes");
  for (const auto& w : ws) {
    if (w.ambient() != amb) throw AmbientMismatch("hyperplane ambient mismatch");
    if (w.dim() != amb.n - 1)
      throw NotHyperplanes("nice_basis input of dimension " +
                           std::to_string(w.dim()));
  }
  Subspace all = ws[0];
  for (std::size_t i = 1; i < ws.size(); ++i) all = intersect(all, ws[i]);
  if (all.dim() > 0) {
    Subspace witness =
        Subspace::from_vectors(amb, {all.basis_vector(0)});
    std::string what = "hyperplanes share the line " + witness.to_literal();
    throw CommonLine(what, std::move(witness));
  }
  std::vector<Vector> basis;
  basis.reserve(amb.n);
  for (std::size_t i = 0; i < amb.n; ++i) {
    Subspace line = Subspace::full(amb);
    for (std::size_t j = 0; j < ws.size(); ++j)
      if (j != i) line = intersect(line, ws[j]);
    if (line.dim() != 1)
      throw Error("hyperplane tuple is degenerate at position " +
                  std::to_string(i));
    basis.push_back(line.basis_vector(0));
  }
  return basis;
}

DyadicSlice dyadic_refine(const PointSet& k, const Subspace& w) {
  if (k.empty()) throw EmptySet("dyadic_refine of an empty point set");
  ProjectionImage img = project(k, w);
  // Mass of each size class [2^l, 2^(l+1)).
  std::map<std::uint64_t, std::uint64_t> mass;
  for (const auto& [rep, fiber] : img.fibers) {
    std::uint64_t level = 0;
    while ((std::uint64_t(2) << level) <= fiber.size()) ++level;
    mass[level] += fiber.size();
  }
  std::uint64_t best_level = 0, best_mass = 0;
  for (const auto& [level, m] : mass) {
    if (m > best_mass) {
      best_level = level;
      best_mass = m;
    }
  }
  std::vector<Vector> pts;
  for (const auto& [rep, fiber] : img.fibers) {
    std::uint64_t level = 0;
    while ((std::uint64_t(2) << level) <= fiber.size()) ++level;
    if (level != best_level) continue;
    for (const auto& x : fiber.points()) pts.push_back(x);
  }
  return DyadicSlice{PointSet(k.ambient(), std::move(pts)), best_level};
}

std::map<Vector, PointSet> slice_decompose(const PointSet& k,
                                           const Subspace& u) {
  return project(k, u).fibers;
}

std::vector<std::vector<Scalar>> bounding_product(
    const PointSet& k, const std::vector<Vector>& frame) {
  const Ambient& amb = k.ambient();
  if (frame.size() != amb.n)
    throw NotABasis("frame must have exactly n vectors");
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& f : frame) {
    if (f.ambient() != amb) throw AmbientMismatch("frame ambient mismatch");
    rows.push_back(f.coords());
  }
  Matrix f = Matrix::from_rows(amb.p, rows, amb.n);
  Matrix finv = inverse(f);  // NotABasis when the frame is dependent

  std::uint32_t p = amb.p.value();
  std::vector<std::set<std::uint32_t>> comps(amb.n);
  for (const auto& x : k.points()) {
    for (std::size_t j = 0; j < amb.n; ++j) {
      std::uint32_t a = 0;
      for (std::size_t c = 0; c < amb.n; ++c)
        a = detail::addm(a, detail::mulm(x.coord(c), finv.at(c, j), p), p);
      comps[j].insert(a);
    }
  }
  std::vector<std::vector<Scalar>> out(amb.n);
  for (std::size_t j = 0; j < amb.n; ++j)
    for (auto a : comps[j]) out[j].emplace_back(a, amb.p);
  return out;
}

PointSet express_in_frame(const PointSet& k, const Vector& origin,
                          const std::vector<Vector>& frame) {
  const Ambient& amb = k.ambient();
  if (origin.ambient() != amb) throw AmbientMismatch("origin ambient mismatch");
  std::size_t m = frame.size();
  if (m == 0) throw NotABasis("empty frame");
  for (const auto& f : frame)
    if (f.ambient() != amb) throw AmbientMismatch("frame ambient mismatch");

  std::vector<std::vector<std::uint32_t>> frame_rows;
  for (const auto& f : frame) frame_rows.push_back(f.coords());
  if (rref(Matrix::from_rows(amb.p, frame_rows, amb.n)).rank < m)
    throw NotABasis("frame vectors are dependent");

  // Solve coeff * F = x - origin for each point through the transposed
  // augmented system.
  Ambient out_amb{amb.p, m};
  std::vector<Vector> out;
  for (const auto& x : k.points()) {
    Vector b = x - origin;
    Matrix aug(amb.p, amb.n, m + 1);
    for (std::size_t r = 0; r < amb.n; ++r) {
      for (std::size_t j = 0; j < m; ++j) aug.set(r, j, frame[j].coord(r));
      aug.set(r, m, b.coord(r));
    }
    RrefResult rr = rref(aug);
    std::vector<std::uint32_t> coeff(m, 0);
    for (std::size_t i = 0; i < rr.rank; ++i) {
      if (rr.pivots[i] == m)
        throw RangeError("point " + x.str() + " outside the frame span");
      coeff[rr.pivots[i]] = rr.r.at(i, m);
    }
    out.emplace_back(out_amb, std::move(coeff));
  }
  return PointSet(out_amb, std::move(out));
}

}  // namespace ffproj
