#include "ffproj/incidence.hpp"

#include <algorithm>
#include <cmath>

#include "ffproj/bigint.hpp"

namespace ffproj {

PlanarLine::PlanarLine(Scalar a, Scalar b, Scalar c) : a_(a), b_(b), c_(c) {
  if (a.modulus() != b.modulus() || a.modulus() != c.modulus())
    throw AmbientMismatch("line coefficient modulus mismatch");
  if (a_.value() == 0 && b_.value() == 0)
    throw RangeError("line with zero normal vector");
  Scalar lead = a_.value() ? a_ : b_;
  Scalar inv = mod_inv(lead);
  a_ = a_ * inv;
  b_ = b_ * inv;
  c_ = c_ * inv;
}

bool PlanarLine::contains(const Vector& pt) const {
  if (pt.ambient().n != 2 || pt.ambient().p != a_.modulus())
    throw AmbientMismatch("line and point live in different planes");
  std::uint32_t p = a_.modulus().value();
  std::uint32_t v = detail::addm(
      detail::addm(detail::mulm(a_.value(), pt.coord(0), p),
                   detail::mulm(b_.value(), pt.coord(1), p), p),
      c_.value(), p);
  return v == 0;
}

bool PlanarLine::operator==(const PlanarLine& o) const {
  return a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
}

bool PlanarLine::operator<(const PlanarLine& o) const {
  if (a_.value() != o.a_.value()) return a_.value() < o.a_.value();
  if (b_.value() != o.b_.value()) return b_.value() < o.b_.value();
  return c_.value() < o.c_.value();
}

std::string PlanarLine::str() const {
  return std::to_string(a_.value()) + " " + std::to_string(b_.value()) + " " +
         std::to_string(c_.value());
}

LineFamily::LineFamily(Prime p, std::vector<PlanarLine> lines)
    : p_(p), lines_(std::move(lines)) {
  for (const auto& l : lines_)
    if (l.modulus() != p_) throw AmbientMismatch("line modulus mismatch");
  std::sort(lines_.begin(), lines_.end());
  lines_.erase(std::unique(lines_.begin(), lines_.end()), lines_.end());
}

LineFamily all_planar_lines(Prime p) {
  std::vector<PlanarLine> lines;
  lines.reserve(std::size_t(p.value()) * p.value() + p.value());
  for (std::uint32_t b = 0; b < p.value(); ++b)
    for (std::uint32_t c = 0; c < p.value(); ++c)
      lines.emplace_back(Scalar(1, p), Scalar(b, p), Scalar(c, p));
  for (std::uint32_t c = 0; c < p.value(); ++c)
    lines.emplace_back(Scalar(0, p), Scalar(1, p), Scalar(c, p));
  return LineFamily(p, std::move(lines));
}

std::uint64_t incidences(const PointSet& pts, const LineFamily& lines) {
  if (pts.ambient().n != 2)
    throw AmbientMismatch("incidence counting needs planar points");
  if (pts.ambient().p != lines.modulus())
    throw AmbientMismatch("points and lines over different moduli");
  std::uint32_t p = pts.ambient().p.value();

  std::uint64_t direct = 0;
  for (const auto& x : pts.points())
    for (std::size_t i = 0; i < lines.size(); ++i)
      if (lines[i].contains(x)) ++direct;

  std::uint64_t bucketed = 0;
  std::vector<std::uint32_t> hist(p);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::fill(hist.begin(), hist.end(), 0);
    const PlanarLine& l = lines[i];
    for (const auto& x : pts.points()) {
      std::uint32_t v = detail::addm(
          detail::addm(detail::mulm(l.a().value(), x.coord(0), p),
                       detail::mulm(l.b().value(), x.coord(1), p), p),
          l.c().value(), p);
      ++hist[v];
    }
    bucketed += hist[0];
  }

  if (direct != bucketed)
    throw Error("incidence count mismatch between evaluation paths");
  return direct;
}

Report stevens_report(const std::vector<Scalar>& a,
                      const std::vector<Scalar>& b, const LineFamily& lines) {
  if (a.empty() || b.empty()) throw EmptySet("stevens_report with empty side");
  Prime p = a[0].modulus();
  for (const auto& s : a)
    if (s.modulus() != p) throw AmbientMismatch("scalar modulus mismatch");
  for (const auto& s : b)
    if (s.modulus() != p) throw AmbientMismatch("scalar modulus mismatch");
  if (lines.modulus() != p)
    throw AmbientMismatch("lines over a different modulus");

  auto dedup = [](std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  std::vector<std::uint32_t> av, bv;
  for (const auto& s : a) av.push_back(s.value());
  for (const auto& s : b) bv.push_back(s.value());
  av = dedup(std::move(av));
  bv = dedup(std::move(bv));

  Ambient amb{p, 2};
  std::vector<Vector> grid;
  grid.reserve(av.size() * bv.size());
  for (auto x : av)
    for (auto y : bv) grid.emplace_back(amb, std::vector<std::uint32_t>{x, y});
  std::uint64_t count = incidences(PointSet(amb, std::move(grid)), lines);

  double na = double(av.size()), nb = double(bv.size()),
         nl = double(lines.size());
  double bound = std::pow(na, 0.75) * std::pow(nb, 0.5) * std::pow(nl, 0.75) +
                 nl;
  std::uint64_t pp = std::uint64_t(p.value()) * p.value();
  unsigned __int128 al = (unsigned __int128)av.size() * lines.size();
  unsigned __int128 abb =
      (unsigned __int128)av.size() * bv.size() * bv.size();
  unsigned __int128 lll =
      (unsigned __int128)lines.size() * lines.size() * lines.size();

  Report rep;
  rep.command = "stevens";
  rep.params = {{"p", p.value()},
                {"num_a", av.size()},
                {"num_b", bv.size()},
                {"num_lines", lines.size()}};
  nlohmann::json row;
  row["incidences"] = count;
  row["bound"] = bound;
  row["ratio"] = bound > 0 ? double(count) / bound : 0.0;
  row["hyp_a_le_b"] = av.size() <= bv.size();
  row["hyp_cube"] = abb <= lll;
  // The grid hypothesis carries an implicit constant; checked with constant 1
  // and flagged when within a factor 2 of the cutoff.
  row["hyp_grid"] = al <= pp;
  row["hyp_grid_near_threshold"] = 2 * al >= pp && al <= 2 * (unsigned __int128)pp;
  rep.rows.push_back(std::move(row));
  rep.pass = std::nullopt;
  return rep;
}

LineFamily slice_lines(const PointSet& slice, const Subspace& direction) {
  if (slice.ambient().n != 2)
    throw AmbientMismatch("slice_lines needs planar points");
  if (direction.ambient() != slice.ambient())
    throw AmbientMismatch("direction ambient mismatch");
  if (direction.dim() != 1)
    throw RangeError("direction must be a line through the origin");

  std::uint32_t p = slice.ambient().p.value();
  std::uint32_t u = direction.basis().at(0, 0);
  std::uint32_t v = direction.basis().at(0, 1);
  Prime pr = slice.ambient().p;
  Scalar la(v, pr), lb(u ? p - u : 0, pr);

  std::vector<PlanarLine> out;
  for (const auto& rep : project(slice, direction).representatives) {
    std::uint32_t cx = detail::addm(detail::mulm(la.value(), rep.coord(0), p),
                                    detail::mulm(lb.value(), rep.coord(1), p),
                                    p);
    out.emplace_back(la, lb, Scalar(cx ? p - cx : 0, pr));
  }
  return LineFamily(pr, std::move(out));
}

namespace {

constexpr std::uint64_t kSat = std::uint64_t(1) << 63;

// Saturating right-to-left evaluation; values at or above kSat clamp.
std::uint64_t eval_saturating(const std::uint64_t* chain, std::size_t len) {
  if (len == 0) return 1;
  std::uint64_t e = eval_saturating(chain + 1, len - 1);
  std::uint64_t base = std::min(chain[0], kSat);
  if (base >= kSat) return kSat;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    acc *= base;
    if (acc >= kSat) return kSat;
  }
  return std::uint64_t(acc);
}

// Exact value when it fits in max_bits bits, nullopt otherwise.
std::optional<BigUint> eval_big(const std::uint64_t* chain, std::size_t len,
                                std::size_t max_bits) {
  if (len == 1) return BigUint(chain[0]);
  std::uint64_t e = eval_saturating(chain + 1, len - 1);
  if (e >= kSat) return std::nullopt;
  return BigUint::pow_capped(chain[0], BigUint(e), max_bits);
}

std::optional<std::uint64_t> log18_exponent(std::uint64_t b) {
  std::uint64_t j = 0;
  unsigned __int128 acc = 1;
  while (acc < b) {
    acc *= 18;
    ++j;
  }
  if (acc == b) return j;
  return std::nullopt;
}

}  // namespace

bool grosu_regime(std::uint64_t size_p, std::uint64_t size_l, const Tower& p) {
  if (p.chain.empty()) throw MalformedTower("empty tower");
  for (auto e : p.chain)
    if (e < 2) throw MalformedTower("tower entry below 2");

  std::uint64_t s = std::max(size_p, size_l);
  if (s > (UINT64_MAX - 1) / 5) throw RangeError("set size out of range");
  std::uint64_t q = 5 * s + 1;
  // Admissibility is the single inequality p >= 18^(6^(2^q)).

  const auto& c = p.chain;
  if (c.size() >= 3 && c[0] == 18 && c[1] == 6 && c[2] == 2)
    return eval_saturating(c.data() + 3, c.size() - 3) >= q;

  constexpr std::size_t kValueBits = std::size_t(1) << 22;
  auto pv = eval_big(c.data(), c.size(), kValueBits);

  // 6^(2^q) is materialized only for small q; beyond that the threshold
  // exceeds anything representable here and dominates any materialized value.
  std::optional<BigUint> f;
  if (q <= 20) f = BigUint::pow_capped(6, BigUint(std::uint64_t(1) << q),
                                       std::size_t(1) << 23);

  if (pv.has_value()) {
    if (!f.has_value()) return false;  // threshold above 2^(2^21) bits
    auto g = BigUint::pow_capped(18, *f, pv->bit_length() + 128);
    if (!g.has_value()) return false;  // 18^f already exceeds the value
    return *pv >= *g;
  }

  // Unmaterializable value: c is b^T with T the tail tower.
  std::uint64_t b = c[0];
  if (!f.has_value())
    throw Error("tower comparison beyond supported range");
  BigUint five_f = BigUint(5) * *f;

  auto t = eval_big(c.data() + 1, c.size() - 1, five_f.bit_length() + 64);
  if (!t.has_value()) return true;  // T > 5*6^(2^q), so b^T >= 2^T > 18^F
  if (*t >= five_f) return true;

  std::size_t bl = BigUint(b).bit_length();
  BigUint four_f = BigUint(4) * *f;
  if (*t * BigUint(std::uint64_t(bl)) <= four_f) return false;

  if (auto j = log18_exponent(b)) return *t * BigUint(*j) >= *f;

  // Rational bounds on log2: floor(u log2 x) = bitlen(x^u) - 1.
  for (std::uint64_t u = 16; u <= 8192; u *= 2) {
    std::uint64_t lo_b = BigUint::pow(b, u).bit_length() - 1;
    std::uint64_t lo_18 = BigUint::pow(18, u).bit_length() - 1;
    if (*t * BigUint(lo_b) >= *f * BigUint(lo_18 + 1)) return true;
    if (*t * BigUint(lo_b + 1) <= *f * BigUint(lo_18)) return false;
  }
  throw Error("tower comparison unresolved at supported precision");
}

}  // namespace ffproj
