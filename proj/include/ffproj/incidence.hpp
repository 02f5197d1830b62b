#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffproj/project.hpp"
#include "ffproj/report.hpp"

namespace ffproj {

// Affine line {(x, y) : a x + b y + c = 0} in F_p^2 with (a, b) != (0, 0),
// normalized so the first nonzero of (a, b) equals 1.
class PlanarLine {
 public:
  PlanarLine(Scalar a, Scalar b, Scalar c);

  Prime modulus() const { return a_.modulus(); }
  Scalar a() const { return a_; }
  Scalar b() const { return b_; }
  Scalar c() const { return c_; }

  bool contains(const Vector& pt) const;

  bool operator==(const PlanarLine& o) const;
  bool operator<(const PlanarLine& o) const;

  std::string str() const;  // "a b c"

 private:
  Scalar a_, b_, c_;
};

// Deduplicated set of planar lines over one modulus.
class LineFamily {
 public:
  explicit LineFamily(Prime p) : p_(p) {}
  LineFamily(Prime p, std::vector<PlanarLine> lines);

  Prime modulus() const { return p_; }
  std::size_t size() const { return lines_.size(); }
  bool empty() const { return lines_.empty(); }
  const std::vector<PlanarLine>& lines() const { return lines_; }
  const PlanarLine& operator[](std::size_t i) const { return lines_[i]; }

 private:
  Prime p_;
  std::vector<PlanarLine> lines_;
};

// All p^2 + p distinct lines of F_p^2.
LineFamily all_planar_lines(Prime p);

// Number of incident (point, line) pairs.  Computed independently by a
// direct double loop and by bucketing points on their evaluation under each
// line; the two totals must agree.
std::uint64_t incidences(const PointSet& pts, const LineFamily& lines);

// Incidence count of the grid A x B against L, with the bound
// |A|^(3/4) |B|^(1/2) |L|^(3/4) + |L| and its hypothesis flags.  The bound
// carries implicit constants, so the report never asserts.
Report stevens_report(const std::vector<Scalar>& a,
                      const std::vector<Scalar>& b, const LineFamily& lines);

// Minimal set of translates of the direction line covering the planar slice.
LineFamily slice_lines(const PointSet& slice, const Subspace& direction);

// Magnitude of a prime too large to write in full: chain {b0, b1, ..., bk}
// denotes b0^(b1^(...^bk)).  A single entry is a machine-size value.
struct Tower {
  std::vector<std::uint64_t> chain;
};

// Whether the set sizes fit the triple-log regime for modulus p: true when
// max(size_p, size_l) <= (log2 log6 log18 p - 1) / 5, decided exactly on the
// tower representation.
bool grosu_regime(std::uint64_t size_p, std::uint64_t size_l, const Tower& p);

}  // namespace ffproj
