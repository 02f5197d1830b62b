#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ffproj/families.hpp"
#include "ffproj/incidence.hpp"
#include "ffproj/project.hpp"

namespace ffproj {

// Point set file: "p <p>", "n <n>", then one point per line as n
// space-separated coordinates in [0, p).  Duplicates are dropped with a
// warning on `diag`.
PointSet read_pointset(std::istream& in, std::ostream& diag);
PointSet read_pointset_file(const std::string& path, std::ostream& diag);
void write_pointset(std::ostream& out, const PointSet& k);

// Family file: "p <p>", "n <n>", "m <m>", then one subspace literal per
// line ("v; v; ...", the zero subspace as a single zero vector).
SubspaceFamily read_family(std::istream& in, std::ostream& diag);
SubspaceFamily read_family_file(const std::string& path, std::ostream& diag);
void write_family(std::ostream& out, const SubspaceFamily& e);

// "a b c, a b c, ..." -> planar lines ax + by + c = 0, normalized.
LineFamily parse_line_family(Prime p, const std::string& literal);

// "1,4,6" -> {1, 4, 6}; values validated against p.
std::vector<Scalar> parse_scalar_set(Prime p, const std::string& literal);

// Comma-separated unsigned integers ("2,3").
std::vector<std::uint64_t> parse_uint_list(const std::string& literal);

}  // namespace ffproj
