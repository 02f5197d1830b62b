#include "ffproj/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ffproj {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Reads a "key <value>" header line.
std::uint64_t header_value(std::istream& in, const char* key,
                           std::size_t& lineno) {
  std::string line;
  if (!std::getline(in, line))
    throw ParseError(std::string("missing header line \"") + key + " ...\"",
                     lineno + 1);
  ++lineno;
  std::istringstream ss(strip(line));
  std::string k;
  std::uint64_t v;
  if (!(ss >> k >> v) || k != key || (ss >> std::ws, !ss.eof()))
    throw ParseError(std::string("expected \"") + key + " <value>\"", lineno);
  return v;
}

std::vector<std::uint32_t> parse_coords(const std::string& line, Prime p,
                                        std::size_t n, std::size_t lineno) {
  std::istringstream ss(line);
  std::vector<std::uint32_t> coords;
  std::int64_t v;
  while (ss >> v) {
    if (v < 0 || std::uint64_t(v) >= p.value())
      throw ParseError("coordinate " + std::to_string(v) + " outside [0, " +
                           std::to_string(p.value()) + ")",
                       lineno);
    coords.push_back(std::uint32_t(v));
  }
  if (!ss.eof()) throw ParseError("non-numeric coordinate", lineno);
  if (coords.size() != n)
    throw ParseError("expected " + std::to_string(n) + " coordinates, got " +
                         std::to_string(coords.size()),
                     lineno);
  return coords;
}

}  // namespace

PointSet read_pointset(std::istream& in, std::ostream& diag) {
  std::size_t lineno = 0;
  std::uint64_t pv = header_value(in, "p", lineno);
  std::uint64_t nv = header_value(in, "n", lineno);
  if (pv >= (1u << 15)) throw ParseError("p out of range", lineno);
  Prime p = [&] {
    try {
      return Prime(std::uint32_t(pv));
    } catch (const Error& e) {
      throw ParseError(e.what(), 1);
    }
  }();
  Ambient amb{p, std::size_t(nv)};

  std::vector<Vector> pts;
  std::size_t dups = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip(line);
    if (body.empty() || body[0] == '#') continue;
    Vector v(amb, parse_coords(body, p, amb.n, lineno));
    bool dup = false;
    for (const auto& q : pts)
      if (q == v) {
        dup = true;
        break;
      }
    if (dup) {
      ++dups;
      diag << "warning: line " << lineno << ": duplicate point dropped\n";
    } else {
      pts.push_back(std::move(v));
    }
  }
  (void)dups;
  return PointSet(amb, std::move(pts));
}

PointSet read_pointset_file(const std::string& path, std::ostream& diag) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_pointset(in, diag);
}

void write_pointset(std::ostream& out, const PointSet& k) {
  out << "p " << k.ambient().p.value() << "\n";
  out << "n " << k.ambient().n << "\n";
  for (const auto& v : k.points()) out << v.str() << "\n";
}

SubspaceFamily read_family(std::istream& in, std::ostream& diag) {
  std::size_t lineno = 0;
  std::uint64_t pv = header_value(in, "p", lineno);
  std::uint64_t nv = header_value(in, "n", lineno);
  std::uint64_t mv = header_value(in, "m", lineno);
  if (pv >= (1u << 15)) throw ParseError("p out of range", lineno);
  Prime p = [&] {
    try {
      return Prime(std::uint32_t(pv));
    } catch (const Error& e) {
      throw ParseError(e.what(), 1);
    }
  }();
  Ambient amb{p, std::size_t(nv)};
  if (mv > nv) throw ParseError("m exceeds n", lineno);

  std::vector<Subspace> members;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip(line);
    if (body.empty() || body[0] == '#') continue;
    Subspace w = [&] {
      try {
        return Subspace::parse_literal(amb, body);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno);
      }
    }();
    if (w.dim() != mv)
      throw ParseError("subspace has dimension " + std::to_string(w.dim()) +
                           ", family expects " + std::to_string(mv),
                       lineno);
    bool dup = false;
    for (const auto& q : members)
      if (q == w) {
        dup = true;
        break;
      }
    if (dup)
      diag << "warning: line " << lineno << ": duplicate subspace dropped\n";
    else
      members.push_back(std::move(w));
  }
  return SubspaceFamily(amb, mv, std::move(members));
}

SubspaceFamily read_family_file(const std::string& path, std::ostream& diag) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_family(in, diag);
}

void write_family(std::ostream& out, const SubspaceFamily& e) {
  out << "p " << e.ambient().p.value() << "\n";
  out << "n " << e.ambient().n << "\n";
  out << "m " << e.member_dim() << "\n";
  for (const auto& w : e.members()) out << w.to_literal() << "\n";
}

LineFamily parse_line_family(Prime p, const std::string& literal) {
  std::vector<PlanarLine> lines;
  std::istringstream ss(literal);
  std::string chunk;
  while (std::getline(ss, chunk, ',')) {
    std::istringstream cs(strip(chunk));
    std::int64_t a, b, c;
    if (!(cs >> a >> b >> c) || (cs >> std::ws, !cs.eof()))
      throw ParseError("line literal needs three coefficients: " + chunk);
    auto coeff = [&](std::int64_t v) {
      if (v < 0 || std::uint64_t(v) >= p.value())
        throw ParseError("coefficient " + std::to_string(v) + " outside [0, " +
                         std::to_string(p.value()) + ")");
      return Scalar(std::uint32_t(v), p);
    };
    lines.emplace_back(coeff(a), coeff(b), coeff(c));
  }
  if (lines.empty()) throw ParseError("empty line family literal");
  return LineFamily(p, std::move(lines));
}

std::vector<Scalar> parse_scalar_set(Prime p, const std::string& literal) {
  std::vector<Scalar> out;
  std::istringstream ss(literal);
  std::string chunk;
  while (std::getline(ss, chunk, ',')) {
    std::istringstream cs(strip(chunk));
    std::int64_t v;
    if (!(cs >> v) || (cs >> std::ws, !cs.eof()))
      throw ParseError("bad scalar: " + chunk);
    if (v < 0 || std::uint64_t(v) >= p.value())
      throw ParseError("scalar " + std::to_string(v) + " outside [0, " +
                       std::to_string(p.value()) + ")");
    out.emplace_back(std::uint32_t(v), p);
  }
  if (out.empty()) throw ParseError("empty scalar set");
  return out;
}

std::vector<std::uint64_t> parse_uint_list(const std::string& literal) {
  std::vector<std::uint64_t> out;
  std::istringstream ss(literal);
  std::string chunk;
  while (std::getline(ss, chunk, ',')) {
    std::istringstream cs(strip(chunk));
    std::uint64_t v;
    if (!(cs >> v) || (cs >> std::ws, !cs.eof()))
      throw ParseError("bad integer: " + chunk);
    out.push_back(v);
  }
  return out;
}

}  // namespace ffproj
