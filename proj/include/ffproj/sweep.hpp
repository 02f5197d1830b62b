#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffproj/rational.hpp"
#include "ffproj/report.hpp"
#include "ffproj/verify.hpp"

namespace ffproj {

struct SweepCell {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::size_t size_k = 0;
  std::size_t family_dim = 0;   // member dimension of the sampled family
  std::size_t family_size = 0;
  std::size_t instances = 1;
  std::string generator = "random";  // "random" or "extremal"
  std::uint64_t d = 1;               // extremal subspace parameter
};

// A sweep evaluates one check over seeded instances arranged in cells.
// check is a bound name (ratio probe, optional floor assertion) or "chen"
// (exact verifier, statement + m).
struct SweepConfig {
  std::string check;
  BoundSpec spec{BoundName::Planar, std::nullopt, std::nullopt, std::nullopt};
  int statement = 1;
  std::size_t chen_m = 1;
  std::optional<Rational> floor;
  bool require_hypotheses = false;
  std::size_t max_resample = 1000;
  std::size_t jobs = 1;
  std::vector<SweepCell> cells;
};

SweepConfig parse_sweep_config(const nlohmann::json& j);

// Instances are numbered globally in cell order; instance g draws from the
// child stream g of the master seed, so results do not depend on scheduling.
Report run_sweep(const SweepConfig& cfg, std::uint64_t seed,
                 std::uint64_t budget = kDefaultBudget);

}  // namespace ffproj
