#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "weitz/block.hpp"
#include "weitz/sector.hpp"

namespace weitz {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Invariant and property checks across all modules, fast enough for the
/// `check` subcommand.
std::vector<CheckResult> run_property_checks(std::uint64_t seed);

/// Uniform random point of a block (rejection sampling per hexagon, hexagon
/// picked by area).
BlockPoint random_block_point(const Block& blk, std::mt19937_64& rng);

/// Uniform random point of a sector in polar coordinates.
PolarPoint random_sector_point(const Sector& s, std::mt19937_64& rng);

}  // namespace weitz
