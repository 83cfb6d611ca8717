#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hjac {

struct FixtureOutcome {
  bool pass = false;
  std::string detail;
};

/// A named end-to-end check with known expected values.
struct Fixture {
  std::string name;
  std::string summary;
  std::function<FixtureOutcome()> run;
};

/// The worked-example fixture set run by `hjac corpus`. Randomized fixtures
/// draw from `seed`.
std::vector<Fixture> corpus_fixtures(std::uint64_t seed);

/// Fixtures whose name contains `filter` (all when empty).
std::vector<Fixture> select_fixtures(std::vector<Fixture> fixtures, const std::string& filter);

}  // namespace hjac
