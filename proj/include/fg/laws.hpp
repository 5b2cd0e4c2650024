#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "fg/corpus.hpp"

namespace fg {

struct LawReport {
  std::string law;
  long instances = 0;
  std::vector<nlohmann::json> failures;  // minimized counterexamples
  double wall_ms = 0;
  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  bool sampled = false;   // exhaustive by default
  int sample_count = 500;
  uint64_t seed = 0;
  /// Per-axis tuple cap for the cubic laws; 0 disables the cap. Applied
  /// to the smallest-first ordering, so caps keep the structurally
  /// richest small elements.
  int triple_cap = 0;
};

/// Names accepted by verify_law, in report order.
const std::vector<std::string>& law_names();

/// Runs one named law over the corpus; unknown names throw Error.
LawReport verify_law(const Theory& theory, const Corpus& corpus, const std::string& law,
                     const VerifyOptions& options);

/// All laws in order.
std::vector<LawReport> verify_all(const Theory& theory, const Corpus& corpus,
                                  const VerifyOptions& options);

nlohmann::json report_to_json(const LawReport& report, bool timings = false);
std::string report_to_text(const LawReport& report);

}  // namespace fg
