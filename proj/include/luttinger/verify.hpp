#pragma once

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

#include "luttinger/blocks.hpp"
#include "luttinger/coset_enum.hpp"
#include "luttinger/tietze.hpp"

namespace luttinger {

struct VerifyOptions {
  std::uint64_t max_cosets = kDefaultCosetCap;
  TietzeBudget effort{};
  /// Source of building blocks; replaceable for mutation/degradation tests.
  std::function<ManifoldBlock(const std::string&)> block_source =
      [](const std::string& n) { return builtin(n); };
};

struct ClaimResult {
  enum class Status { pass, fail, blocked };
  std::string id;
  std::string statement;
  Status status = Status::blocked;
  std::string details;
};

struct VerifyReport {
  std::vector<ClaimResult> claims;

  bool all_passed() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// Runs the full built-in claim suite: the R/P/Q pipelines, invariant
/// arithmetic, mapping-torus cross-checks, and soundness checks on every
/// simplification performed along the way. Failures become report entries,
/// never exceptions.
VerifyReport verify_claims(const VerifyOptions& options = {});

}  // namespace luttinger
