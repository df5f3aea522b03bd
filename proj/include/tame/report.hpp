#pragma once

// Report emission: atomic file writes, suite aggregation and CSV tables.

#include <string>
#include <vector>

#include "tame/denom.hpp"

namespace tame {

/// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

/// Concatenates violations and uncovered entries, sums integer counts and
/// keeps the largest window.
VerificationReport merge_reports(const std::string& name, const std::vector<VerificationReport>& parts);

/// One row per enumerated rigid object: label, dimension vector and the
/// categorical denominator with respect to t (empty for Sigma T_i).
std::string inventory_csv(const ClusterCategory& cat, const ClusterTiltingObject& t, int window);

}  // namespace tame
