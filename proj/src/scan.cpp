// Copyright 2026 The entrosep authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entrosep/scan.hpp"

#include <cmath>
#include <sstream>

namespace entrosep {

namespace {

constexpr double kBracketWidth = 1e-8;
constexpr double kMonotoneSlack = 1e-9;

bool violated_at(const CriterionSetup& criterion, const StateFamily& family, double c,
                 double* margin = nullptr) {
  const CriterionReport report = criterion.evaluate(family.generator(c));
  if (margin != nullptr) *margin = report.margin;
  return report.violated;
}

}  // namespace

ThresholdResult scan_threshold(const StateFamily& family, const CriterionSetup& criterion,
                               std::size_t prescan_points) {
  if (prescan_points < 3) throw UsageError("scan_threshold: need at least 3 pre-scan points");

  ThresholdResult result;
  result.family = family.name;
  result.criterion_id = criterion.id;
  result.params = criterion.params;

  std::vector<bool> flags(prescan_points);
  for (std::size_t i = 0; i < prescan_points; ++i) {
    const double c = static_cast<double>(i) / static_cast<double>(prescan_points - 1);
    double margin = 0.0;
    flags[i] = violated_at(criterion, family, c, &margin);
    result.prescan.emplace_back(c, margin);
  }

  const bool any_violation = flags.back();
  for (std::size_t i = 0; i + 1 < prescan_points; ++i) {
    if (flags[i] && !flags[i + 1]) {
      std::ostringstream msg;
      msg << "scan_threshold: detection is not monotone in c;";
      for (const auto& [c, m] : result.prescan) msg << " (" << c << ", " << m << ")";
      throw NumericError(msg.str());
    }
  }
  if (any_violation) {
    // When a violation exists the margin must march down towards it.
    for (std::size_t i = 0; i + 1 < prescan_points; ++i) {
      if (result.prescan[i + 1].second > result.prescan[i].second + kMonotoneSlack) {
        std::ostringstream msg;
        msg << "scan_threshold: margin is not monotone in c;";
        for (const auto& [c, m] : result.prescan) msg << " (" << c << ", " << m << ")";
        throw NumericError(msg.str());
      }
    }
  }

  if (!any_violation) {
    result.c_star = std::nullopt;
    return result;
  }

  std::size_t first_violated = 0;
  while (!flags[first_violated]) ++first_violated;
  if (first_violated == 0) {
    throw NumericError("scan_threshold: criterion already violated at c = 0");
  }
  double lo = static_cast<double>(first_violated - 1) / static_cast<double>(prescan_points - 1);
  double hi = static_cast<double>(first_violated) / static_cast<double>(prescan_points - 1);
  std::size_t iterations = 0;
  while (hi - lo > kBracketWidth) {
    const double mid = 0.5 * (lo + hi);
    if (violated_at(criterion, family, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++iterations;
  }
  result.c_star = 0.5 * (lo + hi);
  result.bracket = {lo, hi};
  result.iterations = iterations;
  return result;
}

std::vector<std::pair<double, double>> margin_curve(const StateFamily& family,
                                                    const CriterionSetup& criterion,
                                                    std::size_t points) {
  if (points < 2) throw UsageError("margin_curve: need at least 2 points");
  std::vector<std::pair<double, double>> curve;
  curve.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double c = static_cast<double>(i) / static_cast<double>(points - 1);
    double margin = 0.0;
    violated_at(criterion, family, c, &margin);
    curve.emplace_back(c, margin);
  }
  return curve;
}

}  // namespace entrosep
