#include "gsmc/scheme.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsmc {

DistrictingScheme DistrictingScheme::build(int D, int S, int d_min, int d_max) {
  if (D < 1 || S < 1 || d_min < 1 || d_max < d_min)
    throw std::invalid_argument("malformed districting scheme");
  if (static_cast<long long>(D) * d_min > S || static_cast<long long>(D) * d_max < S)
    throw std::invalid_argument("seat total unreachable with D districts in [d_min, d_max]");
  // No value in [d_min, d_max] may be a sum of two values in the range.
  if (d_max > 1 && 2 * d_min <= d_max)
    throw std::invalid_argument("district size range admits a size equal to a sum of two sizes");
  return {D, S, d_min, d_max};
}

bool completable(const DistrictingScheme& scheme, const std::vector<int>& sizes) {
  long long total = 0, lo_sum = 0, hi_sum = 0;
  for (int s : sizes) {
    if (s < 1) return false;
    total += s;
    const int lo = (s + scheme.d_max - 1) / scheme.d_max;
    const int hi = s / scheme.d_min;
    if (hi < lo) return false;
    lo_sum += lo;
    hi_sum += hi;
  }
  return total == scheme.S && lo_sum <= scheme.D && scheme.D <= hi_sum;
}

bool multiset_schedule_valid(const DistrictingScheme& scheme, ScheduleKind kind,
                             const std::vector<int>& sizes) {
  if (!completable(scheme, sizes)) return false;
  if (kind == ScheduleKind::district_only) {
    int multis = 0;
    for (int s : sizes)
      if (scheme.is_multidistrict(s)) ++multis;
    if (multis > 1) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> schedule_pairs(const DistrictingScheme& scheme,
                                                ScheduleKind kind, int s,
                                                const std::vector<int>& current_sizes) {
  if (std::find(current_sizes.begin(), current_sizes.end(), s) == current_sizes.end())
    throw std::invalid_argument("s is not the size of an existing region");
  std::vector<std::pair<int, int>> out;

  if (kind == ScheduleKind::any_valid) {
    if (!scheme.single_member())
      throw std::invalid_argument("any-valid schedule requires a single-member scheme");
    for (int s1 = 1; s1 <= s / 2; ++s1) out.emplace_back(s1, s - s1);
    return out;
  }

  // district-only: peel one district off, keep the remainder reachable.
  std::vector<int> candidate(current_sizes);
  const std::size_t at =
      std::find(candidate.begin(), candidate.end(), s) - candidate.begin();
  candidate.push_back(0);  // slot for the peeled district
  for (int d = scheme.d_min; d <= std::min(scheme.d_max, s - 1); ++d) {
    candidate[at] = s - d;
    candidate.back() = d;
    if (multiset_schedule_valid(scheme, kind, candidate)) {
      const int a = std::min(d, s - d), b = std::max(d, s - d);
      if (std::find(out.begin(), out.end(), std::make_pair(a, b)) == out.end())
        out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> expand_pair_orientations(
    const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::pair<int, int>> out;
  out.reserve(2 * pairs.size());
  for (const auto& [a, b] : pairs) {
    out.emplace_back(a, b);
    if (a != b) out.emplace_back(b, a);
  }
  return out;
}

}  // namespace gsmc
