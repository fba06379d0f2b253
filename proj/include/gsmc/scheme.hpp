#pragma once

#include <utility>
#include <vector>

namespace gsmc {

// Districting scheme (D, S, [d_min, d_max]): D districts holding S total
// seats, each district's size within the range. Valid schemes admit no size
// in range expressible as a sum of two sizes in range (forces 2*d_min > d_max
// when d_max > 1), so districts are never accidentally splittable.
struct DistrictingScheme {
  int D = 0, S = 0, d_min = 0, d_max = 0;

  static DistrictingScheme build(int D, int S, int d_min, int d_max);
  bool single_member() const { return d_min == 1 && d_max == 1; }
  bool is_district(int s) const { return s >= d_min && s <= d_max; }
  bool is_multidistrict(int s) const { return s > d_max; }
};

enum class ScheduleKind { district_only, any_valid };

// True iff the size multiset can still be refined into exactly D districts.
// A region of size s can become j districts for any j in
// [ceil(s/d_max), floor(s/d_min)]; the multiset works iff every region's
// interval is nonempty and D lies in the interval sum.
bool completable(const DistrictingScheme& scheme, const std::vector<int>& sizes);

// True iff a partial plan with this size multiset is reachable under the
// schedule: completable, and for district-only at most one region above d_max.
bool multiset_schedule_valid(const DistrictingScheme& scheme, ScheduleKind kind,
                             const std::vector<int>& sizes);

// Allowed size pairs (s1 <= s2, s1 + s2 = s) for splitting a region of size s
// out of a plan whose current region sizes are `current_sizes` (s included).
// district-only: (d, s-d) for feasible district sizes d leaving a reachable
// multiset; any-valid (single-member schemes only): every (s1, s-s1).
std::vector<std::pair<int, int>> schedule_pairs(const DistrictingScheme& scheme,
                                                ScheduleKind kind, int s,
                                                const std::vector<int>& current_sizes);

// Ordered side assignments fed to tree-cut enumeration: each unordered pair
// (s1, s2) expands to (s1, s2) and, when distinct, (s2, s1), so either side
// of a cut can receive either size.
std::vector<std::pair<int, int>> expand_pair_orientations(
    const std::vector<std::pair<int, int>>& pairs);

}  // namespace gsmc
