#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "gsmc/scheme.hpp"

using namespace gsmc;

TEST_CASE("scheme validation", "[scheme]") {
  CHECK_NOTHROW(DistrictingScheme::build(7, 7, 1, 1));
  CHECK_NOTHROW(DistrictingScheme::build(5, 20, 3, 5));
  // 4 = 2 + 2 is a size in range expressible as a sum of two sizes in range.
  CHECK_THROWS_AS(DistrictingScheme::build(4, 12, 2, 4), std::invalid_argument);
  // Seat totals unreachable.
  CHECK_THROWS_AS(DistrictingScheme::build(3, 20, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(DistrictingScheme::build(10, 20, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(DistrictingScheme::build(0, 5, 1, 1), std::invalid_argument);
}

TEST_CASE("completability of size multisets", "[scheme]") {
  const auto scheme = DistrictingScheme::build(5, 20, 3, 5);
  CHECK(completable(scheme, {20}));
  CHECK(completable(scheme, {5, 5, 10}));
  CHECK(completable(scheme, {3, 7, 10}));
  // Four 5-seat districts leave no room for a fifth.
  CHECK_FALSE(completable(scheme, {5, 5, 5, 5}));
  // A region of size 2 can never become districts of size 3..5.
  CHECK_FALSE(completable(scheme, {2, 18}));
  // Wrong total.
  CHECK_FALSE(completable(scheme, {5, 5}));

  const auto sm = DistrictingScheme::build(6, 6, 1, 1);
  CHECK(completable(sm, {2, 2, 2}));
  CHECK(completable(sm, {6}));
}

TEST_CASE("district-only schedule pairs", "[scheme]") {
  // Single member, D = S = 10: only (1, 9) from the whole map.
  const auto sm10 = DistrictingScheme::build(10, 10, 1, 1);
  CHECK(schedule_pairs(sm10, ScheduleKind::district_only, 10, {10}) ==
        std::vector<std::pair<int, int>>{{1, 9}});

  // Multi-member (D=5, S=20, sizes 3..5), first split of the whole map.
  const auto mm = DistrictingScheme::build(5, 20, 3, 5);
  CHECK(schedule_pairs(mm, ScheduleKind::district_only, 20, {20}) ==
        std::vector<std::pair<int, int>>{{3, 17}, {4, 16}, {5, 15}});
  // Current sizes (5,5,10): (5,5) must be excluded because (5,5,5,5)
  // cannot finish as five districts.
  CHECK(schedule_pairs(mm, ScheduleKind::district_only, 10, {5, 5, 10}) ==
        std::vector<std::pair<int, int>>{{3, 7}, {4, 6}});
  // Validity is judged on the post-split multiset: from (3,7,10) only
  // (5,5) leaves exactly five finishable districts.
  CHECK(schedule_pairs(mm, ScheduleKind::district_only, 10, {3, 7, 10}) ==
        std::vector<std::pair<int, int>>{{5, 5}});

  CHECK_THROWS_AS(schedule_pairs(mm, ScheduleKind::district_only, 12, {5, 5, 10}),
                  std::invalid_argument);
}

TEST_CASE("any-valid schedule pairs", "[scheme]") {
  const auto sm9 = DistrictingScheme::build(9, 9, 1, 1);
  CHECK(schedule_pairs(sm9, ScheduleKind::any_valid, 9, {9}) ==
        std::vector<std::pair<int, int>>{{1, 8}, {2, 7}, {3, 6}, {4, 5}});

  const auto mm = DistrictingScheme::build(5, 20, 3, 5);
  CHECK_THROWS_AS(schedule_pairs(mm, ScheduleKind::any_valid, 10, {5, 5, 10}),
                  std::invalid_argument);
}

TEST_CASE("schedule validity of multisets", "[scheme]") {
  const auto mm = DistrictingScheme::build(5, 20, 3, 5);
  CHECK(multiset_schedule_valid(mm, ScheduleKind::district_only, {5, 5, 10}));
  CHECK(multiset_schedule_valid(mm, ScheduleKind::district_only, {3, 17}));
  // Two multidistricts cannot arise under district-only splitting.
  CHECK_FALSE(multiset_schedule_valid(mm, ScheduleKind::district_only, {7, 13}));
  CHECK_FALSE(multiset_schedule_valid(mm, ScheduleKind::district_only, {3, 7, 10}));

  const auto sm = DistrictingScheme::build(9, 9, 1, 1);
  CHECK(multiset_schedule_valid(sm, ScheduleKind::any_valid, {2, 3, 4}));
  CHECK(multiset_schedule_valid(sm, ScheduleKind::any_valid, {2, 2, 5}));
}

TEST_CASE("pair orientation expansion", "[scheme]") {
  const std::vector<std::pair<int, int>> pairs{{3, 7}, {5, 5}};
  CHECK(expand_pair_orientations(pairs) ==
        std::vector<std::pair<int, int>>{{3, 7}, {7, 3}, {5, 5}});
}
