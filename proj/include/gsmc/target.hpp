#pragma once

#include <map>
#include <string>
#include <vector>

#include "gsmc/graph.hpp"
#include "gsmc/plan.hpp"
#include "gsmc/scheme.hpp"
#include "gsmc/spaces.hpp"

namespace gsmc {

// One registered score component scaled by a coefficient.
struct SoftTerm {
  std::string name;
  double coeff = 0.0;
};

// Everything that defines the sampling target: the districting scheme and
// splitting schedule, the state space, the compactness exponent rho, per-seat
// population bounds, soft score terms, and whether plans must respect
// administrative units.
struct TargetSpec {
  DistrictingScheme scheme;
  ScheduleKind schedule = ScheduleKind::district_only;
  SpaceKind space = SpaceKind::graph;
  double rho = 1.0;
  double per_seat_min = 0.0, per_seat_max = 0.0;
  std::vector<SoftTerm> soft_terms;
  bool hierarchical = false;
};

using ScoreFn = double (*)(const MapGraph&, const Plan&);

// Named plan scores usable as soft terms. Built-ins (both need units):
//   "admin-splits": number of units touching two or more regions;
//   "total-splits": sum over units of (pieces - 1), counting connected
//                   pieces across all regions.
const std::map<std::string, ScoreFn>& score_registry();

// Coefficient-weighted sum of the spec's soft terms.
double plan_score(const MapGraph& g, const Plan& plan, const TargetSpec& spec);

// Throws invalid_argument on a spec that can never evaluate (population
// bounds excluding the graph, unknown soft term, any-valid schedule on a
// multi-member scheme, hierarchy without units, non-finite or negative
// numbers). Returns advisory warnings for legal but costly settings.
std::vector<std::string> validate_target_spec(const MapGraph& g, const TargetSpec& spec);

// True iff every region's population lies in [s_k * per_seat_min,
// s_k * per_seat_max], both ends inclusive.
bool plan_balanced(const MapGraph& g, const Plan& plan, const TargetSpec& spec);

// Log unnormalized target density of a state, one overload per space.
// Returns -inf on hard-constraint violations: population bounds, contiguity,
// a region-size multiset the schedule cannot reach, or a non-hierarchical
// plan when the spec demands hierarchy. Throws invalid_argument when the
// state's space differs from the spec's or the state is malformed.
double log_target_density(const MapGraph& g, const Plan& plan, const TargetSpec& spec);
double log_target_density(const MapGraph& g, const ForestPlan& fp, const TargetSpec& spec);
double log_target_density(const MapGraph& g, const LinkingPlan& lp, const TargetSpec& spec);

}  // namespace gsmc
