#include "gsmc/target.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gsmc/hierarchy.hpp"
#include "gsmc/tree.hpp"

namespace gsmc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double admin_splits_score(const MapGraph& g, const Plan& plan) {
  if (!g.has_units()) throw std::invalid_argument("graph has no administrative units");
  std::vector<int> first_region(g.num_units(), -1);
  std::vector<char> split(g.num_units(), 0);
  int count = 0;
  for (int v = 0; v < g.n(); ++v) {
    const int a = g.unit[v];
    if (first_region[a] == -1) {
      first_region[a] = plan.assign[v];
    } else if (first_region[a] != plan.assign[v] && !split[a]) {
      split[a] = 1;
      ++count;
    }
  }
  return count;
}

double total_splits_score(const MapGraph& g, const Plan& plan) {
  return admin_splits(g, plan);
}

// Hard-constraint gate shared by all three spaces, then the common
// -J + expo * sum_k log tau(G_k) core (tau_eta when hierarchical).
double density_core(const MapGraph& g, const Plan& plan, const TargetSpec& spec, double expo) {
  if (!plan_valid(g, plan)) return kNegInf;
  if (!plan_balanced(g, plan, spec)) return kNegInf;
  if (!multiset_schedule_valid(spec.scheme, spec.schedule, plan.sizes)) return kNegInf;
  if (spec.hierarchical && !is_hierarchical_plan(g, plan)) return kNegInf;

  double total = -plan_score(g, plan, spec);
  if (expo != 0.0) {
    for (int k = 0; k < plan.regions(); ++k) {
      const auto verts = region_vertices(plan, k);
      total += expo * (spec.hierarchical ? log_tau_eta(g, verts)
                                         : log_spanning_tree_count(g, verts));
    }
  }
  return total;
}

}  // namespace

const std::map<std::string, ScoreFn>& score_registry() {
  static const std::map<std::string, ScoreFn> registry = {
      {"admin-splits", &admin_splits_score},
      {"total-splits", &total_splits_score},
  };
  return registry;
}

double plan_score(const MapGraph& g, const Plan& plan, const TargetSpec& spec) {
  double total = 0.0;
  const auto& registry = score_registry();
  for (const auto& term : spec.soft_terms) total += term.coeff * registry.at(term.name)(g, plan);
  return total;
}

std::vector<std::string> validate_target_spec(const MapGraph& g, const TargetSpec& spec) {
  if (spec.scheme.D < 1) throw std::invalid_argument("districting scheme is unset");
  if (!std::isfinite(spec.per_seat_min) || !std::isfinite(spec.per_seat_max))
    throw std::invalid_argument("population bounds must be finite");
  const double per_seat = static_cast<double>(g.total_pop) / spec.scheme.S;
  if (!(spec.per_seat_min <= per_seat && per_seat <= spec.per_seat_max))
    throw std::invalid_argument("population bounds exclude the graph's per-seat average");
  if (!(spec.rho >= 0.0) || !std::isfinite(spec.rho))
    throw std::invalid_argument("rho must be finite and nonnegative");
  if (spec.schedule == ScheduleKind::any_valid && !spec.scheme.single_member())
    throw std::invalid_argument("any-valid schedule requires a single-member scheme");
  if (spec.hierarchical && !g.has_units())
    throw std::invalid_argument("hierarchical target needs administrative units on the graph");
  const auto& registry = score_registry();
  for (const auto& term : spec.soft_terms) {
    if (!registry.count(term.name))
      throw std::invalid_argument("unknown soft term: " + term.name);
    if (!std::isfinite(term.coeff))
      throw std::invalid_argument("soft term coefficient must be finite: " + term.name);
    if (!g.has_units())
      throw std::invalid_argument("soft term needs administrative units: " + term.name);
  }

  std::vector<std::string> warnings;
  if (std::abs(spec.rho - 1.0) > 0.3)
    warnings.push_back(
        "rho far from 1 recomputes per-region tree counts at every density "
        "evaluation and weakens sampling accuracy");
  return warnings;
}

bool plan_balanced(const MapGraph& g, const Plan& plan, const TargetSpec& spec) {
  const auto pops = region_pops(g, plan);
  for (int k = 0; k < plan.regions(); ++k) {
    const double pd = static_cast<double>(pops[k]);
    const int s = plan.sizes[k];
    if (!(pd >= s * spec.per_seat_min && pd <= s * spec.per_seat_max)) return false;
  }
  return true;
}

double log_target_density(const MapGraph& g, const Plan& plan, const TargetSpec& spec) {
  if (spec.space != SpaceKind::graph)
    throw std::invalid_argument("spec does not target graph space");
  return density_core(g, plan, spec, spec.rho);
}

double log_target_density(const MapGraph& g, const ForestPlan& fp, const TargetSpec& spec) {
  if (spec.space != SpaceKind::forest)
    throw std::invalid_argument("spec does not target forest space");
  if (static_cast<int>(fp.trees.size()) != fp.plan.regions())
    throw std::invalid_argument("forest has a tree count different from the plan's regions");
  int covered = 0;
  for (const auto& t : fp.trees) covered += t.n();
  if (covered != g.n()) throw std::invalid_argument("forest does not cover the graph");
  return density_core(g, fp.plan, spec, spec.rho - 1.0);
}

double log_target_density(const MapGraph& g, const LinkingPlan& lp, const TargetSpec& spec) {
  if (spec.space != SpaceKind::linking_edge)
    throw std::invalid_argument("spec does not target linking-edge space");
  const Plan& plan = lp.forest.plan;
  if (static_cast<int>(lp.forest.trees.size()) != plan.regions())
    throw std::invalid_argument("forest has a tree count different from the plan's regions");
  if (static_cast<int>(lp.linking_edges.size()) != plan.regions() - 1)
    throw std::invalid_argument("linking-edge set must hold regions-1 edges");
  const double core = density_core(g, plan, spec, spec.rho - 1.0);
  if (core == kNegInf) return kNegInf;
  const double link = spec.hierarchical
                          ? log_hier_linking_edge_count(g, plan)
                          : log_spanning_tree_count(quotient_multigraph(g, plan));
  return core - link;
}

}  // namespace gsmc
