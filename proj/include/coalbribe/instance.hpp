#pragma once

#include <optional>
#include <span>
#include <vector>

#include "coalbribe/costs.hpp"
#include "coalbribe/election.hpp"
#include "coalbribe/rational.hpp"

namespace coalbribe {

/// A complete CB / CBP query. CB is represented by an absent preferred party,
/// in which case the ratio target is zero.
struct ProblemInstance {
  Election election;
  ScoringRule rule = ScoringRule::Plurality;
  Rational threshold{0};
  std::vector<PartyId> coalition;
  std::optional<PartyId> preferred;
  Rational phi{0};
  Rational rho{0};
  Cost budget = 0;
  CostModel costs;

  /// Throws std::domain_error on any violated invariant.
  void validate() const;

  bool is_cbp() const { return preferred.has_value(); }
  /// The party solvers treat as c1: the preferred party, or the first
  /// coalition member for CB (whose ratio target is then zero).
  PartyId anchor() const { return preferred ? *preferred : coalition.front(); }
  Rational effective_rho() const { return preferred ? rho : Rational(0); }
  CoalitionMask coalition_mask() const {
    return make_mask(coalition, election.num_parties());
  }
  /// Least points a party needs to be active (threshold times the fixed total).
  Points activity_bound() const;
};

/// Evaluates the seat goals on a per-party tally with exact integer arithmetic.
class GoalChecker {
 public:
  explicit GoalChecker(const ProblemInstance& instance);

  bool operator()(std::span<const Points> tallies) const;
  /// Goal test on aggregated active points: coalition, anchor and everyone.
  bool holds(Points coalition_active, Points anchor_active, Points all_active) const;

  Points bound() const { return bound_; }

 private:
  Points bound_;
  Rational phi_;
  Rational rho_;
  CoalitionMask mask_;
  PartyId anchor_;
};

/// Whether the bribed orders meet the coalition target and, for CBP, the ratio.
bool check_goals(std::span<const PreferenceOrder> orders, const ProblemInstance& instance);

}  // namespace coalbribe
