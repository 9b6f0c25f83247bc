#include "coalbribe/instance.hpp"

#include <stdexcept>

namespace coalbribe {

namespace {

bool in_unit_interval(const Rational& r) { return r >= 0 && r <= 1; }

}  // namespace

void ProblemInstance::validate() const {
  const int m = election.num_parties();
  if (coalition.empty()) throw std::domain_error("coalition must be nonempty");
  CoalitionMask seen(m, false);
  for (PartyId p : coalition) {
    if (p < 0 || p >= m) throw std::domain_error("coalition names an unknown party");
    if (seen[p]) throw std::domain_error("coalition lists a party twice");
    seen[p] = true;
  }
  if (preferred && (*preferred < 0 || *preferred >= m || !seen[*preferred])) {
    throw std::domain_error("preferred party must belong to the coalition");
  }
  if (!preferred && rho != 0) {
    throw std::domain_error("a target ratio requires a preferred party");
  }
  if (!in_unit_interval(threshold)) throw std::domain_error("threshold must lie in [0,1]");
  if (!in_unit_interval(phi)) throw std::domain_error("phi must lie in [0,1]");
  if (!in_unit_interval(rho)) throw std::domain_error("rho must lie in [0,1]");
  if (budget < 0) throw std::domain_error("budget must be non-negative");
  if (costs.num_voters() != election.num_voters()) {
    throw std::domain_error("cost model must cover every voter");
  }
  if (costs.type() == BriberyType::Swap) {
    for (int i = 0; i < election.num_voters(); ++i) {
      if (static_cast<int>(costs.swap_prices(i).size()) != m) {
        throw std::domain_error("swap prices must cover every ordered party pair");
      }
    }
  }
  if (costs.type() == BriberyType::Shift) {
    const std::size_t need = static_cast<std::size_t>(m * (m - 1) / 2 + 1);
    for (int i = 0; i < election.num_voters(); ++i) {
      if (costs.shift_table(i).values().size() < need) {
        throw std::domain_error("shift table shorter than m(m-1)/2 + 1 entries");
      }
    }
  }
}

Points ProblemInstance::activity_bound() const {
  return coalbribe::activity_bound(
      threshold, grand_total(election.num_voters(), election.num_parties(), rule));
}

GoalChecker::GoalChecker(const ProblemInstance& instance)
    : bound_(instance.activity_bound()),
      phi_(instance.phi),
      rho_(instance.effective_rho()),
      mask_(instance.coalition_mask()),
      anchor_(instance.anchor()) {}

bool GoalChecker::holds(Points coalition_active, Points anchor_active, Points all_active) const {
  // With no active party every seat share is zero; only phi = 0 is met.
  if (all_active == 0 && phi_ > 0) return false;
  if (!at_least_fraction_of(coalition_active, phi_, all_active)) return false;
  return at_least_fraction_of(anchor_active, rho_, coalition_active);
}

bool GoalChecker::operator()(std::span<const Points> tallies) const {
  Points all = 0;
  Points coalition = 0;
  for (std::size_t p = 0; p < tallies.size(); ++p) {
    if (tallies[p] < bound_) continue;
    all += tallies[p];
    if (mask_[p]) coalition += tallies[p];
  }
  Points anchor = tallies[anchor_] >= bound_ ? tallies[anchor_] : 0;
  return holds(coalition, anchor, all);
}

bool check_goals(std::span<const PreferenceOrder> orders, const ProblemInstance& instance) {
  auto t = tallies(orders, instance.election.num_parties(), instance.rule);
  return GoalChecker(instance)(t);
}

}  // namespace coalbribe
