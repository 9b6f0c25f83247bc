#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "coalbribe/instance.hpp"

namespace testing {

using namespace coalbribe;

inline PreferenceOrder ord(std::initializer_list<PartyId> ranking) {
  return PreferenceOrder(std::vector<PartyId>(ranking));
}

inline Election make_election(int m, std::vector<PreferenceOrder> orders) {
  std::vector<std::string> parties;
  for (int j = 0; j < m; ++j) parties.push_back("c" + std::to_string(j + 1));
  std::vector<std::string> voters;
  for (std::size_t i = 0; i < orders.size(); ++i) voters.push_back("v" + std::to_string(i + 1));
  return Election(std::move(parties), std::move(voters), std::move(orders));
}

inline Election make_named_election(std::vector<std::string> parties,
                                    std::vector<PreferenceOrder> orders) {
  std::vector<std::string> voters;
  for (std::size_t i = 0; i < orders.size(); ++i) voters.push_back("v" + std::to_string(i + 1));
  return Election(std::move(parties), std::move(voters), std::move(orders));
}

/// Repeats `order` `count` times onto `out`.
inline void repeat(std::vector<PreferenceOrder>& out, const PreferenceOrder& order, int count) {
  for (int k = 0; k < count; ++k) out.push_back(order);
}

inline std::vector<PreferenceOrder> all_orders(int m) {
  std::vector<PartyId> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<PreferenceOrder> out;
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Kendall distance counted directly from positions.
inline int crossed_pairs(const PreferenceOrder& before, const PreferenceOrder& after) {
  int count = 0;
  for (PartyId x = 0; x < before.size(); ++x) {
    for (PartyId y = 0; y < before.size(); ++y) {
      if (before.position(y) > before.position(x) && after.position(y) < after.position(x)) {
        ++count;
      }
    }
  }
  return count;
}

/// Shift admissibility restated: a member may fall only below other members,
/// and non-members never reorder among themselves.
inline bool shift_allowed(const CoalitionMask& mask, const PreferenceOrder& before,
                          const PreferenceOrder& after) {
  for (PartyId x = 0; x < before.size(); ++x) {
    for (PartyId y = 0; y < before.size(); ++y) {
      bool overtakes = before.position(y) > before.position(x) &&
                       after.position(y) < after.position(x);
      if (overtakes && !mask[y]) return false;
    }
  }
  return true;
}

inline ProblemInstance make_instance(Election election, ScoringRule rule, Rational threshold,
                                     std::vector<PartyId> coalition,
                                     std::optional<PartyId> preferred, Rational phi, Rational rho,
                                     Cost budget, CostModel costs) {
  return ProblemInstance{std::move(election), rule,   std::move(threshold), std::move(coalition),
                         preferred,           std::move(phi), std::move(rho), budget,
                         std::move(costs)};
}

inline SwapPrices uniform_swap(int m, Cost price) {
  return SwapPrices(m, std::vector<Cost>(m, price));
}

}  // namespace testing
