#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coalbribe/rational.hpp"

namespace coalbribe {

using PartyId = int;
using Points = std::int64_t;

enum class ScoringRule { Plurality, Borda };

std::string to_string(ScoringRule rule);

/// A strict ranking of all parties, best first. Positions are 1-based.
class PreferenceOrder {
 public:
  PreferenceOrder() = default;
  /// Throws std::domain_error unless `ranking` is a permutation of 0..m-1.
  explicit PreferenceOrder(std::vector<PartyId> ranking);

  const std::vector<PartyId>& ranking() const { return ranking_; }
  int size() const { return static_cast<int>(ranking_.size()); }
  PartyId top() const { return ranking_.front(); }
  PartyId at(int position) const { return ranking_[position - 1]; }
  /// 1-based position; throws std::domain_error for an unknown party.
  int position(PartyId party) const;

  /// Moves `party` to rank 1 keeping every other relative order.
  PreferenceOrder lifted_to_top(PartyId party) const;

  friend bool operator==(const PreferenceOrder&, const PreferenceOrder&) = default;

 private:
  std::vector<PartyId> ranking_;
  std::vector<int> position_;
};

/// Parties, voters and one preference order per voter. Immutable once built.
class Election {
 public:
  Election(std::vector<std::string> parties, std::vector<std::string> voters,
           std::vector<PreferenceOrder> orders);

  int num_parties() const { return static_cast<int>(parties_.size()); }
  int num_voters() const { return static_cast<int>(voters_.size()); }
  const std::vector<std::string>& parties() const { return parties_; }
  const std::vector<std::string>& voters() const { return voters_; }
  const std::vector<PreferenceOrder>& orders() const { return orders_; }
  const PreferenceOrder& order(int voter) const { return orders_[voter]; }

  /// Index of a party by name, -1 if absent.
  PartyId party_index(const std::string& name) const;
  int voter_index(const std::string& name) const;

 private:
  std::vector<std::string> parties_;
  std::vector<std::string> voters_;
  std::vector<PreferenceOrder> orders_;
};

Points score(const PreferenceOrder& order, PartyId party, ScoringRule rule);

/// Points a single order awards, indexed by party.
std::vector<Points> score_vector(const PreferenceOrder& order, ScoringRule rule);

/// gamma(orders, parties): summed points of `parties` over all orders.
Points total_score(std::span<const PreferenceOrder> orders, std::span<const PartyId> parties,
                   ScoringRule rule);

/// Per-party totals over all orders.
std::vector<Points> tallies(std::span<const PreferenceOrder> orders, int num_parties,
                            ScoringRule rule);

/// gamma(orders, C), which depends only on n, m and the rule.
Points grand_total(int num_voters, int num_parties, ScoringRule rule);

/// Least point count a party needs to be active: ceil(t * grand total).
Points activity_bound(const Rational& threshold, Points grand_total);

std::vector<PartyId> active_parties(std::span<const PreferenceOrder> orders, ScoringRule rule,
                                    const Rational& threshold);

/// Seat fraction of every party; all zeros when no party is active.
std::vector<Rational> seat_fractions(std::span<const PreferenceOrder> orders, ScoringRule rule,
                                     const Rational& threshold);

/// Seat fractions computed from per-party point totals.
std::vector<Rational> seat_fractions_from_tallies(std::span<const Points> tallies,
                                                  const Rational& threshold);

}  // namespace coalbribe
