#include "coalbribe/election.hpp"

#include <numeric>
#include <stdexcept>

namespace coalbribe {

std::string to_string(ScoringRule rule) {
  return rule == ScoringRule::Plurality ? "plurality" : "borda";
}

PreferenceOrder::PreferenceOrder(std::vector<PartyId> ranking) : ranking_(std::move(ranking)) {
  const int m = static_cast<int>(ranking_.size());
  if (m == 0) {
    throw std::domain_error("preference order must rank at least one party");
  }
  position_.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    PartyId p = ranking_[i];
    if (p < 0 || p >= m) {
      throw std::domain_error("party index " + std::to_string(p) + " out of range");
    }
    if (position_[p] != 0) {
      throw std::domain_error("party index " + std::to_string(p) + " ranked twice");
    }
    position_[p] = i + 1;
  }
}

int PreferenceOrder::position(PartyId party) const {
  if (party < 0 || party >= size()) {
    throw std::domain_error("unknown party index " + std::to_string(party));
  }
  return position_[party];
}

PreferenceOrder PreferenceOrder::lifted_to_top(PartyId party) const {
  std::vector<PartyId> out;
  out.reserve(ranking_.size());
  out.push_back(party);
  for (PartyId p : ranking_) {
    if (p != party) out.push_back(p);
  }
  return PreferenceOrder(std::move(out));
}

Election::Election(std::vector<std::string> parties, std::vector<std::string> voters,
                   std::vector<PreferenceOrder> orders)
    : parties_(std::move(parties)), voters_(std::move(voters)), orders_(std::move(orders)) {
  if (parties_.empty()) throw std::domain_error("election needs at least one party");
  if (voters_.empty()) throw std::domain_error("election needs at least one voter");
  if (voters_.size() != orders_.size()) {
    throw std::domain_error("one preference order is required per voter");
  }
  for (const auto& o : orders_) {
    if (o.size() != num_parties()) {
      throw std::domain_error("preference order does not rank every party");
    }
  }
}

PartyId Election::party_index(const std::string& name) const {
  for (int i = 0; i < num_parties(); ++i) {
    if (parties_[i] == name) return i;
  }
  return -1;
}

int Election::voter_index(const std::string& name) const {
  for (int i = 0; i < num_voters(); ++i) {
    if (voters_[i] == name) return i;
  }
  return -1;
}

Points score(const PreferenceOrder& order, PartyId party, ScoringRule rule) {
  int pos = order.position(party);
  if (rule == ScoringRule::Plurality) return pos == 1 ? 1 : 0;
  return order.size() - pos;
}

std::vector<Points> score_vector(const PreferenceOrder& order, ScoringRule rule) {
  std::vector<Points> out(order.size(), 0);
  for (PartyId p = 0; p < order.size(); ++p) out[p] = score(order, p, rule);
  return out;
}

Points total_score(std::span<const PreferenceOrder> orders, std::span<const PartyId> parties,
                   ScoringRule rule) {
  Points sum = 0;
  for (const auto& o : orders) {
    for (PartyId p : parties) sum += score(o, p, rule);
  }
  return sum;
}

std::vector<Points> tallies(std::span<const PreferenceOrder> orders, int num_parties,
                            ScoringRule rule) {
  std::vector<Points> out(num_parties, 0);
  for (const auto& o : orders) {
    if (rule == ScoringRule::Plurality) {
      out[o.top()] += 1;
    } else {
      for (int pos = 1; pos <= o.size(); ++pos) out[o.at(pos)] += o.size() - pos;
    }
  }
  return out;
}

Points grand_total(int num_voters, int num_parties, ScoringRule rule) {
  if (rule == ScoringRule::Plurality) return num_voters;
  return static_cast<Points>(num_voters) * num_parties * (num_parties - 1) / 2;
}

Points activity_bound(const Rational& threshold, Points grand_total) {
  return ceil_to_int64(threshold * grand_total);
}

std::vector<PartyId> active_parties(std::span<const PreferenceOrder> orders, ScoringRule rule,
                                    const Rational& threshold) {
  const int m = orders.front().size();
  auto t = tallies(orders, m, rule);
  Points bound = activity_bound(threshold, grand_total(static_cast<int>(orders.size()), m, rule));
  std::vector<PartyId> out;
  for (PartyId p = 0; p < m; ++p) {
    if (t[p] >= bound) out.push_back(p);
  }
  return out;
}

std::vector<Rational> seat_fractions_from_tallies(std::span<const Points> tallies,
                                                  const Rational& threshold) {
  Points total = std::accumulate(tallies.begin(), tallies.end(), Points{0});
  Points bound = activity_bound(threshold, total);
  Points active_total = 0;
  for (Points v : tallies) {
    if (v >= bound) active_total += v;
  }
  std::vector<Rational> out(tallies.size(), Rational(0));
  if (active_total == 0) return out;
  for (std::size_t p = 0; p < tallies.size(); ++p) {
    if (tallies[p] >= bound) out[p] = Rational(tallies[p], active_total);
  }
  return out;
}

std::vector<Rational> seat_fractions(std::span<const PreferenceOrder> orders, ScoringRule rule,
                                     const Rational& threshold) {
  auto t = tallies(orders, orders.front().size(), rule);
  return seat_fractions_from_tallies(t, threshold);
}

}  // namespace coalbribe
