#include "coalbribe/costs.hpp"

#include <stdexcept>

namespace coalbribe {

std::string to_string(BriberyType type) {
  switch (type) {
    case BriberyType::Unit: return "unit";
    case BriberyType::Dollar: return "dollar";
    case BriberyType::Swap: return "swap";
    case BriberyType::Shift: return "shift";
  }
  return "?";
}

CoalitionMask make_mask(std::span<const PartyId> coalition, int num_parties) {
  CoalitionMask mask(num_parties, false);
  for (PartyId p : coalition) mask.at(p) = true;
  return mask;
}

ShiftTable ShiftTable::multiplicative(Cost slope, int num_parties) {
  if (slope < 0) throw std::domain_error("shift slope must be non-negative");
  const int max_pairs = num_parties * (num_parties - 1) / 2;
  ShiftTable table;
  table.values_.resize(max_pairs + 1);
  for (int x = 0; x <= max_pairs; ++x) table.values_[x] = slope * x;
  table.slope_ = slope;
  return table;
}

ShiftTable ShiftTable::from_values(std::vector<Cost> values) {
  if (values.empty() || values.front() != 0) {
    throw std::domain_error("shift table must start with s(0) = 0");
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) throw std::domain_error("shift table must be non-decreasing");
  }
  ShiftTable table;
  table.values_ = std::move(values);
  // Linear tables are recognised so multiplicative-only transforms accept them.
  if (table.values_.size() >= 2) {
    Cost slope = table.values_[1];
    bool linear = true;
    for (std::size_t i = 0; i < table.values_.size(); ++i) {
      linear = linear && table.values_[i] == slope * static_cast<Cost>(i);
    }
    if (linear) table.slope_ = slope;
  } else {
    table.slope_ = 0;
  }
  return table;
}

CostModel CostModel::unit(int num_voters) {
  CostModel model;
  model.type_ = BriberyType::Unit;
  model.num_voters_ = num_voters;
  model.prices_.assign(num_voters, 1);
  return model;
}

CostModel CostModel::dollar(std::vector<Cost> prices) {
  for (Cost p : prices) {
    if (p < 0) throw std::domain_error("dollar prices must be non-negative");
  }
  CostModel model;
  model.type_ = BriberyType::Dollar;
  model.num_voters_ = static_cast<int>(prices.size());
  model.prices_ = std::move(prices);
  return model;
}

CostModel CostModel::swap(std::vector<SwapPrices> prices) {
  for (auto& matrix : prices) {
    for (std::size_t x = 0; x < matrix.size(); ++x) {
      auto& row = matrix[x];
      if (row.size() != matrix.size()) throw std::domain_error("swap prices must be square");
      for (Cost c : row) {
        if (c < 0) throw std::domain_error("swap prices must be non-negative");
      }
      row[x] = 0;  // never charged; zeroed so equal models compare equal
    }
  }
  CostModel model;
  model.type_ = BriberyType::Swap;
  model.num_voters_ = static_cast<int>(prices.size());
  model.swap_ = std::move(prices);
  return model;
}

CostModel CostModel::shift(std::vector<ShiftTable> tables) {
  CostModel model;
  model.type_ = BriberyType::Shift;
  model.num_voters_ = static_cast<int>(tables.size());
  model.shift_ = std::move(tables);
  return model;
}

Cost CostModel::price(int voter) const {
  if (type_ != BriberyType::Unit && type_ != BriberyType::Dollar) {
    throw std::logic_error("flat price requested from a " + to_string(type_) + " model");
  }
  return prices_.at(voter);
}

std::vector<PreferenceOrder> BribePlan::apply(const Election& election) const {
  std::vector<PreferenceOrder> out = election.orders();
  for (const auto& [voter, order] : replacements) out.at(voter) = order;
  return out;
}

namespace {

void require_same_universe(const PreferenceOrder& a, const PreferenceOrder& b) {
  if (a.size() != b.size()) {
    throw std::domain_error("preference orders range over different party sets");
  }
}

}  // namespace

std::vector<std::pair<PartyId, PartyId>> inverted_pairs(const PreferenceOrder& before,
                                                        const PreferenceOrder& after) {
  require_same_universe(before, after);
  std::vector<std::pair<PartyId, PartyId>> out;
  const int m = before.size();
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      PartyId x = before.at(i);
      PartyId y = before.at(j);
      if (after.position(y) < after.position(x)) out.emplace_back(x, y);
    }
  }
  return out;
}

int count_inverted_pairs(const PreferenceOrder& before, const PreferenceOrder& after) {
  require_same_universe(before, after);
  int count = 0;
  const int m = before.size();
  for (int i = 1; i <= m; ++i) {
    int pi = after.position(before.at(i));
    for (int j = i + 1; j <= m; ++j) {
      if (after.position(before.at(j)) < pi) ++count;
    }
  }
  return count;
}

bool admissible(const CostModel& model, const CoalitionMask& coalition,
                const PreferenceOrder& before, const PreferenceOrder& after) {
  require_same_universe(before, after);
  if (model.type() != BriberyType::Shift) return true;
  const int m = before.size();
  for (int i = 1; i <= m; ++i) {
    PartyId x = before.at(i);
    for (int j = i + 1; j <= m; ++j) {
      PartyId y = before.at(j);
      if (after.position(y) > after.position(x)) continue;
      // y overtook x; only coalition members may overtake.
      if (!coalition[y]) return false;
    }
  }
  return true;
}

std::optional<Cost> bribe_cost(const CostModel& model, const CoalitionMask& coalition, int voter,
                               const PreferenceOrder& before, const PreferenceOrder& after) {
  if (before == after) return Cost{0};
  switch (model.type()) {
    case BriberyType::Unit:
    case BriberyType::Dollar:
      return model.price(voter);
    case BriberyType::Swap: {
      const auto& sw = model.swap_prices(voter);
      Cost sum = 0;
      for (auto [x, y] : inverted_pairs(before, after)) sum += sw[x][y];
      return sum;
    }
    case BriberyType::Shift:
      if (!admissible(model, coalition, before, after)) return std::nullopt;
      return model.shift_table(voter)(count_inverted_pairs(before, after));
  }
  return std::nullopt;
}

std::optional<Cost> plan_cost(const CostModel& model, const CoalitionMask& coalition,
                              const Election& election, const BribePlan& plan) {
  Cost sum = 0;
  for (const auto& [voter, order] : plan.replacements) {
    if (voter < 0 || voter >= election.num_voters()) {
      throw std::domain_error("bribe plan names an unknown voter");
    }
    auto c = bribe_cost(model, coalition, voter, election.order(voter), order);
    if (!c) return std::nullopt;
    sum += *c;
  }
  return sum;
}

}  // namespace coalbribe
