#include "coalbribe/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace coalbribe::io {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream words{std::string(raw)};
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

std::int64_t parse_integer(const Line& line, const std::string& token) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line.number, "expected an integer, got '" + token + "'");
  }
  return value;
}

Cost parse_cost(const Line& line, const std::string& token) {
  std::int64_t value = parse_integer(line, token);
  if (value < 0 || value >= kInfiniteCost) {
    throw ParseError(line.number, "price out of range: " + token);
  }
  return value;
}

Rational parse_fraction(const Line& line, const std::string& token) {
  try {
    return parse_rational(token);
  } catch (const std::exception& e) {
    throw ParseError(line.number, "bad rational '" + token + "': " + e.what());
  }
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, "'" + line.tokens[0] + "' takes " + std::to_string(count - 1) +
                                      " argument(s)");
  }
}

struct Draft {
  std::optional<int> parties_line;
  std::vector<std::string> parties;
  std::unordered_map<std::string, PartyId> party_index;
  std::optional<ScoringRule> rule;
  Rational threshold{0}, phi{0}, rho{0};
  int rho_line = 0;
  std::optional<Line> coalition_line, preferred_line;
  std::optional<Cost> budget;
  std::optional<Line> cost_line;
  BriberyType type = BriberyType::Unit;
  std::vector<std::string> voters;
  std::vector<PreferenceOrder> orders;
  std::vector<Line> price_lines;

  PartyId party(const Line& line, const std::string& name) const {
    auto it = party_index.find(name);
    if (it == party_index.end()) throw ParseError(line.number, "unknown party '" + name + "'");
    return it->second;
  }

  void require_parties(const Line& line) const {
    if (!parties_line) throw ParseError(line.number, "'parties' must come first");
  }

  PreferenceOrder order(const Line& line, std::size_t first) const {
    require_parties(line);
    std::vector<PartyId> ranking;
    std::vector<bool> seen(parties.size(), false);
    for (std::size_t k = first; k < line.tokens.size(); ++k) {
      PartyId p = party(line, line.tokens[k]);
      if (seen[p]) throw ParseError(line.number, "party '" + line.tokens[k] + "' ranked twice");
      seen[p] = true;
      ranking.push_back(p);
    }
    if (ranking.size() != parties.size()) {
      throw ParseError(line.number, "order ranks " + std::to_string(ranking.size()) + " of " +
                                        std::to_string(parties.size()) + " parties");
    }
    return PreferenceOrder(std::move(ranking));
  }

  void add_voter(const Line& line, std::string name, PreferenceOrder order) {
    if (name == "*") throw ParseError(line.number, "'*' is reserved");
    if (std::find(voters.begin(), voters.end(), name) != voters.end()) {
      throw ParseError(line.number, "duplicate voter '" + name + "'");
    }
    voters.push_back(std::move(name));
    orders.push_back(std::move(order));
  }

  /// Voters a price line applies to.
  std::vector<int> targets(const Line& line) const {
    const std::string& who = line.tokens[1];
    std::vector<int> out;
    if (who == "*") {
      for (int v = 0; v < static_cast<int>(voters.size()); ++v) out.push_back(v);
      return out;
    }
    auto it = std::find(voters.begin(), voters.end(), who);
    if (it == voters.end()) throw ParseError(line.number, "unknown voter '" + who + "'");
    out.push_back(static_cast<int>(it - voters.begin()));
    return out;
  }
};

CostModel build_costs(const Draft& d) {
  const int n = static_cast<int>(d.voters.size());
  const int m = static_cast<int>(d.parties.size());
  const int cost_line = d.cost_line ? d.cost_line->number : 0;
  auto reject = [&](const Line& line) {
    throw ParseError(line.number, "'" + line.tokens[0] + "' does not apply to cost model '" +
                                      to_string(d.type) + "'");
  };
  switch (d.type) {
    case BriberyType::Unit:
      if (!d.price_lines.empty()) reject(d.price_lines.front());
      return CostModel::unit(n);
    case BriberyType::Dollar: {
      std::vector<Cost> prices(n, 1);
      for (const Line& line : d.price_lines) {
        if (line.tokens[0] != "price") reject(line);
        expect_arity(line, 3);
        Cost p = parse_cost(line, line.tokens[2]);
        for (int v : d.targets(line)) prices[v] = p;
      }
      return CostModel::dollar(std::move(prices));
    }
    case BriberyType::Swap: {
      // Baselines are applied before explicit pairs regardless of line order.
      std::vector<SwapPrices> prices(n, SwapPrices(m, std::vector<Cost>(m, 0)));
      auto fill = [&](int v, Cost p) {
        for (int x = 0; x < m; ++x) {
          for (int y = 0; y < m; ++y) prices[v][x][y] = x == y ? 0 : p;
        }
      };
      for (int v = 0; v < n; ++v) fill(v, 1);
      for (const Line& line : d.price_lines) {
        if (line.tokens[0] == "swap-default") {
          expect_arity(line, 3);
          Cost p = parse_cost(line, line.tokens[2]);
          for (int v : d.targets(line)) fill(v, p);
        } else if (line.tokens[0] != "swap") {
          reject(line);
        }
      }
      for (const Line& line : d.price_lines) {
        if (line.tokens[0] != "swap") continue;
        expect_arity(line, 5);
        PartyId x = d.party(line, line.tokens[2]);
        PartyId y = d.party(line, line.tokens[3]);
        if (x == y) throw ParseError(line.number, "swap needs two distinct parties");
        Cost p = parse_cost(line, line.tokens[4]);
        for (int v : d.targets(line)) prices[v][x][y] = p;
      }
      return CostModel::swap(std::move(prices));
    }
    case BriberyType::Shift: {
      std::vector<ShiftTable> tables(n, ShiftTable::multiplicative(1, m));
      for (const Line& line : d.price_lines) {
        if (line.tokens[0] != "shift") reject(line);
        if (line.tokens.size() < 4) throw ParseError(line.number, "shift needs a slope or table");
        ShiftTable table;
        if (line.tokens[2] == "slope") {
          expect_arity(line, 4);
          table = ShiftTable::multiplicative(parse_cost(line, line.tokens[3]), m);
        } else if (line.tokens[2] == "table") {
          std::vector<Cost> values;
          for (std::size_t k = 3; k < line.tokens.size(); ++k) {
            values.push_back(parse_cost(line, line.tokens[k]));
          }
          if (values.size() < static_cast<std::size_t>(m * (m - 1) / 2 + 1)) {
            throw ParseError(line.number, "shift table needs " +
                                              std::to_string(m * (m - 1) / 2 + 1) + " entries");
          }
          try {
            table = ShiftTable::from_values(std::move(values));
          } catch (const std::domain_error& e) {
            throw ParseError(line.number, e.what());
          }
        } else {
          throw ParseError(line.number, "expected 'slope' or 'table'");
        }
        for (int v : d.targets(line)) tables[v] = table;
      }
      return CostModel::shift(std::move(tables));
    }
  }
  throw ParseError(cost_line, "unknown cost model");
}

template <class T>
bool all_same(const std::vector<T>& values) {
  return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
}

std::string join_order(const PreferenceOrder& order, const std::vector<std::string>& names) {
  std::string out;
  for (PartyId p : order.ranking()) out += " " + names[p];
  return out;
}

void write_swap(std::ostringstream& out, const std::string& who, const SwapPrices& sw,
                const std::vector<std::string>& names) {
  const int m = static_cast<int>(sw.size());
  std::map<Cost, int> counts;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (x != y) ++counts[sw[x][y]];
    }
  }
  Cost baseline = 1;
  int best = -1;
  for (auto [value, count] : counts) {
    if (count > best) {
      best = count;
      baseline = value;
    }
  }
  if (baseline != 1) out << "swap-default " << who << " " << baseline << "\n";
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (x != y && sw[x][y] != baseline) {
        out << "swap " << who << " " << names[x] << " " << names[y] << " " << sw[x][y] << "\n";
      }
    }
  }
}

void write_shift(std::ostringstream& out, const std::string& who, const ShiftTable& table,
                 int m) {
  if (table.slope() && table == ShiftTable::multiplicative(*table.slope(), m)) {
    out << "shift " << who << " slope " << *table.slope() << "\n";
    return;
  }
  out << "shift " << who << " table";
  for (Cost c : table.values()) out << " " << c;
  out << "\n";
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

ProblemInstance parse_instance(std::string_view text) {
  Draft d;
  int last_line = 0;
  for (const Line& line : tokenize(text)) {
    last_line = line.number;
    const std::string& key = line.tokens[0];
    if (key == "parties") {
      if (d.parties_line) throw ParseError(line.number, "'parties' given twice");
      if (line.tokens.size() < 2) throw ParseError(line.number, "no parties listed");
      d.parties_line = line.number;
      for (std::size_t k = 1; k < line.tokens.size(); ++k) {
        const std::string& name = line.tokens[k];
        if (name == "*") throw ParseError(line.number, "'*' is reserved");
        if (!d.party_index.emplace(name, static_cast<PartyId>(k - 1)).second) {
          throw ParseError(line.number, "duplicate party '" + name + "'");
        }
        d.parties.push_back(name);
      }
    } else if (key == "rule") {
      expect_arity(line, 2);
      if (line.tokens[1] == "plurality") d.rule = ScoringRule::Plurality;
      else if (line.tokens[1] == "borda") d.rule = ScoringRule::Borda;
      else throw ParseError(line.number, "unknown rule '" + line.tokens[1] + "'");
    } else if (key == "threshold" || key == "phi" || key == "rho") {
      expect_arity(line, 2);
      Rational value = parse_fraction(line, line.tokens[1]);
      (key == "threshold" ? d.threshold : key == "phi" ? d.phi : d.rho) = value;
      if (key == "rho") d.rho_line = line.number;
    } else if (key == "coalition") {
      d.require_parties(line);
      d.coalition_line = line;
    } else if (key == "preferred") {
      expect_arity(line, 2);
      d.require_parties(line);
      d.preferred_line = line;
    } else if (key == "budget") {
      expect_arity(line, 2);
      d.budget = parse_cost(line, line.tokens[1]);
    } else if (key == "cost") {
      expect_arity(line, 2);
      const std::string& t = line.tokens[1];
      if (t == "unit") d.type = BriberyType::Unit;
      else if (t == "dollar") d.type = BriberyType::Dollar;
      else if (t == "swap") d.type = BriberyType::Swap;
      else if (t == "shift") d.type = BriberyType::Shift;
      else throw ParseError(line.number, "unknown cost model '" + t + "'");
      d.cost_line = line;
    } else if (key == "voter") {
      if (line.tokens.size() < 2) throw ParseError(line.number, "voter needs a name");
      d.add_voter(line, line.tokens[1], d.order(line, 2));
    } else if (key == "voters") {
      if (line.tokens.size() < 2) throw ParseError(line.number, "voters needs a count");
      std::int64_t count = parse_integer(line, line.tokens[1]);
      if (count < 1 || count > 1'000'000) throw ParseError(line.number, "bad voter count");
      PreferenceOrder order = d.order(line, 2);
      for (std::int64_t k = 0; k < count; ++k) {
        d.add_voter(line, "v" + std::to_string(d.voters.size() + 1), order);
      }
    } else if (key == "price" || key == "swap" || key == "swap-default" || key == "shift") {
      if (line.tokens.size() < 2) throw ParseError(line.number, "missing voter");
      d.price_lines.push_back(line);
    } else {
      throw ParseError(line.number, "unknown directive '" + key + "'");
    }
  }

  const int end = last_line + 1;
  if (!d.parties_line) throw ParseError(end, "missing 'parties'");
  if (!d.rule) throw ParseError(end, "missing 'rule'");
  if (!d.coalition_line) throw ParseError(end, "missing 'coalition'");
  if (!d.budget) throw ParseError(end, "missing 'budget'");
  if (d.voters.empty()) throw ParseError(end, "no voters");

  std::vector<PartyId> coalition;
  for (std::size_t k = 1; k < d.coalition_line->tokens.size(); ++k) {
    coalition.push_back(d.party(*d.coalition_line, d.coalition_line->tokens[k]));
  }
  std::optional<PartyId> preferred;
  if (d.preferred_line) preferred = d.party(*d.preferred_line, d.preferred_line->tokens[1]);
  if (!preferred && d.rho != 0) {
    throw ParseError(d.rho_line, "a ratio target needs a preferred party");
  }

  CostModel costs = build_costs(d);
  ProblemInstance instance{Election(d.parties, d.voters, d.orders),
                           *d.rule,
                           d.threshold,
                           std::move(coalition),
                           preferred,
                           d.phi,
                           d.rho,
                           *d.budget,
                           std::move(costs)};
  try {
    instance.validate();
  } catch (const std::domain_error& e) {
    throw ParseError(d.coalition_line->number, e.what());
  }
  return instance;
}

std::string serialize_instance(const ProblemInstance& instance) {
  const Election& e = instance.election;
  const auto& names = e.parties();
  std::ostringstream out;
  out << "parties";
  for (const auto& p : names) out << " " << p;
  out << "\nrule " << (instance.rule == ScoringRule::Plurality ? "plurality" : "borda") << "\n";
  out << "threshold " << format_rational(instance.threshold) << "\n";
  out << "coalition";
  for (PartyId p : instance.coalition) out << " " << names[p];
  out << "\n";
  if (instance.preferred) out << "preferred " << names[*instance.preferred] << "\n";
  out << "phi " << format_rational(instance.phi) << "\n";
  if (instance.preferred) out << "rho " << format_rational(instance.rho) << "\n";
  out << "budget " << instance.budget << "\n";
  out << "cost " << to_string(instance.costs.type()) << "\n";
  for (int v = 0; v < e.num_voters(); ++v) {
    out << "voter " << e.voters()[v] << join_order(e.order(v), names) << "\n";
  }

  const int n = e.num_voters();
  const int m = e.num_parties();
  const CostModel& c = instance.costs;
  switch (c.type()) {
    case BriberyType::Unit:
      break;
    case BriberyType::Dollar: {
      std::vector<Cost> prices;
      for (int v = 0; v < n; ++v) prices.push_back(c.price(v));
      if (all_same(prices)) {
        if (prices.front() != 1) out << "price * " << prices.front() << "\n";
      } else {
        for (int v = 0; v < n; ++v) out << "price " << e.voters()[v] << " " << prices[v] << "\n";
      }
      break;
    }
    case BriberyType::Swap: {
      std::vector<SwapPrices> prices;
      for (int v = 0; v < n; ++v) prices.push_back(c.swap_prices(v));
      if (all_same(prices)) {
        write_swap(out, "*", prices.front(), names);
      } else {
        for (int v = 0; v < n; ++v) write_swap(out, e.voters()[v], prices[v], names);
      }
      break;
    }
    case BriberyType::Shift: {
      std::vector<ShiftTable> tables;
      for (int v = 0; v < n; ++v) tables.push_back(c.shift_table(v));
      if (all_same(tables)) {
        write_shift(out, "*", tables.front(), m);
      } else {
        for (int v = 0; v < n; ++v) write_shift(out, e.voters()[v], tables[v], m);
      }
      break;
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ProblemInstance read_instance_file(const std::string& path) {
  return parse_instance(read_file(path));
}

reductions::ExactCover34Instance parse_exact_cover(std::string_view text) {
  reductions::ExactCover34Instance out;
  std::optional<int> elements_line;
  int last = 0;
  for (const Line& line : tokenize(text)) {
    last = line.number;
    if (line.tokens[0] == "elements") {
      expect_arity(line, 2);
      out.num_elements = static_cast<int>(parse_integer(line, line.tokens[1]));
      elements_line = line.number;
    } else if (line.tokens[0] == "subset") {
      if (!elements_line) throw ParseError(line.number, "'elements' must come first");
      std::vector<int> subset;
      for (std::size_t k = 1; k < line.tokens.size(); ++k) {
        std::int64_t e = parse_integer(line, line.tokens[k]);
        if (e < 1 || e > out.num_elements) throw ParseError(line.number, "element out of range");
        subset.push_back(static_cast<int>(e - 1));
      }
      out.subsets.push_back(std::move(subset));
    } else {
      throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
    }
  }
  try {
    out.validate();
  } catch (const std::domain_error& e) {
    throw ParseError(last + 1, e.what());
  }
  return out;
}

std::string serialize_exact_cover(const reductions::ExactCover34Instance& source) {
  std::ostringstream out;
  out << "elements " << source.num_elements << "\n";
  for (const auto& s : source.subsets) {
    out << "subset";
    for (int e : s) out << " " << e + 1;
    out << "\n";
  }
  return out.str();
}

reductions::MinBisectionInstance parse_bisection(std::string_view text) {
  reductions::MinBisectionInstance out;
  bool have_vertices = false;
  int last = 0;
  for (const Line& line : tokenize(text)) {
    last = line.number;
    const std::string& key = line.tokens[0];
    if (key == "vertices") {
      expect_arity(line, 2);
      out.num_vertices = static_cast<int>(parse_integer(line, line.tokens[1]));
      have_vertices = true;
    } else if (key == "cut") {
      expect_arity(line, 2);
      out.max_cut = static_cast<int>(parse_integer(line, line.tokens[1]));
    } else if (key == "edge") {
      expect_arity(line, 3);
      if (!have_vertices) throw ParseError(line.number, "'vertices' must come first");
      std::int64_t a = parse_integer(line, line.tokens[1]);
      std::int64_t b = parse_integer(line, line.tokens[2]);
      if (a < 1 || b < 1 || a > out.num_vertices || b > out.num_vertices) {
        throw ParseError(line.number, "vertex out of range");
      }
      out.edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    } else {
      throw ParseError(line.number, "unknown directive '" + key + "'");
    }
  }
  try {
    out.validate();
  } catch (const std::domain_error& e) {
    throw ParseError(last + 1, e.what());
  }
  return out;
}

std::string serialize_bisection(const reductions::MinBisectionInstance& source) {
  std::ostringstream out;
  out << "vertices " << source.num_vertices << "\ncut " << source.max_cut << "\n";
  for (auto [a, b] : source.edges) out << "edge " << a + 1 << " " << b + 1 << "\n";
  return out.str();
}

}  // namespace coalbribe::io
