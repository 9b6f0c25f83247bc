#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "coalbribe/instance.hpp"
#include "coalbribe/reductions.hpp"

namespace coalbribe::io {

/// Malformed input, anchored at a 1-based line (0 when no line applies).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads the line-based instance format:
///
///   parties X Y Z
///   rule plurality            (or borda)
///   threshold 1/5             phi 1/2   rho 61/100   (rationals, default 0)
///   coalition X Y
///   preferred X               (absent for CB; rho must then stay 0)
///   budget 7
///   cost dollar               (unit | dollar | swap | shift)
///   voter v1 X Y Z            one order per line, best first
///   voters 35 X Y Z           shorthand, names the voters v<index>
///   price <voter|*> 2                       dollar prices (default 1)
///   swap <voter|*> X Y 3                    price of Y moving above X
///   swap-default <voter|*> 2                baseline for unlisted pairs (default 1)
///   shift <voter|*> slope 5                 or: shift <voter|*> table 0 1 5 9 ...
///
/// '#' starts a comment. Later price lines override earlier ones.
ProblemInstance parse_instance(std::string_view text);

/// Canonical text; parse_instance(serialize_instance(x)) == x, and serializing
/// that again gives the same bytes.
std::string serialize_instance(const ProblemInstance& instance);

ProblemInstance read_instance_file(const std::string& path);

/// `elements N` then one `subset a b c d` line per subset (1-based elements).
reductions::ExactCover34Instance parse_exact_cover(std::string_view text);
std::string serialize_exact_cover(const reductions::ExactCover34Instance& source);

/// `vertices N`, `cut K`, then `edge a b` lines (1-based vertices).
reductions::MinBisectionInstance parse_bisection(std::string_view text);
std::string serialize_bisection(const reductions::MinBisectionInstance& source);

std::string read_file(const std::string& path);

}  // namespace coalbribe::io
