#include "cvgraph/rational.hpp"

#include <cctype>

namespace cvgraph {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view num_part = text;
  std::string_view den_part;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
    if (!all_digits(den_part)) return std::nullopt;
  }
  if (!all_digits(num_part)) return std::nullopt;

  BigInt num{std::string(num_part)};
  if (negative) num = -num;
  if (den_part.empty()) return Rational(num);

  BigInt den{std::string(den_part)};
  if (den == 0) return std::nullopt;
  return Rational(num, den);  // canonicalizes
}

std::string to_string(const Rational& value) {
  return value.str();
}

}  // namespace cvgraph
