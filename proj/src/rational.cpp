#include "nodalstab/rational.hpp"

#include <cctype>

#include "nodalstab/error.hpp"

namespace nodalstab {

namespace {

bool is_integer_literal(std::string_view text, bool allow_sign) {
  if (text.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

}  // namespace

Rational parse_rational(std::string_view raw) {
  const std::string_view text = trim(raw);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(ErrorCode::InvalidRational, "not a rational number: \"" + std::string(raw) + "\"");
  }
  // mpz does not accept a leading '+'
  const std::string num_str(num[0] == '+' ? num.substr(1) : num);
  const Integer n(num_str);
  const Integer d{std::string(den)};
  if (d == 0) {
    throw Error(ErrorCode::InvalidRational, "zero denominator in \"" + std::string(raw) + "\"");
  }
  return Rational(n, d);
}

std::string to_string(const Rational& value) {
  // mpq values are always kept canonical, so str() already yields "p/q" or "p"
  return value.str();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (trim(text).empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    out.push_back(parse_rational(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Integer lcm_of_denominators(const std::vector<Rational>& values) {
  Integer acc = 1;
  for (const auto& v : values) {
    acc = boost::multiprecision::lcm(acc, Integer(boost::multiprecision::denominator(v)));
  }
  return acc;
}

Integer floor_of(const Rational& value) {
  const Integer p = boost::multiprecision::numerator(value);
  const Integer q = boost::multiprecision::denominator(value);
  Integer out = p / q;  // truncates toward zero
  if (out * q > p) out -= 1;
  return out;
}

Integer ceil_sqrt(const Rational& value) {
  if (value.sign() < 0) throw Error(ErrorCode::InvalidArgument, "ceil_sqrt of a negative value");
  // ceil(sqrt(p/q)) == ceil(sqrt(ceil(p/q))) for the integer ceiling of the radicand
  const Integer p = boost::multiprecision::numerator(value);
  const Integer q = boost::multiprecision::denominator(value);
  Integer radicand = p / q;
  if (radicand * q != p) radicand += 1;
  Integer root = boost::multiprecision::sqrt(radicand);
  if (root * root < radicand) root += 1;
  return root;
}

}  // namespace nodalstab
