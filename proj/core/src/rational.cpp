#include "pdcover/rational.hpp"

#include <cctype>

#include "pdcover/errors.hpp"

namespace pdcover {
namespace {

bool is_int_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::string format_rational(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int_literal(text))
      throw InputDomainError("malformed rational '" + text + "'");
    return Rational(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_int_literal(num) || !is_int_literal(den))
    throw InputDomainError("malformed rational '" + text + "'");
  BigInt d(den);
  if (d == 0) throw InputDomainError("zero denominator in '" + text + "'");
  return Rational(BigInt(num), d);
}

namespace detail {
void check_failed(const char* expr, const char* file, int line,
                  const std::string& msg) {
  throw CheckFailure(std::string("internal check failed: ") + expr + " at " +
                     file + ":" + std::to_string(line) +
                     (msg.empty() ? "" : std::string(": ") + msg));
}
}  // namespace detail

}  // namespace pdcover
