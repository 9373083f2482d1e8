#include "polya/rational.hpp"

#include <cctype>

#include "polya/error.hpp"

namespace polya {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.find_first_of(".eE") != std::string::npos) {
    throw NonRationalNoiseError("'" + s +
                                "' is a decimal; exact computation needs rational syntax "
                                "such as 3/10");
  }
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw DomainError("malformed rational '" + s + "'");
  }
  Rational r{BigInt(num[0] == '+' ? num.substr(1) : num), BigInt(den)};
  if (r.get_den() == 0) throw DomainError("rational '" + s + "' has zero denominator");
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("ratio: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace polya
