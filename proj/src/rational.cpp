#include "paraclass/scalar.hpp"

#include <cctype>
#include <sstream>

namespace paraclass {

std::optional<Rat> exact_sqrt(const Rat& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (sgn(x) == 0) return Rat(0);
  // x is canonical, so num and den must both be perfect squares.
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rat(rn, rd);
}

static bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rat parse_rational(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();

  const std::size_t slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    throw ValidationError("malformed rational literal: '" + text + "'");
  mpz_class n(num), d(den);
  if (sgn(d) == 0)
    throw ValidationError("rational with zero denominator: '" + text + "'");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Rat& x) { return x.get_str(); }

std::string format_scalar(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace paraclass
