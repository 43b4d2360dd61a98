#include "linea/numeric.hpp"

#include <cctype>

namespace linea {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw FieldError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return InputError("malformed fraction: '" + text + "'"); };
  auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  auto valid_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!valid_int(num_part, true)) throw bad();
  Integer num(num_part);
  if (slash == std::string::npos) return make_rational(num, Integer(1));
  const std::string den_part = text.substr(slash + 1);
  if (!valid_int(den_part, false)) throw bad();
  Integer den(den_part);
  if (den <= 0) throw bad();
  return make_rational(num, den);
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer floor_rational(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  // Trial division is ample for the p < 2^31 cap.
  for (long d = 29; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace linea
