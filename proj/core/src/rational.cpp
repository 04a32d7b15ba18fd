#include "kplab/rational.hpp"

#include <cctype>
#include <limits>

#include "kplab/errors.hpp"

namespace kplab {

Rat make_rat(long num, long den) {
  if (den == 0) throw ConfigError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw ConfigError("empty rational literal");

  auto check_int = [&](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) throw ConfigError("malformed rational literal '" + s + "'");
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw ConfigError("malformed rational literal '" + s + "'");
  };

  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    check_int(whole);
    check_int(frac);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rat r(mpz_class(whole + frac, 10), den);
    r.canonicalize();
    return neg ? Rat(-r) : r;
  }
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    if (!den.empty() && den[0] == '+') den = den.substr(1);
    if (!num.empty() && num[0] == '+') num = num.substr(1);
    mpz_class d(den, 10);
    if (d == 0) throw ConfigError("zero denominator in '" + s + "'");
    Rat r(mpz_class(num, 10), d);
    r.canonicalize();
    return r;
  }
  check_int(s);
  if (s[0] == '+') s = s.substr(1);
  return Rat(mpz_class(s, 10));
}

std::string to_string(const Rat& x) { return x.get_str(); }

Rat pow(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  if (x == 0) {
    if (e < 0) throw NotInvertibleError("0 raised to a negative power");
    return Rat(0);
  }
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), n);
  Rat r = e > 0 ? Rat(num, den) : Rat(den, num);
  r.canonicalize();
  return r;
}

std::optional<Rat> exact_root(const Rat& x, unsigned long n) {
  if (n == 0) return std::nullopt;
  if (n == 1) return x;
  if (x < 0 && n % 2 == 0) return std::nullopt;
  mpz_class num, den;
  mpz_class anum = abs(x.get_num());
  if (mpz_root(num.get_mpz_t(), anum.get_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), x.get_den_mpz_t(), n) == 0) return std::nullopt;
  Rat r(num, den);
  r.canonicalize();
  if (x < 0) r = -r;
  return r;
}

// tolerates a non-canonical x such as mpq_class(6, 3)
bool is_integer(const Rat& x) { return mpz_divisible_p(x.get_num_mpz_t(), x.get_den_mpz_t()) != 0; }

long to_long(const Rat& x, std::string_view what) {
  if (!is_integer(x))
    throw LatticeError(std::string(what) + ": exponent " + x.get_str() + " is not an integer");
  mpz_class n = x.get_num() / x.get_den();
  if (!n.fits_slong_p()) throw LatticeError(std::string(what) + ": exponent " + x.get_str() + " out of range");
  return n.get_si();
}

}  // namespace kplab
