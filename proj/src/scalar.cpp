#include "straightedge/scalar.hpp"

#include <cctype>

namespace straightedge {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("malformed rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

bool is_rational_square(const Rational& x, Rational* root) {
  if (sgn(x) < 0) return false;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return false;
  if (root) {
    Integer n = sqrt(Integer(x.get_num()));
    Integer d = sqrt(Integer(x.get_den()));
    *root = Rational(n, d);
  }
  return true;
}

std::size_t bit_size(const Rational& x) {
  return std::max(mpz_sizeinbase(x.get_num_mpz_t(), 2), mpz_sizeinbase(x.get_den_mpz_t(), 2));
}

Ext2 QuadraticTower::sqrt(const Rational& d) {
  Rational s;
  if (is_rational_square(d, &s)) return Ext2(Ext1(s));
  if (!radicands_.empty()) {
    const Rational& r1 = radicands_[0];
    Rational t;
    if (is_rational_square(Rational(d * r1), &t)) return Ext2(Ext1(Rational(0), Rational(abs(t / r1)), r1));
    if (radicands_.size() == 2) {
      const Rational& r2 = radicands_[1];
      if (is_rational_square(Rational(d * r2), &t)) return Ext2(Ext1(0), Ext1(Rational(abs(t / r2))), Ext1(r2));
      if (is_rational_square(Rational(d * r1 * r2), &t)) {
        Rational c = abs(t / (r1 * r2));
        return Ext2(Ext1(0), Ext1(Rational(0), c, r1), Ext1(r2));
      }
      throw TowerError("adjoining sqrt(" + to_string(d) + ") would exceed tower depth 2");
    }
    radicands_.push_back(d);
    return Ext2(Ext1(0), Ext1(1), Ext1(d));
  }
  radicands_.push_back(d);
  return Ext2(Ext1(Rational(0), Rational(1), d));
}

}  // namespace straightedge
