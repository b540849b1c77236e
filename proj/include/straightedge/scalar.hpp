#pragma once

// Exact scalars: GMP rationals and a quadratic extension tower of depth at most two.

#include <gmpxx.h>

#include <algorithm>
#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace straightedge {

using Integer = mpz_class;
using Rational = mpq_class;

class TowerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Renders "p/q" in lowest terms with q > 0; "/1" is omitted.
std::string to_string(const Rational& x);

/// Parses an integer or "p/q". Throws std::invalid_argument on malformed text or q = 0.
Rational parse_rational(const std::string& text);

/// True iff x is the square of a rational; the root (non-negative) is written to *root.
bool is_rational_square(const Rational& x, Rational* root = nullptr);

/// Number of bits of the larger of numerator and denominator.
std::size_t bit_size(const Rational& x);

/// a + b·√d over Base. The radicand d is only meaningful when b != 0, so base elements
/// embed with any radicand and mix freely with extension elements. d must not be a square
/// in Base; QuadraticTower enforces that when it hands out square roots.
template <class Base>
class QuadExt {
 public:
  using base_type = Base;

  QuadExt() = default;
  QuadExt(const Base& a) : a_(a), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
  template <class T>
    requires(!std::same_as<std::remove_cvref_t<T>, QuadExt> &&
             !std::same_as<std::remove_cvref_t<T>, Base> && std::constructible_from<Base, const T&>)
  QuadExt(const T& v) : a_(Base(v)), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Base a, Base b, Base radicand) : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {}

  const Base& a() const { return a_; }
  const Base& b() const { return b_; }
  const Base& radicand() const { return d_; }
  bool in_base() const { return is_zero(b_); }

  QuadExt conjugate() const { return QuadExt(a_, Base(-b_), d_); }

  /// a² − d·b², an element of Base.
  Base norm() const {
    Base n = a_ * a_;
    n -= d_ * b_ * b_;
    return n;
  }

  QuadExt operator-() const { return QuadExt(Base(-a_), Base(-b_), d_); }

  QuadExt& operator+=(const QuadExt& o) {
    d_ = common_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    d_ = common_radicand(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o) {
    Base d = common_radicand(*this, o);
    Base a = a_ * o.a_;
    a += b_ * o.b_ * d;
    Base b = a_ * o.b_;
    b += b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = std::move(d);
    return *this;
  }
  QuadExt& operator/=(const QuadExt& o) {
    if (o.in_base()) {
      if (is_zero(o.a_)) throw std::domain_error("division by zero in quadratic extension");
      a_ /= o.a_;
      b_ /= o.a_;
      return *this;
    }
    Base n = o.norm();
    if (is_zero(n)) throw std::domain_error("division by zero in quadratic extension");
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
  }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    if (!(x.a_ == y.a_) || !(x.b_ == y.b_)) return false;
    return x.in_base() || x.d_ == y.d_;
  }

  friend bool is_zero(const QuadExt& x) { return is_zero(x.a_) && is_zero(x.b_); }

  friend std::string to_string(const QuadExt& x) {
    if (x.in_base()) return to_string(x.a_);
    std::string s = is_zero(x.a_) ? std::string() : "(" + to_string(x.a_) + ") + ";
    return s + "(" + to_string(x.b_) + ")*sqrt(" + to_string(x.d_) + ")";
  }

  friend std::size_t bit_size(const QuadExt& x) {
    return std::max({bit_size(x.a_), bit_size(x.b_), bit_size(x.d_)});
  }

 private:
  static Base common_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.in_base()) return y.d_;
    if (y.in_base()) return x.d_;
    if (!(x.d_ == y.d_)) throw TowerError("mixed radicands " + to_string(x.d_) + " and " + to_string(y.d_));
    return x.d_;
  }

  Base a_{0};
  Base b_{0};
  Base d_{0};
};

using Ext1 = QuadExt<Rational>;
using Ext2 = QuadExt<Ext1>;

/// The field Q(√r1)(√r2) built lazily from rational radicands. Square roots of rationals
/// that already live in the current field are expressed there; a third independent
/// radicand raises TowerError.
class QuadraticTower {
 public:
  QuadraticTower() = default;

  Ext2 sqrt(const Rational& d);

  const std::vector<Rational>& radicands() const { return radicands_; }
  std::size_t depth() const { return radicands_.size(); }

 private:
  std::vector<Rational> radicands_;
};

}  // namespace straightedge
