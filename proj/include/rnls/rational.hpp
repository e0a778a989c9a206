#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rnls {

/// Exact rational arithmetic on 128-bit integers.
///
/// All exponent relations in the library are decided by strict open
/// inequalities, so they must never be settled by floating-point noise.
/// Values stay reduced after every operation; any overflow of the 128-bit
/// intermediates throws instead of wrapping.
class Rational {
 public:
  using Int = __int128;

  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  static Rational make(Int n, Int d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    r.normalize();
    return r;
  }

  /// Accepts "7", "-3/4", "11/5" and plain decimals like "2.25".
  static Rational parse(const std::string& text);

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  double to_double() const {
    return static_cast<double>(static_cast<long double>(num_) /
                               static_cast<long double>(den_));
  }

  Rational operator-() const { return make(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                checked_mul(a.den_, b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational inverse() const {
    if (num_ == 0) throw std::domain_error("rational inverse of zero");
    return make(den_, num_);
  }

  std::string str() const;

  static std::string int_to_string(Int v);

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Int gcd(Int a, Int b) {
    while (b != 0) {
      Int t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  static Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
  }
  static Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
  }

  Int num_;
  Int den_;
};

inline std::string Rational::int_to_string(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  char buf[48];
  int i = 48;
  while (u > 0) {
    buf[--i] = static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  std::string s(buf + i, buf + 48);
  return neg ? "-" + s : s;
}

inline std::string Rational::str() const {
  if (den_ == 1) return int_to_string(num_);
  return int_to_string(num_) + "/" + int_to_string(den_);
}

inline Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto parse_int = [](const std::string& t) -> long long {
    size_t pos = 0;
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("bad integer literal '" + t + "'");
    return v;
  };

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    long long n = parse_int(s.substr(0, slash));
    long long d = parse_int(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(n, d);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.empty()) throw std::invalid_argument("bad decimal literal '" + s + "'");
    bool neg = !head.empty() && head[0] == '-';
    long long ip = head.empty() || head == "-" ? 0 : parse_int(head);
    long long frac = tail.empty() ? 0 : parse_int("0" + tail);
    Int den = 1;
    for (size_t i = 0; i < tail.size(); ++i) den = checked_mul(den, 10);
    Int num = checked_add(checked_mul(ip < 0 ? -ip : ip, den), frac);
    if (neg || ip < 0) num = -num;
    return make(num, den);
  }
  return Rational(parse_int(s));
}

}  // namespace rnls
