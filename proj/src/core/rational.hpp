#ifndef HAMGRAPH_RATIONAL_HPP
#define HAMGRAPH_RATIONAL_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "bigint.hpp"

namespace hamgraph {

// Exact rational, always stored reduced with positive denominator.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long v) : num_(v), den_(1) {}
  Rat(BigInt v) : num_(std::move(v)), den_(1) {}
  Rat(BigInt num, BigInt den);
  Rat(long long num, long long den) : Rat(BigInt(num), BigInt(den)) {}

  // grammar: -?[0-9]+(/[1-9][0-9]*)?
  static Rat parse(std::string_view s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }
  bool is_negative() const { return num_.is_negative(); }
  bool is_positive() const { return num_.sign() > 0; }
  int sign() const { return num_.sign(); }

  Rat operator-() const;
  Rat abs() const { return is_negative() ? -*this : *this; }
  Rat inverse() const;

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  int compare(const Rat& o) const;
  friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return a.compare(b) < 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.compare(b) > 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.compare(b) <= 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.compare(b) >= 0; }

  // writers always emit reduced form, "p" or "p/q"
  std::string str() const;
  size_t hash() const;

  friend std::ostream& operator<<(std::ostream& os, const Rat& v);

private:
  BigInt num_, den_;
  void normalize();
};

}  // namespace hamgraph

#endif
