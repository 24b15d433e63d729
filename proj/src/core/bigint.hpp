#ifndef HAMGRAPH_BIGINT_HPP
#define HAMGRAPH_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>
#include <iosfwd>

namespace hamgraph {

// Arbitrary-precision signed integer, sign + base-2^32 magnitude.
// Magnitude is little-endian with no leading zero limbs; zero has an
// empty limb vector and sign_ = 0.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);
  explicit BigInt(std::string_view decimal);

  static BigInt from_string(std::string_view decimal);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_one() const;
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  BigInt& operator/=(const BigInt& o);  // truncated toward zero
  BigInt& operator%=(const BigInt& o);  // sign follows dividend

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

  // quotient truncated toward zero; remainder has dividend's sign
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  int compare(const BigInt& o) const;
  friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

  static BigInt gcd(BigInt a, BigInt b);  // non-negative
  // g = gcd(a,b) >= 0 and a*x + b*y = g
  static BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y);

  bool fits_int64() const;
  long long to_int64() const;  // throws if out of range

  std::string to_string() const;
  size_t hash() const;

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
  int sign_ = 0;
  std::vector<uint32_t> mag_;

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace hamgraph

#endif
