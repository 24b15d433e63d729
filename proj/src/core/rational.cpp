#include "rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hamgraph {

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
  normalize();
}

void Rat::normalize() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_.abs(), den_);
  if (!g.is_one()) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::parse(std::string_view s) {
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(BigInt::from_string(s));
  std::string_view n = s.substr(0, slash), d = s.substr(slash + 1);
  if (d.empty() || d[0] == '-' || d[0] == '+' || d[0] == '0')
    throw std::invalid_argument("Rat: bad denominator in '" + std::string(s) + "'");
  return Rat(BigInt::from_string(n), BigInt::from_string(d));
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.num_ = -r.num_;
  return r;
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(den_, num_);
}

Rat& Rat::operator+=(const Rat& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

int Rat::compare(const Rat& o) const { return (num_ * o.den_).compare(o.num_ * den_); }

std::string Rat::str() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

size_t Rat::hash() const { return num_.hash() * 1000003u ^ den_.hash(); }

std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.str(); }

}  // namespace hamgraph
