#include "laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace hamgraph {

Laurent Laurent::term(const Rat& c, int deg) {
  Laurent l;
  l.set(deg, c);
  return l;
}

const Rat& Laurent::coeff(int deg) const {
  static const Rat zero;
  if (deg < kMin || deg > kMax) return zero;
  return c_[deg - kMin];
}

void Laurent::set(int deg, const Rat& c) {
  if (deg < kMin || deg > kMax) {
    if (c.is_zero()) return;
    throw std::domain_error("Laurent: degree " + std::to_string(deg) + " outside the supported window");
  }
  c_[deg - kMin] = c;
}

bool Laurent::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

Laurent& Laurent::operator*=(const Rat& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (int da = Laurent::kMin; da <= Laurent::kMax; ++da) {
    if (a.coeff(da).is_zero()) continue;
    for (int db = Laurent::kMin; db <= Laurent::kMax; ++db) {
      if (b.coeff(db).is_zero()) continue;
      int d = da + db;
      r.set(d, r.coeff(d) + a.coeff(da) * b.coeff(db));
    }
  }
  return r;
}

int Laurent::low_degree() const {
  for (int d = kMin; d <= kMax; ++d)
    if (!coeff(d).is_zero()) return d;
  return kMax + 1;
}

int Laurent::high_degree() const {
  for (int d = kMax; d >= kMin; --d)
    if (!coeff(d).is_zero()) return d;
  return kMin - 1;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = kMax; d >= kMin; --d) {
    const Rat& c = coeff(d);
    if (c.is_zero()) continue;
    Rat a = c.abs();
    if (first) {
      if (c.is_negative()) os << "-";
      first = false;
    } else {
      os << (c.is_negative() ? " - " : " + ");
    }
    if (d == 0 || a != Rat(1)) os << a.str();
    if (d != 0) {
      if (a != Rat(1)) os << "*";
      os << "t";
      if (d != 1) os << "^" << d;
    }
  }
  return os.str();
}

ComponentValue& ComponentValue::operator+=(const ComponentValue& o) {
  surface = surface || o.surface;
  plain += o.plain;
  sigma += o.sigma;
  return *this;
}

ComponentValue operator*(const ComponentValue& a, const ComponentValue& b) {
  ComponentValue r;
  r.surface = a.surface || b.surface;
  r.plain = a.plain * b.plain;
  r.sigma = a.plain * b.sigma + a.sigma * b.plain;  // [S]^2 = 0
  return r;
}

ComponentValue& ComponentValue::operator*=(const Rat& c) {
  plain *= c;
  sigma *= c;
  return *this;
}

std::string ComponentValue::str() const {
  if (!surface) return plain.str();
  std::ostringstream os;
  os << "(" << plain.str() << ")(x)1";
  if (!sigma.is_zero()) os << " + (" << sigma.str() << ")[S](x)1";
  return os.str();
}

}  // namespace hamgraph
