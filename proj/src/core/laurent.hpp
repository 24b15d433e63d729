#ifndef HAMGRAPH_LAURENT_HPP
#define HAMGRAPH_LAURENT_HPP

#include <array>
#include <string>

#include "rational.hpp"

namespace hamgraph {

// Laurent polynomial in t with rational coefficients, degrees clipped to
// [-4, 4]; anything outside that window is a hard error since no computation
// here exceeds total degree 8.
class Laurent {
public:
  static constexpr int kMin = -4;
  static constexpr int kMax = 4;

  Laurent() = default;
  static Laurent term(const Rat& c, int deg);
  static Laurent constant(const Rat& c) { return term(c, 0); }

  const Rat& coeff(int deg) const;
  void set(int deg, const Rat& c);

  bool is_zero() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;
  Laurent& operator*=(const Rat& c);
  friend Laurent operator*(Laurent a, const Rat& c) { return a *= c; }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  int low_degree() const;   // smallest degree with non-zero coefficient (kMax+1 if zero)
  int high_degree() const;  // largest (kMin-1 if zero)

  std::string str() const;  // deterministic, e.g. "2t^2 - 1/2t^-1"

private:
  std::array<Rat, kMax - kMin + 1> c_{};
};

// Value of a class restricted to one fixed component.  At an isolated point
// this is a Laurent polynomial in t; at a fixed surface it is
// plain(t) (x) 1 + sigma(t) [S] (x) 1 with [S]^2 = 0.
struct ComponentValue {
  bool surface = false;
  Laurent plain;  // the point value, or the 1-part at a surface
  Laurent sigma;  // the [S]-part at a surface

  static ComponentValue point(Laurent v) { return {false, std::move(v), {}}; }
  static ComponentValue at_surface(Laurent p, Laurent s) { return {true, std::move(p), std::move(s)}; }

  bool is_zero() const { return plain.is_zero() && sigma.is_zero(); }

  ComponentValue& operator+=(const ComponentValue& o);
  friend ComponentValue operator+(ComponentValue a, const ComponentValue& b) { return a += b; }
  friend ComponentValue operator*(const ComponentValue& a, const ComponentValue& b);
  ComponentValue& operator*=(const Rat& c);
  friend bool operator==(const ComponentValue& a, const ComponentValue& b) {
    return a.surface == b.surface && a.plain == b.plain && a.sigma == b.sigma;
  }

  std::string str() const;
};

}  // namespace hamgraph

#endif
