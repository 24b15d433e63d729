#include "bigint.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace hamgraph {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  unsigned long long m = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
  while (m) {
    mag_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
    m >>= 32;
  }
}

BigInt::BigInt(std::string_view s) { *this = from_string(s); }

BigInt BigInt::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("BigInt: empty string");
  bool neg = false;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
  BigInt r;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
    r *= BigInt(10);
    r += BigInt(c - '0');
  }
  if (neg) r.sign_ = -r.sign_;
  return r;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  const auto& hi = a.size() >= b.size() ? a : b;
  const auto& lo = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> r(hi.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < hi.size(); ++i) {
    uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
    r[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  r[hi.size()] = static_cast<uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (d < 0) {
      d += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<uint32_t>(d);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = r[i + j] + carry + static_cast<uint64_t>(a[i]) * b[j];
      r[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = r[k] + carry;
      r[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Knuth algorithm D, base 2^32.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  if (b.empty()) throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(a, b) < 0) {
    q.clear();
    r = a;
    return;
  }
  if (b.size() == 1) {
    uint64_t d = b[0];
    q.assign(a.size(), 0);
    uint64_t rem = 0;
    for (size_t i = a.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.clear();
    if (rem) r.push_back(static_cast<uint32_t>(rem));
    return;
  }
  // normalize so the top limb of the divisor has its high bit set
  int shift = 0;
  uint32_t top = b.back();
  while (!(top & 0x80000000u)) {
    top <<= 1;
    ++shift;
  }
  auto shl = [&](const std::vector<uint32_t>& v) {
    std::vector<uint32_t> out(v.size() + 1, 0);
    for (size_t i = 0; i < v.size(); ++i) {
      out[i] |= shift ? (v[i] << shift) : v[i];
      if (shift) out[i + 1] |= static_cast<uint32_t>((static_cast<uint64_t>(v[i]) >> (32 - shift)));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  };
  std::vector<uint32_t> u = shl(a);
  std::vector<uint32_t> v = shl(b);
  size_t n = v.size(), m = u.size() - n;
  u.resize(u.size() + 1, 0);
  q.assign(m + 1, 0);
  const uint64_t vtop = v[n - 1], vsecond = n >= 2 ? v[n - 2] : 0;
  for (size_t j = m + 1; j-- > 0;) {
    uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    uint64_t qhat = num / vtop;
    uint64_t rhat = num % vtop;
    if (qhat > 0xffffffffu) {
      qhat = 0xffffffffu;
      rhat = num - qhat * vtop;
    }
    while (rhat <= 0xffffffffu && qhat * vsecond > ((rhat << 32) | (n >= 2 ? u[j + n - 2] : 0))) {
      --qhat;
      rhat += vtop;
    }
    // u[j..j+n] -= qhat * v
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      int64_t d = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
      if (d < 0) {
        d += kBase;
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<uint32_t>(d);
    }
    int64_t d = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
    if (d < 0) {
      // qhat was one too large; add back
      d += kBase;
      --qhat;
      uint64_t c2 = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t s = c2 + u[i + j] + v[i];
        u[i + j] = static_cast<uint32_t>(s);
        c2 = s >> 32;
      }
      d += static_cast<int64_t>(c2);
      d &= 0xffffffff;
    }
    u[j + n] = static_cast<uint32_t>(d);
    q[j] = static_cast<uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  // denormalize remainder
  u.resize(n);
  r.assign(n, 0);
  if (shift) {
    for (size_t i = 0; i < n; ++i) {
      r[i] = u[i] >> shift;
      if (i + 1 < n) r[i] |= u[i + 1] << (32 - shift);
    }
  } else {
    r = u;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (o.sign_ == 0) return *this;
  if (sign_ == 0) return *this = o;
  if (sign_ == o.sign_) {
    mag_ = add_mag(mag_, o.mag_);
    return *this;
  }
  int c = cmp_mag(mag_, o.mag_);
  if (c == 0) {
    sign_ = 0;
    mag_.clear();
  } else if (c > 0) {
    mag_ = sub_mag(mag_, o.mag_);
  } else {
    mag_ = sub_mag(o.mag_, mag_);
    sign_ = o.sign_;
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
  if (sign_ == 0 || o.sign_ == 0) {
    sign_ = 0;
    mag_.clear();
    return *this;
  }
  mag_ = mul_mag(mag_, o.mag_);
  sign_ = sign_ * o.sign_;
  trim();
  return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt& BigInt::operator/=(const BigInt& o) {
  BigInt q, r;
  divmod(*this, o, q, r);
  return *this = q;
}

BigInt& BigInt::operator%=(const BigInt& o) {
  BigInt q, r;
  divmod(*this, o, q, r);
  return *this = r;
}

int BigInt::compare(const BigInt& o) const {
  if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
  if (sign_ == 0) return 0;
  int c = cmp_mag(mag_, o.mag_);
  return sign_ > 0 ? c : -c;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.sign_ = a.mag_.empty() ? 0 : 1;
  b.sign_ = b.mag_.empty() ? 0 : 1;
  while (!b.is_zero()) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

BigInt BigInt::ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b;
  BigInt old_x(1), xx(0), old_y(0), yy(1);
  while (!r.is_zero()) {
    BigInt q, rem;
    divmod(old_r, r, q, rem);
    old_r = std::move(r);
    r = std::move(rem);
    BigInt tx = old_x - q * xx;
    old_x = std::move(xx);
    xx = std::move(tx);
    BigInt ty = old_y - q * yy;
    old_y = std::move(yy);
    yy = std::move(ty);
  }
  if (old_r.is_negative()) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  uint64_t v = (static_cast<uint64_t>(mag_[1]) << 32) | mag_[0];
  if (sign_ > 0) return v <= 0x7fffffffffffffffull;
  return v <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt: does not fit in int64");
  uint64_t v = 0;
  for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
  if (sign_ < 0) return -static_cast<long long>(v);
  return static_cast<long long>(v);
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<uint32_t> m = mag_;
  std::string digits;
  while (!m.empty()) {
    uint64_t rem = 0;
    for (size_t i = m.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | m[i];
      m[i] = static_cast<uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

size_t BigInt::hash() const {
  size_t h = static_cast<size_t>(sign_) + 0x9e3779b97f4a7c15ull;
  for (uint32_t limb : mag_) h = h * 1099511628211ull ^ limb;
  return h;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace hamgraph
