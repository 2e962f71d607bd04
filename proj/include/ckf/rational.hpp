#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ckf {

/// Exact rational number with checked 64-bit numerator/denominator.
/// All root-system arithmetic stays in a fixed discrete lattice, so the
/// magnitudes are small; an overflow here means a logic bug upstream and
/// is reported loudly instead of wrapping.
class Rat {
 public:
  Rat() : p_(0), q_(1) {}
  Rat(std::int64_t n) : p_(n), q_(1) {}  // NOLINT: implicit by design
  Rat(std::int64_t num, std::int64_t den) : p_(num), q_(den) { normalize(); }

  static Rat parse(const std::string& s) {
    std::size_t slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(std::stoll(s));
      return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("not a rational: '" + s + "'");
    }
  }

  std::int64_t num() const { return p_; }
  std::int64_t den() const { return q_; }
  bool is_zero() const { return p_ == 0; }
  int sign() const { return p_ > 0 ? 1 : (p_ < 0 ? -1 : 0); }
  double to_double() const { return static_cast<double>(p_) / static_cast<double>(q_); }

  std::string str() const {
    if (q_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "/" + std::to_string(q_);
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.p_) * b.q_ + i128(b.p_) * a.q_, i128(a.q_) * b.q_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.p_) * b.q_ - i128(b.p_) * a.q_, i128(a.q_) * b.q_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.p_) * b.p_, i128(a.q_) * b.q_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.p_ == 0) throw std::domain_error("rational division by zero");
    return make(i128(a.p_) * b.q_, i128(a.q_) * b.p_);
  }
  Rat operator-() const { return Rat(-p_, q_); }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return (a - b).sign() <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  Rat abs() const { return p_ < 0 ? Rat(-p_, q_) : *this; }

 private:
  using i128 = __int128;

  static Rat make(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
      throw std::overflow_error("rational overflow");
    Rat r;
    r.p_ = static_cast<std::int64_t>(num);
    r.q_ = static_cast<std::int64_t>(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
  }

  void normalize() {
    Rat r = make(p_, q_);
    p_ = r.p_;
    q_ = r.q_;
  }

  std::int64_t p_;
  std::int64_t q_;
};

}  // namespace ckf
