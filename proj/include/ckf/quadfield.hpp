#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "ckf/rational.hpp"

namespace ckf {

/// Element of the field Q(sqrt2, sqrt3): a + b*sqrt2 + c*sqrt3 + d*sqrt6.
/// Comparisons and signs are decided exactly, never through doubles.
class QF {
 public:
  QF() = default;
  QF(Rat a) : a_(a) {}  // NOLINT: implicit by design
  QF(std::int64_t a) : a_(Rat(a)) {}  // NOLINT
  QF(Rat a, Rat b, Rat c, Rat d) : a_(a), b_(b), c_(c), d_(d) {}

  static QF sqrt2() { return QF(Rat(0), Rat(1), Rat(0), Rat(0)); }
  static QF sqrt3() { return QF(Rat(0), Rat(0), Rat(1), Rat(0)); }
  static QF sqrt6() { return QF(Rat(0), Rat(0), Rat(0), Rat(1)); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  const Rat& d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
  bool is_rational() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }
  Rat rational() const {
    if (!is_rational()) throw std::domain_error("QF value is irrational");
    return a_;
  }

  double to_double() const {
    static const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
    return a_.to_double() + b_.to_double() * r2 + c_.to_double() * r3 + d_.to_double() * r6;
  }

  friend QF operator+(const QF& x, const QF& y) {
    return QF(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_);
  }
  friend QF operator-(const QF& x, const QF& y) {
    return QF(x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_);
  }
  QF operator-() const { return QF(-a_, -b_, -c_, -d_); }

  friend QF operator*(const QF& x, const QF& y) {
    // (a1 + b1 r2 + c1 r3 + d1 r6)(a2 + ...) with r2*r3 = r6, r2*r6 = 2 r3, r3*r6 = 3 r2.
    Rat a = x.a_ * y.a_ + Rat(2) * x.b_ * y.b_ + Rat(3) * x.c_ * y.c_ + Rat(6) * x.d_ * y.d_;
    Rat b = x.a_ * y.b_ + x.b_ * y.a_ + Rat(3) * (x.c_ * y.d_ + x.d_ * y.c_);
    Rat c = x.a_ * y.c_ + x.c_ * y.a_ + Rat(2) * (x.b_ * y.d_ + x.d_ * y.b_);
    Rat d = x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_;
    return QF(a, b, c, d);
  }

  friend QF operator/(const QF& x, const QF& y) {
    if (y.is_zero()) throw std::domain_error("QF division by zero");
    // Rationalize through the two conjugations sqrt2 -> -sqrt2 and sqrt3 -> -sqrt3.
    QF c2 = y.conj2();
    QF c3 = y.conj3();
    QF c23 = y.conj2().conj3();
    QF norm = y * c2 * c3 * c23;
    if (!norm.is_rational()) throw std::logic_error("QF norm must be rational");
    QF num = x * c2 * c3 * c23;
    Rat n = norm.a_;
    return QF(num.a_ / n, num.b_ / n, num.c_ / n, num.d_ / n);
  }

  QF& operator+=(const QF& o) { return *this = *this + o; }
  QF& operator-=(const QF& o) { return *this = *this - o; }
  QF& operator*=(const QF& o) { return *this = *this * o; }
  QF& operator/=(const QF& o) { return *this = *this / o; }

  friend bool operator==(const QF& x, const QF& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const QF& x, const QF& y) { return !(x == y); }

  /// Exact sign via nested conjugate-norm arguments; no floating point.
  int sign() const {
    // View as A + B*sqrt3 with A = a + b sqrt2, B = c + d sqrt2.
    int sA = sign_q2(a_, b_);
    int sB = sign_q2(c_, d_);
    if (sB == 0) return sA;
    if (sA == 0) return sB;
    if (sA == sB) return sA;
    // A and B have opposite signs: sign(A + B sqrt3) = sign(A^2 - 3 B^2) * sign(A - B sqrt3),
    // and A - B sqrt3 has the sign of A when the signs differ.
    Rat u = a_ * a_ + Rat(2) * b_ * b_ - Rat(3) * (c_ * c_ + Rat(2) * d_ * d_);
    Rat v = Rat(2) * a_ * b_ - Rat(6) * c_ * d_;
    int s = sign_q2(u, v);
    return sA > 0 ? s : -s;
  }

  friend bool operator<(const QF& x, const QF& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QF& x, const QF& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const QF& x, const QF& y) { return y < x; }
  friend bool operator>=(const QF& x, const QF& y) { return y <= x; }

  QF abs() const { return sign() < 0 ? -*this : *this; }

  std::string str() const {
    if (is_rational()) return a_.str();
    std::string s = a_.is_zero() ? "" : a_.str();
    auto term = [&s](const Rat& r, const char* radical) {
      if (r.is_zero()) return;
      if (!s.empty() && r.sign() > 0) s += "+";
      s += r.str() + "*" + radical;
    };
    term(b_, "r2");
    term(c_, "r3");
    term(d_, "r6");
    return s.empty() ? "0" : s;
  }

 private:
  QF conj2() const { return QF(a_, -b_, c_, -d_); }
  QF conj3() const { return QF(a_, b_, -c_, -d_); }

  // sign of u + v*sqrt2, exact
  static int sign_q2(const Rat& u, const Rat& v) {
    int su = u.sign(), sv = v.sign();
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    int s = (u * u - Rat(2) * v * v).sign();
    return su > 0 ? s : -s;
  }

  Rat a_, b_, c_, d_;
};

/// Exact coordinate vector over QF.
using ExactVec = std::vector<QF>;

inline QF dot(const ExactVec& x, const ExactVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
  QF s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline QF norm2(const ExactVec& x) { return dot(x, x); }

inline ExactVec operator+(const ExactVec& x, const ExactVec& y) {
  ExactVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

inline ExactVec operator-(const ExactVec& x, const ExactVec& y) {
  ExactVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

inline ExactVec operator*(const QF& s, const ExactVec& x) {
  ExactVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = s * x[i];
  return r;
}

inline ExactVec operator-(const ExactVec& x) { return QF(Rat(-1)) * x; }

inline bool is_zero(const ExactVec& x) {
  for (const auto& v : x)
    if (!v.is_zero()) return false;
  return true;
}

/// Lexicographic exact comparison, the ordering used for orbit dedup.
inline int lex_compare(const ExactVec& x, const ExactVec& y) {
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    int s = (x[i] - y[i]).sign();
    if (s != 0) return s;
  }
  return 0;
}

struct ExactVecLess {
  bool operator()(const ExactVec& x, const ExactVec& y) const { return lex_compare(x, y) < 0; }
};

inline std::vector<double> to_doubles(const ExactVec& x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i].to_double();
  return r;
}

inline std::string vec_str(const ExactVec& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += x[i].str();
  }
  return s + ")";
}

}  // namespace ckf
