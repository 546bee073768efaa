// Exact field arithmetic: arbitrary-precision rationals and prime fields GF(p).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace pcp {

[[noreturn]] inline void fail(const std::string& msg) { throw std::runtime_error(msg); }

enum class FieldKind { Rationals, PrimeField };

inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Which field the engine computes over. Everything downstream (matrices,
/// algebras, actions) carries one of these and refuses mixed-field input.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  unsigned long p = 0;  // modulus, PrimeField only

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }

  static FieldSpec prime_field(unsigned long p) {
    if (p > (1ul << 31)) fail("prime modulus too large (must fit 31 bits)");
    if (!is_prime(p)) fail("GF(p) modulus " + std::to_string(p) + " is not prime");
    return FieldSpec{FieldKind::PrimeField, p};
  }

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  bool is_rationals() const { return kind == FieldKind::Rationals; }
  unsigned long characteristic() const { return kind == FieldKind::Rationals ? 0 : p; }

  std::string str() const {
    return kind == FieldKind::Rationals ? "Q" : "GF(" + std::to_string(p) + ")";
  }
};

/// One exact field element. Rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); prime-field residues live in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), q_(0) {}

  static Scalar zero(const FieldSpec& f) { return Scalar(f); }
  static Scalar one(const FieldSpec& f) { return from_long(1, f); }

  static Scalar from_long(long v, const FieldSpec& f) {
    Scalar s(f);
    if (f.is_rationals()) {
      s.q_ = v;
    } else {
      long r = v % static_cast<long>(f.p);
      if (r < 0) r += static_cast<long>(f.p);
      s.r_ = static_cast<unsigned long>(r);
    }
    return s;
  }

  static Scalar from_mpz(const mpz_class& v, const FieldSpec& f) {
    Scalar s(f);
    if (f.is_rationals()) {
      s.q_ = v;
    } else {
      mpz_class r = v % static_cast<long>(f.p);
      if (r < 0) r += static_cast<long>(f.p);
      s.r_ = r.get_ui();
    }
    return s;
  }

  /// Parse "n", "-n" or "n/d". Over GF(p), "n/d" means n * d^{-1} mod p.
  static Scalar parse(const std::string& text, const FieldSpec& f) {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        return from_mpz(mpz_class(text), f);
      }
      mpz_class num(text.substr(0, slash));
      mpz_class den(text.substr(slash + 1));
      if (den == 0) fail("zero denominator in scalar literal '" + text + "'");
      if (f.is_rationals()) {
        Scalar s(f);
        s.q_ = mpq_class(num, den);
        s.q_.canonicalize();
        return s;
      }
      return from_mpz(num, f) / from_mpz(den, f);
    } catch (const std::invalid_argument&) {
      fail("bad scalar literal '" + text + "'");
    }
  }

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return field_.is_rationals() ? q_ == 0 : r_ == 0; }
  bool is_one() const { return field_.is_rationals() ? q_ == 1 : r_ == 1; }

  Scalar operator-() const {
    Scalar s(*this);
    if (field_.is_rationals())
      s.q_ = -s.q_;
    else
      s.r_ = r_ == 0 ? 0 : field_.p - r_;
    return s;
  }

  Scalar operator+(const Scalar& o) const {
    check_field(o);
    Scalar s(field_);
    if (field_.is_rationals()) {
      s.q_ = q_ + o.q_;
    } else {
      unsigned long t = r_ + o.r_;
      s.r_ = t >= field_.p ? t - field_.p : t;
    }
    return s;
  }

  Scalar operator-(const Scalar& o) const { return *this + (-o); }

  Scalar operator*(const Scalar& o) const {
    check_field(o);
    Scalar s(field_);
    if (field_.is_rationals())
      s.q_ = q_ * o.q_;
    else
      s.r_ = static_cast<unsigned long>(
          (static_cast<unsigned __int128>(r_) * o.r_) % field_.p);
    return s;
  }

  Scalar inverse() const {
    if (is_zero()) fail("division by zero");
    Scalar s(field_);
    if (field_.is_rationals()) {
      s.q_ = 1 / q_;
    } else {
      // Fermat: r^(p-2) mod p
      unsigned long base = r_, e = field_.p - 2, acc = 1;
      while (e) {
        if (e & 1)
          acc = static_cast<unsigned long>(
              (static_cast<unsigned __int128>(acc) * base) % field_.p);
        base = static_cast<unsigned long>(
            (static_cast<unsigned __int128>(base) * base) % field_.p);
        e >>= 1;
      }
      s.r_ = acc;
    }
    return s;
  }

  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const {
    check_field(o);
    return field_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const {
    if (field_.is_rationals()) return q_.get_str();
    return std::to_string(r_);
  }

  const mpq_class& rational() const {
    if (!field_.is_rationals()) fail("not a rational scalar");
    return q_;
  }
  unsigned long residue() const {
    if (field_.is_rationals()) fail("not a prime-field scalar");
    return r_;
  }

 private:
  explicit Scalar(const FieldSpec& f) : field_(f), q_(0), r_(0) {}

  void check_field(const Scalar& o) const {
    if (field_ != o.field_)
      fail("field mismatch: " + field_.str() + " vs " + o.field_.str());
  }

  FieldSpec field_;
  mpq_class q_;
  unsigned long r_ = 0;
};

}  // namespace pcp
