#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "trusslab/error.hpp"

namespace trusslab {

// The base field: either the rationals or a prime field F_p.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind          kind = Kind::Rationals;
  std::uint64_t p    = 0;

  static FieldSpec rationals() { return {}; }

  static FieldSpec prime(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
      throw FieldError("modulus " + std::to_string(p)
                       + " is not a prime below 2^32");
    }
    return {Kind::PrimeField, p};
  }

  bool is_rational() const noexcept { return kind == Kind::Rationals; }

  std::string to_string() const {
    return is_rational() ? "Q" : "F" + std::to_string(p);
  }

  friend bool operator==(FieldSpec const&, FieldSpec const&) = default;

  static bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }
};

inline std::ostream& operator<<(std::ostream& os, FieldSpec const& f) {
  return os << f.to_string();
}

// An exact field element. Rationals are kept in lowest terms with a positive
// denominator (mpq canonical form), residues in [0, p).
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(FieldSpec const& f) { return from_int(f, 0); }
  static Scalar one(FieldSpec const& f) { return from_int(f, 1); }

  static Scalar from_int(FieldSpec const& f, long v) {
    Scalar s;
    s.p_ = f.is_rational() ? 0 : f.p;
    if (s.p_ == 0) {
      s.q_ = v;
    } else {
      auto m = static_cast<long long>(s.p_);
      auto r = static_cast<long long>(v) % m;
      s.r_   = static_cast<std::uint64_t>(r < 0 ? r + m : r);
    }
    return s;
  }

  static Scalar from_rational(FieldSpec const& f, mpq_class const& q) {
    if (f.is_rational()) {
      Scalar s;
      s.q_ = q;
      s.q_.canonicalize();
      return s;
    }
    mpz_class num = q.get_num() % static_cast<unsigned long>(f.p);
    mpz_class den = q.get_den() % static_cast<unsigned long>(f.p);
    if (den == 0) {
      throw ParseError("denominator vanishes in " + f.to_string());
    }
    Scalar n = from_int(f, num.get_si());
    Scalar d = from_int(f, den.get_si());
    return n / d;
  }

  // Accepts "a", "-a", "a/b". Over F_p fractions are read as a * b^{-1}.
  static Scalar parse(FieldSpec const& f, std::string_view text) {
    std::string t(text);
    if (t.empty()) {
      throw ParseError("empty scalar");
    }
    mpq_class q;
    try {
      if (t.find('/') == std::string::npos) {
        q = mpq_class(mpz_class(t, 10));
      } else {
        q = mpq_class(t, 10);
        if (q.get_den() == 0) {
          throw ParseError("zero denominator in scalar \"" + t + "\"");
        }
        q.canonicalize();
      }
    } catch (std::invalid_argument const&) {
      throw ParseError("malformed scalar \"" + t + "\"");
    }
    return from_rational(f, q);
  }

  FieldSpec field() const {
    return p_ == 0 ? FieldSpec::rationals()
                   : FieldSpec{FieldSpec::Kind::PrimeField, p_};
  }

  bool is_zero() const noexcept {
    return p_ == 0 ? sgn(q_) == 0 : r_ == 0;
  }

  bool is_one() const noexcept { return p_ == 0 ? q_ == 1 : r_ == 1; }

  mpq_class const& rational() const noexcept { return q_; }
  std::uint64_t    residue() const noexcept { return r_; }

  std::string to_string() const {
    return p_ == 0 ? q_.get_str() : std::to_string(r_);
  }

  Scalar operator-() const {
    Scalar s(*this);
    if (p_ == 0) {
      s.q_ = -q_;
    } else if (r_ != 0) {
      s.r_ = p_ - r_;
    }
    return s;
  }

  Scalar& operator+=(Scalar const& o) {
    same_field(o);
    if (p_ == 0) {
      q_ += o.q_;
    } else {
      r_ = (r_ + o.r_) % p_;
    }
    return *this;
  }

  Scalar& operator-=(Scalar const& o) { return *this += -o; }

  Scalar& operator*=(Scalar const& o) {
    same_field(o);
    if (p_ == 0) {
      q_ *= o.q_;
    } else {
      r_ = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(r_) * o.r_) % p_);
    }
    return *this;
  }

  Scalar& operator/=(Scalar const& o) { return *this *= o.inverse(); }

  Scalar inverse() const {
    if (is_zero()) {
      throw NotInvertible("division by zero");
    }
    Scalar s(*this);
    if (p_ == 0) {
      s.q_ = 1 / q_;
    } else {
      s.r_ = pow_mod(r_, p_ - 2, p_);
    }
    return s;
  }

  // this += a * b, without the temporary.
  void add_product(Scalar const& a, Scalar const& b) {
    same_field(a);
    same_field(b);
    if (p_ == 0) {
      mpq_class t = a.q_ * b.q_;
      q_ += t;
    } else {
      r_ = static_cast<std::uint64_t>(
          (r_ + static_cast<unsigned __int128>(a.r_) * b.r_) % p_);
    }
  }

  friend Scalar operator+(Scalar a, Scalar const& b) { return a += b; }
  friend Scalar operator-(Scalar a, Scalar const& b) { return a -= b; }
  friend Scalar operator*(Scalar a, Scalar const& b) { return a *= b; }
  friend Scalar operator/(Scalar a, Scalar const& b) { return a /= b; }

  friend bool operator==(Scalar const& a, Scalar const& b) {
    if (a.p_ != b.p_) {
      return false;
    }
    return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
  }

  friend std::ostream& operator<<(std::ostream& os, Scalar const& s) {
    return os << s.to_string();
  }

 private:
  void same_field(Scalar const& o) const {
    if (p_ != o.p_) {
      throw FieldError("scalars from " + field().to_string() + " and "
                       + o.field().to_string() + " cannot be combined");
    }
  }

  static std::uint64_t pow_mod(std::uint64_t b,
                               std::uint64_t e,
                               std::uint64_t m) {
    unsigned __int128 result = 1;
    unsigned __int128 base   = b % m;
    while (e > 0) {
      if (e & 1) {
        result = (result * base) % m;
      }
      base = (base * base) % m;
      e >>= 1;
    }
    return static_cast<std::uint64_t>(result);
  }

  std::uint64_t p_ = 0;  // 0 means rational
  std::uint64_t r_ = 0;
  mpq_class     q_;
};

}  // namespace trusslab
