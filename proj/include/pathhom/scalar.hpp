#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace pathhom {

class Scalar;

/// Coefficient field: the rationals, or GF(p) for an odd prime p < 2^31.
/// Odd characteristic keeps 2 invertible, which the exterior algebra needs.
class Field {
 public:
  static Field rational() noexcept { return Field(0); }
  static Field prime(std::uint64_t p);

  /// Accepts "rational", "q" or "gf:<p>".
  static Field parse(std::string_view spec);

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;

  /// Parses "num" or "num/den". Over GF(p) the quotient is reduced mod p.
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_ = 0;
};

/// Exact field element. Arithmetic between elements of different fields
/// throws std::logic_error.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(mpq_class q);
  static Scalar residue(std::uint64_t value, std::uint64_t modulus);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  Scalar inverse() const;
  std::string to_string() const;

  // Representation access for elimination kernels.
  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint64_t residue_value() const { return std::get<Residue>(v_).value; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  struct Residue {
    std::uint64_t value = 0;
    std::uint64_t modulus = 0;
    bool operator==(const Residue&) const = default;
  };
  Residue& residue_ref(const Scalar& other);

  std::variant<mpq_class, Residue> v_;
};

std::uint64_t mod_inverse(std::uint64_t value, std::uint64_t modulus);

}  // namespace pathhom
