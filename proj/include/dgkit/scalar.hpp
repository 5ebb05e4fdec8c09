#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dgkit {

using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct FieldMismatch : std::runtime_error {
  explicit FieldMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidField : std::runtime_error {
  explicit InvalidField(const std::string& what) : std::runtime_error(what) {}
};

/// Exact base field: the rationals or a prime field F_p with 2 <= p <= 97.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;  // characteristic; 0 for the rationals

  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
  static FieldSpec prime(std::uint32_t p);

  bool operator==(const FieldSpec& other) const {
    return kind == other.kind && p == other.p;
  }
  bool operator!=(const FieldSpec& other) const { return !(*this == other); }

  bool is_rationals() const { return kind == Kind::Rationals; }
  std::string name() const;  // "q" or "f<p>"
  static FieldSpec from_name(const std::string& name);
};

/// An element of a FieldSpec field. Rationals are kept in lowest terms with
/// positive denominator; prime-field values as residues in [0, p).
class Scalar {
 public:
  Scalar() = default;  // zero over the rationals
  Scalar(const FieldSpec& field, long long value);
  Scalar(const FieldSpec& field, const BigInt& value);
  static Scalar from_rational(const BigRational& value);
  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator/(const Scalar& other) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }
  /// Total order used only for canonical tie-breaking, not field structure.
  int cmp(const Scalar& other) const;

  /// Rational value; for prime fields the residue as an integer.
  const BigRational& rational() const { return rat_; }
  std::int64_t residue() const { return residue_; }

  /// Serialized form: "a/b" or "a" over Q, decimal residue over F_p.
  std::string str() const;
  /// Parses the serialized form, reducing into the field.
  static Scalar parse(const FieldSpec& field, const std::string& text);

 private:
  void check_same_field(const Scalar& other) const;

  FieldSpec field_ = FieldSpec::rationals();
  BigRational rat_ = 0;       // used when field is Q
  std::int64_t residue_ = 0;  // used when field is F_p
};

}  // namespace dgkit
