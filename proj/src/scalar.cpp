#include "dgkit/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace dgkit {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid; p prime, 0 < a < p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return mod_reduce(t, p);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime_u32(p) || p > 97)
    throw InvalidField("field characteristic must be a prime in [2, 97], got " +
                       std::to_string(p));
  return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::name() const {
  return is_rationals() ? "q" : "f" + std::to_string(p);
}

FieldSpec FieldSpec::from_name(const std::string& name) {
  if (name == "q" || name == "Q") return rationals();
  if (name.size() >= 2 && (name[0] == 'f' || name[0] == 'F')) {
    try {
      return prime(static_cast<std::uint32_t>(std::stoul(name.substr(1))));
    } catch (const std::logic_error&) {
      // fall through to the common error
    }
  }
  throw InvalidField("unknown field name '" + name + "' (expected q or f<p>)");
}

Scalar::Scalar(const FieldSpec& field, long long value) : field_(field) {
  if (field_.is_rationals())
    rat_ = value;
  else
    residue_ = mod_reduce(value, field_.p);
}

Scalar::Scalar(const FieldSpec& field, const BigInt& value) : field_(field) {
  if (field_.is_rationals()) {
    rat_ = BigRational(value);
  } else {
    BigInt r = value % field_.p;
    if (r < 0) r += field_.p;
    residue_ = static_cast<std::int64_t>(r);
  }
}

Scalar Scalar::from_rational(const BigRational& value) {
  Scalar s;
  s.field_ = FieldSpec::rationals();
  s.rat_ = value;
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? rat_.is_zero() : residue_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : residue_ == 1;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_)
    throw FieldMismatch("mixed-field arithmetic: " + field_.name() + " vs " +
                        other.field_.name());
}

Scalar Scalar::operator+(const Scalar& other) const {
  check_same_field(other);
  Scalar r(*this);
  if (field_.is_rationals())
    r.rat_ += other.rat_;
  else
    r.residue_ = mod_reduce(residue_ + other.residue_, field_.p);
  return r;
}

Scalar Scalar::operator-(const Scalar& other) const {
  check_same_field(other);
  Scalar r(*this);
  if (field_.is_rationals())
    r.rat_ -= other.rat_;
  else
    r.residue_ = mod_reduce(residue_ - other.residue_, field_.p);
  return r;
}

Scalar Scalar::operator*(const Scalar& other) const {
  check_same_field(other);
  Scalar r(*this);
  if (field_.is_rationals())
    r.rat_ *= other.rat_;
  else
    r.residue_ = mod_reduce(residue_ * other.residue_, field_.p);
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar r(*this);
  if (field_.is_rationals())
    r.rat_ = 1 / rat_;
  else
    r.residue_ = mod_inverse(residue_, field_.p);
  return r;
}

Scalar Scalar::operator/(const Scalar& other) const {
  return *this * other.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (field_.is_rationals())
    r.rat_ = -rat_;
  else
    r.residue_ = mod_reduce(-residue_, field_.p);
  return r;
}

bool Scalar::operator==(const Scalar& other) const {
  check_same_field(other);
  return field_.is_rationals() ? rat_ == other.rat_
                               : residue_ == other.residue_;
}

int Scalar::cmp(const Scalar& other) const {
  check_same_field(other);
  if (field_.is_rationals()) {
    if (rat_ < other.rat_) return -1;
    return rat_ == other.rat_ ? 0 : 1;
  }
  if (residue_ < other.residue_) return -1;
  return residue_ == other.residue_ ? 0 : 1;
}

std::string Scalar::str() const {
  if (!field_.is_rationals()) return std::to_string(residue_);
  const BigInt num = numerator(rat_);
  const BigInt den = denominator(rat_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Scalar Scalar::parse(const FieldSpec& field, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty scalar literal");
  const auto slash = text.find('/');
  try {
    if (field.is_rationals()) {
      BigInt num(slash == std::string::npos ? text : text.substr(0, slash));
      BigInt den = slash == std::string::npos ? BigInt(1)
                                              : BigInt(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      if (den < 0) {
        num = -num;
        den = -den;
      }
      return from_rational(BigRational(num, den));
    }
    if (slash != std::string::npos)
      throw std::invalid_argument("fractions are not prime-field literals");
    return Scalar(field, BigInt(text));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad scalar literal '" + text + "'");
  }
}

}  // namespace dgkit
