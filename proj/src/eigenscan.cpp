#include "dgkit/eigenscan.hpp"

#include "dgkit/algebra.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace dgkit {

std::vector<Scalar> char_poly_rational(const Matrix& t) {
  if (!t.field().is_rationals())
    throw std::invalid_argument("char_poly_rational requires rationals");
  if (t.rows() != t.cols())
    throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = t.rows();
  const FieldSpec q = t.field();
  std::vector<Scalar> coeffs(n + 1, Scalar::zero(q));
  coeffs[0] = Scalar::one(q);  // x^n coefficient

  Matrix m = Matrix::identity(q, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = t * m;
    const Scalar c = -(m.trace() / Scalar(q, static_cast<long long>(k)));
    coeffs[k] = c;
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, m.at(i, i) + c);
  }
  return coeffs;
}

std::vector<Scalar> field_eigenvalues(const Matrix& t, const Caps& caps,
                                      bool* complete) {
  if (complete != nullptr) *complete = true;
  std::vector<Scalar> out;
  if (t.rows() != t.cols() || t.rows() == 0) return out;
  const FieldSpec f = t.field();
  const std::size_t n = t.rows();

  if (!f.is_rationals()) {
    for (std::uint32_t r = 0; r < f.p; ++r) {
      Matrix shifted = t;
      for (std::size_t i = 0; i < n; ++i)
        shifted.set(i, i, shifted.at(i, i) - Scalar(f, r));
      if (shifted.rank() < n) out.push_back(Scalar(f, r));
    }
    return out;
  }

  // scale to an integer matrix so rational eigenvalues become integers
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt den = denominator(t.at(i, j).rational());
      scale = boost::multiprecision::lcm(scale, den);
    }
  const Matrix scaled = t.scaled(Scalar(f, scale));
  const auto coeffs = char_poly_rational(scaled);

  // monic integer polynomial; integer roots lie within the Cauchy bound
  std::vector<BigInt> ic(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (denominator(coeffs[i].rational()) != 1)
      throw InternalCheckFailure("char poly of integer matrix not integral");
    ic[i] = numerator(coeffs[i].rational());
  }
  BigInt bound = 1;
  for (const auto& c : ic) {
    BigInt a = abs(c);
    if (a > bound) bound = a;
  }
  bound += 1;
  if (bound > BigInt(caps.root_scan_limit)) {
    if (complete != nullptr) *complete = false;
    bound = BigInt(caps.root_scan_limit);
  }

  const BigInt a0 = ic.back();
  for (BigInt lambda = -bound; lambda <= bound; ++lambda) {
    if (a0 != 0 && lambda != 0 && a0 % lambda != 0) continue;
    BigInt value = 0;
    for (const auto& c : ic) value = value * lambda + c;
    if (value == 0)
      out.push_back(Scalar::from_rational(BigRational(lambda, scale)));
  }
  return out;
}

}  // namespace dgkit
