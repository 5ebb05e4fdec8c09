#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgkit/graded.hpp"

namespace dgkit {

struct InternalCheckFailure : std::logic_error {
  explicit InternalCheckFailure(const std::string& what)
      : std::logic_error(what) {}
};

/// Outcome of a report-based validator: violations are collected, not thrown.
struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string message) { violations.push_back(std::move(message)); }
  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
};

/// Finite-dimensional Z-graded unital algebra given by a homogeneous basis
/// and structure constants.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  GradedAlgebra(FieldSpec field, std::vector<std::string> names,
                std::vector<int> degrees,
                std::vector<std::vector<std::vector<Scalar>>> mul,
                std::vector<Scalar> unit);

  const FieldSpec& field() const { return field_; }
  const GradedBasis& basis() const { return basis_; }
  const GradedSpace& space() const { return basis_.space(); }
  std::size_t dim() const { return basis_.total_dim(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Scalar>& unit() const { return unit_; }
  const std::vector<Scalar>& mul_basis(std::size_t i, std::size_t j) const {
    return mul_[i][j];
  }

  std::vector<Scalar> multiply(const std::vector<Scalar>& a,
                               const std::vector<Scalar>& b) const;
  std::vector<Scalar> basis_vector(std::size_t i) const;

  /// Left multiplication by basis element i, as a homogeneous map of shift
  /// equal to the element's degree.
  HomogeneousMap left_mult(std::size_t i) const;
  HomogeneousMap right_mult(std::size_t i) const;
  /// Left multiplication by an arbitrary homogeneous element.
  HomogeneousMap left_mult_by(int degree, const std::vector<Scalar>& global) const;
  std::vector<HomogeneousMap> left_mult_operators() const;
  std::vector<HomogeneousMap> right_mult_operators() const;

  /// Span of all pairwise products of elements of u and v.
  GradedSubspace subspace_product(const GradedSubspace& u,
                                  const GradedSubspace& v) const;

 private:
  FieldSpec field_;
  std::vector<std::string> names_;
  GradedBasis basis_;
  std::vector<std::vector<std::vector<Scalar>>> mul_;
  std::vector<Scalar> unit_;
};

/// Checks degree-additivity of products, associativity on all basis triples,
/// unit laws and unit homogeneity. First-witness diagnostics.
ValidationReport validate_algebra(const GradedAlgebra& a);

/// A graded algebra with a square-zero degree +1 derivation.
class DgAlgebra {
 public:
  DgAlgebra() = default;
  DgAlgebra(GradedAlgebra algebra, HomogeneousMap differential);

  const GradedAlgebra& algebra() const { return algebra_; }
  const FieldSpec& field() const { return algebra_.field(); }
  const GradedBasis& basis() const { return algebra_.basis(); }
  const GradedSpace& space() const { return algebra_.space(); }
  std::size_t dim() const { return algebra_.dim(); }
  const HomogeneousMap& differential() const { return d_; }

  std::vector<Scalar> d_of(const std::vector<Scalar>& global) const;

 private:
  GradedAlgebra algebra_;
  HomogeneousMap d_;
};

/// Verifies d has shift +1, d^2 = 0 on the basis, and the graded Leibniz rule
/// d(ab) = d(a)b + (-1)^{|a|} a d(b) on all basis pairs.
ValidationReport validate_differential(const GradedAlgebra& algebra,
                                       const HomogeneousMap& d);

/// ker(d) with its induced multiplication, together with the embedding of the
/// cycle basis into the ambient algebra.
struct CyclesAlgebra {
  GradedAlgebra algebra;           // structure on ker(d) in the cycle basis
  GradedSubspace carrier;          // ker(d) inside the ambient algebra
  std::vector<std::vector<Scalar>> embedding;  // cycle basis -> ambient coords

  std::vector<Scalar> embed(const std::vector<Scalar>& cycle_coords) const;
  /// Expresses an ambient vector lying in ker(d) in the cycle basis.
  std::vector<Scalar> restrict(const std::vector<Scalar>& ambient) const;
};

CyclesAlgebra cycles_algebra(const DgAlgebra& a);

/// Per-degree homology dimensions plus the acyclicity witness.
struct HomologyReport {
  std::map<int, std::size_t> kernel_dims;
  std::map<int, std::size_t> image_dims;  // of d landing in each degree
  std::map<int, std::size_t> homology_dims;
  bool acyclic = false;
  std::optional<std::vector<Scalar>> unit_preimage;  // y with d(y) = 1

  std::size_t total_homology_dim() const;
};

/// Homology of the underlying complex of a dg-algebra. Acyclicity is decided
/// both by vanishing homology and by solvability of d(y) = 1; disagreement is
/// an internal hard failure.
HomologyReport homology(const DgAlgebra& a);

/// Dimension data of the complex (space, delta) alone; used by modules.
HomologyReport complex_homology(const GradedSpace& space,
                                const HomogeneousMap& delta);

/// Trivial extension B = A + A.eps with |eps| = 1, eps^2 = 0 and
/// eps a = d(a) + (-1)^{|a|} a eps. Graded B-modules are exactly the
/// dg-modules over (A, d); eps acts as the differential.
GradedAlgebra enveloping_extension(const DgAlgebra& a);

/// Index of the basis element of B corresponding to a_i, and to a_i.eps.
inline std::size_t envelope_plain_index(std::size_t i) { return i; }
inline std::size_t envelope_eps_index(std::size_t i, std::size_t dim_a) {
  return dim_a + i;
}

/// Sign bookkeeping for the shift functor [n]: degrees move by n, the
/// differential picks up (-1)^n, the action of a picks up (-1)^{n|a|}.
struct ShiftConvention {
  int n = 0;
  int delta_sign() const { return (n % 2 == 0) ? 1 : -1; }
  int action_sign(int element_degree) const {
    return ((n * element_degree) % 2 == 0) ? 1 : -1;
  }
};

inline ShiftConvention shift_convention(int n) { return ShiftConvention{n}; }

/// Quotient of a dg-algebra by a two-sided dg-ideal, with the induced
/// multiplication and differential on canonical coset representatives.
struct QuotientAlgebra {
  DgAlgebra quotient;
  /// Projection A -> A/I and section A/I -> A on the chosen representatives.
  std::vector<std::vector<Scalar>> section;     // quotient basis -> A coords
  std::vector<std::pair<int, std::size_t>> rep_coords;  // (degree, ambient col)

  std::vector<Scalar> project(const GradedBasis& ambient_basis,
                              const GradedSubspace& ideal,
                              const std::vector<Scalar>& ambient) const;
};

QuotientAlgebra quotient_algebra(const DgAlgebra& a, const GradedSubspace& ideal);

/// True iff the subspace is stable under all left/right multiplications and
/// under the differential.
bool is_two_sided_dg_ideal(const DgAlgebra& a, const GradedSubspace& u);
bool is_left_dg_ideal(const DgAlgebra& a, const GradedSubspace& u);

}  // namespace dgkit
