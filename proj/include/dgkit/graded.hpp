#pragma once

#include <map>
#include <string>
#include <vector>

#include "dgkit/matrix.hpp"

namespace dgkit {

struct AmbientMismatch : std::runtime_error {
  explicit AmbientMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension profile of a finite Z-graded space. Degrees with dimension 0
/// are omitted.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::map<int, std::size_t> dims);

  std::size_t dim(int degree) const;
  std::size_t total_dim() const { return total_; }
  const std::map<int, std::size_t>& dims() const { return dims_; }
  std::vector<int> degrees() const;
  int min_degree() const;
  int max_degree() const;

  bool operator==(const GradedSpace& other) const { return dims_ == other.dims_; }
  bool operator!=(const GradedSpace& other) const { return !(*this == other); }

 private:
  std::map<int, std::size_t> dims_;
  std::size_t total_ = 0;
};

/// A choice of homogeneous basis: degree of each global basis index. Orders
/// the component of each degree by ascending global index.
class GradedBasis {
 public:
  GradedBasis() = default;
  explicit GradedBasis(std::vector<int> degrees);

  std::size_t total_dim() const { return degrees_.size(); }
  int degree_of(std::size_t global) const { return degrees_[global]; }
  const std::vector<int>& degrees() const { return degrees_; }
  const GradedSpace& space() const { return space_; }

  const std::vector<std::size_t>& component(int degree) const;
  std::size_t local_index(std::size_t global) const { return local_[global]; }
  std::size_t global_index(int degree, std::size_t local) const;

  /// Splits a global coordinate vector into homogeneous components.
  std::map<int, std::vector<Scalar>> split(
      const std::vector<Scalar>& global) const;
  /// Degree of a homogeneous global vector; throws if mixed or zero-ambiguous
  /// (zero vectors report true).
  bool is_homogeneous(const std::vector<Scalar>& global, int* degree) const;
  std::vector<Scalar> embed(int degree, const std::vector<Scalar>& local,
                            const FieldSpec& field) const;
  std::vector<Scalar> component_of(const std::vector<Scalar>& global,
                                   int degree, const FieldSpec& field) const;

  bool operator==(const GradedBasis& other) const {
    return degrees_ == other.degrees_;
  }

 private:
  std::vector<int> degrees_;
  std::vector<std::size_t> local_;
  std::map<int, std::vector<std::size_t>> components_;
  GradedSpace space_;
  static const std::vector<std::size_t> kEmpty;
};

/// Degree-homogeneous linear map between graded spaces: one exact block per
/// source degree n, mapping into target degree n + shift. Missing blocks are
/// zero.
class HomogeneousMap {
 public:
  HomogeneousMap() = default;
  HomogeneousMap(const FieldSpec& field, GradedSpace source, GradedSpace target,
                 int shift);

  const FieldSpec& field() const { return field_; }
  const GradedSpace& source() const { return source_; }
  const GradedSpace& target() const { return target_; }
  int shift() const { return shift_; }

  void set_block(int source_degree, Matrix block);
  /// Block for a source degree (zero matrix of the right shape if unset).
  Matrix block(int source_degree) const;
  const std::map<int, Matrix>& blocks() const { return blocks_; }

  std::vector<Scalar> apply_component(int source_degree,
                                      const std::vector<Scalar>& local) const;

  HomogeneousMap compose_after(const HomogeneousMap& first) const;  // this∘first
  bool is_zero() const;

 private:
  FieldSpec field_ = FieldSpec::rationals();
  GradedSpace source_, target_;
  int shift_ = 0;
  std::map<int, Matrix> blocks_;
};

/// Graded subspace in canonical form: per-degree RREF basis matrices whose
/// rows are basis vectors in component coordinates. Equality is syntactic.
class GradedSubspace {
 public:
  GradedSubspace() = default;
  GradedSubspace(const FieldSpec& field, GradedSpace ambient);
  static GradedSubspace zero(const FieldSpec& field, GradedSpace ambient);
  static GradedSubspace whole(const FieldSpec& field, GradedSpace ambient);
  /// Canonicalizes arbitrary per-degree generating rows.
  static GradedSubspace span(const FieldSpec& field, GradedSpace ambient,
                             const std::map<int, Matrix>& generators);

  const FieldSpec& field() const { return field_; }
  const GradedSpace& ambient() const { return ambient_; }
  std::size_t dim(int degree) const;
  std::size_t total_dim() const;
  GradedSpace dims_profile() const;
  const std::map<int, Matrix>& basis() const { return basis_; }
  /// Basis matrix at a degree (0 x ambient-dim if empty there).
  Matrix basis_at(int degree) const;

  bool is_zero() const { return basis_.empty(); }
  bool is_whole() const;
  bool operator==(const GradedSubspace& other) const;
  bool operator!=(const GradedSubspace& other) const { return !(*this == other); }
  int cmp(const GradedSubspace& other) const;
  bool operator<(const GradedSubspace& other) const { return cmp(other) < 0; }

  bool contains_vector(int degree, const std::vector<Scalar>& local) const;
  /// Canonical coset representative: v minus its projection onto the pivot
  /// coordinates of this subspace's basis.
  std::vector<Scalar> reduce(int degree, const std::vector<Scalar>& local) const;

 private:
  void check_compatible(const GradedSubspace& other) const;

  FieldSpec field_ = FieldSpec::rationals();
  GradedSpace ambient_;
  std::map<int, Matrix> basis_;

  friend GradedSubspace sum(const GradedSubspace&, const GradedSubspace&);
  friend GradedSubspace intersect(const GradedSubspace&, const GradedSubspace&);
  friend bool contains(const GradedSubspace&, const GradedSubspace&);
};

GradedSubspace kernel(const HomogeneousMap& map);
GradedSubspace image(const HomogeneousMap& map);
GradedSubspace sum(const GradedSubspace& u, const GradedSubspace& v);
GradedSubspace intersect(const GradedSubspace& u, const GradedSubspace& v);
/// True iff v is contained in u.
bool contains(const GradedSubspace& u, const GradedSubspace& v);
/// Homogeneous representatives completing u to v (u <= v required):
/// a canonical basis of a complement of u inside v, per degree.
std::map<int, Matrix> quotient_basis(const GradedSubspace& u,
                                     const GradedSubspace& v);

/// Smallest graded subspace containing seed and stable under every operator.
/// Operators must be endomorphism-shaped on the ambient space (any shifts).
GradedSubspace closure(const GradedSubspace& seed,
                       const std::vector<HomogeneousMap>& operators);

/// Image of a subspace under a homogeneous map, as a subspace of the target.
GradedSubspace map_subspace(const HomogeneousMap& map, const GradedSubspace& u);

/// Restriction of u to the degrees of a window [lo, hi] is not needed; this
/// instead converts a subspace to a list of (degree, row vector) generators.
std::vector<std::pair<int, std::vector<Scalar>>> subspace_rows(
    const GradedSubspace& u);

}  // namespace dgkit
