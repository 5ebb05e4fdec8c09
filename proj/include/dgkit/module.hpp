#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgkit/algebra.hpp"
#include "dgkit/config.hpp"

namespace dgkit {

/// Finite-dimensional left dg-module over a dg-algebra: homogeneous basis,
/// action tensor (algebra basis x module basis -> coordinates) and a
/// square-zero degree +1 map compatible with the algebra differential.
class DgModule {
 public:
  DgModule() = default;
  DgModule(std::shared_ptr<const DgAlgebra> over,
           std::vector<std::string> names, std::vector<int> degrees,
           std::vector<std::vector<std::vector<Scalar>>> action,
           HomogeneousMap delta);

  const DgAlgebra& over() const { return *over_; }
  const std::shared_ptr<const DgAlgebra>& over_ptr() const { return over_; }
  const FieldSpec& field() const { return over_->field(); }
  const GradedBasis& basis() const { return basis_; }
  const GradedSpace& space() const { return basis_.space(); }
  std::size_t dim() const { return basis_.total_dim(); }
  const std::vector<std::string>& names() const { return names_; }
  const HomogeneousMap& delta() const { return delta_; }
  const std::vector<Scalar>& action_basis(std::size_t i, std::size_t j) const {
    return action_[i][j];
  }

  std::vector<Scalar> act(const std::vector<Scalar>& algebra_vec,
                          const std::vector<Scalar>& module_vec) const;
  std::vector<Scalar> delta_of(const std::vector<Scalar>& module_vec) const;
  std::vector<Scalar> basis_vector(std::size_t j) const;

  /// Action of algebra basis element i as a homogeneous map on the module.
  HomogeneousMap action_map(std::size_t i) const;
  std::vector<HomogeneousMap> action_operators() const;
  /// Action operators plus delta: stability under these characterizes
  /// dg-submodules.
  std::vector<HomogeneousMap> closure_operators() const;
  /// Action operators of the enveloping extension B = A<eps> (eps acts as
  /// delta): stability under these characterizes graded B-submodules.
  std::vector<HomogeneousMap> envelope_operators() const;

 private:
  std::shared_ptr<const DgAlgebra> over_;
  std::vector<std::string> names_;
  GradedBasis basis_;
  std::vector<std::vector<std::vector<Scalar>>> action_;
  HomogeneousMap delta_;
};

ValidationReport validate_module(const DgModule& m);

/// The regular left dg-module: action by multiplication, delta = d.
DgModule regular_module(std::shared_ptr<const DgAlgebra> a);

struct DgSubmodule {
  GradedSubspace carrier;
};

/// Smallest dg-submodule containing the given homogeneous vectors; rejects
/// non-homogeneous generators.
GradedSubspace submodule_closure(const DgModule& m,
                                 const std::vector<std::vector<Scalar>>& gens);
GradedSubspace submodule_closure_local(
    const DgModule& m,
    const std::vector<std::pair<int, std::vector<Scalar>>>& gens);
bool is_dg_submodule(const DgModule& m, const GradedSubspace& carrier);

/// The carrier as an abstract dg-module, with its inclusion data.
struct SubmoduleView {
  DgModule module;
  std::vector<std::vector<Scalar>> embedding;  // submodule basis -> parent coords
  HomogeneousMap inclusion;                    // degree-0 chain map
};
SubmoduleView submodule_as_module(const DgModule& m, const GradedSubspace& carrier);

/// Expresses a subspace of the parent lying inside the view's carrier in the
/// view's own coordinates.
GradedSubspace restrict_carrier(const SubmoduleView& view,
                                const GradedSubspace& sub_in_parent);
/// Maps a carrier in view coordinates back to the parent's coordinates.
GradedSubspace push_carrier(const DgModule& parent, const SubmoduleView& view,
                            const GradedSubspace& carrier_in_view);

/// Quotient by a dg-submodule on canonical coset representatives.
struct QuotientModuleView {
  DgModule module;
  HomogeneousMap projection;  // parent -> quotient, degree-0 chain map
  std::vector<std::vector<Scalar>> section;  // quotient basis -> parent coords
};
QuotientModuleView quotient_module(const DgModule& m, const GradedSubspace& carrier);

struct DirectSumView {
  DgModule module;
  HomogeneousMap left_injection, right_injection;
};
DirectSumView direct_sum(const DgModule& a, const DgModule& b);

/// Shift functor [n]: degrees move by n, delta and the action pick up the
/// signs of ShiftConvention.
DgModule shift_module(const DgModule& m, int n);

/// Homology of the underlying complex; unit preimages do not apply.
HomologyReport module_homology(const DgModule& m);

/// Basis of the space of degree-0 delta-commuting A-linear maps m -> n.
std::vector<HomogeneousMap> hom_dg(const DgModule& m, const DgModule& n);

/// Searches the hom space for an invertible element: Schur shortcut when both
/// modules are known simple, deterministic small grid otherwise.
enum class IsoStatus { Isomorphic, NotIsomorphic, Undetermined };
IsoStatus is_isomorphic(const DgModule& m, const DgModule& n, const Caps& caps,
                        bool both_simple = false);
/// Scans the finite shift window where graded supports can match.
struct ShiftIso {
  IsoStatus status = IsoStatus::NotIsomorphic;
  int shift = 0;
};
ShiftIso is_isomorphic_up_to_shift(const DgModule& m, const DgModule& n,
                                   const Caps& caps, bool both_simple = false);

/// Left annihilator ann_A(M) = {a : a.M = 0}, a graded two-sided dg-ideal.
GradedSubspace left_annihilator(const DgModule& m);

/// J(B).M for a given radical of the enveloping extension.
GradedSubspace envelope_radical_of_module(const DgModule& m,
                                          const GradedSubspace& envelope_radical);

// ---------------------------------------------------------------------------
// simplicity, maximal dg-submodules, composition series (semisimple.cpp)
// ---------------------------------------------------------------------------

struct SimplicityResult {
  enum class Status { Simple, NotSimple, Undetermined };
  Status status = Status::Undetermined;
  std::optional<GradedSubspace> certificate;  // proper nonzero dg-submodule
  std::string note;
  bool simple() const { return status == Status::Simple; }
};
SimplicityResult is_dg_simple(const DgModule& m, const Caps& caps);

/// Maximal dg-submodules via the enveloping extension: preimages of maximal
/// graded submodules of M / rad(M). Over Q an isotypic component of
/// multiplicity >= 2 carries infinitely many maximal submodules; these are
/// returned as a parametrized family, never truncated silently.
struct MaximalFamily {
  std::vector<GradedSubspace> representatives;
  std::size_t hom_dimension = 0;  // dimension of the parametrizing hom space
  std::string description;
};
struct MaximalSubmodules {
  std::vector<GradedSubspace> maximals;  // concrete, deduplicated
  std::vector<MaximalFamily> families;   // infinite families over Q
  GradedSubspace radical;                // J(B).M
  bool complete = true;   // true iff `maximals` is the full list
  std::string note;
};
MaximalSubmodules maximal_dg_submodules(const DgModule& m, const Caps& caps);

/// Decomposition of a semisimple dg-module into dg-simple summands.
struct SemisimpleDecomposition {
  std::vector<GradedSubspace> summands;
  bool complete = true;
  std::string note;
};
SemisimpleDecomposition decompose_semisimple(const DgModule& m, const Caps& caps);

struct CompositionFactor {
  GradedSpace dims;       // graded dimension vector of the factor
  std::string iso_tag;    // series-local iso class up to shift
};
struct CompositionSeries {
  std::vector<GradedSubspace> chain;  // 0 = chain[0] < ... < chain[l] = M
  std::vector<CompositionFactor> factors;
  std::size_t length() const { return factors.size(); }
};
CompositionSeries composition_series(const DgModule& m, const Caps& caps);
bool jordan_hoelder_equal(const DgModule& m, const CompositionSeries& s1,
                          const CompositionSeries& s2, const Caps& caps);
/// Factor multisets of every series branch (exhaustive; oracle scale only).
std::vector<CompositionSeries> all_composition_series(const DgModule& m,
                                                      const Caps& caps,
                                                      std::size_t max_branches);

// ---------------------------------------------------------------------------
// short exact sequences and the long exact homology sequence
// ---------------------------------------------------------------------------

struct SESData {
  DgModule sub, mid, quot;
  HomogeneousMap injection;   // sub -> mid
  HomogeneousMap surjection;  // mid -> quot
};
/// The canonical SES 0 -> N -> M -> M/N -> 0 of a dg-submodule.
SESData ses_from_submodule(const DgModule& m, const GradedSubspace& carrier);
ValidationReport validate_ses(const SESData& ses);

struct LESNode {
  std::string position;  // e.g. "H_2(mid)"
  bool exact = false;
};
struct LESReport {
  std::map<int, std::size_t> h_sub, h_mid, h_quot;
  std::vector<LESNode> nodes;
  bool exact = true;
  /// Set when the quotient is acyclic: H(mid) = H(sub) degreewise.
  std::optional<bool> sub_iso_mid;
};
LESReport long_exact_sequence(const SESData& ses);

}  // namespace dgkit
