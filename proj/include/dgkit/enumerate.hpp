#pragma once

#include <optional>
#include <vector>

#include "dgkit/config.hpp"
#include "dgkit/module.hpp"

namespace dgkit {

/// All vectors of F_q^dim in lexicographic digit order, or nullopt when the
/// count would exceed the cap. Rationals never enumerate.
std::optional<std::vector<std::vector<Scalar>>> enumerate_vectors(
    const FieldSpec& field, std::size_t dim, std::size_t cap);

/// Every subspace of the ambient space stable under all operators, computed
/// as joins of cyclic closures of homogeneous vectors. Exhaustive over F_q;
/// nullopt when a sweep or the lattice would exceed its cap.
std::optional<std::vector<GradedSubspace>> enumerate_stable_subspaces(
    const FieldSpec& field, const GradedSpace& space,
    const std::vector<HomogeneousMap>& operators, const Caps& caps);

/// dg-submodule lattice of a module (operators: action + delta).
std::optional<std::vector<GradedSubspace>> enumerate_submodule_lattice(
    const DgModule& m, const Caps& caps);

/// Same lattice computed through the enveloping extension's action operators;
/// used as the oracle side of the graded-B-module dictionary.
std::optional<std::vector<GradedSubspace>> enumerate_envelope_submodule_lattice(
    const DgModule& m, const Caps& caps);

std::optional<std::vector<GradedSubspace>> enumerate_dg_left_ideals(
    const DgAlgebra& a, const Caps& caps);
std::optional<std::vector<GradedSubspace>> enumerate_two_sided_dg_ideals(
    const DgAlgebra& a, const Caps& caps);

/// Graded left ideals of a graded algebra (no differential involved).
std::optional<std::vector<GradedSubspace>> enumerate_graded_left_ideals(
    const GradedAlgebra& a, const Caps& caps);

/// If every maximal chain of the lattice (ordered by containment) has the
/// same length, returns that length.
std::optional<std::size_t> lattice_uniform_chain_length(
    const std::vector<GradedSubspace>& lattice);

/// Largest nilpotent two-sided ideal by homogeneous sweep; the brute-force
/// oracle for the Jacobson radical over finite fields.
std::optional<GradedSubspace> brute_force_nilpotent_radical(
    const GradedAlgebra& a, const Caps& caps);

/// Smallest k with I^k = 0, or nullopt if I is not nilpotent.
std::optional<std::size_t> subspace_nilpotency_index(const GradedAlgebra& a,
                                                     const GradedSubspace& ideal);

}  // namespace dgkit
