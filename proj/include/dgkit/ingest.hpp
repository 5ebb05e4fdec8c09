#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgkit/config.hpp"
#include "dgkit/module.hpp"
#include "dgkit/rng.hpp"

namespace dgkit::ingest {

/// Structural document error; carries a JSON-pointer path when applicable.
struct DocumentError : std::runtime_error {
  explicit DocumentError(const std::string& what, std::string pointer = "")
      : std::runtime_error(pointer.empty() ? what : pointer + ": " + what),
        json_pointer(std::move(pointer)) {}
  std::string json_pointer;
};

struct ParsedDocument {
  std::shared_ptr<const DgAlgebra> algebra;
  std::vector<DgModule> modules;
  std::vector<std::string> module_names;
};

/// Parses a .dga.json document. Structural violations (shapes, unknown
/// fields, bad literals, inhomogeneous differential) throw DocumentError;
/// mathematical axiom violations are left to the validator stack.
ParsedDocument parse_document(const std::string& text, const Caps& caps = {});

/// Canonical serialization: sorted keys, sparse tensors in index order,
/// scalars as strings, two-space indentation, trailing newline.
std::string emit_document(const DgAlgebra& algebra,
                          const std::vector<DgModule>& modules = {},
                          const std::vector<std::string>& module_names = {});

/// Full validator stack over a parsed document.
ValidationReport validate_document(const ParsedDocument& doc);

// --- built-in fixtures ------------------------------------------------------

/// MAT2: Mat_2(K), degrees (e11,e12,e21,e22) = (0,+1,-1,0),
///       d(e11) = -e12, d(e12) = 0, d(e21) = e11+e22, d(e22) = e12.
/// DUAL: K[X]/X^2 with |X| = -1 and d(X) = 1.
/// SS0:  K x K concentrated in degree 0 with zero differential.
/// UT2:  upper-triangular 2x2 matrices, trivial grading, zero differential.
std::shared_ptr<const DgAlgebra> builtin_fixture(const std::string& name,
                                                 const FieldSpec& field);
std::vector<std::string> builtin_fixture_names();

// --- certified generators ---------------------------------------------------

enum class RecipeKind {
  GradedMatrix,
  TruncatedPathAlgebra,
  AcyclicConeExtension,
  DirectProduct,
  RadicalSquareZero,
};

RecipeKind recipe_from_name(const std::string& name);
std::string recipe_name(RecipeKind kind);
std::vector<std::string> recipe_names();

struct GeneratorRecipe {
  RecipeKind kind = RecipeKind::GradedMatrix;
  FieldSpec field = FieldSpec::prime(2);
  /// Size parameter: matrix size, or vertex count for path algebras, or the
  /// inner size for cones/products. 0 = derive from seed.
  std::size_t size = 0;
};

/// Deterministic in (recipe, seed); the result always passes the full
/// validator stack. Throws GeneratorDeadEnd when the recipe demands a
/// nontrivial differential and the solved space contains none.
struct GeneratorDeadEnd : std::runtime_error {
  explicit GeneratorDeadEnd(const std::string& what) : std::runtime_error(what) {}
};
std::shared_ptr<const DgAlgebra> generate(const GeneratorRecipe& recipe,
                                          std::uint64_t seed,
                                          const Caps& caps = {});

/// The affine-solve core behind graded_matrix: basis of the space of degree
/// +1 maps satisfying the Leibniz constraints for the given algebra.
std::vector<HomogeneousMap> leibniz_solution_space(const GradedAlgebra& algebra);

/// Explicit builders, used directly by tests.
std::shared_ptr<const DgAlgebra> make_graded_matrix_algebra(
    const FieldSpec& field, std::size_t n, const std::vector<int>& grading,
    std::uint64_t seed);
std::shared_ptr<const DgAlgebra> make_truncated_path_algebra(
    const FieldSpec& field, std::size_t vertices,
    const std::vector<std::pair<std::size_t, std::size_t>>& arrows,
    const std::vector<int>& arrow_degrees, std::size_t max_path_len);
std::shared_ptr<const DgAlgebra> make_acyclic_cone(
    std::shared_ptr<const DgAlgebra> base);
std::shared_ptr<const DgAlgebra> make_direct_product(
    const DgAlgebra& a, const DgAlgebra& b);

/// Deterministic dg-module zoo over an algebra: regular module, shifts,
/// sums, submodules and quotients, all validated by construction.
DgModule random_module(const DgModule& regular, Rng& rng, const Caps& caps);
GradedSubspace random_submodule(const DgModule& m, Rng& rng);

}  // namespace dgkit::ingest
