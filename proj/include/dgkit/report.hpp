#pragma once

#include <json.hpp>

#include "dgkit/module.hpp"
#include "dgkit/structure.hpp"

namespace dgkit::report {

using nlohmann::json;

json scalar_vector(const std::vector<Scalar>& v);
json subspace(const GradedSubspace& s);
json homology(const HomologyReport& h);
json validation(const ValidationReport& r);
json radical(const RadicalReport& r);
json semiprimary(const SemiprimaryReport& r);
json categorical(const CategoricalSemisimpleReport& r);
json jacobson(const JacobsonSemisimpleReport& r);
json maximal_submodules(const MaximalSubmodules& m);
json composition_series(const CompositionSeries& s);
json les(const LESReport& r);
/// JSON-lines record: {"suite", "statement", "instance", "hypotheses",
/// "conclusion", "evidence"}.
json verdict_line(const std::string& suite, const TheoremVerdict& v);

/// Deterministic single-line dump (sorted keys, no indentation).
std::string dump_line(const json& j);
/// Pretty two-space dump with trailing newline, for golden files.
std::string dump_block(const json& j);

}  // namespace dgkit::report
