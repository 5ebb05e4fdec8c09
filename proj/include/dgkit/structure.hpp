#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgkit/config.hpp"
#include "dgkit/enumerate.hpp"
#include "dgkit/module.hpp"
#include "dgkit/rng.hpp"

namespace dgkit {

/// Raised when a certifiably-correct answer is out of reach at desk scale
/// (never silently approximated).
struct Undecidable : std::runtime_error {
  explicit Undecidable(const std::string& what) : std::runtime_error(what) {}
};

/// Jacobson radical of a finite-dimensional graded algebra.
/// Characteristic 0: radical of the trace form of the left-regular
/// representation (exact). Characteristic p: the trace-form radical is
/// accepted only when it certifies as a nilpotent two-sided ideal, with a
/// homogeneous nilpotent-ideal sweep as fallback. The result is checked to
/// be graded.
GradedSubspace jacobson_radical(const GradedAlgebra& b, const Caps& caps);

/// The enveloping extension together with its Jacobson radical, memoized on
/// the algebra's canonical document (the same algebra is consulted at every
/// step of a composition series). Not thread-safe.
struct EnvelopeRadical {
  GradedAlgebra envelope;
  GradedSubspace radical;
};
const EnvelopeRadical& envelope_radical(const DgAlgebra& a, const Caps& caps);

enum class RadicalMethod { Envelope, Oracle, Both };

struct RadicalReport {
  GradedSubspace dgrad;                   // subspace of A
  std::string method;                     // "envelope", "oracle" or "both"
  std::optional<std::size_t> nilpotency;  // least k with dgrad^k = 0
  std::vector<GradedSubspace> power_chain;  // dgrad^1, dgrad^2, ..., first zero
};

/// dgrad_2(A): envelope method computes A meet J(B(A)); oracle method
/// intersects the annihilators of the maximal dg-left submodule quotients of
/// the regular module. With Both, disagreement is a hard failure.
RadicalReport dg_radical(const DgAlgebra& a, RadicalMethod method,
                         const Caps& caps);

std::optional<std::size_t> radical_nilpotency(const DgAlgebra& a,
                                              const RadicalReport& report);

/// One verified statement instance. A record with hypotheses_hold &&
/// !conclusion_holds is a falsification and fails the run.
struct TheoremVerdict {
  std::string statement_id;
  std::string instance_id;
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
  bool skipped = false;  // hypotheses unverified / out of scale
  std::string evidence;  // JSON payload, empty means none
  bool falsified() const { return hypotheses_hold && !conclusion_holds; }
};

/// dg-Nakayama: M != 0 finitely generated implies dgrad.M != M.
TheoremVerdict nakayama_check(const DgAlgebra& a, const DgModule& m,
                              const Caps& caps);

struct JacobsonSemisimpleReport {
  bool semisimple = false;
  GradedSubspace module_radical;          // J(B).A
  std::vector<GradedSubspace> summands;   // dg-simple summands when semisimple
  bool decomposition_complete = false;
  std::string note;
};
JacobsonSemisimpleReport is_jacobson_semisimple(const DgAlgebra& a,
                                                const Caps& caps);

/// The two readings of categorical dg-semisimplicity are reported side by
/// side: acyclicity alone, and acyclicity together with Jacobson
/// dg-semisimplicity of the regular module. The verdict uses the
/// conjunction, which matches every worked example; split-sample checks
/// guard it.
struct CategoricalSemisimpleReport {
  bool acyclic = false;
  bool jacobson_semisimple = false;
  bool verdict = false;             // acyclic && jacobson_semisimple
  bool acyclicity_only_verdict = false;
  std::size_t split_samples = 0;
  std::size_t split_failures = 0;  // samples that failed to split
  std::string note;
};
CategoricalSemisimpleReport is_categorically_semisimple(const DgAlgebra& a,
                                                        const Caps& caps,
                                                        std::uint64_t seed = 1);

struct IdempotentsReport {
  bool complete = false;  // the list is exhaustive
  std::vector<std::vector<Scalar>> idempotents;  // degree-0 global vectors
  std::string note;       // "deferred" when out of reach over Q
};
/// Homogeneous idempotents are necessarily of degree 0. Exhaustive over F_q;
/// over Q solved when the degree-0 component is commutative or has dimension
/// at most 2, otherwise deferred.
IdempotentsReport homogeneous_idempotents(const GradedAlgebra& c,
                                          const Caps& caps);

struct SemiprimaryReport {
  bool quotient_acyclic = false;
  std::optional<std::vector<Scalar>> quotient_witness;  // ybar, d(ybar) = 1bar
  bool decomposition_ok = false;  // A/dgrad = ker(dbar) + ker(dbar).ybar both ways
  bool quotient_jacobson_semisimple = false;
  bool idempotents_lift = false;
  std::string lift_method;  // "nilpotent-radical" or "enumerated"
  bool verdict = false;
  std::string note;
};
SemiprimaryReport is_dg_semiprimary(const DgAlgebra& a, const Caps& caps);

struct IdealEqualityEvidence {
  GradedSubspace i_cap_ker, j_cap_ker, d_i, d_j;
  bool hypotheses_hold = false;  // I cap ker = J cap ker and d(I) = d(J)
  bool conclusion_holds = false;  // I = J
  bool consistent() const { return !hypotheses_hold || conclusion_holds; }
};
/// Prop: for nested dg-ideals I <= J with equal cycle parts and equal images
/// under d, I = J.
IdealEqualityEvidence ideal_equality_certificate(const DgAlgebra& a,
                                                 const GradedSubspace& i,
                                                 const GradedSubspace& j);

struct TransportResult {
  GradedSubspace transported;       // A . Ibar, a dg-left ideal of A
  std::optional<bool> d_recovers;   // d(A.Ibar) = Ibar; absent when not acyclic
  std::string note;
};
/// For acyclic A and a graded left ideal Ibar of ker(d), computes A.Ibar and
/// verifies d(A.Ibar) = Ibar. Ibar is given in the cycles algebra's basis.
TransportResult cycles_ideal_transport(const DgAlgebra& a,
                                       const CyclesAlgebra& cycles,
                                       const GradedSubspace& ibar);

struct LoewyLayer {
  GradedSubspace power;        // dgrad^i (as subspace of A); power^0 = A
  std::size_t simple_count = 0;  // k_i
  bool annihilated_by_radical = false;
};
struct LoewyReport {
  std::vector<LoewyLayer> layers;
  std::size_t total_simples = 0;  // sum of k_i
  bool complete = false;
  std::string note;
};
LoewyReport loewy_layers(const DgAlgebra& a, const Caps& caps);

/// Theorem suites. Each maps to one statement; instances failing the
/// hypotheses yield skipped verdicts.
std::vector<std::string> suite_names();
std::vector<TheoremVerdict> run_suite(const std::string& suite_id,
                                      const DgAlgebra& a,
                                      const std::string& instance_id,
                                      const Caps& caps, std::uint64_t seed);

/// Fuzz helpers shared by suites and the CLI: deterministic nested dg-ideal
/// pairs of the regular module.
std::pair<GradedSubspace, GradedSubspace> random_nested_dg_ideals(
    const DgModule& regular, Rng& rng);

}  // namespace dgkit
