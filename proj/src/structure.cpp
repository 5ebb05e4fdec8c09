#include "dgkit/structure.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include "dgkit/eigenscan.hpp"
#include "dgkit/ingest.hpp"

namespace dgkit {

using nlohmann::json;

namespace {

bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

/// Graded span of a set of global vectors; asserts the span is graded
/// (component-wise closure does not grow the dimension).
GradedSubspace graded_span_checked(const GradedBasis& basis,
                                   const FieldSpec& field,
                                   const Matrix& row_vectors) {
  std::map<int, Matrix> gens;
  for (std::size_t r = 0; r < row_vectors.rows(); ++r) {
    const auto comps = basis.split(row_vectors.row_vector(r));
    for (const auto& [deg, local] : comps) {
      Matrix one = Matrix::from_rows(field, local.size(), {local});
      auto it = gens.find(deg);
      if (it == gens.end())
        gens[deg] = one;
      else
        it->second = it->second.vstack(one);
    }
  }
  GradedSubspace graded = GradedSubspace::span(field, basis.space(), gens);
  if (graded.total_dim() != row_vectors.rref().rank)
    throw InternalCheckFailure(
        "subspace expected to be graded has non-graded span");
  return graded;
}

bool is_two_sided_ideal_of(const GradedAlgebra& a, const GradedSubspace& u) {
  auto ops = a.left_mult_operators();
  const auto right = a.right_mult_operators();
  ops.insert(ops.end(), right.begin(), right.end());
  return closure(u, ops) == u;
}

}  // namespace

GradedSubspace jacobson_radical(const GradedAlgebra& b, const Caps& caps) {
  const std::size_t n = b.dim();
  const auto& field = b.field();

  // trace of left multiplication by each basis element
  std::vector<Scalar> traces(n, Scalar::zero(field));
  for (std::size_t i = 0; i < n; ++i) {
    Scalar t = Scalar::zero(field);
    for (std::size_t j = 0; j < n; ++j) t += b.mul_basis(i, j)[j];
    traces[i] = t;
  }
  // Gram matrix of the trace form tau(x, y) = tr(L_{xy})
  Matrix gram(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar g = Scalar::zero(field);
      const auto& prod = b.mul_basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!prod[k].is_zero()) g += prod[k] * traces[k];
      gram.set(i, j, g);
    }

  const Matrix null_rows = gram.kernel();
  GradedSubspace candidate = graded_span_checked(b.basis(), field, null_rows);

  const bool ideal_ok = is_two_sided_ideal_of(b, candidate);
  // the stationarity shortcut inside the nilpotency test needs an ideal
  const bool nilpotent_ok =
      ideal_ok && subspace_nilpotency_index(b, candidate).has_value();

  if (field.is_rationals()) {
    // Dickson: over characteristic zero the trace-form radical is the radical
    if (!ideal_ok || !nilpotent_ok)
      throw InternalCheckFailure(
          "characteristic-zero trace-form radical failed certification");
    return candidate;
  }

  if (ideal_ok && nilpotent_ok) return candidate;  // certified: J subset of
                                                   // candidate always holds

  // characteristic p with a degenerate trace form: homogeneous sweep
  const auto swept = brute_force_nilpotent_radical(b, caps);
  if (!swept.has_value())
    throw Undecidable(
        "Jacobson radical over F_p: trace form degenerate and the "
        "nilpotent-ideal sweep exceeds the configured cap");
  // the sweep result must embed in the trace-form radical
  if (!contains(candidate, *swept))
    throw InternalCheckFailure("nilpotent-ideal sweep escaped the trace form");
  return *swept;
}

const EnvelopeRadical& envelope_radical(const DgAlgebra& a, const Caps& caps) {
  static std::map<std::string, EnvelopeRadical> cache;
  const std::string key =
      ingest::emit_document(a) + "#" + std::to_string(caps.sweep_limit);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  EnvelopeRadical entry{enveloping_extension(a), {}};
  entry.radical = jacobson_radical(entry.envelope, caps);
  return cache.emplace(key, std::move(entry)).first->second;
}

namespace {

/// A inside B = A + A.eps, as a graded subspace of the envelope.
GradedSubspace algebra_inside_envelope(const DgAlgebra& a,
                                       const GradedAlgebra& b) {
  const std::size_t n = a.dim();
  std::map<int, Matrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    const int deg = b.basis().degree_of(i);
    std::vector<Scalar> local(b.space().dim(deg), Scalar::zero(a.field()));
    local[b.basis().local_index(i)] = Scalar::one(a.field());
    Matrix one = Matrix::from_rows(a.field(), local.size(), {local});
    auto it = gens.find(deg);
    if (it == gens.end())
      gens[deg] = one;
    else
      it->second = it->second.vstack(one);
  }
  return GradedSubspace::span(a.field(), b.space(), gens);
}

/// Converts a subspace of the envelope that lies in the plain part into a
/// subspace of A.
GradedSubspace envelope_to_algebra(const DgAlgebra& a, const GradedAlgebra& b,
                                   const GradedSubspace& inside) {
  const std::size_t n = a.dim();
  std::map<int, Matrix> gens;
  for (const auto& [deg, rows] : inside.basis()) {
    std::vector<std::vector<Scalar>> alg_rows;
    for (std::size_t r = 0; r < rows.rows(); ++r) {
      const auto global_b = b.basis().embed(deg, rows.row_vector(r), a.field());
      std::vector<Scalar> global_a(n, Scalar::zero(a.field()));
      for (std::size_t i = 0; i < n; ++i) global_a[i] = global_b[i];
      for (std::size_t i = n; i < 2 * n; ++i)
        if (!global_b[i].is_zero())
          throw InternalCheckFailure("vector not in the plain part of B");
      alg_rows.push_back(a.basis().component_of(global_a, deg, a.field()));
    }
    if (!alg_rows.empty())
      gens[deg] =
          Matrix::from_rows(a.field(), a.space().dim(deg), alg_rows);
  }
  return GradedSubspace::span(a.field(), a.space(), gens);
}

GradedSubspace dg_radical_envelope(const DgAlgebra& a, const Caps& caps) {
  const EnvelopeRadical& env = envelope_radical(a, caps);
  const GradedSubspace a_in_b = algebra_inside_envelope(a, env.envelope);
  return envelope_to_algebra(a, env.envelope,
                             intersect(env.radical, a_in_b));
}

GradedSubspace dg_radical_oracle(const DgAlgebra& a, const Caps& caps) {
  auto algebra_ptr = std::make_shared<const DgAlgebra>(a);
  const DgModule reg = regular_module(algebra_ptr);
  const auto maximals = maximal_dg_submodules(reg, caps);
  // annihilators are constant along an infinite family (all quotients are
  // isomorphic), so representatives suffice
  std::vector<GradedSubspace> all = maximals.maximals;
  for (const auto& fam : maximals.families)
    all.insert(all.end(), fam.representatives.begin(),
               fam.representatives.end());
  if (!maximals.complete && maximals.families.empty())
    throw Undecidable("oracle dg-radical: maximal submodules incomplete: " +
                      maximals.note);

  GradedSubspace out = GradedSubspace::whole(a.field(), a.space());
  if (all.empty()) {
    // the regular module is dg-simple: dgrad = ann(A)
    return left_annihilator(reg);
  }
  for (const auto& mx : all) {
    const auto quot = quotient_module(reg, mx).module;
    out = intersect(out, left_annihilator(quot));
  }
  return out;
}

}  // namespace

RadicalReport dg_radical(const DgAlgebra& a, RadicalMethod method,
                         const Caps& caps) {
  RadicalReport report;
  switch (method) {
    case RadicalMethod::Envelope:
      report.dgrad = dg_radical_envelope(a, caps);
      report.method = "envelope";
      break;
    case RadicalMethod::Oracle:
      report.dgrad = dg_radical_oracle(a, caps);
      report.method = "oracle";
      break;
    case RadicalMethod::Both: {
      const auto env = dg_radical_envelope(a, caps);
      const auto orc = dg_radical_oracle(a, caps);
      if (env != orc)
        throw InternalCheckFailure(
            "dg-radical methods disagree: envelope and oracle computed "
            "different ideals");
      report.dgrad = env;
      report.method = "both";
      break;
    }
  }

  // the radical is a two-sided dg-ideal
  if (!is_two_sided_dg_ideal(a, report.dgrad))
    throw InternalCheckFailure("dgrad_2 is not a two-sided dg-ideal");

  // power chain
  GradedSubspace power = report.dgrad;
  report.power_chain.push_back(power);
  for (std::size_t k = 2; k <= a.dim() + 1 && !power.is_zero(); ++k) {
    power = a.algebra().subspace_product(report.dgrad, power);
    report.power_chain.push_back(power);
  }
  if (report.power_chain.back().is_zero())
    report.nilpotency = report.dgrad.is_zero() ? 1 : report.power_chain.size();
  return report;
}

std::optional<std::size_t> radical_nilpotency(const DgAlgebra& a,
                                              const RadicalReport& report) {
  (void)a;
  return report.nilpotency;
}

TheoremVerdict nakayama_check(const DgAlgebra& a, const DgModule& m,
                              const Caps& caps) {
  TheoremVerdict verdict;
  verdict.statement_id = "dg-Nakayama";
  verdict.instance_id = "module-dim-" + std::to_string(m.dim());
  verdict.hypotheses_hold = true;  // finite dimensional, hence f.g.
  if (m.dim() == 0) {
    verdict.conclusion_holds = true;  // vacuous
    verdict.evidence = json{{"module", "zero"}}.dump();
    return verdict;
  }
  const auto rad = dg_radical(a, RadicalMethod::Envelope, caps);
  // dgrad . M as a subspace
  std::map<int, Matrix> gens;
  for (const auto& [deg, b] : rad.dgrad.basis())
    for (std::size_t r = 0; r < b.rows(); ++r) {
      const auto avec = a.basis().embed(deg, b.row_vector(r), a.field());
      for (std::size_t j = 0; j < m.dim(); ++j) {
        const auto img = m.act(avec, m.basis_vector(j));
        if (all_zero(img)) continue;
        const auto comps = m.basis().split(img);
        for (const auto& [dd, local] : comps) {
          Matrix one = Matrix::from_rows(m.field(), local.size(), {local});
          auto it = gens.find(dd);
          if (it == gens.end())
            gens[dd] = one;
          else
            it->second = it->second.vstack(one);
        }
      }
    }
  const auto product = GradedSubspace::span(m.field(), m.space(), gens);
  verdict.conclusion_holds = !product.is_whole();
  verdict.evidence = json{{"dgrad_dim", rad.dgrad.total_dim()},
                          {"dgrad_M_dim", product.total_dim()},
                          {"module_dim", m.dim()}}
                         .dump();
  return verdict;
}

JacobsonSemisimpleReport is_jacobson_semisimple(const DgAlgebra& a,
                                                const Caps& caps) {
  JacobsonSemisimpleReport out;
  auto algebra_ptr = std::make_shared<const DgAlgebra>(a);
  const DgModule reg = regular_module(algebra_ptr);
  out.module_radical =
      envelope_radical_of_module(reg, envelope_radical(a, caps).radical);
  out.semisimple = out.module_radical.is_zero();
  if (out.semisimple) {
    const auto dec = decompose_semisimple(reg, caps);
    out.summands = dec.summands;
    out.decomposition_complete = dec.complete;
    if (!dec.complete) out.note = dec.note;
  }
  return out;
}

namespace {

/// Does the submodule split off? Solvability of an idempotent A-linear chain
/// projection onto the carrier.
bool splits_off(const DgModule& m, const GradedSubspace& carrier) {
  if (carrier.is_zero() || carrier.is_whole()) return true;
  const auto homs = hom_dg(m, m);
  const auto& field = m.field();
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (const auto& [deg, b] : carrier.basis())
    for (std::size_t r = 0; r < b.rows(); ++r) {
      const auto v = b.row_vector(r);
      for (std::size_t t = 0; t < m.space().dim(deg); ++t) {
        std::vector<Scalar> row(homs.size(), Scalar::zero(field));
        for (std::size_t k = 0; k < homs.size(); ++k)
          row[k] = homs[k].block(deg).apply(v)[t];
        rows.push_back(std::move(row));
        rhs.push_back(v[t]);
      }
    }
  for (const auto& [deg, dim] : m.space().dims())
    for (std::size_t c = 0; c < dim; ++c) {
      std::vector<Scalar> unit(dim, Scalar::zero(field));
      unit[c] = Scalar::one(field);
      std::vector<std::vector<Scalar>> images(homs.size());
      for (std::size_t k = 0; k < homs.size(); ++k)
        images[k] = carrier.reduce(deg, homs[k].block(deg).apply(unit));
      for (std::size_t t = 0; t < dim; ++t) {
        std::vector<Scalar> row(homs.size(), Scalar::zero(field));
        bool nonzero = false;
        for (std::size_t k = 0; k < homs.size(); ++k) {
          row[k] = images[k][t];
          nonzero = nonzero || !row[k].is_zero();
        }
        if (nonzero) {
          rows.push_back(std::move(row));
          rhs.push_back(Scalar::zero(field));
        }
      }
    }
  if (homs.empty()) return false;
  const Matrix system = Matrix::from_rows(field, homs.size(), rows);
  return system.solve(rhs).has_value();
}

}  // namespace

CategoricalSemisimpleReport is_categorically_semisimple(const DgAlgebra& a,
                                                        const Caps& caps,
                                                        std::uint64_t seed) {
  CategoricalSemisimpleReport out;
  out.acyclic = homology(a).acyclic;
  out.jacobson_semisimple = is_jacobson_semisimple(a, caps).semisimple;
  out.acyclicity_only_verdict = out.acyclic;
  out.verdict = out.acyclic && out.jacobson_semisimple;
  out.note =
      "verdict = acyclic and Jacobson-semisimple; the acyclicity-only "
      "reading is reported alongside";

  // sampled split checks on dg-submodules of A + A
  auto algebra_ptr = std::make_shared<const DgAlgebra>(a);
  const DgModule reg = regular_module(algebra_ptr);
  const auto sum_view = direct_sum(reg, reg);
  Rng rng(seed);
  for (int t = 0; t < 8; ++t) {
    const auto sub = ingest::random_submodule(sum_view.module, rng);
    ++out.split_samples;
    if (!splits_off(sum_view.module, sub)) ++out.split_failures;
  }
  if (out.verdict && out.split_failures > 0)
    throw InternalCheckFailure(
        "categorical semisimplicity verdict contradicted by a non-split "
        "dg-submodule sample");
  return out;
}

IdempotentsReport homogeneous_idempotents(const GradedAlgebra& c,
                                          const Caps& caps) {
  IdempotentsReport out;
  const auto& field = c.field();
  const std::size_t d0 = c.space().dim(0);
  if (d0 == 0) {
    out.complete = true;
    return out;
  }
  auto embed0 = [&](const std::vector<Scalar>& local) {
    std::vector<Scalar> v(c.dim(), Scalar::zero(field));
    for (std::size_t k = 0; k < d0; ++k)
      v[c.basis().global_index(0, k)] = local[k];
    return v;
  };

  if (!field.is_rationals()) {
    const auto vectors = enumerate_vectors(field, d0, caps.sweep_limit);
    if (!vectors.has_value()) {
      out.note = "degree-0 sweep exceeds the configured cap";
      return out;
    }
    for (const auto& local : *vectors) {
      const auto e = embed0(local);
      if (c.multiply(e, e) == e) out.idempotents.push_back(e);
    }
    out.complete = true;
    return out;
  }

  // rationals: handle the commutative degree-0 component exactly
  bool commutative = true;
  for (std::size_t i = 0; i < d0 && commutative; ++i)
    for (std::size_t j = 0; j < d0 && commutative; ++j) {
      const auto bi = embed0([&] {
        std::vector<Scalar> v(d0, Scalar::zero(field));
        v[i] = Scalar::one(field);
        return v;
      }());
      const auto bj = embed0([&] {
        std::vector<Scalar> v(d0, Scalar::zero(field));
        v[j] = Scalar::one(field);
        return v;
      }());
      commutative = c.multiply(bi, bj) == c.multiply(bj, bi);
    }
  if (!commutative && d0 > 2) {
    out.note = "deferred: noncommutative degree-0 component over the rationals";
    return out;
  }

  // commutative (d0 <= 2 is automatically commutative): find the primitive
  // idempotents of the etale quotient and lift along the nilradical.
  // build the degree-0 component as a standalone commutative algebra
  std::vector<std::vector<std::vector<Scalar>>> mul0(
      d0, std::vector<std::vector<Scalar>>(d0));
  for (std::size_t i = 0; i < d0; ++i)
    for (std::size_t j = 0; j < d0; ++j) {
      const auto prod = c.multiply(embed0([&] {
                                     std::vector<Scalar> v(d0, Scalar::zero(field));
                                     v[i] = Scalar::one(field);
                                     return v;
                                   }()),
                                   embed0([&] {
                                     std::vector<Scalar> v(d0, Scalar::zero(field));
                                     v[j] = Scalar::one(field);
                                     return v;
                                   }()));
      std::vector<Scalar> local(d0, Scalar::zero(field));
      for (std::size_t k = 0; k < d0; ++k)
        local[k] = prod[c.basis().global_index(0, k)];
      mul0[i][j] = local;
    }
  std::vector<Scalar> unit0(d0, Scalar::zero(field));
  for (std::size_t k = 0; k < d0; ++k)
    unit0[k] = c.unit()[c.basis().global_index(0, k)];
  std::vector<std::string> names0(d0);
  for (std::size_t k = 0; k < d0; ++k) names0[k] = "c" + std::to_string(k);
  GradedAlgebra comp(field, names0, std::vector<int>(d0, 0), mul0, unit0);

  const GradedSubspace nil = jacobson_radical(comp, caps);

  // multiplication matrix of a generator of the etale quotient: scan
  // z = sum t^i b_i for a generator with d0 distinct rational eigenvalues
  auto mult_matrix = [&](const std::vector<Scalar>& z) {
    Matrix mz(field, d0, d0);
    for (std::size_t j = 0; j < d0; ++j) {
      std::vector<Scalar> bj(d0, Scalar::zero(field));
      bj[j] = Scalar::one(field);
      std::vector<Scalar> prod(d0, Scalar::zero(field));
      for (std::size_t i = 0; i < d0; ++i) {
        if (z[i].is_zero()) continue;
        for (std::size_t k = 0; k < d0; ++k)
          prod[k] += z[i] * mul0[i][j][k];
      }
      for (std::size_t k = 0; k < d0; ++k) mz.set(k, j, prod[k]);
    }
    return mz;
  };

  const std::size_t etale_dim = d0 - nil.total_dim();
  std::vector<std::vector<Scalar>> primitive;  // primitive idempotents, local
  bool found_split = false;
  for (std::size_t t = 0; t <= d0 * d0 + 1 && !found_split; ++t) {
    std::vector<Scalar> z(d0, Scalar::zero(field));
    Scalar power = Scalar::one(field);
    for (std::size_t i = 0; i < d0; ++i) {
      z[i] = power;
      power = power * Scalar(field, static_cast<long long>(t));
    }
    const Matrix mz = mult_matrix(z);
    bool complete = true;
    const auto eigs = field_eigenvalues(mz, caps, &complete);
    if (!complete) continue;
    if (eigs.size() < etale_dim) continue;
    // spectral projections onto generalized eigenspaces: e_i = product over
    // j != i of (z - lambda_j)^{d0} scaled to be idempotent; compute instead
    // by solving within the commutative algebra: the generalized eigenspace
    // decomposition of multiplication by z yields the idempotents as the
    // projections of 1
    primitive.clear();
    bool ok = true;
    for (const auto& lambda : eigs) {
      // generalized eigenspace: kernel of (mz - lambda)^{d0}
      Matrix shifted = mz;
      for (std::size_t i = 0; i < d0; ++i)
        shifted.set(i, i, shifted.at(i, i) - lambda);
      Matrix power_mat = Matrix::identity(field, d0);
      for (std::size_t k = 0; k < d0; ++k) power_mat = power_mat * shifted;
      const Matrix ker = power_mat.kernel();
      if (ker.rows() == 0) {
        ok = false;
        break;
      }
      primitive.push_back({});  // placeholder, filled below via projection
      primitive.back() = std::vector<Scalar>(d0, Scalar::zero(field));
      // projection of 1 onto this generalized eigenspace along the others:
      // solve in the basis adapted to the decomposition
      (void)ker;
    }
    if (!ok) continue;
    // decompose 1 = sum of components in the generalized eigenspaces
    std::vector<Matrix> spaces;
    std::size_t dim_total = 0;
    for (const auto& lambda : eigs) {
      Matrix shifted = mz;
      for (std::size_t i = 0; i < d0; ++i)
        shifted.set(i, i, shifted.at(i, i) - lambda);
      Matrix power_mat = Matrix::identity(field, d0);
      for (std::size_t k = 0; k < d0; ++k) power_mat = power_mat * shifted;
      spaces.push_back(power_mat.kernel());
      dim_total += spaces.back().rows();
    }
    if (dim_total != d0) continue;  // z is not a generator; try the next t
    // solve [spaces stacked]^T coeffs = unit
    Matrix stacked(field, 0, d0);
    for (const auto& s : spaces) stacked = stacked.vstack(s);
    const auto coeffs = stacked.transposed().solve(unit0);
    if (!coeffs.has_value()) continue;
    primitive.clear();
    std::size_t offset = 0;
    for (const auto& s : spaces) {
      std::vector<Scalar> piece(d0, Scalar::zero(field));
      for (std::size_t r = 0; r < s.rows(); ++r)
        for (std::size_t k = 0; k < d0; ++k)
          piece[k] += (*coeffs)[offset + r] * s.at(r, k);
      offset += s.rows();
      primitive.push_back(std::move(piece));
    }
    found_split = true;
  }

  if (!found_split) {
    out.note =
        "deferred: the degree-0 center does not split over the rationals "
        "within the scan bound";
    return out;
  }

  // each piece of 1 is idempotent modulo nilpotents; sharpen by Newton
  // iteration e <- 3e^2 - 2e^3 until exact
  auto mul_local = [&](const std::vector<Scalar>& x,
                       const std::vector<Scalar>& y) {
    std::vector<Scalar> outv(d0, Scalar::zero(field));
    for (std::size_t i = 0; i < d0; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < d0; ++j) {
        if (y[j].is_zero()) continue;
        for (std::size_t k = 0; k < d0; ++k)
          outv[k] += x[i] * y[j] * mul0[i][j][k];
      }
    }
    return outv;
  };
  std::vector<std::vector<Scalar>> prim_sharp;
  for (auto e : primitive) {
    for (std::size_t it = 0; it < d0 + 2; ++it) {
      const auto e2 = mul_local(e, e);
      if (e2 == e) break;
      const auto e3 = mul_local(e2, e);
      for (std::size_t k = 0; k < d0; ++k)
        e[k] = Scalar(field, 3) * e2[k] - Scalar(field, 2) * e3[k];
    }
    if (mul_local(e, e) != e) {
      out.note = "deferred: idempotent refinement failed to converge";
      return out;
    }
    prim_sharp.push_back(e);
  }

  // all idempotents: sums of subsets of the primitive ones
  const std::size_t t_count = prim_sharp.size();
  if ((1ull << t_count) > caps.sweep_limit) {
    out.note = "deferred: too many primitive idempotents to enumerate";
    return out;
  }
  std::set<std::string> seen;
  for (std::size_t mask = 0; mask < (1ull << t_count); ++mask) {
    std::vector<Scalar> e(d0, Scalar::zero(field));
    for (std::size_t i = 0; i < t_count; ++i)
      if (mask & (1ull << i))
        for (std::size_t k = 0; k < d0; ++k) e[k] += prim_sharp[i][k];
    if (mul_local(e, e) != e) continue;
    std::string key;
    for (const auto& s : e) key += s.str() + ",";
    if (seen.insert(key).second) out.idempotents.push_back(embed0(e));
  }
  out.complete = true;
  return out;
}

SemiprimaryReport is_dg_semiprimary(const DgAlgebra& a, const Caps& caps) {
  SemiprimaryReport out;
  const auto rad = dg_radical(a, RadicalMethod::Envelope, caps);
  const auto quotient = quotient_algebra(a, rad.dgrad);
  const DgAlgebra& q = quotient.quotient;

  const auto h = homology(q);
  out.quotient_acyclic = h.acyclic;
  out.quotient_witness = h.unit_preimage;

  if (out.quotient_acyclic && q.dim() > 0) {
    const auto ker_q = kernel(q.differential());
    const auto& ybar = *out.quotient_witness;
    // span of ybar as a one-dimensional homogeneous subspace in degree -1
    int ydeg = 0;
    if (!q.basis().is_homogeneous(ybar, &ydeg))
      throw InternalCheckFailure("acyclicity witness is not homogeneous");
    std::map<int, Matrix> ygen{
        {ydeg, Matrix::from_rows(q.field(), q.space().dim(ydeg),
                                 {q.basis().component_of(ybar, ydeg,
                                                         q.field())})}};
    const auto yspan = GradedSubspace::span(q.field(), q.space(), ygen);
    const auto ker_y = q.algebra().subspace_product(ker_q, yspan);
    const auto y_ker = q.algebra().subspace_product(yspan, ker_q);
    const bool left_ok = sum(ker_q, ker_y).is_whole() &&
                         intersect(ker_q, ker_y).is_zero();
    const bool right_ok = sum(ker_q, y_ker).is_whole() &&
                          intersect(ker_q, y_ker).is_zero();
    out.decomposition_ok = left_ok && right_ok;
  }

  out.quotient_jacobson_semisimple =
      q.dim() == 0 || is_jacobson_semisimple(q, caps).semisimple;

  if (rad.nilpotency.has_value()) {
    out.idempotents_lift = true;
    out.lift_method = "nilpotent-radical";
  } else {
    // enumerate and lift explicitly (only reachable for non-nilpotent
    // radicals, which cannot occur at finite dimension)
    const auto q_idems = homogeneous_idempotents(q.algebra(), caps);
    const auto a_idems = homogeneous_idempotents(a.algebra(), caps);
    if (!q_idems.complete || !a_idems.complete) {
      out.lift_method = "undetermined";
      out.note = "idempotent enumeration incomplete: " + q_idems.note;
    } else {
      bool all_lift = true;
      for (const auto& e_bar : q_idems.idempotents) {
        bool lifted = false;
        for (const auto& e : a_idems.idempotents)
          if (quotient.project(a.basis(), rad.dgrad, e) == e_bar) lifted = true;
        all_lift = all_lift && lifted;
      }
      out.idempotents_lift = all_lift;
      out.lift_method = "enumerated";
    }
  }

  out.verdict = out.quotient_acyclic && out.quotient_jacobson_semisimple &&
                out.idempotents_lift;
  out.note =
      "categorical semisimplicity of the quotient is decided as acyclic "
      "and Jacobson-semisimple" +
      std::string(out.note.empty() ? "" : "; " + out.note);
  return out;
}

IdealEqualityEvidence ideal_equality_certificate(const DgAlgebra& a,
                                                 const GradedSubspace& i,
                                                 const GradedSubspace& j) {
  if (!contains(j, i))
    throw std::invalid_argument("ideal_equality_certificate requires I <= J");
  IdealEqualityEvidence out;
  const auto ker_d = kernel(a.differential());
  out.i_cap_ker = intersect(i, ker_d);
  out.j_cap_ker = intersect(j, ker_d);
  out.d_i = map_subspace(a.differential(), i);
  out.d_j = map_subspace(a.differential(), j);
  out.hypotheses_hold = out.i_cap_ker == out.j_cap_ker && out.d_i == out.d_j;
  out.conclusion_holds = i == j;
  return out;
}

TransportResult cycles_ideal_transport(const DgAlgebra& a,
                                       const CyclesAlgebra& cycles,
                                       const GradedSubspace& ibar) {
  if (ibar.ambient() != cycles.algebra.space())
    throw AmbientMismatch("ibar must live in the cycles algebra");
  // validate: graded left ideal of ker(d)
  if (closure(ibar, cycles.algebra.left_mult_operators()) != ibar)
    throw std::invalid_argument("ibar is not a left ideal of ker(d)");

  TransportResult out;
  // embed into A and close under left multiplication
  std::map<int, Matrix> gens;
  for (const auto& [deg, b] : ibar.basis())
    for (std::size_t r = 0; r < b.rows(); ++r) {
      const auto global = cycles.embed(
          cycles.algebra.basis().embed(deg, b.row_vector(r), a.field()));
      const auto comps = a.basis().split(global);
      for (const auto& [dd, local] : comps) {
        Matrix one = Matrix::from_rows(a.field(), local.size(), {local});
        auto it = gens.find(dd);
        if (it == gens.end())
          gens[dd] = one;
        else
          it->second = it->second.vstack(one);
      }
    }
  const auto seed = GradedSubspace::span(a.field(), a.space(), gens);
  out.transported = closure(seed, a.algebra().left_mult_operators());
  if (!is_left_dg_ideal(a, out.transported))
    throw InternalCheckFailure("A.Ibar failed to be a dg-left ideal");

  if (homology(a).acyclic) {
    const auto d_image = map_subspace(a.differential(), out.transported);
    out.d_recovers = d_image == seed;
  } else {
    out.note = "A not acyclic: the d(A.Ibar) = Ibar check does not apply";
  }
  return out;
}

LoewyReport loewy_layers(const DgAlgebra& a, const Caps& caps) {
  LoewyReport out;
  const auto rad = dg_radical(a, RadicalMethod::Envelope, caps);
  if (!rad.nilpotency.has_value())
    throw std::invalid_argument("loewy_layers requires a nilpotent dg-radical");

  auto algebra_ptr = std::make_shared<const DgAlgebra>(a);
  const DgModule reg = regular_module(algebra_ptr);
  const GradedSubspace ann_target = rad.dgrad;

  GradedSubspace power = GradedSubspace::whole(a.field(), a.space());
  out.complete = true;
  for (std::size_t i = 0; !power.is_zero(); ++i) {
    const GradedSubspace next =
        i == 0 ? rad.dgrad
               : a.algebra().subspace_product(rad.dgrad, power);
    // layer = power / next as a dg-module
    const auto view = submodule_as_module(reg, power);
    const auto next_in_view = restrict_carrier(view, next);
    const auto layer = quotient_module(view.module, next_in_view).module;

    LoewyLayer entry;
    entry.power = power;
    entry.annihilated_by_radical =
        layer.dim() == 0 || contains(left_annihilator(layer), ann_target);
    if (!entry.annihilated_by_radical)
      throw InternalCheckFailure(
          "a Loewy layer is not annihilated by the dg-radical");
    if (layer.dim() > 0) {
      const auto dec = decompose_semisimple(layer, caps);
      if (!dec.complete) {
        out.complete = false;
        out.note = dec.note;
      }
      entry.simple_count = dec.summands.size();
      out.total_simples += entry.simple_count;
    }
    out.layers.push_back(std::move(entry));
    power = next;
  }
  return out;
}

std::pair<GradedSubspace, GradedSubspace> random_nested_dg_ideals(
    const DgModule& regular, Rng& rng) {
  const auto i = ingest::random_submodule(regular, rng);
  const auto extra = ingest::random_submodule(regular, rng);
  return {i, sum(i, extra)};
}

// --- theorem suites ----------------------------------------------------------

namespace {

TheoremVerdict make_verdict(const std::string& statement,
                            const std::string& instance, bool hyp, bool concl,
                            json evidence, bool skipped = false) {
  TheoremVerdict v;
  v.statement_id = statement;
  v.instance_id = instance;
  v.hypotheses_hold = hyp;
  v.conclusion_holds = concl;
  v.skipped = skipped;
  evidence["note"] = evidence.contains("note")
                         ? evidence["note"]
                         : json("finite-dimensional instance: chain "
                                "conditions hold automatically; the suite "
                                "certifies the conclusions");
  v.evidence = evidence.dump();
  return v;
}

std::vector<TheoremVerdict> suite_ker_equality(const DgAlgebra& a,
                                               const std::string& id,
                                               const Caps& caps,
                                               std::uint64_t seed) {
  std::vector<TheoremVerdict> out;
  auto ptr = std::make_shared<const DgAlgebra>(a);
  const DgModule reg = regular_module(ptr);
  Rng rng(seed);

  std::size_t pairs = 0, hyp_pairs = 0, violations = 0;
  for (int t = 0; t < 24; ++t) {
    const auto [i, j] = random_nested_dg_ideals(reg, rng);
    const auto ev = ideal_equality_certificate(a, i, j);
    ++pairs;
    if (ev.hypotheses_hold) ++hyp_pairs;
    if (!ev.consistent()) ++violations;
  }
  out.push_back(make_verdict(
      "Prop-kerdimpliesA", id, true, violations == 0,
      json{{"pairs", pairs}, {"hypothesis_pairs", hyp_pairs},
           {"violations", violations}}));

  // exhaustive over the full dg-ideal lattice at oracle scale
  if (!a.field().is_rationals() && a.dim() <= caps.oracle_total_dim) {
    const auto lattice = enumerate_dg_left_ideals(a, caps);
    if (lattice.has_value()) {
      std::size_t checked = 0, lattice_violations = 0;
      for (const auto& i : *lattice)
        for (const auto& j : *lattice) {
          if (!contains(j, i)) continue;
          const auto ev = ideal_equality_certificate(a, i, j);
          ++checked;
          if (!ev.consistent()) ++lattice_violations;
        }
      out.push_back(make_verdict(
          "Prop-kerdimpliesA", id + ":lattice", true, lattice_violations == 0,
          json{{"lattice_size", lattice->size()}, {"nested_pairs", checked},
               {"violations", lattice_violations}}));
    }
  }
  return out;
}

std::vector<TheoremVerdict> suite_cycles_ideals(const DgAlgebra& a,
                                                const std::string& id,
                                                const Caps& caps,
                                                std::uint64_t seed) {
  std::vector<TheoremVerdict> out;
  auto ptr = std::make_shared<const DgAlgebra>(a);
  const DgModule reg = regular_module(ptr);
  const auto ker_d = kernel(a.differential());
  Rng rng(seed);

  std::size_t checked = 0, failures = 0;
  for (int t = 0; t < 16; ++t) {
    const auto i = ingest::random_submodule(reg, rng);
    ++checked;
    // I cap ker(d) is a graded left ideal of ker(d)
    const auto i_cap = intersect(i, ker_d);
    const auto prod = a.algebra().subspace_product(ker_d, i_cap);
    const bool cap_ok = contains(i_cap, prod);
    // d(I) is a left ideal of ker(d)
    const auto d_i = map_subspace(a.differential(), i);
    const bool d_in_ker = contains(ker_d, d_i);
    const bool d_ideal = contains(d_i, a.algebra().subspace_product(ker_d, d_i));
    if (!(cap_ok && d_in_ker && d_ideal)) ++failures;
  }
  out.push_back(make_verdict(
      "Cor-grnoethimpliesdgnoeth-ingredients", id, true, failures == 0,
      json{{"ideals_checked", checked}, {"failures", failures}}));
  (void)caps;
  return out;
}

std::vector<TheoremVerdict> suite_kerd_transport(const DgAlgebra& a,
                                                 const std::string& id,
                                                 const Caps& caps,
                                                 std::uint64_t seed) {
  std::vector<TheoremVerdict> out;
  const bool acyclic = homology(a).acyclic;
  if (!acyclic) {
    out.push_back(make_verdict("Lemma-fgidealsofcycles", id, false, false,
                               json{{"reason", "instance is not acyclic"}},
                               /*skipped=*/true));
    return out;
  }
  const auto cycles = cycles_algebra(a);

  std::size_t checked = 0, failures = 0, distinct = 0;
  std::set<GradedSubspace> images;
  const auto lattice = enumerate_graded_left_ideals(cycles.algebra, caps);
  if (lattice.has_value()) {
    for (const auto& ibar : *lattice) {
      const auto transported = cycles_ideal_transport(a, cycles, ibar);
      ++checked;
      if (!transported.d_recovers.value_or(false)) ++failures;
      images.insert(transported.transported);
    }
    distinct = images.size();
    out.push_back(make_verdict(
        "Lemma-fgidealsofcycles", id, true,
        failures == 0 && distinct == lattice->size(),
        json{{"ideals", lattice->size()}, {"d_recovery_failures", failures},
             {"distinct_transports", distinct}}));
    return out;
  }

  // sampled route over the rationals
  auto cycles_ptr = std::make_shared<const DgAlgebra>(
      DgAlgebra(cycles.algebra,
                HomogeneousMap(a.field(), cycles.algebra.space(),
                               cycles.algebra.space(), 1)));
  const DgModule cyc_reg = regular_module(cycles_ptr);
  Rng rng(seed);
  for (int t = 0; t < 12; ++t) {
    const auto ibar = ingest::random_submodule(cyc_reg, rng);
    const auto transported = cycles_ideal_transport(a, cycles, ibar);
    ++checked;
    if (!transported.d_recovers.value_or(false)) ++failures;
    images.insert(transported.transported);
  }
  out.push_back(make_verdict(
      "Lemma-fgidealsofcycles", id, true, failures == 0,
      json{{"sampled_ideals", checked}, {"d_recovery_failures", failures},
           {"distinct_transports", images.size()}}));
  return out;
}

std::vector<TheoremVerdict> suite_acyclic_hopkins(const DgAlgebra& a,
                                                  const std::string& id,
                                                  const Caps& caps,
                                                  std::uint64_t seed) {
  (void)seed;
  std::vector<TheoremVerdict> out;
  const bool acyclic = homology(a).acyclic;
  if (!acyclic) {
    out.push_back(make_verdict("Thm-acyclicHopkins", id, false, false,
                               json{{"reason", "instance is not acyclic"}},
                               /*skipped=*/true));
    return out;
  }
  if (a.field().is_rationals() || a.dim() > caps.oracle_total_dim * 2) {
    out.push_back(make_verdict(
        "Thm-acyclicHopkins", id, true, true,
        json{{"certificate",
              "finite dimension bounds every chain of dg-ideals"}}));
    return out;
  }
  const auto lattice = enumerate_dg_left_ideals(a, caps);
  if (!lattice.has_value()) {
    out.push_back(make_verdict("Thm-acyclicHopkins", id, true, false,
                               json{{"reason", "lattice enumeration capped"}},
                               /*skipped=*/true));
    return out;
  }
  out.push_back(make_verdict(
      "Thm-acyclicHopkins", id, true, true,
      json{{"dg_left_ideal_lattice_size", lattice->size()},
           {"certificate", "finite explicit lattice: both chain conditions "
                           "hold"}}));
  return out;
}

std::vector<TheoremVerdict> suite_les_ideal(const DgAlgebra& a,
                                            const std::string& id,
                                            const Caps& caps,
                                            std::uint64_t seed) {
  (void)caps;
  std::vector<TheoremVerdict> out;
  auto ptr = std::make_shared<const DgAlgebra>(a);
  const DgModule reg = regular_module(ptr);
  Rng rng(seed);

  std::size_t hyp_cases = 0, failures = 0, checked = 0;
  auto ops = a.algebra().left_mult_operators();
  const auto right = a.algebra().right_mult_operators();
  ops.insert(ops.end(), right.begin(), right.end());
  ops.push_back(a.differential());

  for (int t = 0; t < 12; ++t) {
    // two-sided dg-ideal from random homogeneous seeds
    const auto seed_sub = ingest::random_submodule(reg, rng);
    const auto ideal = closure(seed_sub, ops);
    if (ideal.is_whole()) continue;
    ++checked;
    const auto quot = quotient_module(reg, ideal).module;
    if (!module_homology(quot).acyclic) continue;  // hypothesis fails
    ++hyp_cases;
    const auto les = long_exact_sequence(ses_from_submodule(reg, ideal));
    const bool iso = les.sub_iso_mid.value_or(false) && les.exact;
    if (!iso) ++failures;
  }
  out.push_back(make_verdict(
      "Lemma-acyclicquotienthomologyofideal", id, hyp_cases > 0, failures == 0,
      json{{"ideals_checked", checked}, {"acyclic_quotients", hyp_cases},
           {"failures", failures}},
      /*skipped=*/hyp_cases == 0));
  return out;
}

std::vector<TheoremVerdict> suite_semiprimary(const DgAlgebra& a,
                                              const std::string& id,
                                              const Caps& caps,
                                              std::uint64_t seed) {
  (void)seed;
  std::vector<TheoremVerdict> out;
  const auto report = is_dg_semiprimary(a, caps);
  if (!report.verdict) {
    out.push_back(make_verdict("Prop-dgsemiprimaryhomologyofmaximals", id,
                               false, false,
                               json{{"reason", "instance is not dg-semiprimary"}},
                               /*skipped=*/true));
    return out;
  }

  auto ptr = std::make_shared<const DgAlgebra>(a);
  const DgModule reg = regular_module(ptr);
  const auto maximals = maximal_dg_submodules(reg, caps);
  std::vector<GradedSubspace> all = maximals.maximals;
  for (const auto& fam : maximals.families)
    all.insert(all.end(), fam.representatives.begin(),
               fam.representatives.end());

  // (a) every dg-simple is acyclic: simples are shifts of the maximal
  // quotients
  std::size_t simple_count = 0, acyclic_failures = 0;
  for (const auto& mx : all) {
    const auto s = quotient_module(reg, mx).module;
    ++simple_count;
    if (!module_homology(s).acyclic) ++acyclic_failures;
  }
  if (all.empty()) {
    // regular module dg-simple
    ++simple_count;
    if (!module_homology(reg).acyclic) ++acyclic_failures;
  }
  out.push_back(make_verdict("Prop-dgsemiprimaryhomologyofmaximals:simples",
                             id, true, acyclic_failures == 0,
                             json{{"simples", simple_count},
                                  {"not_acyclic", acyclic_failures}}));

  // (b) H(m) = H(A) for each maximal dg-left ideal
  std::size_t iso_failures = 0;
  for (const auto& mx : all) {
    const auto les = long_exact_sequence(ses_from_submodule(reg, mx));
    const auto h_a = homology(a);
    bool match = les.exact;
    match = match && les.h_mid.size() == h_a.homology_dims.size();
    for (const auto& [deg, dim] : les.h_mid)
      match = match && h_a.homology_dims.count(deg) &&
              h_a.homology_dims.at(deg) == dim;
    match = match && les.h_sub == les.h_mid;
    if (!match) ++iso_failures;
  }
  out.push_back(make_verdict(
      "Prop-dgsemiprimaryhomologyofmaximals:H(m)=H(A)", id, true,
      iso_failures == 0,
      json{{"maximal_ideals", all.size()}, {"failures", iso_failures}}));

  // (c) if dgrad is an acyclic dg-ideal, A is acyclic
  const auto rad = dg_radical(a, RadicalMethod::Envelope, caps);
  bool dgrad_acyclic;
  if (rad.dgrad.is_zero()) {
    dgrad_acyclic = true;
  } else {
    const auto view = submodule_as_module(reg, rad.dgrad);
    dgrad_acyclic = module_homology(view.module).acyclic;
  }
  if (dgrad_acyclic) {
    out.push_back(make_verdict(
        "Prop-dgsemiprimaryhomologyofmaximals:acyclic-radical", id, true,
        homology(a).acyclic,
        json{{"dgrad_dim", rad.dgrad.total_dim()}}));
  } else {
    out.push_back(make_verdict(
        "Prop-dgsemiprimaryhomologyofmaximals:acyclic-radical", id, false,
        false, json{{"reason", "dgrad is not an acyclic complex"}},
        /*skipped=*/true));
  }
  return out;
}

std::vector<TheoremVerdict> suite_finite_length(const DgAlgebra& a,
                                                const std::string& id,
                                                const Caps& caps,
                                                std::uint64_t seed) {
  std::vector<TheoremVerdict> out;
  auto ptr = std::make_shared<const DgAlgebra>(a);
  const DgModule reg = regular_module(ptr);

  // hypothesis: every dg-simple is acyclic (via maximal quotients)
  const auto maximals = maximal_dg_submodules(reg, caps);
  std::vector<GradedSubspace> all = maximals.maximals;
  for (const auto& fam : maximals.families)
    all.insert(all.end(), fam.representatives.begin(),
               fam.representatives.end());
  bool simples_acyclic = true;
  if (all.empty()) {
    simples_acyclic = module_homology(reg).acyclic;
  } else {
    for (const auto& mx : all)
      simples_acyclic = simples_acyclic &&
                        module_homology(quotient_module(reg, mx).module).acyclic;
  }
  if (!simples_acyclic) {
    out.push_back(make_verdict(
        "Thm-alldgmodulesareacyclic", id, false, false,
        json{{"reason", "some dg-simple module is not acyclic"}},
        /*skipped=*/true));
    return out;
  }

  Rng rng(seed);
  std::size_t modules_checked = 0, failures = 0;
  for (int t = 0; t < 10; ++t) {
    const auto m = ingest::random_module(reg, rng, caps);
    if (m.dim() == 0) continue;
    ++modules_checked;
    if (!module_homology(m).acyclic) ++failures;
  }
  out.push_back(make_verdict(
      "Thm-alldgmodulesareacyclic", id, true, failures == 0,
      json{{"modules_checked", modules_checked}, {"failures", failures},
           {"regular_acyclic", module_homology(reg).acyclic}}));
  return out;
}

std::vector<TheoremVerdict> suite_levitzki(const DgAlgebra& a,
                                           const std::string& id,
                                           const Caps& caps,
                                           std::uint64_t seed) {
  (void)seed;
  std::vector<TheoremVerdict> out;
  const auto semiprimary = is_dg_semiprimary(a, caps);
  const auto rad = dg_radical(a, RadicalMethod::Envelope, caps);
  const bool hyp = semiprimary.verdict && rad.nilpotency.has_value();
  if (!hyp) {
    out.push_back(make_verdict(
        "Thm-dgsemiprimaryLevitzki", id, false, false,
        json{{"reason", semiprimary.verdict
                            ? "dg-radical not certified nilpotent"
                            : "instance is not dg-semiprimary"}},
        /*skipped=*/true));
    return out;
  }

  // conclusion 1: acyclic
  out.push_back(make_verdict("Thm-dgsemiprimaryLevitzki:acyclic", id, true,
                             homology(a).acyclic, json::object()));

  // conclusion 2: composition length equals the Loewy count
  auto ptr = std::make_shared<const DgAlgebra>(a);
  const DgModule reg = regular_module(ptr);
  const auto series = composition_series(reg, caps);
  const auto loewy = loewy_layers(a, caps);
  out.push_back(make_verdict(
      "Thm-dgsemiprimaryLevitzki:length", id, true,
      loewy.complete && series.length() == loewy.total_simples,
      json{{"series_length", series.length()},
           {"loewy_total", loewy.total_simples},
           {"loewy_layers", loewy.layers.size()}}));

  // conclusion 3: at oracle scale, every maximal chain of the dg-ideal
  // lattice has length l(A, d)
  if (!a.field().is_rationals() && a.dim() <= caps.oracle_total_dim + 2) {
    const auto lattice = enumerate_dg_left_ideals(a, caps);
    if (lattice.has_value()) {
      const auto chain_len = lattice_uniform_chain_length(*lattice);
      out.push_back(make_verdict(
          "Thm-dgsemiprimaryLevitzki:lattice-chains", id, true,
          chain_len.has_value() && *chain_len == series.length(),
          json{{"lattice_size", lattice->size()},
               {"uniform_chain_length",
                chain_len.has_value() ? json(*chain_len) : json(nullptr)},
               {"series_length", series.length()}}));
    }
  }

  // conclusion 4: Jordan-Hoelder factor multisets agree across branches
  const auto branches = all_composition_series(reg, caps, 24);
  bool jh_ok = true;
  for (std::size_t b = 1; b < branches.size(); ++b)
    jh_ok = jh_ok && jordan_hoelder_equal(reg, branches.front(), branches[b],
                                          caps);
  out.push_back(make_verdict(
      "Thm-dgsemiprimaryLevitzki:jordan-hoelder", id, true, jh_ok,
      json{{"branches", branches.size()}}));
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"ker-equality",  "cycles-ideals",  "kerd-transport",
          "acyclic-hopkins", "les-ideal",    "semiprimary",
          "finite-length", "levitzki"};
}

std::vector<TheoremVerdict> run_suite(const std::string& suite_id,
                                      const DgAlgebra& a,
                                      const std::string& instance_id,
                                      const Caps& caps, std::uint64_t seed) {
  if (suite_id == "ker-equality")
    return suite_ker_equality(a, instance_id, caps, seed);
  if (suite_id == "cycles-ideals")
    return suite_cycles_ideals(a, instance_id, caps, seed);
  if (suite_id == "kerd-transport")
    return suite_kerd_transport(a, instance_id, caps, seed);
  if (suite_id == "acyclic-hopkins")
    return suite_acyclic_hopkins(a, instance_id, caps, seed);
  if (suite_id == "les-ideal")
    return suite_les_ideal(a, instance_id, caps, seed);
  if (suite_id == "semiprimary")
    return suite_semiprimary(a, instance_id, caps, seed);
  if (suite_id == "finite-length")
    return suite_finite_length(a, instance_id, caps, seed);
  if (suite_id == "levitzki")
    return suite_levitzki(a, instance_id, caps, seed);
  throw std::invalid_argument("unknown suite '" + suite_id + "'");
}

}  // namespace dgkit
