#include "dgkit/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgkit {

namespace {

bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<Scalar> add_vectors(const std::vector<Scalar>& a,
                                const std::vector<Scalar>& b) {
  std::vector<Scalar> out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

std::vector<Scalar> scale_vector(const std::vector<Scalar>& a, const Scalar& c) {
  std::vector<Scalar> out = a;
  for (auto& v : out) v *= c;
  return out;
}

}  // namespace

GradedAlgebra::GradedAlgebra(FieldSpec field, std::vector<std::string> names,
                             std::vector<int> degrees,
                             std::vector<std::vector<std::vector<Scalar>>> mul,
                             std::vector<Scalar> unit)
    : field_(field), names_(std::move(names)), basis_(std::move(degrees)),
      mul_(std::move(mul)), unit_(std::move(unit)) {
  const std::size_t n = basis_.total_dim();
  if (names_.size() != n || mul_.size() != n || unit_.size() != n)
    throw std::invalid_argument("algebra tensor shapes do not match basis size");
  for (const auto& row : mul_) {
    if (row.size() != n)
      throw std::invalid_argument("multiplication tensor is not n x n");
    for (const auto& coords : row)
      if (coords.size() != n)
        throw std::invalid_argument("product coordinate vector has wrong length");
  }
}

std::vector<Scalar> GradedAlgebra::multiply(const std::vector<Scalar>& a,
                                            const std::vector<Scalar>& b) const {
  const std::size_t n = dim();
  std::vector<Scalar> out(n, Scalar::zero(field_));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar c = a[i] * b[j];
      const auto& prod = mul_[i][j];
      for (std::size_t k = 0; k < n; ++k)
        if (!prod[k].is_zero()) out[k] += c * prod[k];
    }
  }
  return out;
}

std::vector<Scalar> GradedAlgebra::basis_vector(std::size_t i) const {
  std::vector<Scalar> v(dim(), Scalar::zero(field_));
  v[i] = Scalar::one(field_);
  return v;
}

HomogeneousMap GradedAlgebra::left_mult(std::size_t i) const {
  return left_mult_by(basis_.degree_of(i), basis_vector(i));
}

HomogeneousMap GradedAlgebra::left_mult_by(
    int degree, const std::vector<Scalar>& global) const {
  HomogeneousMap op(field_, space(), space(), degree);
  for (const auto& [src_deg, src_dim] : space().dims()) {
    const int dst_deg = src_deg + degree;
    const std::size_t dst_dim = space().dim(dst_deg);
    if (dst_dim == 0) continue;
    Matrix blk(field_, dst_dim, src_dim);
    for (std::size_t col = 0; col < src_dim; ++col) {
      const std::size_t j = basis_.global_index(src_deg, col);
      const auto prod = multiply(global, basis_vector(j));
      for (std::size_t row = 0; row < dst_dim; ++row)
        blk.set(row, col, prod[basis_.global_index(dst_deg, row)]);
    }
    op.set_block(src_deg, std::move(blk));
  }
  return op;
}

HomogeneousMap GradedAlgebra::right_mult(std::size_t i) const {
  const int degree = basis_.degree_of(i);
  HomogeneousMap op(field_, space(), space(), degree);
  for (const auto& [src_deg, src_dim] : space().dims()) {
    const int dst_deg = src_deg + degree;
    const std::size_t dst_dim = space().dim(dst_deg);
    if (dst_dim == 0) continue;
    Matrix blk(field_, dst_dim, src_dim);
    for (std::size_t col = 0; col < src_dim; ++col) {
      const std::size_t j = basis_.global_index(src_deg, col);
      const auto& prod = mul_[j][i];
      for (std::size_t row = 0; row < dst_dim; ++row)
        blk.set(row, col, prod[basis_.global_index(dst_deg, row)]);
    }
    op.set_block(src_deg, std::move(blk));
  }
  return op;
}

std::vector<HomogeneousMap> GradedAlgebra::left_mult_operators() const {
  std::vector<HomogeneousMap> ops;
  ops.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) ops.push_back(left_mult(i));
  return ops;
}

std::vector<HomogeneousMap> GradedAlgebra::right_mult_operators() const {
  std::vector<HomogeneousMap> ops;
  ops.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) ops.push_back(right_mult(i));
  return ops;
}

GradedSubspace GradedAlgebra::subspace_product(const GradedSubspace& u,
                                               const GradedSubspace& v) const {
  std::map<int, Matrix> gens;
  for (const auto& [du, bu] : u.basis())
    for (const auto& [dv, bv] : v.basis()) {
      const int deg = du + dv;
      if (space().dim(deg) == 0) continue;
      for (std::size_t r = 0; r < bu.rows(); ++r)
        for (std::size_t s = 0; s < bv.rows(); ++s) {
          const auto prod =
              multiply(basis_.embed(du, bu.row_vector(r), field_),
                       basis_.embed(dv, bv.row_vector(s), field_));
          if (all_zero(prod)) continue;
          const auto local = basis_.component_of(prod, deg, field_);
          Matrix one = Matrix::from_rows(field_, local.size(), {local});
          auto it = gens.find(deg);
          if (it == gens.end())
            gens[deg] = one;
          else
            it->second = it->second.vstack(one);
        }
    }
  return GradedSubspace::span(field_, space(), gens);
}

ValidationReport validate_algebra(const GradedAlgebra& a) {
  ValidationReport report;
  const std::size_t n = a.dim();
  const auto& basis = a.basis();

  int unit_degree = 0;
  if (!basis.is_homogeneous(a.unit(), &unit_degree))
    report.add("unit is not homogeneous");
  else if (!all_zero(a.unit()) && unit_degree != 0)
    report.add("unit is homogeneous of degree " + std::to_string(unit_degree) +
               ", expected 0");
  if (all_zero(a.unit())) report.add("unit is zero");

  // degree additivity
  for (std::size_t i = 0; i < n && report.ok(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& prod = a.mul_basis(i, j);
      const int want = basis.degree_of(i) + basis.degree_of(j);
      bool bad = false;
      for (std::size_t k = 0; k < n; ++k)
        if (!prod[k].is_zero() && basis.degree_of(k) != want) bad = true;
      if (bad) {
        report.add("degree additivity fails for " + a.names()[i] + " * " +
                   a.names()[j] + ": product not concentrated in degree " +
                   std::to_string(want));
        break;
      }
    }

  // unit laws
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = a.basis_vector(i);
    if (a.multiply(a.unit(), e) != e) {
      report.add("left unit law fails on " + a.names()[i]);
      break;
    }
    if (a.multiply(e, a.unit()) != e) {
      report.add("right unit law fails on " + a.names()[i]);
      break;
    }
  }

  // associativity on all basis triples, first witness only
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto left = a.multiply(a.mul_basis(i, j), a.basis_vector(k));
        const auto right = a.multiply(a.basis_vector(i), a.mul_basis(j, k));
        if (left != right) {
          report.add("associativity fails on (" + a.names()[i] + ", " +
                     a.names()[j] + ", " + a.names()[k] + ")");
          return report;
        }
      }
  }
  return report;
}

DgAlgebra::DgAlgebra(GradedAlgebra algebra, HomogeneousMap differential)
    : algebra_(std::move(algebra)), d_(std::move(differential)) {
  if (d_.source() != algebra_.space() || d_.target() != algebra_.space())
    throw AmbientMismatch("differential is not an endomorphism of the algebra");
}

std::vector<Scalar> DgAlgebra::d_of(const std::vector<Scalar>& global) const {
  const auto comps = basis().split(global);
  std::vector<Scalar> out(dim(), Scalar::zero(field()));
  for (const auto& [deg, local] : comps) {
    const auto img = d_.apply_component(deg, local);
    if (img.empty()) continue;
    const auto emb = basis().embed(deg + d_.shift(), img, field());
    out = add_vectors(out, emb);
  }
  return out;
}

ValidationReport validate_differential(const GradedAlgebra& algebra,
                                       const HomogeneousMap& d) {
  ValidationReport report;
  if (d.shift() != 1) {
    report.add("differential must have degree +1, got " +
               std::to_string(d.shift()));
    return report;
  }

  const std::size_t n = algebra.dim();
  const auto& basis = algebra.basis();
  const auto& field = algebra.field();
  DgAlgebra tmp(algebra, d);

  for (std::size_t i = 0; i < n; ++i) {
    const auto once = tmp.d_of(algebra.basis_vector(i));
    if (!all_zero(tmp.d_of(once))) {
      report.add("d^2 is nonzero on " + algebra.names()[i]);
      break;
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto lhs = tmp.d_of(algebra.mul_basis(i, j));
      auto rhs = algebra.multiply(tmp.d_of(algebra.basis_vector(i)),
                                  algebra.basis_vector(j));
      const int sign = basis.degree_of(i) % 2 == 0 ? 1 : -1;
      auto second = algebra.multiply(algebra.basis_vector(i),
                                     tmp.d_of(algebra.basis_vector(j)));
      if (sign < 0) second = scale_vector(second, -Scalar::one(field));
      rhs = add_vectors(rhs, second);
      if (lhs != rhs) {
        report.add("Leibniz rule fails on (" + algebra.names()[i] + ", " +
                   algebra.names()[j] + ")");
        return report;
      }
    }
  return report;
}

std::vector<Scalar> CyclesAlgebra::embed(
    const std::vector<Scalar>& cycle_coords) const {
  std::vector<Scalar> out(embedding.empty() ? 0 : embedding[0].size(),
                          Scalar::zero(algebra.field()));
  for (std::size_t i = 0; i < cycle_coords.size(); ++i) {
    if (cycle_coords[i].is_zero()) continue;
    out = add_vectors(out, scale_vector(embedding[i], cycle_coords[i]));
  }
  return out;
}

std::vector<Scalar> CyclesAlgebra::restrict(
    const std::vector<Scalar>& ambient) const {
  // solve embedding^T x = ambient; embedding rows are per-degree RREF rows,
  // so pivot coordinates read the coefficients off directly
  std::vector<Scalar> coords(embedding.size(), Scalar::zero(algebra.field()));
  std::vector<Scalar> residual = ambient;
  for (std::size_t i = 0; i < embedding.size(); ++i) {
    std::size_t piv = 0;
    while (piv < embedding[i].size() && embedding[i][piv].is_zero()) ++piv;
    if (piv == embedding[i].size()) continue;
    coords[i] = residual[piv];
    if (!coords[i].is_zero())
      residual = add_vectors(residual, scale_vector(embedding[i], -coords[i]));
  }
  if (!all_zero(residual))
    throw InternalCheckFailure("vector does not lie in ker(d)");
  return coords;
}

CyclesAlgebra cycles_algebra(const DgAlgebra& a) {
  CyclesAlgebra out;
  out.carrier = kernel(a.differential());

  std::vector<int> degrees;
  std::vector<std::string> names;
  for (const auto& [deg, b] : out.carrier.basis())
    for (std::size_t r = 0; r < b.rows(); ++r) {
      degrees.push_back(deg);
      names.push_back("z" + std::to_string(degrees.size() - 1));
      out.embedding.push_back(
          a.basis().embed(deg, b.row_vector(r), a.field()));
    }

  const std::size_t m = degrees.size();
  // pivot coordinate of each cycle basis row, for re-expression
  std::vector<std::vector<std::vector<Scalar>>> mul(
      m, std::vector<std::vector<Scalar>>(m));

  CyclesAlgebra probe;  // temporary to reuse restrict() before algebra is set
  probe.embedding = out.embedding;
  probe.algebra = GradedAlgebra(
      a.field(), names, degrees,
      std::vector<std::vector<std::vector<Scalar>>>(
          m, std::vector<std::vector<Scalar>>(
                 m, std::vector<Scalar>(m, Scalar::zero(a.field())))),
      std::vector<Scalar>(m, Scalar::zero(a.field())));

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto prod =
          a.algebra().multiply(out.embedding[i], out.embedding[j]);
      if (!all_zero(a.d_of(prod)))
        throw InternalCheckFailure("product of cycles is not a cycle");
      mul[i][j] = probe.restrict(prod);
    }

  const auto unit_coords = probe.restrict(a.algebra().unit());
  out.algebra = GradedAlgebra(a.field(), std::move(names), std::move(degrees),
                              std::move(mul), unit_coords);
  return out;
}

std::size_t HomologyReport::total_homology_dim() const {
  std::size_t t = 0;
  for (const auto& [deg, d] : homology_dims) t += d;
  return t;
}

HomologyReport complex_homology(const GradedSpace& space,
                                const HomogeneousMap& delta) {
  HomologyReport report;
  const GradedSubspace cycles = kernel(delta);
  const GradedSubspace boundaries = image(delta);
  if (!contains(cycles, boundaries))
    throw InternalCheckFailure("image(d) not contained in kernel(d)");
  for (const auto& [deg, dim] : space.dims()) {
    const std::size_t zk = cycles.dim(deg);
    const std::size_t bk = boundaries.dim(deg);
    if (zk > 0) report.kernel_dims[deg] = zk;
    if (bk > 0) report.image_dims[deg] = bk;
    if (zk < bk) throw InternalCheckFailure("negative homology dimension");
    if (zk - bk > 0) report.homology_dims[deg] = zk - bk;
  }
  report.acyclic = report.homology_dims.empty();
  return report;
}

HomologyReport homology(const DgAlgebra& a) {
  HomologyReport report = complex_homology(a.space(), a.differential());

  // second criterion: 1 in im(d), i.e. d(y) = 1 solvable with y in degree -1
  const auto unit_local = a.basis().component_of(a.algebra().unit(), 0, a.field());
  std::optional<std::vector<Scalar>> witness;
  if (a.space().dim(-1) > 0 && a.space().dim(0) > 0) {
    const Matrix blk = a.differential().block(-1);
    const auto sol = blk.solve(unit_local);
    if (sol.has_value())
      witness = a.basis().embed(-1, *sol, a.field());
  }
  const bool unit_hit = witness.has_value();
  if (unit_hit != report.acyclic)
    throw InternalCheckFailure(
        "acyclicity criteria disagree: homology says " +
        std::string(report.acyclic ? "acyclic" : "not acyclic") +
        " but 1 in im(d) says " + std::string(unit_hit ? "yes" : "no"));
  report.unit_preimage = witness;
  return report;
}

GradedAlgebra enveloping_extension(const DgAlgebra& a) {
  const std::size_t n = a.dim();
  const std::size_t nb = 2 * n;
  const auto& field = a.field();
  const auto& base = a.algebra();

  std::vector<int> degrees(nb);
  std::vector<std::string> names(nb);
  for (std::size_t i = 0; i < n; ++i) {
    degrees[i] = a.basis().degree_of(i);
    names[i] = base.names()[i];
    degrees[n + i] = a.basis().degree_of(i) + 1;
    names[n + i] = base.names()[i] + "*e";
  }

  auto embed_plain = [&](const std::vector<Scalar>& v) {
    std::vector<Scalar> out(nb, Scalar::zero(field));
    for (std::size_t k = 0; k < n; ++k) out[k] = v[k];
    return out;
  };
  auto embed_eps = [&](const std::vector<Scalar>& v) {
    std::vector<Scalar> out(nb, Scalar::zero(field));
    for (std::size_t k = 0; k < n; ++k) out[n + k] = v[k];
    return out;
  };

  std::vector<std::vector<std::vector<Scalar>>> mul(
      nb, std::vector<std::vector<Scalar>>(nb));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ab = base.mul_basis(i, j);
      const auto a_db = base.multiply(base.basis_vector(i),
                                      a.d_of(base.basis_vector(j)));
      const int sign = a.basis().degree_of(j) % 2 == 0 ? 1 : -1;
      // a_i . a_j
      mul[i][j] = embed_plain(ab);
      // a_i . (a_j e) = (a_i a_j) e
      mul[i][n + j] = embed_eps(ab);
      // (a_i e) . a_j = a_i d(a_j) + (-1)^{|a_j|} (a_i a_j) e
      auto v = embed_plain(a_db);
      for (std::size_t k = 0; k < n; ++k)
        v[n + k] = sign < 0 ? -ab[k] : ab[k];
      mul[n + i][j] = std::move(v);
      // (a_i e) . (a_j e) = (a_i d(a_j)) e
      mul[n + i][n + j] = embed_eps(a_db);
    }

  return GradedAlgebra(field, std::move(names), std::move(degrees),
                       std::move(mul), embed_plain(base.unit()));
}

namespace {

std::vector<Scalar> project_mod_ideal(
    const GradedBasis& ambient_basis, const GradedSubspace& ideal,
    const std::vector<std::pair<int, std::size_t>>& rep_coords,
    const FieldSpec& field, const std::vector<Scalar>& ambient) {
  std::vector<Scalar> out(rep_coords.size(), Scalar::zero(field));
  const auto comps = ambient_basis.split(ambient);
  for (const auto& [deg, local] : comps) {
    const auto reduced = ideal.reduce(deg, local);
    for (std::size_t q = 0; q < rep_coords.size(); ++q)
      if (rep_coords[q].first == deg) out[q] = reduced[rep_coords[q].second];
  }
  return out;
}

}  // namespace

std::vector<Scalar> QuotientAlgebra::project(
    const GradedBasis& ambient_basis, const GradedSubspace& ideal,
    const std::vector<Scalar>& ambient) const {
  return project_mod_ideal(ambient_basis, ideal, rep_coords, quotient.field(),
                           ambient);
}

QuotientAlgebra quotient_algebra(const DgAlgebra& a, const GradedSubspace& ideal) {
  if (!is_two_sided_dg_ideal(a, ideal))
    throw std::invalid_argument("quotient requires a two-sided dg-ideal");
  const auto& field = a.field();
  QuotientAlgebra out;

  // canonical representatives: unit vectors at non-pivot coordinates,
  // ordered by (degree, coordinate)
  for (const auto& [deg, dim] : a.space().dims()) {
    const Matrix b = ideal.basis_at(deg);
    std::vector<bool> is_pivot(dim, false);
    for (std::size_t r = 0; r < b.rows(); ++r) {
      std::size_t piv = 0;
      while (piv < b.cols() && b.at(r, piv).is_zero()) ++piv;
      if (piv < b.cols()) is_pivot[piv] = true;
    }
    for (std::size_t c = 0; c < dim; ++c)
      if (!is_pivot[c]) out.rep_coords.emplace_back(deg, c);
  }

  const std::size_t m = out.rep_coords.size();
  std::vector<int> degrees(m);
  std::vector<std::string> names(m);
  out.section.resize(m);
  for (std::size_t q = 0; q < m; ++q) {
    const auto [deg, col] = out.rep_coords[q];
    degrees[q] = deg;
    const std::size_t global = a.basis().global_index(deg, col);
    names[q] = a.algebra().names()[global] + "~";
    out.section[q] = a.algebra().basis_vector(global);
  }

  auto project = [&](const std::vector<Scalar>& v) {
    return project_mod_ideal(a.basis(), ideal, out.rep_coords, field, v);
  };

  std::vector<std::vector<std::vector<Scalar>>> mul(
      m, std::vector<std::vector<Scalar>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      mul[i][j] =
          project(a.algebra().multiply(out.section[i], out.section[j]));
  const auto unit_q = project(a.algebra().unit());

  GradedAlgebra qalg(field, std::move(names), std::move(degrees),
                     std::move(mul), unit_q);

  // the rep_coords ordering is (degree asc, coordinate asc), which matches
  // the local ordering GradedBasis assigns, so local indices line up
  HomogeneousMap dq(field, qalg.space(), qalg.space(), 1);
  for (const auto& [deg, dim] : qalg.space().dims()) {
    const std::size_t dst = qalg.space().dim(deg + 1);
    if (dst == 0) continue;
    Matrix blk(field, dst, dim);
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t q = qalg.basis().global_index(deg, col);
      const auto img = project(a.d_of(out.section[q]));
      for (std::size_t row = 0; row < dst; ++row)
        blk.set(row, col, img[qalg.basis().global_index(deg + 1, row)]);
    }
    dq.set_block(deg, std::move(blk));
  }

  out.quotient = DgAlgebra(std::move(qalg), std::move(dq));
  return out;
}

bool is_left_dg_ideal(const DgAlgebra& a, const GradedSubspace& u) {
  if (u.ambient() != a.space()) throw AmbientMismatch("ideal ambient mismatch");
  GradedSubspace closed = closure(u, [&] {
    auto ops = a.algebra().left_mult_operators();
    ops.push_back(a.differential());
    return ops;
  }());
  return closed == u;
}

bool is_two_sided_dg_ideal(const DgAlgebra& a, const GradedSubspace& u) {
  if (u.ambient() != a.space()) throw AmbientMismatch("ideal ambient mismatch");
  GradedSubspace closed = closure(u, [&] {
    auto ops = a.algebra().left_mult_operators();
    auto right = a.algebra().right_mult_operators();
    ops.insert(ops.end(), right.begin(), right.end());
    ops.push_back(a.differential());
    return ops;
  }());
  return closed == u;
}

}  // namespace dgkit
