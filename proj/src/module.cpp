#include "dgkit/module.hpp"

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

/// Coordinates of a parent-space vector in the carrier's row basis
/// (rows are per-degree RREF, so pivots read coefficients off directly).
std::vector<Scalar> carrier_coords(const GradedSubspace& carrier,
                                   const GradedBasis& parent_basis,
                                   const std::vector<Scalar>& global,
                                   const FieldSpec& field) {
  std::vector<Scalar> coords;
  coords.reserve(carrier.total_dim());
  auto comps = parent_basis.split(global);
  for (const auto& [deg, b] : carrier.basis()) {
    std::vector<Scalar> local(parent_basis.space().dim(deg),
                              Scalar::zero(field));
    auto it = comps.find(deg);
    if (it != comps.end()) local = it->second;
    for (std::size_t r = 0; r < b.rows(); ++r) {
      std::size_t piv = 0;
      while (piv < b.cols() && b.at(r, piv).is_zero()) ++piv;
      Scalar c = piv < b.cols() ? local[piv] : Scalar::zero(field);
      coords.push_back(c);
      if (!c.is_zero())
        for (std::size_t j = 0; j < b.cols(); ++j) local[j] -= c * b.at(r, j);
    }
    if (!all_zero(local))
      throw InternalCheckFailure("vector does not lie in the carrier");
    comps.erase(deg);
  }
  for (const auto& [deg, local] : comps)
    if (!all_zero(local))
      throw InternalCheckFailure("vector does not lie in the carrier");
  return coords;
}

}  // namespace

DgModule::DgModule(std::shared_ptr<const DgAlgebra> over,
                   std::vector<std::string> names, std::vector<int> degrees,
                   std::vector<std::vector<std::vector<Scalar>>> action,
                   HomogeneousMap delta)
    : over_(std::move(over)), names_(std::move(names)),
      basis_(std::move(degrees)), action_(std::move(action)),
      delta_(std::move(delta)) {
  const std::size_t n = over_->dim();
  const std::size_t m = basis_.total_dim();
  if (names_.size() != m)
    throw std::invalid_argument("module names/degrees size mismatch");
  if (action_.size() != n)
    throw std::invalid_argument("action tensor first index must be algebra basis");
  for (const auto& row : action_) {
    if (row.size() != m)
      throw std::invalid_argument("action tensor second index mismatch");
    for (const auto& coords : row)
      if (coords.size() != m)
        throw std::invalid_argument("action coordinate vector length mismatch");
  }
  if (delta_.source() != basis_.space() || delta_.target() != basis_.space())
    throw AmbientMismatch("delta is not an endomorphism of the module space");
}

std::vector<Scalar> DgModule::act(const std::vector<Scalar>& algebra_vec,
                                  const std::vector<Scalar>& module_vec) const {
  const std::size_t n = over_->dim();
  const std::size_t m = dim();
  std::vector<Scalar> out(m, Scalar::zero(field()));
  for (std::size_t i = 0; i < n; ++i) {
    if (algebra_vec[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (module_vec[j].is_zero()) continue;
      const Scalar c = algebra_vec[i] * module_vec[j];
      const auto& img = action_[i][j];
      for (std::size_t k = 0; k < m; ++k)
        if (!img[k].is_zero()) out[k] += c * img[k];
    }
  }
  return out;
}

std::vector<Scalar> DgModule::delta_of(const std::vector<Scalar>& v) const {
  const auto comps = basis_.split(v);
  std::vector<Scalar> out(dim(), Scalar::zero(field()));
  for (const auto& [deg, local] : comps) {
    const auto img = delta_.apply_component(deg, local);
    if (img.empty()) continue;
    out = add_vectors(out, basis_.embed(deg + 1, img, field()));
  }
  return out;
}

std::vector<Scalar> DgModule::basis_vector(std::size_t j) const {
  std::vector<Scalar> v(dim(), Scalar::zero(field()));
  v[j] = Scalar::one(field());
  return v;
}

HomogeneousMap DgModule::action_map(std::size_t i) const {
  const int adeg = over_->basis().degree_of(i);
  HomogeneousMap op(field(), space(), space(), adeg);
  for (const auto& [src_deg, src_dim] : space().dims()) {
    const int dst_deg = src_deg + adeg;
    const std::size_t dst_dim = space().dim(dst_deg);
    if (dst_dim == 0) continue;
    Matrix blk(field(), dst_dim, src_dim);
    for (std::size_t col = 0; col < src_dim; ++col) {
      const auto& img = action_[i][basis_.global_index(src_deg, col)];
      for (std::size_t row = 0; row < dst_dim; ++row)
        blk.set(row, col, img[basis_.global_index(dst_deg, row)]);
    }
    op.set_block(src_deg, std::move(blk));
  }
  return op;
}

std::vector<HomogeneousMap> DgModule::action_operators() const {
  std::vector<HomogeneousMap> ops;
  ops.reserve(over_->dim());
  for (std::size_t i = 0; i < over_->dim(); ++i) ops.push_back(action_map(i));
  return ops;
}

std::vector<HomogeneousMap> DgModule::closure_operators() const {
  auto ops = action_operators();
  ops.push_back(delta_);
  return ops;
}

std::vector<HomogeneousMap> DgModule::envelope_operators() const {
  auto ops = action_operators();
  for (std::size_t i = 0; i < over_->dim(); ++i)
    ops.push_back(action_map(i).compose_after(delta_));
  return ops;
}

ValidationReport validate_module(const DgModule& m) {
  ValidationReport report;
  const auto& a = m.over();
  const std::size_t n = a.dim();
  const std::size_t md = m.dim();

  // degree additivity of the action
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < md; ++j) {
      const auto& img = m.action_basis(i, j);
      const int want = a.basis().degree_of(i) + m.basis().degree_of(j);
      for (std::size_t k = 0; k < md; ++k)
        if (!img[k].is_zero() && m.basis().degree_of(k) != want) {
          report.add("action degree additivity fails on (" +
                     a.algebra().names()[i] + ", " + m.names()[j] + ")");
          goto additivity_done;
        }
    }
additivity_done:

  // unit acts as identity
  for (std::size_t j = 0; j < md; ++j)
    if (m.act(a.algebra().unit(), m.basis_vector(j)) != m.basis_vector(j)) {
      report.add("unit does not act as identity on " + m.names()[j]);
      break;
    }

  // associativity with the algebra
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < md; ++k) {
        const auto lhs = m.act(a.algebra().mul_basis(i, j), m.basis_vector(k));
        const auto rhs = m.act(a.algebra().basis_vector(i),
                               m.act(a.algebra().basis_vector(j),
                                     m.basis_vector(k)));
        if (lhs != rhs) {
          report.add("module associativity fails on (" +
                     a.algebra().names()[i] + ", " + a.algebra().names()[j] +
                     ", " + m.names()[k] + ")");
          goto assoc_done;
        }
      }
assoc_done:

  if (m.delta().shift() != 1)
    report.add("module differential must have degree +1, got " +
               std::to_string(m.delta().shift()));
  else {
    for (std::size_t j = 0; j < md; ++j)
      if (!all_zero(m.delta_of(m.delta_of(m.basis_vector(j))))) {
        report.add("delta^2 is nonzero on " + m.names()[j]);
        break;
      }
    // module Leibniz rule on basis pairs
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < md; ++j) {
        const auto lhs = m.delta_of(m.action_basis(i, j));
        auto rhs = m.act(m.over().d_of(a.algebra().basis_vector(i)),
                         m.basis_vector(j));
        auto second = m.act(a.algebra().basis_vector(i),
                            m.delta_of(m.basis_vector(j)));
        if (a.basis().degree_of(i) % 2 != 0)
          second = scale_vector(second, -Scalar::one(m.field()));
        rhs = add_vectors(rhs, second);
        if (lhs != rhs) {
          report.add("module Leibniz rule fails on (" +
                     a.algebra().names()[i] + ", " + m.names()[j] + ")");
          return report;
        }
      }
  }
  return report;
}

DgModule regular_module(std::shared_ptr<const DgAlgebra> a) {
  const std::size_t n = a->dim();
  std::vector<std::vector<std::vector<Scalar>>> action(
      n, std::vector<std::vector<Scalar>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      action[i][j] = a->algebra().mul_basis(i, j);
  std::vector<int> degrees(a->basis().degrees());
  std::vector<std::string> names(a->algebra().names());
  HomogeneousMap delta = a->differential();
  return DgModule(a, std::move(names), std::move(degrees), std::move(action),
                  std::move(delta));
}

GradedSubspace submodule_closure(const DgModule& m,
                                 const std::vector<std::vector<Scalar>>& gens) {
  std::vector<std::pair<int, std::vector<Scalar>>> local;
  for (const auto& g : gens) {
    int deg = 0;
    if (!m.basis().is_homogeneous(g, &deg))
      throw std::invalid_argument(
          "submodule generators must be homogeneous "
          "(graded submodules are spanned by homogeneous elements)");
    if (all_zero(g)) continue;
    local.emplace_back(deg, m.basis().component_of(g, deg, m.field()));
  }
  return submodule_closure_local(m, local);
}

GradedSubspace submodule_closure_local(
    const DgModule& m,
    const std::vector<std::pair<int, std::vector<Scalar>>>& gens) {
  std::map<int, Matrix> seed;
  for (const auto& [deg, local] : gens) {
    Matrix one = Matrix::from_rows(m.field(), local.size(), {local});
    auto it = seed.find(deg);
    if (it == seed.end())
      seed[deg] = one;
    else
      it->second = it->second.vstack(one);
  }
  return closure(GradedSubspace::span(m.field(), m.space(), seed),
                 m.closure_operators());
}

bool is_dg_submodule(const DgModule& m, const GradedSubspace& carrier) {
  if (carrier.ambient() != m.space())
    throw AmbientMismatch("carrier ambient mismatch");
  return closure(carrier, m.closure_operators()) == carrier;
}

SubmoduleView submodule_as_module(const DgModule& m,
                                  const GradedSubspace& carrier) {
  if (!is_dg_submodule(m, carrier))
    throw std::invalid_argument("carrier is not a dg-submodule");
  SubmoduleView out;
  std::vector<int> degrees;
  std::vector<std::string> names;
  for (const auto& [deg, b] : carrier.basis())
    for (std::size_t r = 0; r < b.rows(); ++r) {
      degrees.push_back(deg);
      names.push_back("s" + std::to_string(degrees.size() - 1));
      out.embedding.push_back(
          m.basis().embed(deg, b.row_vector(r), m.field()));
    }

  const std::size_t k = degrees.size();
  const std::size_t n = m.over().dim();
  std::vector<std::vector<std::vector<Scalar>>> action(
      n, std::vector<std::vector<Scalar>>(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j)
      action[i][j] = carrier_coords(
          carrier, m.basis(),
          m.act(m.over().algebra().basis_vector(i), out.embedding[j]),
          m.field());

  GradedBasis sub_basis(degrees);
  HomogeneousMap delta(m.field(), sub_basis.space(), sub_basis.space(), 1);
  for (const auto& [deg, dim] : sub_basis.space().dims()) {
    const std::size_t dst = sub_basis.space().dim(deg + 1);
    if (dst == 0) continue;
    Matrix blk(m.field(), dst, dim);
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t j = sub_basis.global_index(deg, col);
      const auto img =
          carrier_coords(carrier, m.basis(), m.delta_of(out.embedding[j]),
                         m.field());
      for (std::size_t row = 0; row < dst; ++row)
        blk.set(row, col, img[sub_basis.global_index(deg + 1, row)]);
    }
    delta.set_block(deg, std::move(blk));
  }

  out.inclusion = HomogeneousMap(m.field(), sub_basis.space(), m.space(), 0);
  for (const auto& [deg, dim] : sub_basis.space().dims()) {
    Matrix blk(m.field(), m.space().dim(deg), dim);
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t j = sub_basis.global_index(deg, col);
      const auto local = m.basis().component_of(out.embedding[j], deg, m.field());
      for (std::size_t row = 0; row < local.size(); ++row)
        blk.set(row, col, local[row]);
    }
    out.inclusion.set_block(deg, std::move(blk));
  }

  out.module = DgModule(m.over_ptr(), std::move(names), std::move(degrees),
                        std::move(action), std::move(delta));
  return out;
}

GradedSubspace restrict_carrier(const SubmoduleView& view,
                                const GradedSubspace& sub_in_parent) {
  const auto& field = view.module.field();
  std::map<int, Matrix> gens;
  for (const auto& [deg, b] : sub_in_parent.basis()) {
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < b.rows(); ++r) {
      // inclusion block maps view-local to parent-local coordinates
      const Matrix inc = view.inclusion.block(deg);
      const auto x = inc.solve(b.row_vector(r));
      if (!x.has_value())
        throw InternalCheckFailure("subspace does not lie inside the carrier");
      rows.push_back(*x);
    }
    if (!rows.empty())
      gens[deg] = Matrix::from_rows(field, view.module.space().dim(deg), rows);
  }
  return GradedSubspace::span(field, view.module.space(), gens);
}

GradedSubspace push_carrier(const DgModule& parent, const SubmoduleView& view,
                            const GradedSubspace& carrier_in_view) {
  const auto& field = parent.field();
  std::map<int, Matrix> gens;
  for (const auto& [deg, b] : carrier_in_view.basis()) {
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < b.rows(); ++r) {
      const Matrix inc = view.inclusion.block(deg);
      rows.push_back(inc.apply(b.row_vector(r)));
    }
    if (!rows.empty())
      gens[deg] = Matrix::from_rows(field, parent.space().dim(deg), rows);
  }
  return GradedSubspace::span(field, parent.space(), gens);
}

QuotientModuleView quotient_module(const DgModule& m,
                                   const GradedSubspace& carrier) {
  if (!is_dg_submodule(m, carrier))
    throw std::invalid_argument("carrier is not a dg-submodule");
  QuotientModuleView out;

  std::vector<std::pair<int, std::size_t>> rep_coords;
  for (const auto& [deg, dim] : m.space().dims()) {
    const Matrix b = carrier.basis_at(deg);
    std::vector<bool> is_pivot(dim, false);
    for (std::size_t r = 0; r < b.rows(); ++r) {
      std::size_t piv = 0;
      while (piv < b.cols() && b.at(r, piv).is_zero()) ++piv;
      if (piv < b.cols()) is_pivot[piv] = true;
    }
    for (std::size_t c = 0; c < dim; ++c)
      if (!is_pivot[c]) rep_coords.emplace_back(deg, c);
  }

  const std::size_t k = rep_coords.size();
  std::vector<int> degrees(k);
  std::vector<std::string> names(k);
  out.section.resize(k);
  for (std::size_t q = 0; q < k; ++q) {
    const auto [deg, col] = rep_coords[q];
    degrees[q] = deg;
    const std::size_t global = m.basis().global_index(deg, col);
    names[q] = m.names()[global] + "~";
    out.section[q] = m.basis_vector(global);
  }

  auto project = [&](const std::vector<Scalar>& v) {
    std::vector<Scalar> coords(k, Scalar::zero(m.field()));
    const auto comps = m.basis().split(v);
    for (const auto& [deg, local] : comps) {
      const auto reduced = carrier.reduce(deg, local);
      for (std::size_t q = 0; q < k; ++q)
        if (rep_coords[q].first == deg) coords[q] = reduced[rep_coords[q].second];
    }
    return coords;
  };

  const std::size_t n = m.over().dim();
  std::vector<std::vector<std::vector<Scalar>>> action(
      n, std::vector<std::vector<Scalar>>(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j)
      action[i][j] = project(
          m.act(m.over().algebra().basis_vector(i), out.section[j]));

  GradedBasis qbasis(degrees);
  HomogeneousMap delta(m.field(), qbasis.space(), qbasis.space(), 1);
  for (const auto& [deg, dim] : qbasis.space().dims()) {
    const std::size_t dst = qbasis.space().dim(deg + 1);
    if (dst == 0) continue;
    Matrix blk(m.field(), dst, dim);
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t q = qbasis.global_index(deg, col);
      const auto img = project(m.delta_of(out.section[q]));
      for (std::size_t row = 0; row < dst; ++row)
        blk.set(row, col, img[qbasis.global_index(deg + 1, row)]);
    }
    delta.set_block(deg, std::move(blk));
  }

  out.projection = HomogeneousMap(m.field(), m.space(), qbasis.space(), 0);
  for (const auto& [deg, dim] : m.space().dims()) {
    const std::size_t dst = qbasis.space().dim(deg);
    if (dst == 0) continue;
    Matrix blk(m.field(), dst, dim);
    for (std::size_t col = 0; col < dim; ++col) {
      const auto img = project(m.basis_vector(m.basis().global_index(deg, col)));
      for (std::size_t row = 0; row < dst; ++row)
        blk.set(row, col, img[qbasis.global_index(deg, row)]);
    }
    out.projection.set_block(deg, std::move(blk));
  }

  out.module = DgModule(m.over_ptr(), std::move(names), std::move(degrees),
                        std::move(action), std::move(delta));
  return out;
}

DirectSumView direct_sum(const DgModule& a, const DgModule& b) {
  if (a.over_ptr() != b.over_ptr() &&
      !(a.over().algebra().names() == b.over().algebra().names() &&
        a.field() == b.field()))
    throw AmbientMismatch("direct sum over different algebras");
  DirectSumView out;
  const std::size_t ka = a.dim(), kb = b.dim(), k = ka + kb;
  std::vector<int> degrees;
  std::vector<std::string> names;
  degrees.reserve(k);
  for (std::size_t j = 0; j < ka; ++j) {
    degrees.push_back(a.basis().degree_of(j));
    names.push_back(a.names()[j] + "+");
  }
  for (std::size_t j = 0; j < kb; ++j) {
    degrees.push_back(b.basis().degree_of(j));
    names.push_back("+" + b.names()[j]);
  }

  auto embed_a = [&](const std::vector<Scalar>& v) {
    std::vector<Scalar> out_v(k, Scalar::zero(a.field()));
    for (std::size_t j = 0; j < ka; ++j) out_v[j] = v[j];
    return out_v;
  };
  auto embed_b = [&](const std::vector<Scalar>& v) {
    std::vector<Scalar> out_v(k, Scalar::zero(a.field()));
    for (std::size_t j = 0; j < kb; ++j) out_v[ka + j] = v[j];
    return out_v;
  };

  const std::size_t n = a.over().dim();
  std::vector<std::vector<std::vector<Scalar>>> action(
      n, std::vector<std::vector<Scalar>>(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < ka; ++j)
      action[i][j] = embed_a(a.action_basis(i, j));
    for (std::size_t j = 0; j < kb; ++j)
      action[i][ka + j] = embed_b(b.action_basis(i, j));
  }

  GradedBasis basis(degrees);
  HomogeneousMap delta(a.field(), basis.space(), basis.space(), 1);
  for (const auto& [deg, dim] : basis.space().dims()) {
    const std::size_t dst = basis.space().dim(deg + 1);
    if (dst == 0) continue;
    Matrix blk(a.field(), dst, dim);
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t j = basis.global_index(deg, col);
      const std::vector<Scalar> img =
          j < ka ? embed_a(a.delta_of(a.basis_vector(j)))
                 : embed_b(b.delta_of(b.basis_vector(j - ka)));
      for (std::size_t row = 0; row < dst; ++row)
        blk.set(row, col, img[basis.global_index(deg + 1, row)]);
    }
    delta.set_block(deg, std::move(blk));
  }

  DgModule sum_module(a.over_ptr(), std::move(names), std::move(degrees),
                      std::move(action), std::move(delta));

  out.left_injection =
      HomogeneousMap(a.field(), a.space(), sum_module.space(), 0);
  for (const auto& [deg, dim] : a.space().dims()) {
    Matrix blk(a.field(), sum_module.space().dim(deg), dim);
    for (std::size_t col = 0; col < dim; ++col) {
      const auto img = embed_a(a.basis_vector(a.basis().global_index(deg, col)));
      for (std::size_t row = 0; row < blk.rows(); ++row)
        blk.set(row, col, img[sum_module.basis().global_index(deg, row)]);
    }
    out.left_injection.set_block(deg, std::move(blk));
  }
  out.right_injection =
      HomogeneousMap(a.field(), b.space(), sum_module.space(), 0);
  for (const auto& [deg, dim] : b.space().dims()) {
    Matrix blk(a.field(), sum_module.space().dim(deg), dim);
    for (std::size_t col = 0; col < dim; ++col) {
      const auto img = embed_b(b.basis_vector(b.basis().global_index(deg, col)));
      for (std::size_t row = 0; row < blk.rows(); ++row)
        blk.set(row, col, img[sum_module.basis().global_index(deg, row)]);
    }
    out.right_injection.set_block(deg, std::move(blk));
  }

  out.module = std::move(sum_module);
  return out;
}

DgModule shift_module(const DgModule& m, int n) {
  const ShiftConvention conv = shift_convention(n);
  std::vector<int> degrees(m.dim());
  std::vector<std::string> names(m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    degrees[j] = m.basis().degree_of(j) - n;
    names[j] = m.names()[j] + "[" + std::to_string(n) + "]";
  }

  const std::size_t na = m.over().dim();
  std::vector<std::vector<std::vector<Scalar>>> action(
      na, std::vector<std::vector<Scalar>>(m.dim()));
  for (std::size_t i = 0; i < na; ++i) {
    const int sign = conv.action_sign(m.over().basis().degree_of(i));
    for (std::size_t j = 0; j < m.dim(); ++j) {
      action[i][j] = m.action_basis(i, j);
      if (sign < 0)
        action[i][j] = scale_vector(action[i][j], -Scalar::one(m.field()));
    }
  }

  GradedBasis basis(degrees);
  // the basis index order is unchanged, so blocks carry over with new labels
  HomogeneousMap delta(m.field(), basis.space(), basis.space(), 1);
  for (const auto& [old_deg, blk] : m.delta().blocks()) {
    Matrix b = conv.delta_sign() < 0 ? blk.scaled(-Scalar::one(m.field())) : blk;
    delta.set_block(old_deg - n, std::move(b));
  }
  return DgModule(m.over_ptr(), std::move(names), std::move(degrees),
                  std::move(action), std::move(delta));
}

HomologyReport module_homology(const DgModule& m) {
  return complex_homology(m.space(), m.delta());
}

std::vector<HomogeneousMap> hom_dg(const DgModule& m, const DgModule& n) {
  const auto& field = m.field();
  // variable layout: for each source degree (ascending), the block
  // N_deg x M_deg in row-major order
  struct Slot {
    int deg;
    std::size_t rows, cols, offset;
  };
  std::vector<Slot> slots;
  std::size_t total_vars = 0;
  for (const auto& [deg, mdim] : m.space().dims()) {
    const std::size_t ndim = n.space().dim(deg);
    if (ndim == 0) continue;
    slots.push_back({deg, ndim, mdim, total_vars});
    total_vars += ndim * mdim;
  }
  auto slot_of = [&](int deg) -> const Slot* {
    for (const auto& s : slots)
      if (s.deg == deg) return &s;
    return nullptr;
  };

  if (total_vars == 0) return {};

  std::vector<std::vector<Scalar>> rows;
  auto new_row = [&]() {
    return std::vector<Scalar>(total_vars, Scalar::zero(field));
  };

  // chain condition: phi_{deg+1} . deltaM_deg = deltaN_deg . phi_deg
  for (const auto& [deg, mdim] : m.space().dims()) {
    const std::size_t n_next = n.space().dim(deg + 1);
    if (n_next == 0 && n.space().dim(deg) == 0) continue;
    const Matrix dM = m.delta().block(deg);   // M_{deg+1} x M_deg
    const Matrix dN = n.delta().block(deg);   // N_{deg+1} x N_deg
    const Slot* s_next = slot_of(deg + 1);
    const Slot* s_here = slot_of(deg);
    for (std::size_t r = 0; r < n_next; ++r)
      for (std::size_t c = 0; c < mdim; ++c) {
        auto row = new_row();
        bool nonzero = false;
        if (s_next != nullptr)
          for (std::size_t t = 0; t < m.space().dim(deg + 1); ++t) {
            const Scalar& v = dM.at(t, c);
            if (v.is_zero()) continue;
            row[s_next->offset + r * s_next->cols + t] += v;
            nonzero = true;
          }
        if (s_here != nullptr)
          for (std::size_t t = 0; t < n.space().dim(deg); ++t) {
            const Scalar& v = dN.at(r, t);
            if (v.is_zero()) continue;
            row[s_here->offset + t * s_here->cols + c] -= v;
            nonzero = true;
          }
        if (nonzero) rows.push_back(std::move(row));
      }
  }

  // A-linearity: phi(a_i . x) = a_i . phi(x)
  for (std::size_t i = 0; i < m.over().dim(); ++i) {
    const int adeg = m.over().basis().degree_of(i);
    const HomogeneousMap actM = m.action_map(i);
    const HomogeneousMap actN = n.action_map(i);
    for (const auto& [deg, mdim] : m.space().dims()) {
      const std::size_t n_out = n.space().dim(deg + adeg);
      if (n_out == 0 && n.space().dim(deg) == 0) continue;
      const Matrix aM = actM.block(deg);
      const Matrix aN = actN.block(deg);
      const Slot* s_out = slot_of(deg + adeg);
      const Slot* s_here = slot_of(deg);
      for (std::size_t r = 0; r < n_out; ++r)
        for (std::size_t c = 0; c < mdim; ++c) {
          auto row = new_row();
          bool nonzero = false;
          if (s_out != nullptr)
            for (std::size_t t = 0; t < m.space().dim(deg + adeg); ++t) {
              const Scalar& v = aM.at(t, c);
              if (v.is_zero()) continue;
              row[s_out->offset + r * s_out->cols + t] += v;
              nonzero = true;
            }
          if (s_here != nullptr)
            for (std::size_t t = 0; t < n.space().dim(deg); ++t) {
              const Scalar& v = aN.at(r, t);
              if (v.is_zero()) continue;
              row[s_here->offset + t * s_here->cols + c] -= v;
              nonzero = true;
            }
          if (nonzero) rows.push_back(std::move(row));
        }
    }
  }

  Matrix system = rows.empty()
                      ? Matrix(field, 0, total_vars)
                      : Matrix::from_rows(field, total_vars, rows);
  Matrix null_rows = system.kernel();

  std::vector<HomogeneousMap> basis_maps;
  for (std::size_t r = 0; r < null_rows.rows(); ++r) {
    HomogeneousMap phi(field, m.space(), n.space(), 0);
    for (const auto& s : slots) {
      Matrix blk(field, s.rows, s.cols);
      bool nonzero = false;
      for (std::size_t i = 0; i < s.rows; ++i)
        for (std::size_t j = 0; j < s.cols; ++j) {
          const Scalar& v = null_rows.at(r, s.offset + i * s.cols + j);
          if (!v.is_zero()) nonzero = true;
          blk.set(i, j, v);
        }
      if (nonzero) phi.set_block(s.deg, std::move(blk));
    }
    basis_maps.push_back(std::move(phi));
  }
  return basis_maps;
}

namespace {

bool map_is_invertible(const HomogeneousMap& phi, const GradedSpace& src,
                       const GradedSpace& dst) {
  if (src.dims() != dst.dims()) return false;
  for (const auto& [deg, dim] : src.dims()) {
    if (!phi.block(deg).is_invertible()) return false;
  }
  return true;
}

HomogeneousMap combine(const std::vector<HomogeneousMap>& basis,
                       const std::vector<Scalar>& coeffs,
                       const FieldSpec& field, const GradedSpace& src,
                       const GradedSpace& dst) {
  HomogeneousMap out(field, src, dst, 0);
  for (const auto& [deg, dim] : src.dims()) {
    if (dst.dim(deg) == 0) continue;
    Matrix blk(field, dst.dim(deg), dim);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      blk = blk + basis[k].block(deg).scaled(coeffs[k]);
    }
    out.set_block(deg, std::move(blk));
  }
  return out;
}

}  // namespace

IsoStatus is_isomorphic(const DgModule& m, const DgModule& n, const Caps& caps,
                        bool both_simple) {
  if (m.space().dims() != n.space().dims()) return IsoStatus::NotIsomorphic;
  if (m.dim() == 0) return IsoStatus::Isomorphic;
  const auto homs = hom_dg(m, n);
  if (homs.empty()) return IsoStatus::NotIsomorphic;

  if (both_simple) {
    // a nonzero homomorphism between dg-simples is an isomorphism
    for (const auto& phi : homs)
      if (!phi.is_zero()) {
        if (!map_is_invertible(phi, m.space(), n.space()))
          throw InternalCheckFailure(
              "nonzero hom between simples is not invertible");
        return IsoStatus::Isomorphic;
      }
    return IsoStatus::NotIsomorphic;
  }

  for (const auto& phi : homs)
    if (map_is_invertible(phi, m.space(), n.space())) return IsoStatus::Isomorphic;

  const std::size_t h = homs.size();
  if (!m.field().is_rationals()) {
    // exhaustive over F_q when feasible
    const std::uint64_t q = m.field().p;
    double count = 1;
    for (std::size_t i = 0; i < h; ++i) count *= static_cast<double>(q);
    if (count <= static_cast<double>(caps.max_hom_enum)) {
      std::vector<std::size_t> idx(h, 0);
      while (true) {
        std::vector<Scalar> coeffs;
        coeffs.reserve(h);
        for (std::size_t i = 0; i < h; ++i)
          coeffs.push_back(Scalar(m.field(), static_cast<long long>(idx[i])));
        const auto phi = combine(homs, coeffs, m.field(), m.space(), n.space());
        if (map_is_invertible(phi, m.space(), n.space()))
          return IsoStatus::Isomorphic;
        std::size_t pos = 0;
        while (pos < h && ++idx[pos] == q) idx[pos++] = 0;
        if (pos == h) break;
      }
      return IsoStatus::NotIsomorphic;
    }
  }

  // deterministic small grid over the hom space
  const std::size_t g = caps.hom_grid;
  std::vector<std::size_t> idx(h, 0);
  std::size_t tried = 0;
  while (tried < caps.max_hom_enum) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(h);
    for (std::size_t i = 0; i < h; ++i)
      coeffs.push_back(Scalar(m.field(), static_cast<long long>(idx[i])));
    const auto phi = combine(homs, coeffs, m.field(), m.space(), n.space());
    if (map_is_invertible(phi, m.space(), n.space())) return IsoStatus::Isomorphic;
    ++tried;
    std::size_t pos = 0;
    while (pos < h && ++idx[pos] == g + 1) idx[pos++] = 0;
    if (pos == h) break;
  }
  return IsoStatus::Undetermined;
}

ShiftIso is_isomorphic_up_to_shift(const DgModule& m, const DgModule& n,
                                   const Caps& caps, bool both_simple) {
  ShiftIso out;
  if (m.dim() != n.dim()) return out;
  if (m.dim() == 0) {
    out.status = IsoStatus::Isomorphic;
    return out;
  }
  // candidate shifts: align every degree of n against every degree of m
  std::vector<int> candidates;
  for (const auto& [dm, _] : m.space().dims())
    for (const auto& [dn, _2] : n.space().dims()) {
      // shift_module(n, s) has degrees (deg - s); match dm = dn - s
      const int s = dn - dm;
      if (std::find(candidates.begin(), candidates.end(), s) ==
          candidates.end())
        candidates.push_back(s);
    }
  std::sort(candidates.begin(), candidates.end());
  bool saw_undetermined = false;
  for (int s : candidates) {
    const DgModule shifted = shift_module(n, s);
    if (shifted.space().dims() != m.space().dims()) continue;
    const IsoStatus st = is_isomorphic(m, shifted, caps, both_simple);
    if (st == IsoStatus::Isomorphic) {
      out.status = IsoStatus::Isomorphic;
      out.shift = s;
      return out;
    }
    if (st == IsoStatus::Undetermined) saw_undetermined = true;
  }
  out.status = saw_undetermined ? IsoStatus::Undetermined
                                : IsoStatus::NotIsomorphic;
  return out;
}

GradedSubspace left_annihilator(const DgModule& m) {
  const auto& a = m.over();
  const auto& field = m.field();
  std::map<int, Matrix> gens;
  for (const auto& [adeg, adim] : a.space().dims()) {
    // rows: one per (module basis vector, output coordinate)
    std::vector<std::vector<Scalar>> rows;
    const std::size_t md = m.dim();
    std::vector<std::vector<std::vector<Scalar>>> images(adim);
    for (std::size_t t = 0; t < adim; ++t) {
      const std::size_t global_a = a.basis().global_index(adeg, t);
      images[t].resize(md);
      for (std::size_t j = 0; j < md; ++j)
        images[t][j] = m.action_basis(global_a, j);
    }
    for (std::size_t j = 0; j < md; ++j)
      for (std::size_t out_c = 0; out_c < md; ++out_c) {
        std::vector<Scalar> row(adim, Scalar::zero(field));
        bool nonzero = false;
        for (std::size_t t = 0; t < adim; ++t) {
          row[t] = images[t][j][out_c];
          nonzero = nonzero || !row[t].is_zero();
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    Matrix system = rows.empty() ? Matrix(field, 0, adim)
                                 : Matrix::from_rows(field, adim, rows);
    Matrix null_rows = system.kernel();
    if (null_rows.rows() > 0) gens[adeg] = null_rows;
  }
  return GradedSubspace::span(field, a.space(), gens);
}

GradedSubspace envelope_radical_of_module(
    const DgModule& m, const GradedSubspace& envelope_radical) {
  const auto& field = m.field();
  const std::size_t n = m.over().dim();
  // the envelope basis order is fixed: a_0..a_{n-1}, a_0 e .. a_{n-1} e
  std::vector<int> env_degrees(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    env_degrees[i] = m.over().basis().degree_of(i);
    env_degrees[n + i] = env_degrees[i] + 1;
  }
  const GradedBasis env_basis(env_degrees);
  if (envelope_radical.ambient() != env_basis.space())
    throw AmbientMismatch("radical is not over the enveloping extension");

  std::map<int, Matrix> gens;
  auto add_vector = [&](const std::vector<Scalar>& v) {
    if (all_zero(v)) return;
    const auto comps = m.basis().split(v);
    for (const auto& [deg, local] : comps) {
      Matrix one = Matrix::from_rows(field, local.size(), {local});
      auto it = gens.find(deg);
      if (it == gens.end())
        gens[deg] = one;
      else
        it->second = it->second.vstack(one);
    }
  };

  for (const auto& [deg, b] : envelope_radical.basis())
    for (std::size_t r = 0; r < b.rows(); ++r) {
      const auto bvec = env_basis.embed(deg, b.row_vector(r), field);
      std::vector<Scalar> plain(bvec.begin(), bvec.begin() + n);
      std::vector<Scalar> eps(bvec.begin() + n, bvec.end());
      for (std::size_t j = 0; j < m.dim(); ++j) {
        const auto mj = m.basis_vector(j);
        auto v = m.act(plain, mj);
        v = add_vectors(v, m.act(eps, m.delta_of(mj)));
        add_vector(v);
      }
    }
  return GradedSubspace::span(field, m.space(), gens);
}

SESData ses_from_submodule(const DgModule& m, const GradedSubspace& carrier) {
  SESData out;
  auto sub = submodule_as_module(m, carrier);
  auto quot = quotient_module(m, carrier);
  out.sub = std::move(sub.module);
  out.mid = m;
  out.quot = std::move(quot.module);
  out.injection = std::move(sub.inclusion);
  out.surjection = std::move(quot.projection);
  return out;
}

ValidationReport validate_ses(const SESData& ses) {
  ValidationReport report;

  auto check_chain_map = [&](const HomogeneousMap& phi, const DgModule& src,
                             const DgModule& dst, const std::string& label) {
    if (phi.shift() != 0) {
      report.add(label + " is not degree 0");
      return;
    }
    for (const auto& [deg, dim] : src.space().dims()) {
      const Matrix lhs = dst.delta().block(deg) * phi.block(deg);
      const Matrix rhs = phi.block(deg + 1) * src.delta().block(deg);
      if (lhs != rhs) {
        report.add(label + " does not commute with delta at degree " +
                   std::to_string(deg));
        return;
      }
    }
    // A-linearity on basis vectors
    for (std::size_t i = 0; i < src.over().dim(); ++i) {
      const HomogeneousMap actS = src.action_map(i);
      const HomogeneousMap actD = dst.action_map(i);
      const int adeg = src.over().basis().degree_of(i);
      for (const auto& [deg, dim] : src.space().dims()) {
        const Matrix lhs = actD.block(deg) * phi.block(deg);
        const Matrix rhs = phi.block(deg + adeg) * actS.block(deg);
        if (lhs != rhs) {
          report.add(label + " is not A-linear at degree " +
                     std::to_string(deg));
          return;
        }
      }
    }
  };
  check_chain_map(ses.injection, ses.sub, ses.mid, "injection");
  check_chain_map(ses.surjection, ses.mid, ses.quot, "surjection");
  if (!report.ok()) return report;


  const GradedSubspace inj_kernel = kernel(ses.injection);
  if (!inj_kernel.is_zero()) report.add("injection is not injective");
  const GradedSubspace surj_image = image(ses.surjection);
  if (!surj_image.is_whole()) report.add("surjection is not surjective");
  const GradedSubspace inj_image = image(ses.injection);
  const GradedSubspace surj_kernel = kernel(ses.surjection);
  if (inj_image != surj_kernel)
    report.add("sequence is not exact in the middle");
  // composite zero follows from exactness, but report it separately
  const HomogeneousMap composite = ses.surjection.compose_after(ses.injection);
  if (!composite.is_zero()) report.add("composite of the SES maps is nonzero");
  return report;
}

namespace {

/// Homology coordinates of one module: cycle reps completing boundaries.
struct HomologyCoords {
  GradedSubspace cycles, boundaries;
  std::map<int, Matrix> reps;  // representative rows per degree
  std::map<int, std::size_t> dims;

  static HomologyCoords of(const DgModule& m) {
    HomologyCoords h;
    h.cycles = kernel(m.delta());
    h.boundaries = image(m.delta());
    h.reps = quotient_basis(h.boundaries, h.cycles);
    for (const auto& [deg, r] : h.reps)
      if (r.rows() > 0) h.dims[deg] = r.rows();
    return h;
  }

  std::size_t dim(int deg) const {
    auto it = dims.find(deg);
    return it == dims.end() ? 0 : it->second;
  }

  /// Class coordinates of a cycle at a degree.
  std::vector<Scalar> class_coords(int deg, const std::vector<Scalar>& v,
                                   const FieldSpec& field) const {
    const std::size_t hdim = dim(deg);
    std::vector<Scalar> out(hdim, Scalar::zero(field));
    if (hdim == 0) return out;
    Matrix basis = reps.at(deg);
    const Matrix bnd = boundaries.basis_at(deg);
    if (bnd.rows() > 0) basis = basis.vstack(bnd);
    const auto sol = basis.transposed().solve(v);
    if (!sol.has_value())
      throw InternalCheckFailure("cycle not in span of reps + boundaries");
    for (std::size_t i = 0; i < hdim; ++i) out[i] = (*sol)[i];
    return out;
  }
};

}  // namespace

LESReport long_exact_sequence(const SESData& ses) {
  const ValidationReport valid = validate_ses(ses);
  if (!valid.ok())
    throw std::invalid_argument("short exact sequence invalid: " +
                                valid.violations.front());
  LESReport report;
  const auto& field = ses.mid.field();
  const HomologyCoords hN = HomologyCoords::of(ses.sub);
  const HomologyCoords hM = HomologyCoords::of(ses.mid);
  const HomologyCoords hQ = HomologyCoords::of(ses.quot);
  report.h_sub = hN.dims;
  report.h_mid = hM.dims;
  report.h_quot = hQ.dims;

  int lo = 0, hi = 0;
  bool any = false;
  auto widen = [&](const GradedSpace& s) {
    if (s.dims().empty()) return;
    if (!any) {
      lo = s.min_degree();
      hi = s.max_degree();
      any = true;
    } else {
      lo = std::min(lo, s.min_degree());
      hi = std::max(hi, s.max_degree());
    }
  };
  widen(ses.sub.space());
  widen(ses.mid.space());
  widen(ses.quot.space());
  if (!any) {
    report.exact = true;
    report.sub_iso_mid = true;
    return report;
  }
  --lo;
  ++hi;

  // induced maps per degree as matrices on homology coordinates
  auto induced = [&](const HomologyCoords& src, const HomologyCoords& dst,
                     const HomogeneousMap& phi, int deg) {
    Matrix mat(field, dst.dim(deg), src.dim(deg));
    if (src.dim(deg) == 0 || dst.dim(deg) == 0) return mat;
    const Matrix& reps = src.reps.at(deg);
    for (std::size_t c = 0; c < reps.rows(); ++c) {
      const auto img = phi.apply_component(deg, reps.row_vector(c));
      const auto cls = dst.class_coords(deg, img, field);
      for (std::size_t r = 0; r < cls.size(); ++r) mat.set(r, c, cls[r]);
    }
    return mat;
  };

  // connecting homomorphism H_n(Q) -> H_{n+1}(N)
  auto connecting = [&](int deg) {
    Matrix mat(field, hN.dim(deg + 1), hQ.dim(deg));
    if (hQ.dim(deg) == 0 || hN.dim(deg + 1) == 0) return mat;
    const Matrix& reps = hQ.reps.at(deg);
    for (std::size_t c = 0; c < reps.rows(); ++c) {
      // lift through the surjection, apply delta, pull back through injection
      const auto lift = ses.surjection.block(deg).solve(reps.row_vector(c));
      if (!lift.has_value())
        throw InternalCheckFailure("surjection lift failed in LES");
      const auto dm = ses.mid.delta().block(deg).apply(*lift);
      const auto back = ses.injection.block(deg + 1).solve(dm);
      if (!back.has_value())
        throw InternalCheckFailure("injection pullback failed in LES");
      const auto cls = hN.class_coords(deg + 1, *back, field);
      for (std::size_t r = 0; r < cls.size(); ++r) mat.set(r, c, cls[r]);
    }
    return mat;
  };

  // exactness: image of incoming = kernel of outgoing, as row spaces
  auto exact_at = [&](const Matrix& incoming, const Matrix& outgoing) {
    // row space of incoming^T, canonicalized: rref of incoming^T
    Matrix in_rows = incoming.transposed().rref().reduced;
    // strip zero rows
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < in_rows.rows(); ++r)
      if (!in_rows.row(r).is_zero()) rows.push_back(in_rows.row_vector(r));
    Matrix image_canon =
        rows.empty() ? Matrix(field, 0, incoming.rows())
                     : Matrix::from_rows(field, incoming.rows(), rows);
    Matrix kernel_canon = outgoing.kernel();
    return image_canon == kernel_canon;
  };

  for (int deg = lo; deg <= hi; ++deg) {
    const Matrix i_star = induced(hN, hM, ses.injection, deg);
    const Matrix p_star = induced(hM, hQ, ses.surjection, deg);
    const Matrix del = connecting(deg);
    const Matrix del_prev = connecting(deg - 1);

    LESNode node_n{"H_" + std::to_string(deg) + "(sub)",
                   exact_at(del_prev, i_star)};
    LESNode node_m{"H_" + std::to_string(deg) + "(mid)",
                   exact_at(i_star, p_star)};
    LESNode node_q{"H_" + std::to_string(deg) + "(quot)",
                   exact_at(p_star, del)};
    report.exact = report.exact && node_n.exact && node_m.exact && node_q.exact;
    report.nodes.push_back(std::move(node_n));
    report.nodes.push_back(std::move(node_m));
    report.nodes.push_back(std::move(node_q));
  }

  if (hQ.dims.empty()) {
    bool iso = hN.dims == hM.dims;
    if (!iso)
      throw InternalCheckFailure(
          "acyclic quotient but H(sub) and H(mid) disagree");
    report.sub_iso_mid = iso;
  }
  return report;
}

}  // namespace dgkit
