#include "dgkit/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgkit {

const std::vector<std::size_t> GradedBasis::kEmpty{};

GradedSpace::GradedSpace(std::map<int, std::size_t> dims) {
  for (const auto& [deg, dim] : dims)
    if (dim > 0) {
      dims_[deg] = dim;
      total_ += dim;
    }
}

std::size_t GradedSpace::dim(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

std::vector<int> GradedSpace::degrees() const {
  std::vector<int> out;
  out.reserve(dims_.size());
  for (const auto& [deg, dim] : dims_) out.push_back(deg);
  return out;
}

int GradedSpace::min_degree() const {
  return dims_.empty() ? 0 : dims_.begin()->first;
}

int GradedSpace::max_degree() const {
  return dims_.empty() ? 0 : dims_.rbegin()->first;
}

GradedBasis::GradedBasis(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  local_.resize(degrees_.size());
  std::map<int, std::size_t> dims;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    local_[i] = dims[degrees_[i]]++;
    components_[degrees_[i]].push_back(i);
  }
  space_ = GradedSpace(dims);
}

const std::vector<std::size_t>& GradedBasis::component(int degree) const {
  auto it = components_.find(degree);
  return it == components_.end() ? kEmpty : it->second;
}

std::size_t GradedBasis::global_index(int degree, std::size_t local) const {
  return component(degree).at(local);
}

std::map<int, std::vector<Scalar>> GradedBasis::split(
    const std::vector<Scalar>& global) const {
  std::map<int, std::vector<Scalar>> out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (global[i].is_zero()) continue;
    auto& comp = out[degrees_[i]];
    if (comp.empty())
      comp.assign(space_.dim(degrees_[i]), Scalar::zero(global[i].field()));
    comp[local_[i]] = global[i];
  }
  return out;
}

bool GradedBasis::is_homogeneous(const std::vector<Scalar>& global,
                                 int* degree) const {
  bool found = false;
  int deg = 0;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (global[i].is_zero()) continue;
    if (found && degrees_[i] != deg) return false;
    deg = degrees_[i];
    found = true;
  }
  if (degree != nullptr && found) *degree = deg;
  return true;
}

std::vector<Scalar> GradedBasis::embed(int degree,
                                       const std::vector<Scalar>& local,
                                       const FieldSpec& field) const {
  std::vector<Scalar> out(total_dim(), Scalar::zero(field));
  const auto& comp = component(degree);
  if (local.size() != comp.size())
    throw std::invalid_argument("component vector length mismatch in embed");
  for (std::size_t k = 0; k < comp.size(); ++k) out[comp[k]] = local[k];
  return out;
}

std::vector<Scalar> GradedBasis::component_of(const std::vector<Scalar>& global,
                                              int degree,
                                              const FieldSpec& field) const {
  const auto& comp = component(degree);
  std::vector<Scalar> out(comp.size(), Scalar::zero(field));
  for (std::size_t k = 0; k < comp.size(); ++k) out[k] = global[comp[k]];
  return out;
}

HomogeneousMap::HomogeneousMap(const FieldSpec& field, GradedSpace source,
                               GradedSpace target, int shift)
    : field_(field), source_(std::move(source)), target_(std::move(target)),
      shift_(shift) {}

void HomogeneousMap::set_block(int source_degree, Matrix block) {
  const std::size_t want_rows = target_.dim(source_degree + shift_);
  const std::size_t want_cols = source_.dim(source_degree);
  if (block.rows() != want_rows || block.cols() != want_cols)
    throw std::invalid_argument("map block shape mismatch at degree " +
                                std::to_string(source_degree));
  if (block.field() != field_)
    throw FieldMismatch("map block over wrong field");
  if (block.is_zero())
    blocks_.erase(source_degree);
  else
    blocks_[source_degree] = std::move(block);
}

Matrix HomogeneousMap::block(int source_degree) const {
  auto it = blocks_.find(source_degree);
  if (it != blocks_.end()) return it->second;
  return Matrix(field_, target_.dim(source_degree + shift_),
                source_.dim(source_degree));
}

std::vector<Scalar> HomogeneousMap::apply_component(
    int source_degree, const std::vector<Scalar>& local) const {
  auto it = blocks_.find(source_degree);
  if (it == blocks_.end())
    return std::vector<Scalar>(target_.dim(source_degree + shift_),
                               Scalar::zero(field_));
  return it->second.apply(local);
}

HomogeneousMap HomogeneousMap::compose_after(const HomogeneousMap& first) const {
  if (first.target_ != source_)
    throw AmbientMismatch("composition target/source mismatch");
  HomogeneousMap out(field_, first.source_, target_, shift_ + first.shift_);
  for (const auto& [deg, blk] : first.blocks_) {
    Matrix mine = block(deg + first.shift_);
    if (mine.rows() == 0 || mine.cols() == 0) continue;
    out.set_block(deg, mine * blk);
  }
  return out;
}

bool HomogeneousMap::is_zero() const {
  for (const auto& [deg, blk] : blocks_)
    if (!blk.is_zero()) return false;
  return true;
}

GradedSubspace::GradedSubspace(const FieldSpec& field, GradedSpace ambient)
    : field_(field), ambient_(std::move(ambient)) {}

GradedSubspace GradedSubspace::zero(const FieldSpec& field, GradedSpace ambient) {
  return GradedSubspace(field, std::move(ambient));
}

GradedSubspace GradedSubspace::whole(const FieldSpec& field,
                                     GradedSpace ambient) {
  GradedSubspace s(field, ambient);
  for (const auto& [deg, dim] : ambient.dims())
    s.basis_[deg] = Matrix::identity(field, dim);
  return s;
}

GradedSubspace GradedSubspace::span(const FieldSpec& field, GradedSpace ambient,
                                    const std::map<int, Matrix>& generators) {
  GradedSubspace s(field, std::move(ambient));
  for (const auto& [deg, gen] : generators) {
    if (gen.cols() != s.ambient_.dim(deg))
      throw AmbientMismatch("generator width mismatch at degree " +
                            std::to_string(deg));
    Matrix reduced = gen.rref().reduced;
    std::size_t rank = 0;
    for (std::size_t r = 0; r < reduced.rows(); ++r)
      if (!reduced.row(r).is_zero()) ++rank;
    if (rank == 0) continue;
    Matrix b(field, rank, reduced.cols());
    for (std::size_t r = 0; r < rank; ++r)
      for (std::size_t c = 0; c < reduced.cols(); ++c)
        b.set(r, c, reduced.at(r, c));
    s.basis_[deg] = std::move(b);
  }
  return s;
}

std::size_t GradedSubspace::dim(int degree) const {
  auto it = basis_.find(degree);
  return it == basis_.end() ? 0 : it->second.rows();
}

std::size_t GradedSubspace::total_dim() const {
  std::size_t t = 0;
  for (const auto& [deg, b] : basis_) t += b.rows();
  return t;
}

GradedSpace GradedSubspace::dims_profile() const {
  std::map<int, std::size_t> dims;
  for (const auto& [deg, b] : basis_) dims[deg] = b.rows();
  return GradedSpace(dims);
}

Matrix GradedSubspace::basis_at(int degree) const {
  auto it = basis_.find(degree);
  if (it != basis_.end()) return it->second;
  return Matrix(field_, 0, ambient_.dim(degree));
}

bool GradedSubspace::is_whole() const {
  for (const auto& [deg, dim] : ambient_.dims())
    if (this->dim(deg) != dim) return false;
  return true;
}

bool GradedSubspace::operator==(const GradedSubspace& other) const {
  return field_ == other.field_ && ambient_ == other.ambient_ &&
         basis_ == other.basis_;
}

int GradedSubspace::cmp(const GradedSubspace& other) const {
  auto it = basis_.begin();
  auto jt = other.basis_.begin();
  while (it != basis_.end() && jt != other.basis_.end()) {
    if (it->first != jt->first) return it->first < jt->first ? -1 : 1;
    int c = it->second.cmp(jt->second);
    if (c != 0) return c;
    ++it;
    ++jt;
  }
  if (it != basis_.end()) return 1;
  if (jt != other.basis_.end()) return -1;
  return 0;
}

bool GradedSubspace::contains_vector(int degree,
                                     const std::vector<Scalar>& local) const {
  for (const Scalar& v : reduce(degree, local))
    if (!v.is_zero()) return false;
  return true;
}

std::vector<Scalar> GradedSubspace::reduce(
    int degree, const std::vector<Scalar>& local) const {
  std::vector<Scalar> v = local;
  auto it = basis_.find(degree);
  if (it == basis_.end()) return v;
  const Matrix& b = it->second;
  // rows are RREF: pivot of row r is its first nonzero column, with unit entry
  for (std::size_t r = 0; r < b.rows(); ++r) {
    std::size_t piv = 0;
    while (piv < b.cols() && b.at(r, piv).is_zero()) ++piv;
    if (piv == b.cols()) continue;
    const Scalar f = v[piv];
    if (f.is_zero()) continue;
    for (std::size_t c = piv; c < b.cols(); ++c) v[c] -= f * b.at(r, c);
  }
  return v;
}

void GradedSubspace::check_compatible(const GradedSubspace& other) const {
  if (field_ != other.field_)
    throw FieldMismatch("subspaces over different fields");
  if (ambient_ != other.ambient_)
    throw AmbientMismatch("subspace ambient space mismatch");
}

GradedSubspace kernel(const HomogeneousMap& map) {
  std::map<int, Matrix> gens;
  for (const auto& [deg, dim] : map.source().dims()) {
    Matrix blk = map.block(deg);
    if (blk.rows() == 0) {
      gens[deg] = Matrix::identity(map.field(), dim);
      continue;
    }
    Matrix k = blk.kernel();
    if (k.rows() > 0) gens[deg] = k;
  }
  return GradedSubspace::span(map.field(), map.source(), gens);
}

GradedSubspace image(const HomogeneousMap& map) {
  std::map<int, Matrix> gens;
  for (const auto& [deg, blk] : map.blocks()) {
    if (blk.rows() == 0 || blk.is_zero()) continue;
    gens[deg + map.shift()] = blk.transposed();
  }
  return GradedSubspace::span(map.field(), map.target(), gens);
}

GradedSubspace sum(const GradedSubspace& u, const GradedSubspace& v) {
  u.check_compatible(v);
  std::map<int, Matrix> gens;
  for (const auto& [deg, b] : u.basis_) gens[deg] = b;
  for (const auto& [deg, b] : v.basis_) {
    auto it = gens.find(deg);
    if (it == gens.end())
      gens[deg] = b;
    else
      it->second = it->second.vstack(b);
  }
  return GradedSubspace::span(u.field(), u.ambient(), gens);
}

GradedSubspace intersect(const GradedSubspace& u, const GradedSubspace& v) {
  u.check_compatible(v);
  std::map<int, Matrix> gens;
  for (const auto& [deg, ub] : u.basis_) {
    auto it = v.basis_.find(deg);
    if (it == v.basis_.end()) continue;
    const Matrix& vb = it->second;
    // x in U cap V  <=>  x = U^T a = V^T b; solve [U^T | -V^T] null space.
    Matrix stacked = ub.transposed().hstack(
        vb.transposed().scaled(-Scalar::one(u.field())));
    Matrix null_rows = stacked.kernel();
    if (null_rows.rows() == 0) continue;
    Matrix vectors(u.field(), null_rows.rows(), ub.cols());
    for (std::size_t r = 0; r < null_rows.rows(); ++r)
      for (std::size_t c = 0; c < ub.cols(); ++c) {
        Scalar acc = Scalar::zero(u.field());
        for (std::size_t k = 0; k < ub.rows(); ++k)
          acc += null_rows.at(r, k) * ub.at(k, c);
        vectors.set(r, c, acc);
      }
    if (!vectors.is_zero()) gens[deg] = vectors;
  }
  return GradedSubspace::span(u.field(), u.ambient(), gens);
}

bool contains(const GradedSubspace& u, const GradedSubspace& v) {
  u.check_compatible(v);
  for (const auto& [deg, vb] : v.basis_) {
    for (std::size_t r = 0; r < vb.rows(); ++r)
      if (!u.contains_vector(deg, vb.row_vector(r))) return false;
  }
  return true;
}

std::map<int, Matrix> quotient_basis(const GradedSubspace& u,
                                     const GradedSubspace& v) {
  if (!contains(v, u))
    throw AmbientMismatch("quotient_basis requires u <= v");
  std::map<int, Matrix> out;
  for (const auto& [deg, vb] : v.basis()) {
    std::vector<std::vector<Scalar>> reduced;
    for (std::size_t r = 0; r < vb.rows(); ++r) {
      auto red = u.reduce(deg, vb.row_vector(r));
      bool zero = true;
      for (const auto& s : red) zero = zero && s.is_zero();
      if (!zero) reduced.push_back(std::move(red));
    }
    if (reduced.empty()) continue;
    Matrix gen = Matrix::from_rows(v.field(), vb.cols(), reduced);
    Matrix canon = gen.rref().reduced;
    std::size_t rank = gen.rref().rank;
    Matrix rows(v.field(), rank, vb.cols());
    for (std::size_t r = 0; r < rank; ++r)
      for (std::size_t c = 0; c < vb.cols(); ++c)
        rows.set(r, c, canon.at(r, c));
    out[deg] = rows;
  }
  return out;
}

namespace {

/// Incremental row-echelon store per degree, for fast membership and insert.
struct EchelonStore {
  FieldSpec field;
  std::map<int, std::vector<std::vector<Scalar>>> rows;  // echelonized

  /// Reduces v against the stored rows of this degree; if a nonzero residual
  /// remains it is normalized, inserted, and returned.
  std::optional<std::vector<Scalar>> insert(int deg, std::vector<Scalar> v) {
    auto& bucket = rows[deg];
    for (const auto& row : bucket) {
      std::size_t piv = 0;
      while (piv < row.size() && row[piv].is_zero()) ++piv;
      if (piv == row.size() || v[piv].is_zero()) continue;
      const Scalar f = v[piv];
      for (std::size_t c = piv; c < row.size(); ++c) v[c] -= f * row[c];
    }
    std::size_t lead = 0;
    while (lead < v.size() && v[lead].is_zero()) ++lead;
    if (lead == v.size()) return std::nullopt;
    const Scalar inv = v[lead].inverse();
    for (std::size_t c = lead; c < v.size(); ++c) v[c] *= inv;
    bucket.push_back(v);
    return v;
  }
};

}  // namespace

GradedSubspace closure(const GradedSubspace& seed,
                       const std::vector<HomogeneousMap>& operators) {
  for (const auto& op : operators)
    if (op.source() != seed.ambient() || op.target() != seed.ambient())
      throw AmbientMismatch("closure operator is not an endomorphism shape");

  EchelonStore store{seed.field(), {}};
  std::vector<std::pair<int, std::vector<Scalar>>> frontier;
  for (const auto& [deg, b] : seed.basis())
    for (std::size_t r = 0; r < b.rows(); ++r) {
      auto inserted = store.insert(deg, b.row_vector(r));
      if (inserted.has_value()) frontier.emplace_back(deg, std::move(*inserted));
    }

  while (!frontier.empty()) {
    std::vector<std::pair<int, std::vector<Scalar>>> next;
    for (const auto& [deg, v] : frontier)
      for (const auto& op : operators) {
        const int out_deg = deg + op.shift();
        if (seed.ambient().dim(out_deg) == 0) continue;
        auto w = op.apply_component(deg, v);
        auto inserted = store.insert(out_deg, std::move(w));
        if (inserted.has_value())
          next.emplace_back(out_deg, std::move(*inserted));
      }
    frontier = std::move(next);
  }

  std::map<int, Matrix> gens;
  for (const auto& [deg, bucket] : store.rows) {
    if (bucket.empty()) continue;
    gens[deg] =
        Matrix::from_rows(seed.field(), seed.ambient().dim(deg), bucket);
  }
  return GradedSubspace::span(seed.field(), seed.ambient(), gens);
}

GradedSubspace map_subspace(const HomogeneousMap& map, const GradedSubspace& u) {
  if (map.source() != u.ambient())
    throw AmbientMismatch("map_subspace source mismatch");
  std::map<int, Matrix> gens;
  for (const auto& [deg, b] : u.basis()) {
    const int out_deg = deg + map.shift();
    if (map.target().dim(out_deg) == 0) continue;
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < b.rows(); ++r)
      rows.push_back(map.apply_component(deg, b.row_vector(r)));
    Matrix gen = Matrix::from_rows(map.field(), map.target().dim(out_deg), rows);
    if (gen.is_zero()) continue;
    auto it = gens.find(out_deg);
    if (it == gens.end())
      gens[out_deg] = gen;
    else
      it->second = it->second.vstack(gen);
  }
  return GradedSubspace::span(map.field(), map.target(), gens);
}

std::vector<std::pair<int, std::vector<Scalar>>> subspace_rows(
    const GradedSubspace& u) {
  std::vector<std::pair<int, std::vector<Scalar>>> out;
  for (const auto& [deg, b] : u.basis())
    for (std::size_t r = 0; r < b.rows(); ++r)
      out.emplace_back(deg, b.row_vector(r));
  return out;
}

}  // namespace dgkit
