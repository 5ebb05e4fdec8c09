#include "dgkit/enumerate.hpp"

#include <algorithm>
#include <set>

namespace dgkit {

std::optional<std::vector<std::vector<Scalar>>> enumerate_vectors(
    const FieldSpec& field, std::size_t dim, std::size_t cap) {
  if (field.is_rationals()) return std::nullopt;
  const std::uint64_t q = field.p;
  double count = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    count *= static_cast<double>(q);
    if (count > static_cast<double>(cap)) return std::nullopt;
  }
  std::vector<std::vector<Scalar>> out;
  std::vector<std::size_t> digits(dim, 0);
  while (true) {
    std::vector<Scalar> v;
    v.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i)
      v.push_back(Scalar(field, static_cast<long long>(digits[i])));
    out.push_back(std::move(v));
    std::size_t pos = 0;
    while (pos < dim && ++digits[pos] == q) digits[pos++] = 0;
    if (pos == dim) break;
  }
  if (dim == 0) out.push_back({});
  return out;
}

std::optional<std::vector<GradedSubspace>> enumerate_stable_subspaces(
    const FieldSpec& field, const GradedSpace& space,
    const std::vector<HomogeneousMap>& operators, const Caps& caps) {
  if (field.is_rationals()) return std::nullopt;

  // cyclic closures of all nonzero homogeneous vectors
  std::set<GradedSubspace> found;
  found.insert(GradedSubspace::zero(field, space));
  for (const auto& [deg, dim] : space.dims()) {
    const auto vectors = enumerate_vectors(field, dim, caps.sweep_limit);
    if (!vectors.has_value()) return std::nullopt;
    for (const auto& v : *vectors) {
      bool zero = true;
      for (const auto& s : v) zero = zero && s.is_zero();
      if (zero) continue;
      std::map<int, Matrix> gen{{deg, Matrix::from_rows(field, dim, {v})}};
      found.insert(
          closure(GradedSubspace::span(field, space, gen), operators));
      if (found.size() > caps.lattice_limit) return std::nullopt;
    }
  }

  // joins: sums of stable subspaces are stable, so pairwise sums suffice
  std::vector<GradedSubspace> worklist(found.begin(), found.end());
  while (!worklist.empty()) {
    std::vector<GradedSubspace> fresh;
    for (const auto& nw : worklist)
      for (const auto& old : found) {
        GradedSubspace joined = sum(nw, old);
        if (!found.count(joined) &&
            std::find(fresh.begin(), fresh.end(), joined) == fresh.end())
          fresh.push_back(std::move(joined));
      }
    for (auto& f : fresh) {
      found.insert(f);
      if (found.size() > caps.lattice_limit) return std::nullopt;
    }
    worklist = std::move(fresh);
  }
  return std::vector<GradedSubspace>(found.begin(), found.end());
}

std::optional<std::vector<GradedSubspace>> enumerate_submodule_lattice(
    const DgModule& m, const Caps& caps) {
  return enumerate_stable_subspaces(m.field(), m.space(),
                                    m.closure_operators(), caps);
}

std::optional<std::vector<GradedSubspace>> enumerate_envelope_submodule_lattice(
    const DgModule& m, const Caps& caps) {
  return enumerate_stable_subspaces(m.field(), m.space(),
                                    m.envelope_operators(), caps);
}

std::optional<std::vector<GradedSubspace>> enumerate_dg_left_ideals(
    const DgAlgebra& a, const Caps& caps) {
  auto ops = a.algebra().left_mult_operators();
  ops.push_back(a.differential());
  return enumerate_stable_subspaces(a.field(), a.space(), ops, caps);
}

std::optional<std::vector<GradedSubspace>> enumerate_two_sided_dg_ideals(
    const DgAlgebra& a, const Caps& caps) {
  auto ops = a.algebra().left_mult_operators();
  const auto right = a.algebra().right_mult_operators();
  ops.insert(ops.end(), right.begin(), right.end());
  ops.push_back(a.differential());
  return enumerate_stable_subspaces(a.field(), a.space(), ops, caps);
}

std::optional<std::vector<GradedSubspace>> enumerate_graded_left_ideals(
    const GradedAlgebra& a, const Caps& caps) {
  return enumerate_stable_subspaces(a.field(), a.space(),
                                    a.left_mult_operators(), caps);
}

std::optional<std::size_t> lattice_uniform_chain_length(
    const std::vector<GradedSubspace>& lattice) {
  const std::size_t n = lattice.size();
  if (n == 0) return std::nullopt;

  // covering relation: i covers j iff j < i with nothing strictly between
  std::vector<std::vector<std::size_t>> covered_by(n);  // j -> list of i
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && lattice[i] != lattice[j] &&
          contains(lattice[i], lattice[j]))
        less[j][i] = true;  // j < i
  std::vector<std::vector<std::size_t>> covers(n);  // i -> its lower covers
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!less[j][i]) continue;
      bool between = false;
      for (std::size_t k = 0; k < n && !between; ++k)
        between = less[j][k] && less[k][i];
      if (!between) covers[i].push_back(j);
    }

  // heights: all maximal chains to each element must agree
  std::vector<std::optional<std::size_t>> height(n);
  std::size_t bottom = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (lattice[i].total_dim() == 0) bottom = i;
  height[bottom] = 0;

  // process in order of total dimension
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lattice[a].total_dim() < lattice[b].total_dim();
  });
  for (std::size_t i : order) {
    if (i == bottom) continue;
    std::optional<std::size_t> h;
    for (std::size_t j : covers[i]) {
      if (!height[j].has_value()) return std::nullopt;
      if (!h.has_value())
        h = *height[j] + 1;
      else if (*h != *height[j] + 1)
        return std::nullopt;  // two maximal chains of different lengths
    }
    if (!h.has_value()) return std::nullopt;  // disconnected
    height[i] = h;
  }

  std::size_t top = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (lattice[i].total_dim() > lattice[top].total_dim()) top = i;
  return height[top];
}

std::optional<std::size_t> subspace_nilpotency_index(
    const GradedAlgebra& a, const GradedSubspace& ideal) {
  if (ideal.is_zero()) return 1;
  GradedSubspace power = ideal;
  for (std::size_t k = 2; k <= a.dim() + 1; ++k) {
    const GradedSubspace next = a.subspace_product(ideal, power);
    if (next.is_zero()) return k;
    // powers of an ideal descend; a stationary nonzero power never vanishes
    if (next.total_dim() == power.total_dim()) return std::nullopt;
    power = next;
  }
  return std::nullopt;
}

std::optional<GradedSubspace> brute_force_nilpotent_radical(
    const GradedAlgebra& a, const Caps& caps) {
  if (a.field().is_rationals()) return std::nullopt;
  auto ops = a.left_mult_operators();
  const auto right = a.right_mult_operators();
  ops.insert(ops.end(), right.begin(), right.end());

  GradedSubspace radical = GradedSubspace::zero(a.field(), a.space());
  for (const auto& [deg, dim] : a.space().dims()) {
    const auto vectors = enumerate_vectors(a.field(), dim, caps.sweep_limit);
    if (!vectors.has_value()) return std::nullopt;
    for (const auto& v : *vectors) {
      bool zero = true;
      for (const auto& s : v) zero = zero && s.is_zero();
      if (zero) continue;
      std::map<int, Matrix> gen{{deg, Matrix::from_rows(a.field(), dim, {v})}};
      const auto ideal =
          closure(GradedSubspace::span(a.field(), a.space(), gen), ops);
      if (subspace_nilpotency_index(a, ideal).has_value())
        radical = sum(radical, ideal);
    }
  }
  // the sum of nilpotent ideals is nilpotent; certify anyway
  if (!subspace_nilpotency_index(a, radical).has_value())
    throw InternalCheckFailure("sum of nilpotent ideals failed to be nilpotent");
  return radical;
}

}  // namespace dgkit
