#include <algorithm>
#include <set>

#include "dgkit/eigenscan.hpp"
#include "dgkit/structure.hpp"

// is_dg_simple, decompose_semisimple, maximal_dg_submodules and the
// composition-series machinery declared in module.hpp

namespace dgkit {

namespace {

bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

/// Can we enumerate every nonzero homogeneous vector of the space?
bool sweep_feasible(const FieldSpec& field, const GradedSpace& space,
                    const Caps& caps) {
  if (field.is_rationals()) return false;
  for (const auto& [deg, dim] : space.dims()) {
    double count = 1;
    for (std::size_t i = 0; i < dim; ++i) {
      count *= static_cast<double>(field.p);
      if (count > static_cast<double>(caps.sweep_limit)) return false;
    }
  }
  return true;
}

/// Visits every nonzero homogeneous vector (degree, local coords).
template <typename Fn>
bool for_each_homogeneous_vector(const FieldSpec& field,
                                 const GradedSpace& space, const Caps& caps,
                                 Fn&& fn) {
  for (const auto& [deg, dim] : space.dims()) {
    const auto vectors = enumerate_vectors(field, dim, caps.sweep_limit);
    if (!vectors.has_value()) return false;
    for (const auto& v : *vectors) {
      if (all_zero(v)) continue;
      if (!fn(deg, v)) return true;  // early stop requested
    }
  }
  return true;
}

GradedSubspace cyclic_submodule(const DgModule& m, int deg,
                                const std::vector<Scalar>& local) {
  return submodule_closure_local(m, {{deg, local}});
}

/// Search for a proper nonzero dg-submodule through the endomorphism algebra:
/// kernels, images and eigenspaces of non-scalar endomorphisms.
struct EndoScan {
  std::optional<GradedSubspace> found;
  std::size_t end_dim = 0;
  bool eigen_scan_complete = true;
};

EndoScan endo_scan_for_submodule(const DgModule& m, const Caps& caps) {
  EndoScan result;
  const auto homs = hom_dg(m, m);
  result.end_dim = homs.size();

  auto is_proper_nonzero = [&](const GradedSubspace& w) {
    return !w.is_zero() && !w.is_whole();
  };

  std::vector<HomogeneousMap> scan_set = homs;
  for (std::size_t i = 0; i < homs.size() && scan_set.size() < 64; ++i)
    for (std::size_t j = 0; j < homs.size() && scan_set.size() < 64; ++j) {
      if (i == j) continue;
      scan_set.push_back(homs[i].compose_after(homs[j]));
    }

  for (const auto& phi : scan_set) {
    const GradedSubspace ker_phi = kernel(phi);
    if (is_proper_nonzero(ker_phi)) {
      result.found = ker_phi;
      return result;
    }
    const GradedSubspace im_phi = image(phi);
    if (is_proper_nonzero(im_phi)) {
      result.found = im_phi;
      return result;
    }
    // eigenspaces of phi per degree block; an eigenvalue common to the whole
    // operator gives a graded submodule ker(phi - lambda)
    std::set<std::string> seen;
    for (const auto& [deg, dim] : m.space().dims()) {
      bool complete = true;
      const auto eigs = field_eigenvalues(phi.block(deg), caps, &complete);
      result.eigen_scan_complete = result.eigen_scan_complete && complete;
      for (const auto& lambda : eigs) {
        if (!seen.insert(lambda.str()).second) continue;
        HomogeneousMap shifted = phi;
        for (const auto& [d2, dim2] : m.space().dims()) {
          Matrix blk = shifted.block(d2);
          for (std::size_t i = 0; i < dim2; ++i)
            blk.set(i, i, blk.at(i, i) - lambda);
          shifted.set_block(d2, std::move(blk));
        }
        const GradedSubspace eig = kernel(shifted);
        if (is_proper_nonzero(eig)) {
          result.found = eig;
          return result;
        }
      }
    }
  }
  return result;
}

/// dim of the center of End and the block data needed for the terminal
/// simplicity certificate over Q.
struct EndCenterData {
  std::size_t end_dim = 0;
  std::size_t center_dim = 0;
  bool single_isotypic = false;
  std::size_t m0 = 0;  // sqrt(dim_F End) when it is a perfect square, else 0
};

EndCenterData end_center_data(const DgModule& m, const Caps& caps) {
  (void)caps;
  EndCenterData out;
  const auto homs = hom_dg(m, m);
  out.end_dim = homs.size();
  if (homs.empty()) return out;
  const auto& field = m.field();

  // vectorize endomorphisms per-degree to compute the center by linear algebra
  std::size_t total = 0;
  for (const auto& [deg, dim] : m.space().dims()) total += dim * dim;
  auto vectorize = [&](const HomogeneousMap& phi) {
    std::vector<Scalar> v;
    v.reserve(total);
    for (const auto& [deg, dim] : m.space().dims()) {
      const Matrix blk = phi.block(deg);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) v.push_back(blk.at(i, j));
    }
    return v;
  };

  // center: x = sum c_k phi_k with x phi_j = phi_j x for all j
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t j = 0; j < homs.size(); ++j) {
    // row block: sum_k c_k (phi_k phi_j - phi_j phi_k) = 0
    std::vector<std::vector<Scalar>> commutators;
    for (std::size_t k = 0; k < homs.size(); ++k) {
      const auto left = homs[j].compose_after(homs[k]);   // phi_j after phi_k?
      const auto right = homs[k].compose_after(homs[j]);
      auto lv = vectorize(left);
      const auto rv = vectorize(right);
      for (std::size_t t = 0; t < total; ++t) lv[t] -= rv[t];
      commutators.push_back(std::move(lv));
    }
    for (std::size_t t = 0; t < total; ++t) {
      std::vector<Scalar> row(homs.size(), Scalar::zero(field));
      bool nonzero = false;
      for (std::size_t k = 0; k < homs.size(); ++k) {
        row[k] = commutators[k][t];
        nonzero = nonzero || !row[k].is_zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  const Matrix system = rows.empty()
                            ? Matrix(field, 0, homs.size())
                            : Matrix::from_rows(field, homs.size(), rows);
  out.center_dim = system.kernel().rows();
  out.single_isotypic = out.center_dim == 1;
  if (out.single_isotypic && out.center_dim > 0) {
    const std::size_t q = out.end_dim / out.center_dim;
    if (q * out.center_dim == out.end_dim) {
      std::size_t r = 0;
      while ((r + 1) * (r + 1) <= q) ++r;
      if (r * r == q) out.m0 = r;
    }
  }
  return out;
}

}  // namespace

SimplicityResult is_dg_simple(const DgModule& m, const Caps& caps) {
  if (m.dim() == 0)
    throw std::invalid_argument("simplicity of the zero module is undefined");
  SimplicityResult result;

  if (sweep_feasible(m.field(), m.space(), caps)) {
    // complete homogeneous-generator sweep: every proper submodule contains a
    // proper cyclic one
    bool simple = true;
    GradedSubspace witness;
    for_each_homogeneous_vector(
        m.field(), m.space(), caps, [&](int deg, const std::vector<Scalar>& v) {
          const auto cyc = cyclic_submodule(m, deg, v);
          if (!cyc.is_whole()) {
            simple = false;
            witness = cyc;
            return false;
          }
          return true;
        });
    result.status = simple ? SimplicityResult::Status::Simple
                           : SimplicityResult::Status::NotSimple;
    if (!simple) result.certificate = witness;
    result.note = "homogeneous generator sweep";
    return result;
  }

  // radical/socle route
  const auto& env = envelope_radical(m.over(), caps);
  const auto rad = envelope_radical_of_module(m, env.radical);
  if (!rad.is_zero()) {
    if (rad.is_whole())
      throw InternalCheckFailure("rad(M) = M contradicts dg-Nakayama");
    result.status = SimplicityResult::Status::NotSimple;
    result.certificate = rad;
    result.note = "nonzero radical";
    return result;
  }

  const auto scan = endo_scan_for_submodule(m, caps);
  if (scan.found.has_value()) {
    result.status = SimplicityResult::Status::NotSimple;
    result.certificate = scan.found;
    result.note = "endomorphism scan";
    return result;
  }
  const auto center = end_center_data(m, caps);
  if (center.single_isotypic && center.m0 == 1) {
    result.status = SimplicityResult::Status::Simple;
    result.note = "semisimple with one-dimensional-over-center End of square 1";
    return result;
  }
  result.status = SimplicityResult::Status::Undetermined;
  result.note =
      "semisimple, but the endomorphism analysis could not separate a "
      "division-algebra End from a higher multiplicity";
  return result;
}

SemisimpleDecomposition decompose_semisimple(const DgModule& m,
                                             const Caps& caps) {
  SemisimpleDecomposition out;
  if (m.dim() == 0) return out;

  if (sweep_feasible(m.field(), m.space(), caps)) {
    // all minimal cyclic submodules, then a greedy independent selection
    std::vector<GradedSubspace> cyclics;
    for_each_homogeneous_vector(
        m.field(), m.space(), caps, [&](int deg, const std::vector<Scalar>& v) {
          const auto cyc = cyclic_submodule(m, deg, v);
          if (std::find(cyclics.begin(), cyclics.end(), cyc) == cyclics.end())
            cyclics.push_back(cyc);
          return true;
        });
    std::vector<GradedSubspace> minimal;
    for (const auto& c : cyclics) {
      bool is_min = true;
      for (const auto& other : cyclics)
        if (other != c && !other.is_zero() && contains(c, other)) is_min = false;
      if (is_min) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end());
    GradedSubspace span_so_far = GradedSubspace::zero(m.field(), m.space());
    for (const auto& s : minimal) {
      if (!intersect(span_so_far, s).is_zero()) continue;
      out.summands.push_back(s);
      span_so_far = sum(span_so_far, s);
      if (span_so_far.is_whole()) break;
    }
    if (!span_so_far.is_whole())
      throw InternalCheckFailure(
          "semisimple decomposition failed to exhaust the module");
    out.complete = true;
    return out;
  }

  // endomorphism route: split recursively until simple pieces are certified
  const auto simple = is_dg_simple(m, caps);
  if (simple.status == SimplicityResult::Status::Simple) {
    out.summands.push_back(GradedSubspace::whole(m.field(), m.space()));
    out.complete = true;
    return out;
  }
  if (simple.status == SimplicityResult::Status::Undetermined) {
    out.complete = false;
    out.note = simple.note;
    return out;
  }

  const GradedSubspace w = *simple.certificate;
  // complement: an idempotent A-linear chain endomorphism with image w fixing
  // w pointwise; existence is semisimplicity
  const auto homs = hom_dg(m, m);
  const auto& field = m.field();
  // solve for coefficients c: (sum c_k phi_k)(v) = v for v in w basis and
  // im(sum c_k phi_k) <= w
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (const auto& [deg, b] : w.basis()) {
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
  }
  // im <= w: for every ambient basis vector, the image reduced mod w vanishes
  for (const auto& [deg, dim] : m.space().dims()) {
    for (std::size_t c = 0; c < dim; ++c) {
      std::vector<Scalar> unit(dim, Scalar::zero(field));
      unit[c] = Scalar::one(field);
      std::vector<std::vector<Scalar>> images(homs.size());
      for (std::size_t k = 0; k < homs.size(); ++k)
        images[k] = w.reduce(deg, homs[k].block(deg).apply(unit));
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
  }
  const Matrix system = Matrix::from_rows(field, homs.size(), rows);
  const auto sol = system.solve(rhs);
  if (!sol.has_value()) {
    out.complete = false;
    out.note = "no idempotent projection onto the found submodule";
    return out;
  }
  HomogeneousMap proj(field, m.space(), m.space(), 0);
  for (const auto& [deg, dim] : m.space().dims()) {
    Matrix blk(field, dim, dim);
    for (std::size_t k = 0; k < homs.size(); ++k) {
      if ((*sol)[k].is_zero()) continue;
      blk = blk + homs[k].block(deg).scaled((*sol)[k]);
    }
    proj.set_block(deg, std::move(blk));
  }
  const GradedSubspace complement = kernel(proj);
  if (sum(complement, w).total_dim() != m.dim())
    throw InternalCheckFailure("projection complement is not a complement");

  for (const auto& piece : {w, complement}) {
    const auto view = submodule_as_module(m, piece);
    const auto sub_dec = decompose_semisimple(view.module, caps);
    if (!sub_dec.complete) {
      out.complete = false;
      out.note = sub_dec.note;
      return out;
    }
    for (const auto& s : sub_dec.summands)
      out.summands.push_back(push_carrier(m, view, s));
  }
  out.complete = true;
  return out;
}

MaximalSubmodules maximal_dg_submodules(const DgModule& m, const Caps& caps) {
  if (m.dim() == 0)
    throw std::invalid_argument("maximal submodules of the zero module");
  MaximalSubmodules out;

  const auto& env = envelope_radical(m.over(), caps);
  out.radical = envelope_radical_of_module(m, env.radical);
  if (out.radical.is_whole())
    throw InternalCheckFailure("rad(M) = M contradicts dg-Nakayama");

  const auto quot_view = quotient_module(m, out.radical);
  const DgModule& q = quot_view.module;

  const auto decomposition = decompose_semisimple(q, caps);
  if (!decomposition.complete) {
    out.complete = false;
    out.note = "semisimple quotient decomposition incomplete: " +
               decomposition.note;
    return out;
  }

  // group summands into isotypic classes by degree-0 isomorphism
  std::vector<SubmoduleView> views;
  views.reserve(decomposition.summands.size());
  for (const auto& s : decomposition.summands)
    views.push_back(submodule_as_module(q, s));
  std::vector<int> class_of(views.size(), -1);
  std::vector<std::size_t> class_reps;
  for (std::size_t i = 0; i < views.size(); ++i) {
    for (std::size_t rc = 0; rc < class_reps.size(); ++rc) {
      const IsoStatus st = is_isomorphic(views[i].module,
                                         views[class_reps[rc]].module, caps,
                                         /*both_simple=*/true);
      if (st == IsoStatus::Isomorphic) {
        class_of[i] = static_cast<int>(rc);
        break;
      }
    }
    if (class_of[i] < 0) {
      class_of[i] = static_cast<int>(class_reps.size());
      class_reps.push_back(i);
    }
  }

  auto lift_to_m = [&](const GradedSubspace& carrier_in_q) {
    // preimage under the projection: radical + section of the carrier
    std::map<int, Matrix> gens;
    for (const auto& [deg, b] : out.radical.basis()) gens[deg] = b;
    for (const auto& [deg, b] : carrier_in_q.basis()) {
      std::vector<std::vector<Scalar>> rows;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        std::vector<Scalar> global(m.dim(), Scalar::zero(m.field()));
        for (std::size_t c = 0; c < b.cols(); ++c) {
          const Scalar& weight = b.at(r, c);
          if (weight.is_zero()) continue;
          const std::size_t qi = q.basis().global_index(deg, c);
          for (std::size_t t = 0; t < m.dim(); ++t)
            global[t] += weight * quot_view.section[qi][t];
        }
        rows.push_back(m.basis().component_of(global, deg, m.field()));
      }
      Matrix gen = Matrix::from_rows(m.field(), m.space().dim(deg), rows);
      auto it = gens.find(deg);
      if (it == gens.end())
        gens[deg] = gen;
      else
        it->second = it->second.vstack(gen);
    }
    return GradedSubspace::span(m.field(), m.space(), gens);
  };

  std::set<GradedSubspace> collected;
  for (std::size_t rc = 0; rc < class_reps.size(); ++rc) {
    // members of this isotypic class
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < views.size(); ++i)
      if (class_of[i] == static_cast<int>(rc)) members.push_back(i);

    const DgModule& s_rep = views[class_reps[rc]].module;
    const auto homs = hom_dg(q, s_rep);
    if (homs.empty())
      throw InternalCheckFailure("no projection onto a summand");

    if (members.size() == 1 && m.field().is_rationals()) {
      // unique maximal submodule for this class: the kernel of any nonzero
      // projection, namely the sum of all other summands plus nothing
      const GradedSubspace ker0 = kernel(homs.front());
      collected.insert(lift_to_m(ker0));
      continue;
    }

    if (!m.field().is_rationals()) {
      // enumerate the hom space over F_q; kernels of nonzero homs are
      // exactly the maximal submodules with quotient in this class
      double count = 1;
      bool feasible = true;
      for (std::size_t i = 0; i < homs.size(); ++i) {
        count *= static_cast<double>(m.field().p);
        if (count > static_cast<double>(caps.max_hom_enum)) feasible = false;
      }
      if (!feasible) {
        out.complete = false;
        out.note = "hom-space enumeration over F_q exceeds the cap";
        continue;
      }
      const std::uint64_t p = m.field().p;
      std::vector<std::size_t> digits(homs.size(), 0);
      while (true) {
        bool zero = true;
        for (std::size_t d : digits) zero = zero && d == 0;
        if (!zero) {
          HomogeneousMap phi(m.field(), q.space(), s_rep.space(), 0);
          for (const auto& [deg, dim] : q.space().dims()) {
            if (s_rep.space().dim(deg) == 0) continue;
            Matrix blk(m.field(), s_rep.space().dim(deg), dim);
            for (std::size_t k = 0; k < homs.size(); ++k) {
              if (digits[k] == 0) continue;
              blk = blk + homs[k].block(deg).scaled(
                              Scalar(m.field(),
                                     static_cast<long long>(digits[k])));
            }
            phi.set_block(deg, std::move(blk));
          }
          if (!phi.is_zero()) {
            const auto im = image(phi);
            // surjective onto the simple rep iff nonzero
            collected.insert(lift_to_m(kernel(phi)));
            (void)im;
          }
        }
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
        if (pos == digits.size()) break;
      }
      continue;
    }

    // rationals with multiplicity >= 2: an infinite family
    MaximalFamily family;
    family.hom_dimension = homs.size();
    family.description =
        "isotypic multiplicity " + std::to_string(members.size()) +
        ": maximal dg-submodules are kernels of the nonzero elements of a " +
        std::to_string(homs.size()) +
        "-dimensional hom space onto the class representative (a projective "
        "family over the base field)";
    for (const auto& phi : homs)
      if (!phi.is_zero()) family.representatives.push_back(lift_to_m(kernel(phi)));
    if (homs.size() >= 2) {
      HomogeneousMap mixed(m.field(), q.space(), s_rep.space(), 0);
      for (const auto& [deg, dim] : q.space().dims()) {
        if (s_rep.space().dim(deg) == 0) continue;
        mixed.set_block(deg, homs[0].block(deg) + homs[1].block(deg));
      }
      family.representatives.push_back(lift_to_m(kernel(mixed)));
    }
    std::sort(family.representatives.begin(), family.representatives.end());
    family.representatives.erase(
        std::unique(family.representatives.begin(),
                    family.representatives.end()),
        family.representatives.end());
    out.families.push_back(std::move(family));
    out.complete = false;
  }

  out.maximals.assign(collected.begin(), collected.end());
  if (!out.families.empty() &&
      out.note.empty())
    out.note = "isotypic multiplicity over the rationals yields infinite "
               "families; representatives returned, never truncated silently";
  return out;
}

namespace {

std::string factor_tag(std::vector<DgModule>& registry, const DgModule& factor,
                       const Caps& caps) {
  for (std::size_t k = 0; k < registry.size(); ++k) {
    const auto iso = is_isomorphic_up_to_shift(factor, registry[k], caps,
                                               /*both_simple=*/true);
    if (iso.status == IsoStatus::Isomorphic)
      return "S" + std::to_string(k);
  }
  registry.push_back(factor);
  return "S" + std::to_string(registry.size() - 1);
}

/// One descending series step: deterministic choice of maximal submodule.
std::optional<GradedSubspace> choose_maximal(const DgModule& current,
                                             const Caps& caps) {
  const auto maximals = maximal_dg_submodules(current, caps);
  std::vector<GradedSubspace> candidates = maximals.maximals;
  for (const auto& fam : maximals.families)
    candidates.insert(candidates.end(), fam.representatives.begin(),
                      fam.representatives.end());
  if (candidates.empty()) {
    if (!maximals.complete)
      throw Undecidable("maximal submodule search incomplete: " +
                        maximals.note);
    return std::nullopt;  // simple
  }
  std::sort(candidates.begin(), candidates.end());
  return candidates.front();
}

}  // namespace

CompositionSeries composition_series(const DgModule& m, const Caps& caps) {
  CompositionSeries series;
  std::vector<DgModule> registry;
  std::vector<DgModule> factor_modules;

  std::vector<GradedSubspace> descending;
  descending.push_back(GradedSubspace::whole(m.field(), m.space()));
  GradedSubspace current_carrier = descending.back();

  while (current_carrier.total_dim() > 0) {
    const auto view = submodule_as_module(m, current_carrier);
    const auto chosen = choose_maximal(view.module, caps);
    GradedSubspace next_in_view =
        chosen.value_or(GradedSubspace::zero(m.field(), view.module.space()));
    const auto factor = quotient_module(view.module, next_in_view).module;
    series.factors.push_back(
        {factor.space(), factor_tag(registry, factor, caps)});
    factor_modules.push_back(factor);
    current_carrier = push_carrier(m, view, next_in_view);
    descending.push_back(current_carrier);
  }

  series.chain.assign(descending.rbegin(), descending.rend());
  std::reverse(series.factors.begin(), series.factors.end());
  return series;
}

namespace {

/// Multiset matching of factors by shift-isomorphism; needs the modules, so
/// both series are re-derived from their chains.
std::vector<DgModule> factors_of_chain(const DgModule& m,
                                       const CompositionSeries& s) {
  std::vector<DgModule> out;
  for (std::size_t i = 0; i + 1 < s.chain.size(); ++i) {
    const auto view = submodule_as_module(m, s.chain[i + 1]);
    const auto sub_in_view = restrict_carrier(view, s.chain[i]);
    out.push_back(quotient_module(view.module, sub_in_view).module);
  }
  return out;
}

}  // namespace

bool jordan_hoelder_equal(const DgModule& m, const CompositionSeries& s1,
                          const CompositionSeries& s2, const Caps& caps) {
  if (s1.length() != s2.length()) return false;
  const auto f1 = factors_of_chain(m, s1);
  auto f2 = factors_of_chain(m, s2);
  std::vector<bool> used(f2.size(), false);
  for (const auto& a : f1) {
    bool matched = false;
    for (std::size_t j = 0; j < f2.size() && !matched; ++j) {
      if (used[j]) continue;
      const auto iso = is_isomorphic_up_to_shift(a, f2[j], caps,
                                                 /*both_simple=*/true);
      if (iso.status == IsoStatus::Isomorphic) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

namespace {

void collect_series(const DgModule& m, const GradedSubspace& current,
                    std::vector<GradedSubspace>& chain_desc,
                    std::vector<CompositionSeries>& out, const Caps& caps,
                    std::size_t max_branches) {
  if (out.size() >= max_branches) return;
  if (current.total_dim() == 0) {
    CompositionSeries series;
    series.chain.assign(chain_desc.rbegin(), chain_desc.rend());
    for (std::size_t i = 0; i + 1 < series.chain.size(); ++i)
      series.factors.push_back({GradedSpace{}, ""});
    out.push_back(std::move(series));
    return;
  }
  const auto view = submodule_as_module(m, current);
  const auto maximals = maximal_dg_submodules(view.module, caps);
  std::vector<GradedSubspace> candidates = maximals.maximals;
  for (const auto& fam : maximals.families)
    candidates.insert(candidates.end(), fam.representatives.begin(),
                      fam.representatives.end());
  if (candidates.empty()) {
    std::vector<GradedSubspace> next = chain_desc;
    next.push_back(GradedSubspace::zero(m.field(), m.space()));
    collect_series(m, GradedSubspace::zero(m.field(), m.space()), next, out,
                   caps, max_branches);
    return;
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& cand : candidates) {
    const auto lifted = push_carrier(m, view, cand);
    std::vector<GradedSubspace> next = chain_desc;
    next.push_back(lifted);
    collect_series(m, lifted, next, out, caps, max_branches);
    if (out.size() >= max_branches) return;
  }
}

}  // namespace

std::vector<CompositionSeries> all_composition_series(const DgModule& m,
                                                      const Caps& caps,
                                                      std::size_t max_branches) {
  std::vector<CompositionSeries> out;
  std::vector<GradedSubspace> chain{GradedSubspace::whole(m.field(), m.space())};
  collect_series(m, chain.front(), chain, out, caps, max_branches);
  return out;
}

}  // namespace dgkit
