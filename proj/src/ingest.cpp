#include "dgkit/ingest.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace dgkit::ingest {

using nlohmann::json;

namespace {

bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

void require_keys(const json& obj, const std::string& pointer,
                  const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!obj.is_object()) throw DocumentError("expected an object", pointer);
  for (const auto& [key, value] : obj.items()) {
    if (!required.count(key) && !optional.count(key))
      throw DocumentError("unknown field '" + key + "'", pointer);
  }
  for (const auto& key : required)
    if (!obj.contains(key))
      throw DocumentError("missing field '" + key + "'", pointer);
}

FieldSpec parse_field(const json& j, const std::string& pointer) {
  require_keys(j, pointer, {"kind"}, {"p"});
  const auto kind = j.at("kind");
  if (!kind.is_string()) throw DocumentError("kind must be a string", pointer + "/kind");
  if (kind == "rationals") {
    if (j.contains("p"))
      throw DocumentError("p is only valid for prime fields", pointer + "/p");
    return FieldSpec::rationals();
  }
  if (kind == "prime") {
    if (!j.contains("p") || !j.at("p").is_number_unsigned())
      throw DocumentError("prime field requires an unsigned p", pointer + "/p");
    try {
      return FieldSpec::prime(j.at("p").get<std::uint32_t>());
    } catch (const InvalidField& e) {
      throw DocumentError(e.what(), pointer + "/p");
    }
  }
  throw DocumentError("kind must be 'rationals' or 'prime'", pointer + "/kind");
}

std::vector<Scalar> parse_coords(const json& j, const std::string& pointer,
                                 const FieldSpec& field, std::size_t len) {
  if (!j.is_array() || j.size() != len)
    throw DocumentError("expected an array of " + std::to_string(len) +
                        " scalar strings", pointer);
  std::vector<Scalar> out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) {
    if (!j[k].is_string())
      throw DocumentError("scalar entries are strings",
                          pointer + "/" + std::to_string(k));
    try {
      out.push_back(Scalar::parse(field, j[k].get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw DocumentError(e.what(), pointer + "/" + std::to_string(k));
    }
  }
  return out;
}

struct BasisData {
  std::vector<std::string> names;
  std::vector<int> degrees;
};

BasisData parse_basis(const json& j, const std::string& pointer,
                      const Caps& caps) {
  if (!j.is_array() || j.empty())
    throw DocumentError("basis must be a non-empty array", pointer);
  if (j.size() > caps.max_total_dim)
    throw DocumentError("total dimension " + std::to_string(j.size()) +
                        " exceeds the configured cap of " +
                        std::to_string(caps.max_total_dim), pointer);
  BasisData out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = pointer + "/" + std::to_string(i);
    require_keys(j[i], p, {"name", "degree"});
    if (!j[i].at("name").is_string())
      throw DocumentError("name must be a string", p + "/name");
    if (!j[i].at("degree").is_number_integer())
      throw DocumentError("degree must be an integer", p + "/degree");
    const std::string name = j[i].at("name").get<std::string>();
    if (!seen.insert(name).second)
      throw DocumentError("duplicate basis name '" + name + "'", p + "/name");
    out.names.push_back(name);
    out.degrees.push_back(j[i].at("degree").get<int>());
  }
  return out;
}

/// Builds a degree +1 homogeneous map from sparse images, rejecting entries
/// that land outside degree |b_i| + 1.
HomogeneousMap parse_differential(const json& j, const std::string& pointer,
                                  const FieldSpec& field,
                                  const GradedBasis& basis) {
  const std::size_t n = basis.total_dim();
  std::vector<std::vector<Scalar>> images(
      n, std::vector<Scalar>(n, Scalar::zero(field)));
  if (!j.is_array()) throw DocumentError("expected an array", pointer);
  std::set<std::size_t> seen;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = pointer + "/" + std::to_string(k);
    require_keys(j[k], p, {"i", "coords"});
    if (!j[k].at("i").is_number_unsigned())
      throw DocumentError("i must be an unsigned index", p + "/i");
    const std::size_t i = j[k].at("i").get<std::size_t>();
    if (i >= n) throw DocumentError("basis index out of range", p + "/i");
    if (!seen.insert(i).second)
      throw DocumentError("duplicate differential entry", p + "/i");
    images[i] = parse_coords(j[k].at("coords"), p + "/coords", field, n);
    for (std::size_t t = 0; t < n; ++t)
      if (!images[i][t].is_zero() &&
          basis.degree_of(t) != basis.degree_of(i) + 1)
        throw DocumentError(
            "differential must have degree +1 (image of index " +
            std::to_string(i) + " meets degree " +
            std::to_string(basis.degree_of(t)) + ")", p + "/coords");
  }

  HomogeneousMap d(field, basis.space(), basis.space(), 1);
  for (const auto& [deg, dim] : basis.space().dims()) {
    const std::size_t dst = basis.space().dim(deg + 1);
    if (dst == 0) continue;
    Matrix blk(field, dst, dim);
    for (std::size_t col = 0; col < dim; ++col) {
      const auto& img = images[basis.global_index(deg, col)];
      for (std::size_t row = 0; row < dst; ++row)
        blk.set(row, col, img[basis.global_index(deg + 1, row)]);
    }
    d.set_block(deg, std::move(blk));
  }
  return d;
}

json field_to_json(const FieldSpec& field) {
  json j;
  if (field.is_rationals()) {
    j["kind"] = "rationals";
  } else {
    j["kind"] = "prime";
    j["p"] = field.p;
  }
  return j;
}

json coords_to_json(const std::vector<Scalar>& coords) {
  json arr = json::array();
  for (const auto& s : coords) arr.push_back(s.str());
  return arr;
}

json basis_to_json(const std::vector<std::string>& names,
                   const GradedBasis& basis) {
  json arr = json::array();
  for (std::size_t i = 0; i < names.size(); ++i)
    arr.push_back(json{{"degree", basis.degree_of(i)}, {"name", names[i]}});
  return arr;
}

json differential_to_json(const GradedBasis& basis, const FieldSpec& field,
                          const HomogeneousMap& d) {
  json arr = json::array();
  const std::size_t n = basis.total_dim();
  for (std::size_t i = 0; i < n; ++i) {
    const int deg = basis.degree_of(i);
    const auto img_local =
        d.apply_component(deg, [&] {
          std::vector<Scalar> unit(basis.space().dim(deg), Scalar::zero(field));
          unit[basis.local_index(i)] = Scalar::one(field);
          return unit;
        }());
    std::vector<Scalar> img(n, Scalar::zero(field));
    if (!img_local.empty()) img = basis.embed(deg + 1, img_local, field);
    if (all_zero(img)) continue;
    arr.push_back(json{{"coords", coords_to_json(img)}, {"i", i}});
  }
  return arr;
}

}  // namespace

ParsedDocument parse_document(const std::string& text, const Caps& caps) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  require_keys(root, "", {"format_version", "field", "basis", "unit", "mul",
                          "diff"},
               {"modules"});
  if (!root.at("format_version").is_number_integer() ||
      root.at("format_version").get<int>() != 1)
    throw DocumentError("unsupported format_version", "/format_version");

  const FieldSpec field = parse_field(root.at("field"), "/field");
  const BasisData basis_data = parse_basis(root.at("basis"), "/basis", caps);
  const std::size_t n = basis_data.names.size();
  const GradedBasis basis(basis_data.degrees);

  const auto unit = parse_coords(root.at("unit"), "/unit", field, n);

  std::vector<std::vector<std::vector<Scalar>>> mul(
      n, std::vector<std::vector<Scalar>>(
             n, std::vector<Scalar>(n, Scalar::zero(field))));
  if (!root.at("mul").is_array()) throw DocumentError("expected an array", "/mul");
  std::set<std::pair<std::size_t, std::size_t>> seen_mul;
  for (std::size_t k = 0; k < root.at("mul").size(); ++k) {
    const std::string p = "/mul/" + std::to_string(k);
    const json& entry = root.at("mul")[k];
    require_keys(entry, p, {"i", "j", "coords"});
    if (!entry.at("i").is_number_unsigned() ||
        !entry.at("j").is_number_unsigned())
      throw DocumentError("i and j must be unsigned indices", p);
    const std::size_t i = entry.at("i").get<std::size_t>();
    const std::size_t jj = entry.at("j").get<std::size_t>();
    if (i >= n || jj >= n)
      throw DocumentError("basis index out of range", p);
    if (!seen_mul.insert({i, jj}).second)
      throw DocumentError("duplicate product entry", p);
    mul[i][jj] = parse_coords(entry.at("coords"), p + "/coords", field, n);
  }

  const HomogeneousMap d =
      parse_differential(root.at("diff"), "/diff", field, basis);

  ParsedDocument out;
  out.algebra = std::make_shared<DgAlgebra>(
      GradedAlgebra(field, basis_data.names, basis_data.degrees, mul, unit), d);

  if (root.contains("modules")) {
    if (!root.at("modules").is_array())
      throw DocumentError("expected an array", "/modules");
    for (std::size_t mi = 0; mi < root.at("modules").size(); ++mi) {
      const std::string p = "/modules/" + std::to_string(mi);
      const json& mj = root.at("modules")[mi];
      require_keys(mj, p, {"basis", "action", "delta"}, {"name"});
      std::string mod_name = "module" + std::to_string(mi);
      if (mj.contains("name")) {
        if (!mj.at("name").is_string())
          throw DocumentError("name must be a string", p + "/name");
        mod_name = mj.at("name").get<std::string>();
      }
      const BasisData mbasis = parse_basis(mj.at("basis"), p + "/basis", caps);
      const std::size_t md = mbasis.names.size();
      const GradedBasis mb(mbasis.degrees);

      std::vector<std::vector<std::vector<Scalar>>> action(
          n, std::vector<std::vector<Scalar>>(
                 md, std::vector<Scalar>(md, Scalar::zero(field))));
      if (!mj.at("action").is_array())
        throw DocumentError("expected an array", p + "/action");
      std::set<std::pair<std::size_t, std::size_t>> seen_action;
      for (std::size_t k = 0; k < mj.at("action").size(); ++k) {
        const std::string pa = p + "/action/" + std::to_string(k);
        const json& entry = mj.at("action")[k];
        require_keys(entry, pa, {"a", "m", "coords"});
        if (!entry.at("a").is_number_unsigned() ||
            !entry.at("m").is_number_unsigned())
          throw DocumentError("a and m must be unsigned indices", pa);
        const std::size_t ai = entry.at("a").get<std::size_t>();
        const std::size_t mi2 = entry.at("m").get<std::size_t>();
        if (ai >= n || mi2 >= md)
          throw DocumentError("index out of range", pa);
        if (!seen_action.insert({ai, mi2}).second)
          throw DocumentError("duplicate action entry", pa);
        action[ai][mi2] =
            parse_coords(entry.at("coords"), pa + "/coords", field, md);
      }
      const HomogeneousMap delta =
          parse_differential(mj.at("delta"), p + "/delta", field, mb);
      out.modules.emplace_back(out.algebra, mbasis.names, mbasis.degrees,
                               action, delta);
      out.module_names.push_back(mod_name);
    }
  }
  return out;
}

std::string emit_document(const DgAlgebra& algebra,
                          const std::vector<DgModule>& modules,
                          const std::vector<std::string>& module_names) {
  const auto& field = algebra.field();
  const std::size_t n = algebra.dim();
  json root;
  root["format_version"] = 1;
  root["field"] = field_to_json(field);
  root["basis"] = basis_to_json(algebra.algebra().names(), algebra.basis());
  root["unit"] = coords_to_json(algebra.algebra().unit());

  json mul = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& coords = algebra.algebra().mul_basis(i, j);
      if (all_zero(coords)) continue;
      mul.push_back(json{{"coords", coords_to_json(coords)}, {"i", i}, {"j", j}});
    }
  root["mul"] = mul;
  root["diff"] =
      differential_to_json(algebra.basis(), field, algebra.differential());

  if (!modules.empty()) {
    json mods = json::array();
    for (std::size_t mi = 0; mi < modules.size(); ++mi) {
      const DgModule& m = modules[mi];
      json mj;
      mj["name"] = mi < module_names.size() ? module_names[mi]
                                            : "module" + std::to_string(mi);
      mj["basis"] = basis_to_json(m.names(), m.basis());
      json action = json::array();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < m.dim(); ++j) {
          const auto& coords = m.action_basis(a, j);
          if (all_zero(coords)) continue;
          action.push_back(
              json{{"a", a}, {"coords", coords_to_json(coords)}, {"m", j}});
        }
      mj["action"] = action;
      mj["delta"] = differential_to_json(m.basis(), field, m.delta());
      mods.push_back(mj);
    }
    root["modules"] = mods;
  }
  return root.dump(2) + "\n";
}

ValidationReport validate_document(const ParsedDocument& doc) {
  ValidationReport report = validate_algebra(doc.algebra->algebra());
  report.merge(
      validate_differential(doc.algebra->algebra(), doc.algebra->differential()));
  for (std::size_t i = 0; i < doc.modules.size(); ++i) {
    ValidationReport mr = validate_module(doc.modules[i]);
    for (const auto& v : mr.violations)
      report.add(doc.module_names[i] + ": " + v);
  }
  return report;
}

// --- fixtures ----------------------------------------------------------------

namespace {

std::shared_ptr<const DgAlgebra> make_algebra(
    const FieldSpec& field, std::vector<std::string> names,
    std::vector<int> degrees,
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t,
                                 long long>>& products,
    const std::vector<long long>& unit_coords,
    const std::vector<std::tuple<std::size_t, std::size_t, long long>>& diff) {
  const std::size_t n = names.size();
  std::vector<std::vector<std::vector<Scalar>>> mul(
      n, std::vector<std::vector<Scalar>>(
             n, std::vector<Scalar>(n, Scalar::zero(field))));
  for (const auto& [i, j, k, c] : products)
    mul[i][j][k] = Scalar(field, c);
  std::vector<Scalar> unit;
  for (long long c : unit_coords) unit.push_back(Scalar(field, c));

  GradedBasis basis(degrees);
  HomogeneousMap d(field, basis.space(), basis.space(), 1);
  std::vector<std::vector<Scalar>> images(
      n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (const auto& [i, k, c] : diff) images[i][k] = Scalar(field, c);
  for (const auto& [deg, dim] : basis.space().dims()) {
    const std::size_t dst = basis.space().dim(deg + 1);
    if (dst == 0) continue;
    Matrix blk(field, dst, dim);
    for (std::size_t col = 0; col < dim; ++col) {
      const auto& img = images[basis.global_index(deg, col)];
      for (std::size_t row = 0; row < dst; ++row)
        blk.set(row, col, img[basis.global_index(deg + 1, row)]);
    }
    d.set_block(deg, std::move(blk));
  }
  return std::make_shared<DgAlgebra>(
      GradedAlgebra(field, std::move(names), std::move(degrees),
                    std::move(mul), std::move(unit)),
      std::move(d));
}

}  // namespace

std::vector<std::string> builtin_fixture_names() {
  return {"MAT2", "DUAL", "SS0", "UT2"};
}

std::shared_ptr<const DgAlgebra> builtin_fixture(const std::string& name,
                                                 const FieldSpec& field) {
  if (name == "MAT2") {
    // basis e11, e12, e21, e22; degrees forced by homogeneity of d
    return make_algebra(
        field, {"e11", "e12", "e21", "e22"}, {0, 1, -1, 0},
        {
            {0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 0, 1}, {1, 3, 1, 1},
            {2, 0, 2, 1}, {2, 1, 3, 1}, {3, 2, 2, 1}, {3, 3, 3, 1},
        },
        {1, 0, 0, 1},
        // d(e11) = -e12, d(e21) = e11 + e22, d(e22) = e12
        {{0, 1, -1}, {2, 0, 1}, {2, 3, 1}, {3, 1, 1}});
  }
  if (name == "DUAL") {
    // K[X]/X^2, |X| = -1, d(X) = 1
    return make_algebra(field, {"1", "x"}, {0, -1},
                        {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}},
                        {1, 0}, {{1, 0, 1}});
  }
  if (name == "SS0") {
    // K x K in degree 0, zero differential
    return make_algebra(field, {"u", "v"}, {0, 0},
                        {{0, 0, 0, 1}, {1, 1, 1, 1}}, {1, 1}, {});
  }
  if (name == "UT2") {
    // upper-triangular 2x2, trivial grading, zero differential
    return make_algebra(
        field, {"e11", "e12", "e22"}, {0, 0, 0},
        {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}},
        {1, 0, 1}, {});
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

// --- generators ---------------------------------------------------------------

RecipeKind recipe_from_name(const std::string& name) {
  if (name == "graded_matrix") return RecipeKind::GradedMatrix;
  if (name == "truncated_path_algebra") return RecipeKind::TruncatedPathAlgebra;
  if (name == "acyclic_cone_extension") return RecipeKind::AcyclicConeExtension;
  if (name == "direct_product") return RecipeKind::DirectProduct;
  if (name == "radical_square_zero") return RecipeKind::RadicalSquareZero;
  throw std::invalid_argument("unknown recipe '" + name + "'");
}

std::string recipe_name(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::GradedMatrix: return "graded_matrix";
    case RecipeKind::TruncatedPathAlgebra: return "truncated_path_algebra";
    case RecipeKind::AcyclicConeExtension: return "acyclic_cone_extension";
    case RecipeKind::DirectProduct: return "direct_product";
    case RecipeKind::RadicalSquareZero: return "radical_square_zero";
  }
  throw std::logic_error("unreachable");
}

std::vector<std::string> recipe_names() {
  return {"graded_matrix", "truncated_path_algebra", "acyclic_cone_extension",
          "direct_product", "radical_square_zero"};
}

std::vector<HomogeneousMap> leibniz_solution_space(const GradedAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  const auto& field = algebra.field();
  const auto& basis = algebra.basis();

  // variables: entries D[t][s] with |b_t| = |b_s| + 1
  std::vector<std::pair<std::size_t, std::size_t>> vars;  // (t, s)
  std::vector<std::vector<std::size_t>> var_index(
      n, std::vector<std::size_t>(n, SIZE_MAX));
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t s = 0; s < n; ++s)
      if (basis.degree_of(t) == basis.degree_of(s) + 1) {
        var_index[t][s] = vars.size();
        vars.emplace_back(t, s);
      }
  if (vars.empty()) return {};

  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& prod = algebra.mul_basis(i, j);
      const int sign = basis.degree_of(i) % 2 == 0 ? 1 : -1;
      // coordinate k of: d(b_i b_j) - d(b_i) b_j - (-1)^{|b_i|} b_i d(b_j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Scalar> row(vars.size(), Scalar::zero(field));
        bool nonzero = false;
        for (std::size_t s = 0; s < n; ++s) {
          if (prod[s].is_zero()) continue;
          const std::size_t v = var_index[k][s];
          if (v == SIZE_MAX) continue;
          row[v] += prod[s];
          nonzero = true;
        }
        for (std::size_t t = 0; t < n; ++t) {
          // -D[t][i] * (b_t b_j)_k
          const std::size_t v1 = var_index[t][i];
          if (v1 != SIZE_MAX) {
            const Scalar& c = algebra.mul_basis(t, j)[k];
            if (!c.is_zero()) {
              row[v1] -= c;
              nonzero = true;
            }
          }
          // -sign * D[t][j] * (b_i b_t)_k
          const std::size_t v2 = var_index[t][j];
          if (v2 != SIZE_MAX) {
            Scalar c = algebra.mul_basis(i, t)[k];
            if (!c.is_zero()) {
              if (sign < 0) c = -c;
              row[v2] -= c;
              nonzero = true;
            }
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }

  const Matrix system = rows.empty()
                            ? Matrix(field, 0, vars.size())
                            : Matrix::from_rows(field, vars.size(), rows);
  const Matrix null_rows = system.kernel();

  std::vector<HomogeneousMap> out;
  for (std::size_t r = 0; r < null_rows.rows(); ++r) {
    std::vector<std::vector<Scalar>> images(
        n, std::vector<Scalar>(n, Scalar::zero(field)));
    for (std::size_t v = 0; v < vars.size(); ++v)
      images[vars[v].second][vars[v].first] = null_rows.at(r, v);
    HomogeneousMap d(field, basis.space(), basis.space(), 1);
    for (const auto& [deg, dim] : basis.space().dims()) {
      const std::size_t dst = basis.space().dim(deg + 1);
      if (dst == 0) continue;
      Matrix blk(field, dst, dim);
      for (std::size_t col = 0; col < dim; ++col) {
        const auto& img = images[basis.global_index(deg, col)];
        for (std::size_t row2 = 0; row2 < dst; ++row2)
          blk.set(row2, col, img[basis.global_index(deg + 1, row2)]);
      }
      d.set_block(deg, std::move(blk));
    }
    out.push_back(std::move(d));
  }
  return out;
}

namespace {

HomogeneousMap combine_maps(const std::vector<HomogeneousMap>& basis_maps,
                            const std::vector<Scalar>& coeffs,
                            const FieldSpec& field, const GradedSpace& space) {
  HomogeneousMap out(field, space, space, 1);
  for (const auto& [deg, dim] : space.dims()) {
    const std::size_t dst = space.dim(deg + 1);
    if (dst == 0) continue;
    Matrix blk(field, dst, dim);
    for (std::size_t k = 0; k < basis_maps.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      blk = blk + basis_maps[k].block(deg).scaled(coeffs[k]);
    }
    out.set_block(deg, std::move(blk));
  }
  return out;
}

/// Samples the Leibniz solution space for a nonzero d with d^2 = 0.
std::optional<HomogeneousMap> sample_square_zero(
    const GradedAlgebra& algebra, const std::vector<HomogeneousMap>& space,
    Rng& rng, std::size_t attempts) {
  if (space.empty()) return std::nullopt;
  const auto& field = algebra.field();
  auto valid = [&](const HomogeneousMap& d) {
    if (d.is_zero()) return false;
    if (!d.compose_after(d).is_zero()) return false;
    return validate_differential(algebra, d).ok();
  };
  // single basis elements first, then seeded combinations
  for (const auto& d : space)
    if (valid(d)) return d;
  for (std::size_t t = 0; t < attempts; ++t) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(space.size());
    for (std::size_t k = 0; k < space.size(); ++k)
      coeffs.push_back(field.is_rationals()
                           ? Scalar(field, rng.signed_amp(2))
                           : Scalar(field, static_cast<long long>(
                                               rng.below(field.p))));
    const auto d = combine_maps(space, coeffs, field, algebra.space());
    if (valid(d)) return d;
  }
  return std::nullopt;
}

struct Arrow {
  std::size_t from, to;
  int degree;
};

std::shared_ptr<const DgAlgebra> build_path_algebra(
    const FieldSpec& field, std::size_t vertices,
    const std::vector<Arrow>& arrows, std::size_t max_path_len) {
  struct Path {
    std::size_t from, to;
    std::vector<std::size_t> arrow_seq;  // applied right-to-left
    int degree;
  };
  std::vector<Path> paths;
  for (std::size_t v = 0; v < vertices; ++v)
    paths.push_back({v, v, {}, 0});
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len < max_path_len; ++len) {
    const std::size_t level_end = paths.size();
    for (std::size_t p = level_begin; p < level_end; ++p)
      for (std::size_t a = 0; a < arrows.size(); ++a)
        if (arrows[a].from == paths[p].to) {
          Path ext = paths[p];
          ext.arrow_seq.push_back(a);
          ext.to = arrows[a].to;
          ext.degree += arrows[a].degree;
          paths.push_back(std::move(ext));
        }
    level_begin = level_end;
  }

  const std::size_t n = paths.size();
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (const auto& p : paths) {
    if (p.arrow_seq.empty()) {
      names.push_back("e" + std::to_string(p.from));
    } else {
      std::string nm = "p";
      for (std::size_t a : p.arrow_seq) nm += std::to_string(a);
      names.push_back(nm);
    }
    degrees.push_back(p.degree);
  }

  auto find_path = [&](std::size_t from, std::size_t to,
                       const std::vector<std::size_t>& seq) -> std::size_t {
    for (std::size_t k = 0; k < n; ++k)
      if (paths[k].from == from && paths[k].to == to &&
          paths[k].arrow_seq == seq)
        return k;
    return SIZE_MAX;
  };

  std::vector<std::vector<std::vector<Scalar>>> mul(
      n, std::vector<std::vector<Scalar>>(
             n, std::vector<Scalar>(n, Scalar::zero(field))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // product paths[i] . paths[j]: first j, then i
      if (paths[j].to != paths[i].from) continue;
      if (paths[i].arrow_seq.size() + paths[j].arrow_seq.size() >=
          max_path_len)
        continue;
      std::vector<std::size_t> seq = paths[j].arrow_seq;
      seq.insert(seq.end(), paths[i].arrow_seq.begin(),
                 paths[i].arrow_seq.end());
      const std::size_t k = find_path(paths[j].from, paths[i].to, seq);
      if (k != SIZE_MAX) mul[i][j][k] = Scalar::one(field);
    }

  std::vector<Scalar> unit(n, Scalar::zero(field));
  for (std::size_t v = 0; v < vertices; ++v) unit[v] = Scalar::one(field);

  GradedBasis gb(degrees);
  HomogeneousMap d(field, gb.space(), gb.space(), 1);
  return std::make_shared<DgAlgebra>(
      GradedAlgebra(field, std::move(names), std::move(degrees),
                    std::move(mul), std::move(unit)),
      std::move(d));
}

}  // namespace

std::shared_ptr<const DgAlgebra> make_graded_matrix_algebra(
    const FieldSpec& field, std::size_t n, const std::vector<int>& grading,
    std::uint64_t seed) {
  if (grading.size() != n)
    throw std::invalid_argument("grading vector must have length n");
  const std::size_t dim = n * n;
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      names.push_back("e" + std::to_string(r + 1) + std::to_string(c + 1));
      degrees.push_back(grading[r] - grading[c]);
    }
  auto idx = [&](std::size_t r, std::size_t c) { return r * n + c; };
  std::vector<std::vector<std::vector<Scalar>>> mul(
      dim, std::vector<std::vector<Scalar>>(
               dim, std::vector<Scalar>(dim, Scalar::zero(field))));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r2 = 0; r2 < n; ++r2)
        for (std::size_t c2 = 0; c2 < n; ++c2)
          if (c == r2)
            mul[idx(r, c)][idx(r2, c2)][idx(r, c2)] = Scalar::one(field);
  std::vector<Scalar> unit(dim, Scalar::zero(field));
  for (std::size_t r = 0; r < n; ++r) unit[idx(r, r)] = Scalar::one(field);

  GradedAlgebra algebra(field, std::move(names), std::move(degrees),
                        std::move(mul), std::move(unit));
  const auto space = leibniz_solution_space(algebra);
  Rng rng(seed);
  const auto d = sample_square_zero(algebra, space, rng, 200);
  if (!d.has_value())
    throw GeneratorDeadEnd(
        "no compatible differential: the Leibniz solution space for this "
        "graded matrix algebra contains no nonzero square-zero element");
  return std::make_shared<DgAlgebra>(std::move(algebra), *d);
}

std::shared_ptr<const DgAlgebra> make_truncated_path_algebra(
    const FieldSpec& field, std::size_t vertices,
    const std::vector<std::pair<std::size_t, std::size_t>>& arrows,
    const std::vector<int>& arrow_degrees, std::size_t max_path_len) {
  std::vector<Arrow> arr;
  for (std::size_t a = 0; a < arrows.size(); ++a)
    arr.push_back({arrows[a].first, arrows[a].second,
                   a < arrow_degrees.size() ? arrow_degrees[a] : 0});
  return build_path_algebra(field, vertices, arr, max_path_len);
}

std::shared_ptr<const DgAlgebra> make_acyclic_cone(
    std::shared_ptr<const DgAlgebra> base) {
  const auto& c = *base;
  const auto& field = c.field();
  const std::size_t n = c.dim();
  const std::size_t dim = 2 * n;
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(c.algebra().names()[i]);
    degrees.push_back(c.basis().degree_of(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(c.algebra().names()[i] + "*y");
    degrees.push_back(c.basis().degree_of(i) - 1);
  }

  auto embed_plain = [&](const std::vector<Scalar>& v) {
    std::vector<Scalar> out(dim, Scalar::zero(field));
    for (std::size_t k = 0; k < n; ++k) out[k] = v[k];
    return out;
  };
  auto embed_y = [&](const std::vector<Scalar>& v, bool negate) {
    std::vector<Scalar> out(dim, Scalar::zero(field));
    for (std::size_t k = 0; k < n; ++k) out[n + k] = negate ? -v[k] : v[k];
    return out;
  };

  std::vector<std::vector<std::vector<Scalar>>> mul(
      dim, std::vector<std::vector<Scalar>>(
               dim, std::vector<Scalar>(dim, Scalar::zero(field))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& cij = c.algebra().mul_basis(i, j);
      const bool j_odd = c.basis().degree_of(j) % 2 != 0;
      // c_i . c_j
      mul[i][j] = embed_plain(cij);
      // c_i . (c_j y) = (c_i c_j) y
      mul[i][n + j] = embed_y(cij, false);
      // (c_i y) . c_j = (-1)^{|c_j|} (c_i c_j) y
      mul[n + i][j] = embed_y(cij, j_odd);
      // (c_i y) . (c_j y) = 0
    }
  std::vector<Scalar> unit = embed_plain(c.algebra().unit());

  GradedBasis basis(degrees);
  // d(c_i) = d_C(c_i); d(c_i y) = d_C(c_i) y + (-1)^{|c_i|} c_i
  std::vector<std::vector<Scalar>> images(
      dim, std::vector<Scalar>(dim, Scalar::zero(field)));
  for (std::size_t i = 0; i < n; ++i) {
    const auto dc = c.d_of(c.algebra().basis_vector(i));
    images[i] = embed_plain(dc);
    images[n + i] = embed_y(dc, false);
    const bool i_odd = c.basis().degree_of(i) % 2 != 0;
    images[n + i][i] = i_odd ? -Scalar::one(field) : Scalar::one(field);
  }
  HomogeneousMap d(field, basis.space(), basis.space(), 1);
  for (const auto& [deg, dd] : basis.space().dims()) {
    const std::size_t dst = basis.space().dim(deg + 1);
    if (dst == 0) continue;
    Matrix blk(field, dst, dd);
    for (std::size_t col = 0; col < dd; ++col) {
      const auto& img = images[basis.global_index(deg, col)];
      for (std::size_t row = 0; row < dst; ++row)
        blk.set(row, col, img[basis.global_index(deg + 1, row)]);
    }
    d.set_block(deg, std::move(blk));
  }
  return std::make_shared<DgAlgebra>(
      GradedAlgebra(field, std::move(names), std::move(degrees),
                    std::move(mul), std::move(unit)),
      std::move(d));
}

std::shared_ptr<const DgAlgebra> make_direct_product(const DgAlgebra& a,
                                                     const DgAlgebra& b) {
  if (a.field() != b.field())
    throw FieldMismatch("direct product over different fields");
  const auto& field = a.field();
  const std::size_t na = a.dim(), nb = b.dim(), dim = na + nb;
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (std::size_t i = 0; i < na; ++i) {
    names.push_back(a.algebra().names()[i] + ".l");
    degrees.push_back(a.basis().degree_of(i));
  }
  for (std::size_t i = 0; i < nb; ++i) {
    names.push_back(b.algebra().names()[i] + ".r");
    degrees.push_back(b.basis().degree_of(i));
  }
  std::vector<std::vector<std::vector<Scalar>>> mul(
      dim, std::vector<std::vector<Scalar>>(
               dim, std::vector<Scalar>(dim, Scalar::zero(field))));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k)
        mul[i][j][k] = a.algebra().mul_basis(i, j)[k];
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        mul[na + i][na + j][na + k] = b.algebra().mul_basis(i, j)[k];
  std::vector<Scalar> unit(dim, Scalar::zero(field));
  for (std::size_t i = 0; i < na; ++i) unit[i] = a.algebra().unit()[i];
  for (std::size_t i = 0; i < nb; ++i) unit[na + i] = b.algebra().unit()[i];

  GradedBasis basis(degrees);
  std::vector<std::vector<Scalar>> images(
      dim, std::vector<Scalar>(dim, Scalar::zero(field)));
  for (std::size_t i = 0; i < na; ++i) {
    const auto da = a.d_of(a.algebra().basis_vector(i));
    for (std::size_t k = 0; k < na; ++k) images[i][k] = da[k];
  }
  for (std::size_t i = 0; i < nb; ++i) {
    const auto db = b.d_of(b.algebra().basis_vector(i));
    for (std::size_t k = 0; k < nb; ++k) images[na + i][na + k] = db[k];
  }
  HomogeneousMap d(field, basis.space(), basis.space(), 1);
  for (const auto& [deg, dd] : basis.space().dims()) {
    const std::size_t dst = basis.space().dim(deg + 1);
    if (dst == 0) continue;
    Matrix blk(field, dst, dd);
    for (std::size_t col = 0; col < dd; ++col) {
      const auto& img = images[basis.global_index(deg, col)];
      for (std::size_t row = 0; row < dst; ++row)
        blk.set(row, col, img[basis.global_index(deg + 1, row)]);
    }
    d.set_block(deg, std::move(blk));
  }
  return std::make_shared<DgAlgebra>(
      GradedAlgebra(field, std::move(names), std::move(degrees),
                    std::move(mul), std::move(unit)),
      std::move(d));
}

namespace {

std::shared_ptr<const DgAlgebra> generate_inner(const GeneratorRecipe& recipe,
                                                Rng& rng, const Caps& caps) {
  switch (recipe.kind) {
    case RecipeKind::GradedMatrix: {
      const std::size_t n = recipe.size > 0 ? recipe.size : 2 + rng.below(2);
      std::vector<int> grading(n);
      for (std::size_t i = 0; i < n; ++i)
        grading[i] = static_cast<int>(rng.below(3)) - 1;
      // at least two distinct grades, else no degree +1 component exists
      if (n >= 2 && grading[0] == grading[1]) grading[1] = grading[0] - 1;
      return make_graded_matrix_algebra(recipe.field, n, grading, rng.next());
    }
    case RecipeKind::TruncatedPathAlgebra:
    case RecipeKind::RadicalSquareZero: {
      const std::size_t vertices = recipe.size > 0 ? recipe.size : 2 + rng.below(2);
      const std::size_t arrow_count = 1 + rng.below(vertices);
      std::vector<std::pair<std::size_t, std::size_t>> arrows;
      std::vector<int> arrow_degrees;
      for (std::size_t a = 0; a < arrow_count; ++a) {
        // acyclic quiver keeps the algebra finite at any truncation
        std::size_t from = rng.below(vertices);
        std::size_t to = rng.below(vertices);
        if (from == to) to = (from + 1) % vertices;
        if (from > to) std::swap(from, to);
        arrows.emplace_back(from, to);
        arrow_degrees.push_back(0);
      }
      const std::size_t len =
          recipe.kind == RecipeKind::RadicalSquareZero ? 2 : 2 + rng.below(2);
      return make_truncated_path_algebra(recipe.field, vertices, arrows,
                                         arrow_degrees, len);
    }
    case RecipeKind::AcyclicConeExtension: {
      GeneratorRecipe inner = recipe;
      inner.kind = rng.below(2) == 0 ? RecipeKind::TruncatedPathAlgebra
                                     : RecipeKind::RadicalSquareZero;
      inner.size = 0;
      auto base = generate_inner(inner, rng, caps);
      if (2 * base->dim() > caps.max_total_dim) {
        inner.size = 2;
        base = generate_inner(inner, rng, caps);
      }
      return make_acyclic_cone(base);
    }
    case RecipeKind::DirectProduct: {
      GeneratorRecipe left = recipe, right = recipe;
      left.kind = RecipeKind::TruncatedPathAlgebra;
      left.size = 2;
      right.kind = rng.below(2) == 0 ? RecipeKind::RadicalSquareZero
                                     : RecipeKind::TruncatedPathAlgebra;
      right.size = 2;
      const auto a = generate_inner(left, rng, caps);
      const auto b = generate_inner(right, rng, caps);
      return make_direct_product(*a, *b);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::shared_ptr<const DgAlgebra> generate(const GeneratorRecipe& recipe,
                                          std::uint64_t seed, const Caps& caps) {
  Rng rng(seed ^ (static_cast<std::uint64_t>(recipe.kind) << 32));
  auto algebra = generate_inner(recipe, rng, caps);
  if (algebra->dim() > caps.max_total_dim)
    throw GeneratorDeadEnd("generated instance exceeds the dimension cap");
  ValidationReport report = validate_algebra(algebra->algebra());
  report.merge(validate_differential(algebra->algebra(), algebra->differential()));
  if (!report.ok())
    throw InternalCheckFailure("generator emitted an invalid instance: " +
                               report.violations.front());
  return algebra;
}

GradedSubspace random_submodule(const DgModule& m, Rng& rng) {
  const auto degrees = m.space().degrees();
  std::vector<std::pair<int, std::vector<Scalar>>> gens;
  const std::size_t count = 1 + rng.below(2);
  for (std::size_t g = 0; g < count; ++g) {
    const int deg = degrees[rng.below(degrees.size())];
    std::vector<Scalar> v(m.space().dim(deg), Scalar::zero(m.field()));
    for (auto& s : v)
      s = m.field().is_rationals()
              ? Scalar(m.field(), rng.signed_amp(1))
              : Scalar(m.field(), static_cast<long long>(rng.below(m.field().p)));
    gens.emplace_back(deg, std::move(v));
  }
  return submodule_closure_local(m, gens);
}

DgModule random_module(const DgModule& regular, Rng& rng, const Caps& caps) {
  for (std::size_t attempt = 0; attempt < 8; ++attempt) {
    const std::uint64_t pick = rng.below(6);
    switch (pick) {
      case 0:
        return regular;
      case 1:
        return shift_module(regular, static_cast<int>(rng.below(3)) - 1);
      case 2: {
        if (2 * regular.dim() > caps.max_total_dim) continue;
        const int sh = static_cast<int>(rng.below(3)) - 1;
        return direct_sum(regular, shift_module(regular, sh)).module;
      }
      case 3: {
        const auto carrier = random_submodule(regular, rng);
        if (carrier.is_zero()) continue;
        return submodule_as_module(regular, carrier).module;
      }
      case 4: {
        const auto carrier = random_submodule(regular, rng);
        if (carrier.is_whole()) continue;
        return quotient_module(regular, carrier).module;
      }
      default: {
        // submodule of a quotient
        const auto carrier = random_submodule(regular, rng);
        if (carrier.is_whole()) continue;
        const auto quot = quotient_module(regular, carrier).module;
        const auto sub = random_submodule(quot, rng);
        if (sub.is_zero()) continue;
        return submodule_as_module(quot, sub).module;
      }
    }
  }
  return regular;
}

}  // namespace dgkit::ingest
