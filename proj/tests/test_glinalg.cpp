#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgkit/graded.hpp"

#include <set>

using namespace dgkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

Scalar q(long long num, long long den = 1) {
  return Scalar(Q, num) / Scalar(Q, den);
}

Matrix mat(const FieldSpec& f, std::size_t rows, std::size_t cols,
           std::vector<long long> entries) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.set(i, j, Scalar(f, entries[i * cols + j]));
  return m;
}

// independent naive eliminator: forward elimination + back substitution,
// no pivot normalization tricks, used as an oracle for rref
Matrix naive_rref(Matrix m) {
  const auto& f = m.field();
  std::size_t lead = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (lead >= m.cols()) break;
    std::size_t i = r;
    while (m.at(i, lead).is_zero()) {
      ++i;
      if (i == m.rows()) {
        i = r;
        ++lead;
        if (lead == m.cols()) return m;
      }
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Scalar tmp = m.at(i, c);
      m.set(i, c, m.at(r, c));
      m.set(r, c, tmp);
    }
    Scalar inv = m.at(r, lead).inverse();
    for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, m.at(r, c) * inv);
    for (std::size_t i2 = 0; i2 < m.rows(); ++i2) {
      if (i2 == r) continue;
      Scalar factor = m.at(i2, lead);
      if (factor.is_zero()) continue;
      for (std::size_t c = 0; c < m.cols(); ++c)
        m.set(i2, c, m.at(i2, c) - factor * m.at(r, c));
    }
    ++lead;
  }
  return m;
}

// deterministic generator for fuzz cases
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

Matrix random_matrix(Rng& rng, const FieldSpec& f, std::size_t rows,
                     std::size_t cols, long long amp) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.set(i, j, Scalar(f, static_cast<long long>(rng.below(2 * amp + 1)) - amp));
  return m;
}

GradedSubspace random_subspace(Rng& rng, const FieldSpec& f,
                               const GradedSpace& ambient) {
  std::map<int, Matrix> gens;
  for (const auto& [deg, dim] : ambient.dims()) {
    const std::size_t rows = rng.below(dim + 1);
    if (rows > 0) gens[deg] = random_matrix(rng, f, rows, dim, 2);
  }
  return GradedSubspace::span(f, ambient, gens);
}

}  // namespace

TEST_CASE("scalar arithmetic and serialization") {
  CHECK(q(2, 4).str() == "1/2");
  CHECK(q(-4, -8).str() == "1/2");
  CHECK(q(3, -6).str() == "-1/2");
  CHECK((q(1, 3) + q(1, 6)).str() == "1/2");
  CHECK((q(2, 3) * q(3, 2)).is_one());
  CHECK(Scalar::parse(Q, "7/21").str() == "1/3");
  CHECK(Scalar::parse(Q, "-5").str() == "-5");

  const FieldSpec f5 = FieldSpec::prime(5);
  CHECK(Scalar(f5, 7).str() == "2");
  CHECK(Scalar(f5, -1).str() == "4");
  CHECK((Scalar(f5, 2) * Scalar(f5, 3)).str() == "1");
  CHECK((Scalar(f5, 2).inverse()).str() == "3");
  CHECK_THROWS_AS(Scalar(f5, 1) + q(1), FieldMismatch);
  CHECK_THROWS_AS(FieldSpec::prime(4), InvalidField);
  CHECK_THROWS_AS(FieldSpec::prime(101), InvalidField);
  CHECK(FieldSpec::from_name("f7") == FieldSpec::prime(7));
  CHECK(FieldSpec::from_name("q") == Q);
}

TEST_CASE("rref matches the spec examples") {
  // identity 3x3 -> itself, rank 3
  const Matrix id3 = Matrix::identity(Q, 3);
  CHECK(id3.rref().reduced == id3);
  CHECK(id3.rref().rank == 3);

  // zero 2x4 -> zero, rank 0
  const Matrix z(Q, 2, 4);
  CHECK(z.rref().reduced == z);
  CHECK(z.rref().rank == 0);

  // [[2,4],[1,2]] over Q -> [[1,2],[0,0]], rank 1
  const Matrix m = mat(Q, 2, 2, {2, 4, 1, 2});
  const auto e = m.rref();
  CHECK(e.rank == 1);
  CHECK(e.reduced == mat(Q, 2, 2, {1, 2, 0, 0}));
  CHECK(e.reduced == naive_rref(m));
}

TEST_CASE("rref is idempotent and agrees with the naive eliminator") {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const FieldSpec f = trial % 2 == 0 ? Q : F2;
    const std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
    const Matrix m = random_matrix(rng, f, rows, cols, 3);
    const Matrix r = m.rref().reduced;
    CHECK(r.rref().reduced == r);
    CHECK(r == naive_rref(m));
  }
}

TEST_CASE("kernel and image dimensions satisfy the rank theorem") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const FieldSpec f = trial % 2 == 0 ? Q : F2;
    const std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(4);
    const Matrix m = random_matrix(rng, f, rows, cols, 2);
    CHECK(m.kernel().rows() + m.rank() == cols);
    for (std::size_t r = 0; r < m.kernel().rows(); ++r) {
      const auto v = m.apply(m.kernel().row_vector(r));
      for (const auto& s : v) CHECK(s.is_zero());
    }
  }
}

TEST_CASE("graded kernel and image of homogeneous maps") {
  // zero map on a space of total dim 4 -> whole space
  const GradedSpace sp(std::map<int, std::size_t>{{0, 2}, {1, 2}});
  const HomogeneousMap zero_map(Q, sp, sp, 1);
  CHECK(kernel(zero_map) == GradedSubspace::whole(Q, sp));
  CHECK(image(zero_map).is_zero());

  // identity as a degree-0 map -> zero kernel, full image
  HomogeneousMap id_map(Q, sp, sp, 0);
  for (const auto& [deg, dim] : sp.dims())
    id_map.set_block(deg, Matrix::identity(Q, dim));
  CHECK(kernel(id_map).is_zero());
  CHECK(image(id_map) == GradedSubspace::whole(Q, sp));
}

TEST_CASE("subspace lattice operations against the F2 membership oracle") {
  const GradedSpace sp(std::map<int, std::size_t>{{0, 2}, {1, 1}});

  // distinct lines in F2^2 intersect trivially
  std::map<int, Matrix> g1{{0, mat(F2, 1, 2, {1, 0})}};
  std::map<int, Matrix> g2{{0, mat(F2, 1, 2, {1, 1})}};
  const auto u = GradedSubspace::span(F2, sp, g1);
  const auto v = GradedSubspace::span(F2, sp, g2);
  CHECK(intersect(u, v).is_zero());

  // exhaustive oracle over F2 for fuzzed pairs
  Rng rng(11);
  auto enumerate_members = [&](const GradedSubspace& w) {
    std::set<std::string> members;
    for (const auto& [deg, dim] : sp.dims()) {
      const std::size_t count = 1ull << w.dim(deg);
      const Matrix b = w.basis_at(deg);
      for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<Scalar> vec(dim, Scalar::zero(F2));
        for (std::size_t r = 0; r < w.dim(deg); ++r)
          if (mask & (1ull << r))
            for (std::size_t c = 0; c < dim; ++c) vec[c] += b.at(r, c);
        std::string key = std::to_string(deg) + ":";
        for (const auto& s : vec) key += s.str();
        members.insert(key);
      }
    }
    return members;
  };

  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_subspace(rng, F2, sp);
    const auto b = random_subspace(rng, F2, sp);
    const auto mem_a = enumerate_members(a);
    const auto mem_b = enumerate_members(b);

    const auto meet = intersect(a, b);
    const auto mem_meet = enumerate_members(meet);
    std::set<std::string> expected_meet;
    for (const auto& k : mem_a)
      if (mem_b.count(k)) expected_meet.insert(k);
    CHECK(mem_meet == expected_meet);

    const auto join = sum(a, b);
    // oracle: the join members are exactly sums of one member of each
    std::set<std::string> expected_join;
    // enumerate all vectors of the ambient and test span membership directly
    for (const auto& [deg, dim] : sp.dims()) {
      for (std::size_t mask = 0; mask < (1ull << dim); ++mask) {
        std::vector<Scalar> vec(dim, Scalar::zero(F2));
        for (std::size_t c = 0; c < dim; ++c)
          if (mask & (1ull << c)) vec[c] = Scalar::one(F2);
        // membership in a+b: exists decomposition; test via contains_vector
        // of the computed join and cross-check with brute force over pairs
        bool brute = false;
        const Matrix ba = a.basis_at(deg);
        const Matrix bb = b.basis_at(deg);
        for (std::size_t ma = 0; ma < (1ull << ba.rows()) && !brute; ++ma)
          for (std::size_t mb = 0; mb < (1ull << bb.rows()) && !brute; ++mb) {
            std::vector<Scalar> s(dim, Scalar::zero(F2));
            for (std::size_t r = 0; r < ba.rows(); ++r)
              if (ma & (1ull << r))
                for (std::size_t c = 0; c < dim; ++c) s[c] += ba.at(r, c);
            for (std::size_t r = 0; r < bb.rows(); ++r)
              if (mb & (1ull << r))
                for (std::size_t c = 0; c < dim; ++c) s[c] += bb.at(r, c);
            brute = s == vec;
          }
        CHECK(join.contains_vector(deg, vec) == brute);
      }
    }

    // containment agrees with membership inclusion
    const bool contained = contains(a, b);
    bool expected_contained = true;
    for (const auto& k : mem_b)
      if (!mem_a.count(k)) expected_contained = false;
    CHECK(contained == expected_contained);

    // trivial identities
    CHECK(intersect(a, a) == a);
    CHECK(sum(a, GradedSubspace::zero(F2, sp)) == a);
  }
}

TEST_CASE("modular law on fuzzed triples") {
  const GradedSpace sp(std::map<int, std::size_t>{{0, 3}, {2, 2}});
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const FieldSpec f = trial % 2 == 0 ? Q : F2;
    const auto u = random_subspace(rng, f, sp);
    const auto v = random_subspace(rng, f, sp);
    const auto w = random_subspace(rng, f, sp);
    // U cap (V + (U cap W)) = (U cap V) + (U cap W)
    const auto lhs = intersect(u, sum(v, intersect(u, w)));
    const auto rhs = sum(intersect(u, v), intersect(u, w));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("quotient_basis completes a subspace") {
  const GradedSpace sp(std::map<int, std::size_t>{{0, 3}});
  std::map<int, Matrix> g{{0, mat(Q, 1, 3, {1, 1, 0})}};
  const auto u = GradedSubspace::span(Q, sp, g);
  const auto whole = GradedSubspace::whole(Q, sp);
  const auto reps = quotient_basis(u, whole);
  REQUIRE(reps.count(0) == 1);
  CHECK(reps.at(0).rows() == 2);
  // reps together with u span the whole component
  Matrix stacked = u.basis_at(0).vstack(reps.at(0));
  CHECK(stacked.rank() == 3);
}

TEST_CASE("closure is a closure operator") {
  const GradedSpace sp(std::map<int, std::size_t>{{0, 2}, {1, 2}});
  // a nilpotent-style operator of shift +1 and a degree-0 operator
  HomogeneousMap op1(Q, sp, sp, 1);
  op1.set_block(0, mat(Q, 2, 2, {1, 0, 0, 0}));
  HomogeneousMap op2(Q, sp, sp, 0);
  op2.set_block(0, mat(Q, 2, 2, {0, 1, 0, 0}));
  op2.set_block(1, mat(Q, 2, 2, {1, 1, 0, 0}));
  const std::vector<HomogeneousMap> ops{op1, op2};

  CHECK(closure(GradedSubspace::zero(Q, sp), ops).is_zero());
  CHECK(closure(GradedSubspace::whole(Q, sp), ops) ==
        GradedSubspace::whole(Q, sp));

  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const auto seed_space = random_subspace(rng, Q, sp);
    const auto closed = closure(seed_space, ops);
    CHECK(contains(closed, seed_space));          // extensive
    CHECK(closure(closed, ops) == closed);        // idempotent
    const auto bigger = sum(seed_space, random_subspace(rng, Q, sp));
    CHECK(contains(closure(bigger, ops), closed));  // monotone
  }
}
