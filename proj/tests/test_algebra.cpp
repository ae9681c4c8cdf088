#include "doctest.h"
#include "hqft/algebra.hpp"
#include "support.hpp"

using namespace hqft;
using testing::cocycle_z5;

namespace {

// Normalized cocycle of the rank-one example: t on the nontrivial pair.
Scalar kappa(const GroupElement& x, const GroupElement& y, const Scalar& t) {
  return (!x.is_identity() && !y.is_identity()) ? t : t.ring().one();
}

// sum_ij D_ij e_i eta(e_j, w) for D = Delta(v), by direct substitution.
GradedElement contract(const AlgebraData& A, const GroupElement& a, const GroupElement& b,
                       const Vector& delta, const GradedElement& w) {
  GradedElement out = A.zero(a);
  for (std::size_t i = 0; i < A.rank(a); ++i) {
    for (std::size_t j = 0; j < A.rank(b); ++j) {
      const Scalar c = delta[i * A.rank(b) + j] * pair(A, A.basis(b, j), w);
      out.coords += c * A.basis(a, i).coords;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("multiplication in the cocycle algebra") {
  const AlgebraData A = cocycle_z5();
  const auto s = A.element(1);
  CHECK(multiply(A, A.basis(s, 0), A.basis(s, 0)) == GradedElement{A.identity(), Vector(A.ring, {A.ring.from_int(2)})});
  for (const auto& g : A.elements()) {
    GradedElement v{g, Vector(A.ring, {A.ring.from_int(3)})};
    CHECK(multiply(A, A.unit_element(), v) == v);
    CHECK(multiply(A, v, A.unit_element()) == v);
  }
  CHECK_THROWS_AS(multiply(A, GradedElement{s, Vector(A.ring, 2)}, A.unit_element()), InputError);
}

TEST_CASE("census algebra over Z/2 squares the odd basis vector to the unit") {
  const auto list = testing::census(2, 1, {1, 1});
  REQUIRE(!list.empty());
  const AlgebraData& A = list[0];
  const auto s = A.element(1);
  CHECK(multiply(A, A.basis(s, 0), A.basis(s, 0)) == A.basis(A.identity(), 0));
}

TEST_CASE("counit") {
  const AlgebraData A = cocycle_z5();
  CHECK(counit(A, A.unit_element()) == A.ring.one());
  CHECK(counit(A, A.zero(A.identity())) == A.ring.zero());
  for (const auto& g : A.elements()) CHECK(counit(A, A.crosscap_element(g)) == A.ring.from_int(4));
  CHECK_THROWS_AS(counit(A, A.basis(A.element(1), 0)), GradeError);
}

TEST_CASE("comultiplication coefficients follow the cocycle") {
  const AlgebraData A = cocycle_z5();
  const Scalar t = A.ring.from_int(2);
  for (const auto& a : A.elements()) {
    for (const auto& b : A.elements()) {
      const Scalar k = scalar_inv(kappa(b, b, t)) * kappa(a * b, b, t);
      const Vector d = comultiply(A, a, b, A.basis(a * b, 0));
      REQUIRE(d.size() == 1);
      CHECK(d[0] == k);
    }
  }
  const auto s = A.element(1);
  CHECK(comultiply(A, s, s, A.basis(A.identity(), 0))[0] == A.ring.from_int(3));
  CHECK_THROWS_AS(comultiply(A, s, s, A.basis(s, 0)), GradeError);

  const AlgebraData R = make_ground_ring(RingDesc::integers(), RingDesc::integers().one());
  CHECK(comultiply(R, R.identity(), R.identity(), R.unit_element()) == Vector::basis(R.ring, 1, 0));
}

TEST_CASE("comultiplication satisfies the duality with multiplication") {
  std::vector<AlgebraData> algebras = testing::census(3, 1, {1, 1});
  algebras.push_back(cocycle_z5());
  algebras.push_back(testing::group_ring_z2(RingDesc::integers_mod(3)));
  algebras.push_back(testing::group_ring_z2(RingDesc::rationals()));
  for (const auto& A : algebras) {
    for (const auto& a : A.elements()) {
      for (const auto& b : A.elements()) {
        for (std::size_t v = 0; v < A.rank(a * b); ++v) {
          const Vector d = comultiply(A, a, b, A.basis(a * b, v));
          for (std::size_t w = 0; w < A.rank(b); ++w) {
            CHECK(contract(A, a, b, d, A.basis(b, w)) ==
                  multiply(A, A.basis(a * b, v), A.basis(b, w)));
          }
        }
      }
    }
  }
}

TEST_CASE("copairing") {
  const AlgebraData A = cocycle_z5();
  CHECK(copair(A, A.identity()) == Vector::basis(A.ring, 1, 0));
  CHECK(copair(A, A.element(1)) == Vector(A.ring, {A.ring.from_int(3)}));
  const AlgebraData G = testing::group_ring_z2(RingDesc::integers());
  CHECK(copair(G, G.identity()) == Vector(G.ring, {G.ring.one(), G.ring.zero(), G.ring.zero(), G.ring.one()}));

  // (eta (x) id)(v (x) C) = v and (id (x) eta)(C (x) v) = v with a non-symmetric Gram matrix.
  AlgebraData N = make_blank(RingDesc::integers_mod(7), 0, {2});
  N.pairing[0] = Matrix::from_ints(N.ring, {{1, 2}, {3, 4}});
  const Vector c = copair(N, N.identity());
  for (std::size_t k = 0; k < 2; ++k) {
    GradedElement v = N.basis(N.identity(), k);
    Vector left(N.ring, 2), right(N.ring, 2);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        left += (pair(N, v, N.basis(N.identity(), i)) * c[i * 2 + j]) * Vector::basis(N.ring, 2, j);
        right += (c[i * 2 + j] * pair(N, N.basis(N.identity(), j), v)) * Vector::basis(N.ring, 2, i);
      }
    }
    CHECK(left == v.coords);
    CHECK(right == v.coords);
  }
}

TEST_CASE("handle element") {
  const AlgebraData A = cocycle_z5();
  for (const auto& a : A.elements()) {
    for (const auto& b : A.elements()) {
      for (const auto& c : A.elements()) CHECK(q_element(A, a, b, c) == A.unit_element());
    }
  }
  const AlgebraData R = make_ground_ring(RingDesc::integers(), RingDesc::integers().one());
  const auto e = R.identity();
  CHECK(q_element(R, e, e, e) == R.unit_element());
  // R[Z/2]: copairing 1 (x) 1 + x (x) x, so q = 1 + x^2 = 2.
  const AlgebraData G = testing::group_ring_z2(RingDesc::integers());
  CHECK(q_element(G, G.identity(), G.identity(), G.identity()).coords ==
        Vector(G.ring, {G.ring.from_int(2), G.ring.zero()}));
}

TEST_CASE("handle element is label independent on census algebras") {
  for (const auto& A : testing::census(3, 1, {1, 1})) {
    const auto q1 = q_element(A, A.identity(), A.identity(), A.identity());
    for (const auto& a : A.elements()) {
      for (const auto& b : A.elements()) {
        for (const auto& c : A.elements()) CHECK(q_element(A, a, b, c) == q1);
      }
    }
  }
}

TEST_CASE("action and reversal application") {
  const AlgebraData A = cocycle_z5();
  for (const auto& g : A.elements()) {
    GradedElement v{g, Vector(A.ring, {A.ring.from_int(3)})};
    for (const auto& b : A.elements()) CHECK(apply_phi(A, b, v) == v);
    CHECK(apply_Phi(A, apply_Phi(A, v)) == v);
  }
  CHECK(apply_Phi(A, A.unit_element()) == A.unit_element());
}

TEST_CASE("cocycle algebra constructor") {
  const auto R = testing::z5();
  CHECK_NOTHROW(make_cocycle_algebra(R, R.from_int(2), R.from_int(4)));
  CHECK_NOTHROW(make_cocycle_algebra(RingDesc::integers(), RingDesc::integers().one(),
                                     RingDesc::integers().one()));
  CHECK_THROWS_AS(make_cocycle_algebra(R, R.from_int(2), R.from_int(2)), InvalidParameter);
  CHECK_THROWS_AS(make_cocycle_algebra(R, R.zero(), R.one()), NotAUnit);
  CHECK_THROWS_AS(make_cocycle_algebra(RingDesc::integers(), RingDesc::integers().from_int(2),
                                       RingDesc::integers().one()),
                  NotAUnit);
}

TEST_CASE("pairing is associative and recovered by the counit") {
  for (const auto& A : testing::census(3, 1, {1, 1})) {
    for (const auto& a : A.elements()) {
      for (const auto& b : A.elements()) {
        const auto c = a * b;
        const GradedElement v = A.basis(a, 0), w = A.basis(b, 0), x = A.basis(c, 0);
        CHECK(pair(A, multiply(A, v, w), x) == pair(A, v, multiply(A, w, x)));
        if (a == b) {
          CHECK(pair(A, multiply(A, v, w), A.unit_element()) ==
                pair(A, v, multiply(A, w, A.unit_element())));
          CHECK(counit(A, multiply(A, v, w)) == pair(A, v, w));
        }
      }
    }
  }
}

TEST_CASE("validate rejects bad shapes") {
  AlgebraData A = cocycle_z5();
  A.unit = Vector(A.ring, 2);
  CHECK_THROWS_AS(A.validate(), InputError);
  CHECK_THROWS_AS(make_blank(A.ring, 1, {1}), InputError);
}
