#include "doctest.h"
#include "hqft/cobordism.hpp"
#include "support.hpp"

using namespace hqft;
using testing::cocycle_z5;

namespace {

GroupElement g1(const char* bits) { return GroupElement::parse(bits); }

std::vector<AlgebraData> verified_algebras() {
  std::vector<AlgebraData> out = testing::census(2, 1, {1, 1});
  for (auto& A : testing::census(3, 1, {1, 1})) out.push_back(std::move(A));
  for (auto& A : testing::census(3, 0, {1})) out.push_back(std::move(A));
  out.push_back(cocycle_z5());
  out.push_back(testing::cocycle_z());
  return out;
}

}  // namespace

TEST_CASE("typecheck examples") {
  const CobordismWord cup{{{Generator::cup(1)}}};
  auto [in, out] = typecheck(cup);
  CHECK(in.circles.empty());
  CHECK(out == BoundarySignature{{g1("0")}});

  const CobordismWord mb{{{Generator::moebius(g1("1"))}, {Generator::id(g1("0"))}}};
  CHECK(typecheck(mb).second == BoundarySignature{{g1("0")}});

  const CobordismWord bad{{{Generator::cup(1)}, {Generator::mult(g1("0"), g1("1"))}}};
  try {
    typecheck(bad);
    FAIL("expected a mismatch");
  } catch (const SignatureMismatch& e) {
    CHECK(e.layer() == 1);
  }
  CHECK_THROWS_AS(Generator::make(GenKind::Mult, {g1("0")}, 1), InputError);
}

TEST_CASE("generator signatures") {
  const auto a = g1("10"), b = g1("01");
  CHECK(Generator::comult(a, b).inputs() == BoundarySignature{{g1("11")}});
  CHECK(Generator::comult(a, b).outputs() == BoundarySignature{{a, b}});
  CHECK(Generator::swap(a, b).outputs() == BoundarySignature{{b, a}});
  CHECK(Generator::copair(a).outputs() == BoundarySignature{{a, a}});
  CHECK(Generator::pair(a).outputs().circles.empty());
  CHECK(Generator::cap(2).inputs() == BoundarySignature{{g1("00")}});
  CHECK(Generator::hol(a, b).to_string() == "Hol(10; 01)");
  CHECK(parse_gen_name("Moebius") == GenKind::Moebius);
  CHECK_THROWS_AS(parse_gen_name("Twist"), InputError);
}

TEST_CASE("evaluate examples") {
  const AlgebraData A = cocycle_z5();
  for (const auto& g : A.elements()) {
    const LinearMap m = evaluate(A, {{{Generator::moebius(g)}}});
    CHECK(m.matrix.col(0) == A.crosscap[g.index()]);
    CHECK(evaluate(A, {{{Generator::id(g)}}}).matrix == Matrix::identity(A.ring, A.rank(g)));
  }
  const LinearMap sphere = evaluate(A, {{{Generator::cup(1)}, {Generator::cap(1)}}});
  CHECK(sphere.matrix == Matrix::identity(A.ring, 1));
  CHECK(sphere.source.circles.empty());
  CHECK(sphere.target.circles.empty());
  CHECK_THROWS_AS(evaluate(A, {{{Generator::cup(2)}}}), InputError);
}

TEST_CASE("functoriality, monoidality, cylinders and flips") {
  for (const auto& A : verified_algebras()) {
    for (const auto& a : A.elements()) {
      for (const auto& b : A.elements()) {
        const CobordismWord w1{{{Generator::comult(a, b)}}};
        const CobordismWord w2{{{Generator::flip(a), Generator::hol(b, a)}, {Generator::mult(a, b)}}};
        CHECK(evaluate(A, concatenate(w1, w2)).matrix == evaluate(A, w2).matrix * evaluate(A, w1).matrix);
        const Layer layer{Generator::moebius(a), Generator::hol(b, a), Generator::copair(b)};
        Matrix tensor = Matrix::identity(A.ring, 1);
        for (const auto& g : layer) tensor = mat_tensor(tensor, evaluate(A, {{{g}}}).matrix);
        CHECK(evaluate(A, {{layer}}).matrix == tensor);
      }
      CHECK(evaluate(A, {{{Generator::id(a)}}}).matrix == Matrix::identity(A.ring, A.rank(a)));
      CHECK(evaluate(A, {{{Generator::flip(a)}, {Generator::flip(a)}}}).matrix ==
            Matrix::identity(A.ring, A.rank(a)));
    }
  }
  const AlgebraData A = cocycle_z5();
  CHECK_THROWS_AS(concatenate({{{Generator::cup(1)}}}, {{{Generator::pair(g1("0"))}}}),
                  SignatureMismatch);
}

TEST_CASE("swap permutes tensor factors") {
  AlgebraData A = make_blank(RingDesc::integers(), 1, {2, 3});
  const auto a = A.element(0), b = A.element(1);
  const Matrix s = evaluate(A, {{{Generator::swap(a, b)}}}).matrix;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(s.apply(vec_tensor(Vector::basis(A.ring, 2, i), Vector::basis(A.ring, 3, j))) ==
            vec_tensor(Vector::basis(A.ring, 3, j), Vector::basis(A.ring, 2, i)));
    }
  }
  CHECK(evaluate(A, {{{Generator::swap(a, b)}, {Generator::swap(b, a)}}}).matrix ==
        Matrix::identity(A.ring, 6));
}

TEST_CASE("surface invariants of the cocycle algebra") {
  const AlgebraData A = cocycle_z5();
  const auto e = A.element(0), s = A.element(1);
  CHECK(surface_invariant(A, {}) == A.ring.one());
  for (const auto& g : A.elements()) CHECK(surface_invariant(A, {{}, {g}}) == A.ring.from_int(4));
  for (const auto& x : A.elements()) {
    for (const auto& y : A.elements()) CHECK(surface_invariant(A, {{}, {x, y}}) == A.ring.one());
  }
  CHECK(surface_invariant(A, {{{e, e}}, {}}) == A.ring.one());
  // Torus with a nontrivial loop: copair on L_s is t^{-1} = 3 and l_s l_s = t.
  CHECK(surface_invariant(A, {{{s, e}}, {}}) == A.ring.one());
  CHECK(surface_invariant(A, {{}, {e, e, e}}) == A.ring.from_int(4));
}

TEST_CASE("surface words of the group ring count handles") {
  // R[Z/2]: each handle multiplies by q = 1 + x^2 = 2, and eps(2^h) = 2^h.
  const AlgebraData G = testing::group_ring_z2(RingDesc::integers());
  const auto e = G.identity();
  CHECK(surface_invariant(G, {}) == G.ring.one());
  CHECK(surface_invariant(G, {{{e, e}}, {}}) == G.ring.from_int(2));
  CHECK(surface_invariant(G, {{{e, e}, {e, e}, {e, e}}, {}}) == G.ring.from_int(8));
  CHECK(surface_invariant_alt(G, {{{e, e}, {e, e}}, {}}) == G.ring.from_int(4));
}

TEST_CASE("three crosscap check on verified algebras") {
  for (const auto& A : verified_algebras()) {
    for (const auto& a : A.elements()) {
      for (const auto& b : A.elements()) {
        for (const auto& c : A.elements()) CHECK(three_crosscap_check(A, a, b, c));
      }
    }
  }
  const AlgebraData bad = testing::load("mutations/D2.8.11.json");
  bool any_false = false;
  for (const auto& a : bad.elements()) {
    for (const auto& b : bad.elements()) {
      for (const auto& c : bad.elements()) any_false |= !three_crosscap_check(bad, a, b, c);
    }
  }
  CHECK(any_false);
}

TEST_CASE("surface enumeration") {
  CHECK(surfaces_up_to(1, 0).size() == 1);
  // n = 1: 4 one-handle + 2 one-crosscap; n = 2: 16 + 8 + 4.
  CHECK(surfaces_up_to(1, 2).size() == 1 + 6 + 28);
  CHECK(surfaces_up_to(0, 3).size() == 10);
}

TEST_CASE("surface table is consistent and matches the serial reference") {
  for (const auto& A : verified_algebras()) {
    const auto par = surface_table(A, 3);
    const auto ser = surface_table_serial(A, 3);
    CHECK(par == ser);
    for (const auto& e : par) CHECK(e.consistent);
  }
}

TEST_CASE("extraction reproduces the algebra") {
  for (const auto& A : verified_algebras()) CHECK(extract_underlying(A) == A);
  const AlgebraData R = make_ground_ring(RingDesc::integers(), RingDesc::integers().one());
  CHECK(extract_underlying(R) == R);
}

TEST_CASE("relation suite passes on verified algebras and matches the serial reference") {
  for (const auto& A : verified_algebras()) {
    const AxiomReport r = relation_suite(A);
    CHECK(r.passed());
    if (!r.passed()) MESSAGE(r.to_text());
    CHECK(relation_suite_serial(A).violations.size() == r.violations.size());
  }
}

TEST_CASE("relation suite flags broken algebras") {
  const AxiomReport r = relation_suite(testing::load("mutations/D2.8.11.json"));
  CHECK(r.names("three-crosscaps"));
  const AxiomReport flip = relation_suite(testing::load("mutations/D2.8.5.json"));
  CHECK(flip.names("pairing-flip"));
  CHECK(flip.names("flip-involution"));
  const AxiomReport slide = relation_suite(testing::load("mutations/D2.8.8.json"));
  CHECK(slide.names("crosscap-slide"));
  for (const auto& v : r.violations) {
    const auto names = relation_names();
    CHECK(std::find(names.begin(), names.end(), v.axiom) != names.end());
  }
}

TEST_CASE("linear map text") {
  const AlgebraData A = cocycle_z5();
  const LinearMap m = evaluate(A, {{{Generator::comult(A.element(1), A.element(1))}}});
  CHECK(m.to_text() == "[0] -> [1, 1]\n1x1\n3\n");
}
