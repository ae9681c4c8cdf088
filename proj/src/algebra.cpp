#include "hqft/algebra.hpp"

#include <numeric>

namespace hqft {

namespace {

void require_grade(const AlgebraData& A, const GradedElement& v) {
  if (v.grade.rank() != A.pi_rank) throw InputError("grade has the wrong group rank");
  if (v.coords.size() != A.rank(v.grade)) {
    throw InputError("element of grade " + v.grade.to_string() + " has " +
                     std::to_string(v.coords.size()) + " coordinates, expected " +
                     std::to_string(A.rank(v.grade)));
  }
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw InputError(what + " has shape " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  }
}

}  // namespace

std::size_t AlgebraData::total_rank() const {
  return std::accumulate(ranks.begin(), ranks.end(), std::size_t{0});
}

std::size_t AlgebraData::offset(const GroupElement& g) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < g.index(); ++i) off += ranks.at(i);
  return off;
}

Matrix AlgebraData::reversal_block(const GroupElement& g) const {
  const std::size_t off = offset(g);
  const std::size_t r = rank(g);
  Matrix block(ring, r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) block(i, j) = reversal(off + i, off + j);
  }
  return block;
}

GradedElement AlgebraData::basis(const GroupElement& g, std::size_t i) const {
  return {g, Vector::basis(ring, rank(g), i)};
}

GradedElement AlgebraData::zero(const GroupElement& g) const {
  return {g, Vector::zero(ring, rank(g))};
}

void AlgebraData::validate() const {
  if (pi_rank < 0 || pi_rank > GroupElement::kMaxRank) throw InputError("bad pi_rank");
  const std::size_t n = group_order(pi_rank);
  if (ranks.size() != n) {
    throw InputError("rank profile has " + std::to_string(ranks.size()) + " entries, expected " +
                     std::to_string(n));
  }
  if (mult.size() != n * n || pairing.size() != n || action.size() != n * n ||
      crosscap.size() != n) {
    throw InputError("structure map tables have the wrong number of blocks");
  }
  const std::size_t r1 = ranks[0];
  for (const auto& a : elements()) {
    for (const auto& b : elements()) {
      require_shape(mult_block(a, b), rank(a * b), rank(a) * rank(b),
                    "mult[" + a.to_string() + "," + b.to_string() + "]");
      require_shape(action_block(b, a), rank(a), rank(a),
                    "phi[" + b.to_string() + "," + a.to_string() + "]");
    }
    require_shape(pairing[a.index()], rank(a), rank(a), "eta[" + a.to_string() + "]");
    if (crosscap[a.index()].size() != r1) {
      throw InputError("theta[" + a.to_string() + "] must lie in L_1");
    }
  }
  if (unit.size() != r1) throw InputError("unit must lie in L_1");
  require_shape(reversal, total_rank(), total_rank(), "Phi");
}

AlgebraData make_blank(const RingDesc& ring, int pi_rank, std::vector<std::size_t> ranks) {
  AlgebraData A;
  A.ring = ring;
  A.pi_rank = pi_rank;
  A.ranks = std::move(ranks);
  if (A.ranks.size() != group_order(pi_rank)) {
    throw InputError("rank profile has " + std::to_string(A.ranks.size()) +
                     " entries, expected " + std::to_string(group_order(pi_rank)));
  }
  for (const auto& a : A.elements()) {
    for (const auto& b : A.elements()) {
      A.mult.emplace_back(ring, A.rank(a * b), A.rank(a) * A.rank(b));
    }
  }
  for (std::size_t b = 0; b < A.order(); ++b) {
    for (const auto& a : A.elements()) A.action.push_back(Matrix::identity(ring, A.rank(a)));
  }
  for (const auto& a : A.elements()) {
    A.pairing.emplace_back(ring, A.rank(a), A.rank(a));
    A.crosscap.emplace_back(ring, A.ranks[0]);
  }
  A.unit = Vector(ring, A.ranks[0]);
  A.reversal = Matrix::identity(ring, A.total_rank());
  return A;
}

GradedElement multiply(const AlgebraData& A, const GradedElement& v, const GradedElement& w) {
  require_grade(A, v);
  require_grade(A, w);
  const GroupElement g = v.grade * w.grade;
  return {g, A.mult_block(v.grade, w.grade).apply(vec_tensor(v.coords, w.coords))};
}

Scalar pair(const AlgebraData& A, const GradedElement& v, const GradedElement& w) {
  require_grade(A, v);
  require_grade(A, w);
  if (!(v.grade == w.grade)) return A.ring.zero();
  return dot(v.coords, A.pairing[v.grade.index()].apply(w.coords));
}

Scalar counit(const AlgebraData& A, const GradedElement& v) {
  require_grade(A, v);
  if (!v.grade.is_identity()) {
    throw GradeError("counit is only defined on the trivial grade, got " + v.grade.to_string());
  }
  return pair(A, v, A.unit_element());
}

Matrix comult_matrix(const AlgebraData& A, const GroupElement& a, const GroupElement& b) {
  const GroupElement ab = a * b;
  const std::size_t ra = A.rank(a), rb = A.rank(b), rab = A.rank(ab);
  const Matrix gram_inv = mat_inverse(A.pairing[b.index()]);
  // m: L_ab (x) L_b -> L_a, columns indexed (v, l).
  const Matrix& m = A.mult_block(ab, b);
  Matrix out(A.ring, ra * rb, rab);
  for (std::size_t v = 0; v < rab; ++v) {
    Matrix mv(A.ring, ra, rb);
    for (std::size_t i = 0; i < ra; ++i) {
      for (std::size_t l = 0; l < rb; ++l) mv(i, l) = m(i, v * rb + l);
    }
    Matrix dv = mat_mul(mv, gram_inv);
    for (std::size_t i = 0; i < ra; ++i) {
      for (std::size_t j = 0; j < rb; ++j) out(i * rb + j, v) = dv(i, j);
    }
  }
  return out;
}

Vector comultiply(const AlgebraData& A, const GroupElement& a, const GroupElement& b,
                  const GradedElement& v) {
  require_grade(A, v);
  if (!(v.grade == a * b)) {
    throw GradeError("comultiply(" + a.to_string() + "," + b.to_string() +
                     ") needs an element of grade " + (a * b).to_string());
  }
  return comult_matrix(A, a, b).apply(v.coords);
}

Vector copair(const AlgebraData& A, const GroupElement& g) {
  const Matrix inv = mat_inverse(A.pairing[g.index()]);
  return Vector(A.ring, std::vector<Scalar>(inv.entries().begin(), inv.entries().end()));
}

GradedElement q_element(const AlgebraData& A, const GroupElement& a, const GroupElement& b,
                        const GroupElement& c) {
  const GroupElement d = a * b;
  // a_i = e_i and b_i = sum_k B_ik e_k with eta(b_i, e_j) = P_ij, i.e. B G = P.
  const Matrix& p = A.action_block(b * c, d);
  const Matrix coeffs = mat_mul(p, mat_inverse(A.pairing[d.index()]));
  Vector flat(A.ring, std::vector<Scalar>(coeffs.entries().begin(), coeffs.entries().end()));
  return {A.identity(), A.mult_block(d, d).apply(flat)};
}

GradedElement apply_phi(const AlgebraData& A, const GroupElement& by, const GradedElement& v) {
  require_grade(A, v);
  return {v.grade, A.action_block(by, v.grade).apply(v.coords)};
}

GradedElement apply_Phi(const AlgebraData& A, const GradedElement& v) {
  require_grade(A, v);
  return {v.grade, A.reversal_block(v.grade).apply(v.coords)};
}

AlgebraData make_cocycle_algebra(const RingDesc& ring, const Scalar& t, const Scalar& a) {
  if (!(t.ring() == ring) || !(a.ring() == ring)) throw InputError("parameters outside ring");
  if (!is_unit(t)) throw NotAUnit("cocycle value " + t.to_string() + " is not a unit");
  if (!(a * a).is_one()) {
    throw InvalidParameter("crosscap scalar " + a.to_string() + " does not square to 1");
  }
  AlgebraData A = make_blank(ring, 1, {1, 1});
  const GroupElement e = A.element(0), s = A.element(1);
  auto kappa = [&](const GroupElement& x, const GroupElement& y) {
    return (x == s && y == s) ? t : ring.one();
  };
  for (const auto& x : {e, s}) {
    for (const auto& y : {e, s}) A.mult_block(x, y)(0, 0) = kappa(x, y);
    A.pairing[x.index()](0, 0) = kappa(x, x);
    A.crosscap[x.index()] = Vector(ring, std::vector<Scalar>{a});
  }
  A.unit = Vector::basis(ring, 1, 0);
  return A;
}

AlgebraData make_ground_ring(const RingDesc& ring, const Scalar& theta) {
  AlgebraData A = make_blank(ring, 0, {1});
  A.mult[0](0, 0) = ring.one();
  A.pairing[0](0, 0) = ring.one();
  A.unit = Vector::basis(ring, 1, 0);
  A.crosscap[0] = Vector(ring, std::vector<Scalar>{theta});
  return A;
}

}  // namespace hqft
