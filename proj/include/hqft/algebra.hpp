#pragma once

// Extended crossed pi-algebras over free modules with chosen ordered bases.
//
// Grades are indexed by GroupElement::index(). Every L_alpha is free of rank
// ranks[alpha]. Structure maps are stored blockwise:
//
//   mult[a * |pi| + b]    r_{ab} x (r_a r_b)   multiplication L_a (x) L_b -> L_ab
//   pairing[a]            r_a x r_a            Gram matrix of eta on L_a (x) L_a
//   action[b * |pi| + a]  r_a x r_a            phi_b restricted to L_a
//   crosscap[a]           length r_1           theta_a in L_1
//   reversal              N x N, N = sum r_a   Phi on all of L, grade blocks in
//                                              index order
//
// The reversal is stored on the whole of L so that grade preservation is a
// checkable property rather than a representational given.

#include <cstddef>
#include <vector>

#include "hqft/linalg.hpp"

namespace hqft {

struct GradedElement {
  GroupElement grade;
  Vector coords;

  friend bool operator==(const GradedElement&, const GradedElement&) = default;
};

struct AlgebraData {
  RingDesc ring;
  int pi_rank = 0;
  std::vector<std::size_t> ranks;
  std::vector<Matrix> mult;
  Vector unit;
  std::vector<Matrix> pairing;
  std::vector<Matrix> action;
  std::vector<Vector> crosscap;
  Matrix reversal;

  std::size_t order() const noexcept { return ranks.size(); }
  std::size_t rank(const GroupElement& g) const { return ranks.at(g.index()); }
  std::size_t total_rank() const;
  /// Index of the first basis vector of L_g inside the whole of L.
  std::size_t offset(const GroupElement& g) const;

  GroupElement identity() const { return GroupElement::identity(pi_rank); }
  GroupElement element(std::size_t index) const {
    return GroupElement(pi_rank, static_cast<std::uint32_t>(index));
  }
  std::vector<GroupElement> elements() const { return all_elements(pi_rank); }

  const Matrix& mult_block(const GroupElement& a, const GroupElement& b) const {
    return mult.at(a.index() * order() + b.index());
  }
  Matrix& mult_block(const GroupElement& a, const GroupElement& b) {
    return mult.at(a.index() * order() + b.index());
  }
  const Matrix& action_block(const GroupElement& by, const GroupElement& on) const {
    return action.at(by.index() * order() + on.index());
  }
  Matrix& action_block(const GroupElement& by, const GroupElement& on) {
    return action.at(by.index() * order() + on.index());
  }
  /// Diagonal block of the reversal on L_g.
  Matrix reversal_block(const GroupElement& g) const;

  GradedElement basis(const GroupElement& g, std::size_t i) const;
  GradedElement zero(const GroupElement& g) const;
  GradedElement unit_element() const { return {identity(), unit}; }
  GradedElement crosscap_element(const GroupElement& g) const {
    return {identity(), crosscap.at(g.index())};
  }

  /// Throws InputError unless every block has the shape implied by ranks.
  void validate() const;

  friend bool operator==(const AlgebraData&, const AlgebraData&) = default;
};

/// A skeleton with every structure map zero except action = identity blocks
/// and reversal = identity. Throws InputError on a bad rank profile.
AlgebraData make_blank(const RingDesc& ring, int pi_rank, std::vector<std::size_t> ranks);

GradedElement multiply(const AlgebraData& A, const GradedElement& v, const GradedElement& w);

/// eta(v, w); zero unless the grades agree.
Scalar pair(const AlgebraData& A, const GradedElement& v, const GradedElement& w);

/// eps(v) = eta(v, 1_L). Throws GradeError off the trivial grade.
Scalar counit(const AlgebraData& A, const GradedElement& v);

/// Matrix of Delta_{a,b}: L_ab -> L_a (x) L_b, shape (r_a r_b) x r_ab, the
/// unique map with (id (x) eta)(Delta (x) id) = m on L_ab (x) L_b.
Matrix comult_matrix(const AlgebraData& A, const GroupElement& a, const GroupElement& b);

/// Delta_{a,b}(v) as coordinates in L_a (x) L_b. Throws GradeError unless
/// grade(v) == ab.
Vector comultiply(const AlgebraData& A, const GroupElement& a, const GroupElement& b,
                  const GradedElement& v);

/// The tensor sum C_ij e_i (x) e_j in L_g (x) L_g with (eta (x) id)(id (x) C) = id,
/// i.e. C is the inverse Gram matrix.
Vector copair(const AlgebraData& A, const GroupElement& g);

/// q(1) = sum_i a_i b_i for dual families in L_{ab} against phi_{bc}.
GradedElement q_element(const AlgebraData& A, const GroupElement& a, const GroupElement& b,
                        const GroupElement& c);

GradedElement apply_phi(const AlgebraData& A, const GroupElement& by, const GradedElement& v);
/// Applies the diagonal reversal block of grade(v).
GradedElement apply_Phi(const AlgebraData& A, const GradedElement& v);

/// The rank-one twisted group algebra on pi = Z/2 with normalized cocycle
/// kappa(-1,-1) = t, phi = id, theta_a = a l_1 and Phi = id.
/// Throws NotAUnit when t is not a unit, InvalidParameter unless a^2 = 1.
AlgebraData make_cocycle_algebra(const RingDesc& ring, const Scalar& t, const Scalar& a);

/// R itself over the trivial group: m = [1], eta = [1], theta = [theta].
AlgebraData make_ground_ring(const RingDesc& ring, const Scalar& theta);

}  // namespace hqft
