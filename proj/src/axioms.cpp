#include "hqft/axioms.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace hqft {

namespace {

constexpr std::array kAllAxioms = {
    Axiom::Associativity,        Axiom::UnitLaw,
    Axiom::Nondegenerate,        Axiom::PairingInvariance,
    Axiom::ActionAutomorphism,   Axiom::ActionHomomorphism,
    Axiom::ActionOwnGrade,       Axiom::TwistedCommutativity,
    Axiom::TraceCondition,       Axiom::ReversalInvolution,
    Axiom::ReversalGraded,       Axiom::ReversalAntimultiplicative,
    Axiom::ReversalUnit,         Axiom::ReversalPairing,
    Axiom::ReversalCommutesAction, Axiom::ComultReversal,
    Axiom::CrosscapSlide,        Axiom::ReversalFixesCrosscap,
    Axiom::ActionFixesCrosscap,  Axiom::ThreeCrosscaps,
};

constexpr std::size_t kFrobeniusCount = 4;
constexpr std::size_t kCrossedCount = 9;

std::string show(const GradedElement& v) { return v.grade.to_string() + ":" + v.coords.to_string(); }

class Sink {
 public:
  Sink(Axiom axiom, bool first_only) : id_(axiom_id(axiom)), first_only_(first_only) {}

  /// Records a violation; returns false when the scan should stop.
  bool add(std::vector<std::size_t> grades, std::vector<std::size_t> basis, std::string lhs,
           std::string rhs, std::string note = {}) {
    out_.push_back(Violation{std::string(id_), std::move(grades), std::move(basis),
                             std::move(lhs), std::move(rhs), std::move(note)});
    return !first_only_;
  }

  bool stopped() const { return first_only_ && !out_.empty(); }
  std::vector<Violation> take() { return std::move(out_); }

 private:
  std::string_view id_;
  bool first_only_;
  std::vector<Violation> out_;
};

bool pairing_invertible(const AlgebraData& A) {
  return std::all_of(A.pairing.begin(), A.pairing.end(),
                     [](const Matrix& g) { return is_unit(determinant(g)); });
}

// Left multiplication by c in L_1 on L_g, as an r_g x r_g matrix.
Matrix left_mult(const AlgebraData& A, const Vector& c, const GroupElement& g) {
  const std::size_t r = A.rank(g);
  Matrix out(A.ring, r, r);
  for (std::size_t j = 0; j < r; ++j) {
    GradedElement prod = multiply(A, {A.identity(), c}, A.basis(g, j));
    for (std::size_t i = 0; i < r; ++i) out(i, j) = prod.coords[i];
  }
  return out;
}

// Frobenius tier ------------------------------------------------------------

void check_associativity(const AlgebraData& A, Sink& s) {
  for (const auto& a : A.elements()) {
    for (const auto& b : A.elements()) {
      for (const auto& c : A.elements()) {
        for (std::size_t i = 0; i < A.rank(a); ++i) {
          for (std::size_t j = 0; j < A.rank(b); ++j) {
            GradedElement ab = multiply(A, A.basis(a, i), A.basis(b, j));
            for (std::size_t k = 0; k < A.rank(c); ++k) {
              GradedElement lhs = multiply(A, ab, A.basis(c, k));
              GradedElement rhs =
                  multiply(A, A.basis(a, i), multiply(A, A.basis(b, j), A.basis(c, k)));
              if (lhs != rhs &&
                  !s.add({a.index(), b.index(), c.index()}, {i, j, k}, show(lhs), show(rhs))) {
                return;
              }
            }
          }
        }
      }
    }
  }
}

void check_unit_law(const AlgebraData& A, Sink& s) {
  const GradedElement one = A.unit_element();
  for (const auto& g : A.elements()) {
    for (std::size_t i = 0; i < A.rank(g); ++i) {
      GradedElement v = A.basis(g, i);
      GradedElement left = multiply(A, one, v);
      if (left != v && !s.add({g.index()}, {i}, show(left), show(v), "1_L * v")) return;
      GradedElement right = multiply(A, v, one);
      if (right != v && !s.add({g.index()}, {i}, show(right), show(v), "v * 1_L")) return;
    }
  }
}

void check_nondegenerate(const AlgebraData& A, Sink& s) {
  for (const auto& g : A.elements()) {
    Scalar det = determinant(A.pairing[g.index()]);
    if (!is_unit(det) && !s.add({g.index()}, {}, det.to_string(), "unit", "det of Gram matrix")) {
      return;
    }
  }
}

void check_pairing_invariance(const AlgebraData& A, Sink& s) {
  for (const auto& a : A.elements()) {
    for (const auto& b : A.elements()) {
      const GroupElement c = a * b;
      for (std::size_t i = 0; i < A.rank(a); ++i) {
        for (std::size_t j = 0; j < A.rank(b); ++j) {
          GradedElement ab = multiply(A, A.basis(a, i), A.basis(b, j));
          for (std::size_t k = 0; k < A.rank(c); ++k) {
            Scalar lhs = pair(A, ab, A.basis(c, k));
            Scalar rhs = pair(A, A.basis(a, i), multiply(A, A.basis(b, j), A.basis(c, k)));
            if (lhs != rhs && !s.add({a.index(), b.index(), c.index()}, {i, j, k},
                                     lhs.to_string(), rhs.to_string())) {
              return;
            }
          }
        }
      }
    }
  }
}

// Crossed tier --------------------------------------------------------------

void check_action_automorphism(const AlgebraData& A, Sink& s) {
  for (const auto& by : A.elements()) {
    for (const auto& g : A.elements()) {
      Scalar det = determinant(A.action_block(by, g));
      if (!is_unit(det) &&
          !s.add({by.index(), g.index()}, {}, det.to_string(), "unit", "phi not invertible")) {
        return;
      }
    }
    GradedElement image = apply_phi(A, by, A.unit_element());
    if (image != A.unit_element() &&
        !s.add({by.index()}, {}, show(image), show(A.unit_element()), "phi(1_L)")) {
      return;
    }
    for (const auto& a : A.elements()) {
      for (const auto& b : A.elements()) {
        for (std::size_t i = 0; i < A.rank(a); ++i) {
          for (std::size_t j = 0; j < A.rank(b); ++j) {
            GradedElement lhs = apply_phi(A, by, multiply(A, A.basis(a, i), A.basis(b, j)));
            GradedElement rhs =
                multiply(A, apply_phi(A, by, A.basis(a, i)), apply_phi(A, by, A.basis(b, j)));
            if (lhs != rhs && !s.add({by.index(), a.index(), b.index()}, {i, j}, show(lhs),
                                     show(rhs), "phi(vw) = phi(v) phi(w)")) {
              return;
            }
          }
        }
      }
      for (std::size_t i = 0; i < A.rank(a); ++i) {
        for (std::size_t j = 0; j < A.rank(a); ++j) {
          Scalar lhs = pair(A, apply_phi(A, by, A.basis(a, i)), apply_phi(A, by, A.basis(a, j)));
          Scalar rhs = pair(A, A.basis(a, i), A.basis(a, j));
          if (lhs != rhs && !s.add({by.index(), a.index()}, {i, j}, lhs.to_string(),
                                   rhs.to_string(), "eta(phi v, phi w) = eta(v, w)")) {
            return;
          }
        }
      }
    }
  }
}

void check_action_homomorphism(const AlgebraData& A, Sink& s) {
  for (const auto& g : A.elements()) {
    const Matrix& id = A.action_block(A.identity(), g);
    if (!id.is_identity() &&
        !s.add({0, g.index()}, {}, id.to_string(), "identity", "phi_1 = id")) {
      return;
    }
    for (const auto& b : A.elements()) {
      for (const auto& c : A.elements()) {
        Matrix lhs = A.action_block(b, g) * A.action_block(c, g);
        const Matrix& rhs = A.action_block(b * c, g);
        if (lhs != rhs && !s.add({b.index(), c.index(), g.index()}, {}, lhs.to_string(),
                                 rhs.to_string(), "phi_b phi_c = phi_bc")) {
          return;
        }
      }
    }
  }
}

void check_action_own_grade(const AlgebraData& A, Sink& s) {
  for (const auto& g : A.elements()) {
    const Matrix& m = A.action_block(g, g);
    if (!m.is_identity() && !s.add({g.index()}, {}, m.to_string(), "identity")) return;
  }
}

void check_twisted_commutativity(const AlgebraData& A, Sink& s) {
  for (const auto& a : A.elements()) {
    for (const auto& b : A.elements()) {
      for (std::size_t i = 0; i < A.rank(a); ++i) {
        for (std::size_t j = 0; j < A.rank(b); ++j) {
          GradedElement lhs = multiply(A, apply_phi(A, b, A.basis(a, i)), A.basis(b, j));
          GradedElement rhs = multiply(A, A.basis(b, j), A.basis(a, i));
          if (lhs != rhs &&
              !s.add({a.index(), b.index()}, {i, j}, show(lhs), show(rhs))) {
            return;
          }
        }
      }
    }
  }
}

// Tr(c phi_b on L_a) = Tr(phi_a c on L_b) for c in L_1; the commutator
// a b a^-1 b^-1 is trivial because pi is abelian.
void check_trace_condition(const AlgebraData& A, Sink& s) {
  const GroupElement one = A.identity();
  for (std::size_t k = 0; k < A.rank(one); ++k) {
    const Vector c = Vector::basis(A.ring, A.rank(one), k);
    for (const auto& a : A.elements()) {
      for (const auto& b : A.elements()) {
        Scalar lhs = mat_trace(left_mult(A, c, a) * A.action_block(b, a));
        Scalar rhs = mat_trace(A.action_block(a, b) * left_mult(A, c, b));
        if (lhs != rhs &&
            !s.add({a.index(), b.index()}, {k}, lhs.to_string(), rhs.to_string())) {
          return;
        }
      }
    }
  }
}

// Extended tier -------------------------------------------------------------

void check_reversal_involution(const AlgebraData& A, Sink& s) {
  const Matrix sq = A.reversal * A.reversal;
  const std::size_t n = A.total_rank();
  for (const auto& g : A.elements()) {
    const std::size_t off = A.offset(g);
    for (std::size_t i = 0; i < A.rank(g); ++i) {
      Vector col = sq.col(off + i);
      Vector expected = Vector::basis(A.ring, n, off + i);
      if (col != expected && !s.add({g.index()}, {i}, col.to_string(), expected.to_string())) {
        return;
      }
    }
  }
}

void check_reversal_graded(const AlgebraData& A, Sink& s) {
  for (const auto& g : A.elements()) {
    const std::size_t off = A.offset(g);
    for (std::size_t i = 0; i < A.rank(g); ++i) {
      for (const auto& h : A.elements()) {
        if (h == g) continue;
        const std::size_t hoff = A.offset(h);
        for (std::size_t r = 0; r < A.rank(h); ++r) {
          const Scalar& leak = A.reversal(hoff + r, off + i);
          if (!leak.is_zero() &&
              !s.add({g.index(), h.index()}, {i, r}, leak.to_string(), "0",
                     "Phi(L_g) has a component in L_h")) {
            return;
          }
        }
      }
    }
  }
}

void check_reversal_antimultiplicative(const AlgebraData& A, Sink& s) {
  for (const auto& a : A.elements()) {
    for (const auto& b : A.elements()) {
      for (std::size_t i = 0; i < A.rank(a); ++i) {
        for (std::size_t j = 0; j < A.rank(b); ++j) {
          GradedElement v = A.basis(a, i), w = A.basis(b, j);
          GradedElement lhs = apply_Phi(A, multiply(A, v, w));
          GradedElement rhs = multiply(A, apply_Phi(A, w), apply_Phi(A, v));
          if (lhs != rhs && !s.add({a.index(), b.index()}, {i, j}, show(lhs), show(rhs))) {
            return;
          }
        }
      }
    }
  }
}

void check_reversal_unit(const AlgebraData& A, Sink& s) {
  GradedElement image = apply_Phi(A, A.unit_element());
  if (image != A.unit_element()) s.add({0}, {}, show(image), show(A.unit_element()));
}

void check_reversal_pairing(const AlgebraData& A, Sink& s) {
  for (const auto& g : A.elements()) {
    for (std::size_t i = 0; i < A.rank(g); ++i) {
      for (std::size_t j = 0; j < A.rank(g); ++j) {
        Scalar lhs = pair(A, apply_Phi(A, A.basis(g, i)), apply_Phi(A, A.basis(g, j)));
        Scalar rhs = pair(A, A.basis(g, i), A.basis(g, j));
        if (lhs != rhs && !s.add({g.index()}, {i, j}, lhs.to_string(), rhs.to_string())) return;
      }
    }
  }
}

void check_reversal_commutes_action(const AlgebraData& A, Sink& s) {
  for (const auto& by : A.elements()) {
    for (const auto& g : A.elements()) {
      const Matrix rev = A.reversal_block(g);
      Matrix lhs = rev * A.action_block(by, g);
      Matrix rhs = A.action_block(by, g) * rev;
      if (lhs != rhs &&
          !s.add({by.index(), g.index()}, {}, lhs.to_string(), rhs.to_string())) {
        return;
      }
    }
  }
}

// m (Phi (x) phi_c) Delta_{a,b}(v) = phi_c(theta_{ac} theta_c v) and
// m (phi_c (x) Phi) Delta_{a,b}(v) = phi_c(theta_{bc} theta_c v).
void check_comult_reversal(const AlgebraData& A, Sink& s) {
  for (const auto& a : A.elements()) {
    for (const auto& b : A.elements()) {
      const Matrix delta = comult_matrix(A, a, b);
      const GroupElement ab = a * b;
      for (const auto& c : A.elements()) {
        const Matrix left_twist = mat_tensor(A.reversal_block(a), A.action_block(c, b));
        const Matrix right_twist = mat_tensor(A.action_block(c, a), A.reversal_block(b));
        const GradedElement tt_left =
            multiply(A, A.crosscap_element(a * c), A.crosscap_element(c));
        const GradedElement tt_right =
            multiply(A, A.crosscap_element(b * c), A.crosscap_element(c));
        for (std::size_t i = 0; i < A.rank(ab); ++i) {
          const GradedElement v = A.basis(ab, i);
          const Vector split = delta.apply(v.coords);
          struct Display {
            const Matrix& twist;
            const GradedElement& thetas;
            const char* note;
          };
          for (const Display& d : {Display{left_twist, tt_left, "Phi (x) phi_c"},
                                   Display{right_twist, tt_right, "phi_c (x) Phi"}}) {
            GradedElement lhs{ab, A.mult_block(a, b).apply(d.twist.apply(split))};
            GradedElement rhs = apply_phi(A, c, multiply(A, d.thetas, v));
            if (lhs != rhs && !s.add({a.index(), b.index(), c.index()}, {i}, show(lhs),
                                     show(rhs), d.note)) {
              return;
            }
          }
        }
      }
    }
  }
}

void check_crosscap_slide(const AlgebraData& A, Sink& s) {
  for (const auto& a : A.elements()) {
    for (const auto& b : A.elements()) {
      for (std::size_t i = 0; i < A.rank(a); ++i) {
        const GradedElement v = A.basis(a, i);
        GradedElement lhs = apply_Phi(A, multiply(A, A.crosscap_element(b), v));
        GradedElement rhs = apply_phi(A, b * a, multiply(A, A.crosscap_element(b * a), v));
        if (lhs != rhs && !s.add({a.index(), b.index()}, {i}, show(lhs), show(rhs))) return;
      }
    }
  }
}

void check_reversal_fixes_crosscap(const AlgebraData& A, Sink& s) {
  for (const auto& a : A.elements()) {
    GradedElement image = apply_Phi(A, A.crosscap_element(a));
    if (image != A.crosscap_element(a) &&
        !s.add({a.index()}, {}, show(image), show(A.crosscap_element(a)))) {
      return;
    }
  }
}

void check_action_fixes_crosscap(const AlgebraData& A, Sink& s) {
  for (const auto& a : A.elements()) {
    for (const auto& b : A.elements()) {
      GradedElement image = apply_phi(A, b, A.crosscap_element(a));
      if (image != A.crosscap_element(a) &&
          !s.add({a.index(), b.index()}, {}, show(image), show(A.crosscap_element(a)))) {
        return;
      }
    }
  }
}

void check_three_crosscaps(const AlgebraData& A, Sink& s) {
  const GroupElement one = A.identity();
  const GradedElement q_ref = q_element(A, one, one, one);
  for (const auto& a : A.elements()) {
    for (const auto& b : A.elements()) {
      for (const auto& c : A.elements()) {
        const GradedElement q = q_element(A, a, b, c);
        const std::vector<std::size_t> grades{a.index(), b.index(), c.index()};
        if (q != q_ref && !s.add(grades, {}, show(q), show(q_ref), "q(1) depends on labels")) {
          return;
        }
        GradedElement lhs = multiply(
            A, multiply(A, A.crosscap_element(a), A.crosscap_element(b)), A.crosscap_element(c));
        GradedElement rhs = multiply(A, q, A.crosscap_element(a * b * c));
        if (lhs != rhs && !s.add(grades, {}, show(lhs), show(rhs))) return;
      }
    }
  }
}

}  // namespace

std::string_view tier_name(Tier tier) {
  switch (tier) {
    case Tier::Frobenius:
      return "frobenius";
    case Tier::Crossed:
      return "crossed";
    case Tier::Extended:
      return "extended";
  }
  return "?";
}

Tier parse_tier(std::string_view text) {
  if (text == "frobenius") return Tier::Frobenius;
  if (text == "crossed") return Tier::Crossed;
  if (text == "extended") return Tier::Extended;
  throw InputError("unknown tier '" + std::string(text) + "'");
}

std::string_view axiom_id(Axiom axiom) {
  switch (axiom) {
    case Axiom::Associativity: return "D2.4.assoc";
    case Axiom::UnitLaw: return "D2.4.unit";
    case Axiom::Nondegenerate: return "D2.5.1";
    case Axiom::PairingInvariance: return "D2.5.2";
    case Axiom::ActionAutomorphism: return "D2.6.aut";
    case Axiom::ActionHomomorphism: return "D2.6.hom";
    case Axiom::ActionOwnGrade: return "D2.6.2";
    case Axiom::TwistedCommutativity: return "D2.6.3";
    case Axiom::TraceCondition: return "D2.6.4";
    case Axiom::ReversalInvolution: return "D2.8.1";
    case Axiom::ReversalGraded: return "D2.8.2";
    case Axiom::ReversalAntimultiplicative: return "D2.8.3";
    case Axiom::ReversalUnit: return "D2.8.4";
    case Axiom::ReversalPairing: return "D2.8.5";
    case Axiom::ReversalCommutesAction: return "D2.8.6";
    case Axiom::ComultReversal: return "D2.8.7";
    case Axiom::CrosscapSlide: return "D2.8.8";
    case Axiom::ReversalFixesCrosscap: return "D2.8.9";
    case Axiom::ActionFixesCrosscap: return "D2.8.10";
    case Axiom::ThreeCrosscaps: return "D2.8.11";
  }
  return "?";
}

Tier axiom_tier(Axiom axiom) {
  auto pos = static_cast<std::size_t>(std::find(kAllAxioms.begin(), kAllAxioms.end(), axiom) -
                                      kAllAxioms.begin());
  if (pos < kFrobeniusCount) return Tier::Frobenius;
  if (pos < kCrossedCount) return Tier::Crossed;
  return Tier::Extended;
}

std::span<const Axiom> axioms_through(Tier tier) {
  switch (tier) {
    case Tier::Frobenius:
      return {kAllAxioms.data(), kFrobeniusCount};
    case Tier::Crossed:
      return {kAllAxioms.data(), kCrossedCount};
    case Tier::Extended:
      return {kAllAxioms.data(), kAllAxioms.size()};
  }
  return {};
}

std::size_t axiom_order(std::string_view id) {
  for (std::size_t i = 0; i < kAllAxioms.size(); ++i) {
    if (axiom_id(kAllAxioms[i]) == id) return i;
  }
  return kAllAxioms.size();
}

std::vector<std::string> AxiomReport::failed_ids() const {
  std::vector<std::string> ids;
  for (const auto& v : violations) {
    if (std::find(ids.begin(), ids.end(), v.axiom) == ids.end()) ids.push_back(v.axiom);
  }
  return ids;
}

bool AxiomReport::names(std::string_view id) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.axiom == id; });
}

std::string AxiomReport::to_text() const {
  std::ostringstream os;
  os << "tier: " << tier_name(tier) << '\n';
  os << "result: " << (passed() ? "PASSED" : "FAILED") << " (" << violations.size()
     << " violation" << (violations.size() == 1 ? "" : "s") << ")\n";
  for (const auto& v : violations) {
    os << "  " << v.axiom << " grades=[";
    for (std::size_t i = 0; i < v.grades.size(); ++i) os << (i ? "," : "") << v.grades[i];
    os << "] basis=[";
    for (std::size_t i = 0; i < v.basis.size(); ++i) os << (i ? "," : "") << v.basis[i];
    os << "] lhs=" << v.lhs << " rhs=" << v.rhs;
    if (!v.note.empty()) os << " (" << v.note << ')';
    os << '\n';
  }
  return os.str();
}

std::vector<Violation> check_axiom(const AlgebraData& A, Axiom axiom, bool first_only) {
  Sink s(axiom, first_only);
  const bool needs_inverse = axiom == Axiom::ComultReversal || axiom == Axiom::ThreeCrosscaps;
  if (needs_inverse && !pairing_invertible(A)) {
    s.add({}, {}, "-", "-", "not evaluable: degenerate pairing");
    return s.take();
  }
  switch (axiom) {
    case Axiom::Associativity: check_associativity(A, s); break;
    case Axiom::UnitLaw: check_unit_law(A, s); break;
    case Axiom::Nondegenerate: check_nondegenerate(A, s); break;
    case Axiom::PairingInvariance: check_pairing_invariance(A, s); break;
    case Axiom::ActionAutomorphism: check_action_automorphism(A, s); break;
    case Axiom::ActionHomomorphism: check_action_homomorphism(A, s); break;
    case Axiom::ActionOwnGrade: check_action_own_grade(A, s); break;
    case Axiom::TwistedCommutativity: check_twisted_commutativity(A, s); break;
    case Axiom::TraceCondition: check_trace_condition(A, s); break;
    case Axiom::ReversalInvolution: check_reversal_involution(A, s); break;
    case Axiom::ReversalGraded: check_reversal_graded(A, s); break;
    case Axiom::ReversalAntimultiplicative: check_reversal_antimultiplicative(A, s); break;
    case Axiom::ReversalUnit: check_reversal_unit(A, s); break;
    case Axiom::ReversalPairing: check_reversal_pairing(A, s); break;
    case Axiom::ReversalCommutesAction: check_reversal_commutes_action(A, s); break;
    case Axiom::ComultReversal: check_comult_reversal(A, s); break;
    case Axiom::CrosscapSlide: check_crosscap_slide(A, s); break;
    case Axiom::ReversalFixesCrosscap: check_reversal_fixes_crosscap(A, s); break;
    case Axiom::ActionFixesCrosscap: check_action_fixes_crosscap(A, s); break;
    case Axiom::ThreeCrosscaps: check_three_crosscaps(A, s); break;
  }
  return s.take();
}

AxiomReport verify(const AlgebraData& A, Tier tier) {
  A.validate();
  AxiomReport report;
  report.tier = tier;
  for (Axiom axiom : axioms_through(tier)) {
    auto found = check_axiom(A, axiom);
    report.violations.insert(report.violations.end(), std::make_move_iterator(found.begin()),
                             std::make_move_iterator(found.end()));
  }
  return report;
}

std::vector<std::string> trace_reading_discrepancies(const AlgebraData& A) {
  std::vector<std::string> out;
  const GroupElement one = A.identity();
  for (std::size_t k = 0; k < A.rank(one); ++k) {
    const Vector c = Vector::basis(A.ring, A.rank(one), k);
    for (const auto& a : A.elements()) {
      for (const auto& b : A.elements()) {
        const Matrix mc = left_mult(A, c, b);
        Scalar after = mat_trace(A.action_block(a, b) * mc);
        Scalar before = mat_trace(mc * A.action_block(a, b));
        if (after != before) {
          out.push_back("a=" + a.to_string() + " b=" + b.to_string() + " c=" + std::to_string(k) +
                        ": " + after.to_string() + " vs " + before.to_string());
        }
      }
    }
  }
  return out;
}

}  // namespace hqft
