#pragma once

// Exhaustive axiom verification for Frobenius, crossed and extended crossed
// pi-algebras. Every quantified axiom is multilinear, so checking all basis
// tuples and all group-element tuples is sound and complete.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hqft/algebra.hpp"

namespace hqft {

enum class Tier { Frobenius, Crossed, Extended };

std::string_view tier_name(Tier tier);
/// Accepts "frobenius", "crossed", "extended". Throws InputError otherwise.
Tier parse_tier(std::string_view text);

enum class Axiom {
  // Frobenius tier
  Associativity,      // D2.4.assoc
  UnitLaw,            // D2.4.unit
  Nondegenerate,      // D2.5.1
  PairingInvariance,  // D2.5.2  eta(ab, c) = eta(a, bc)
  // crossed tier
  ActionAutomorphism,    // D2.6.aut  each phi_b is an algebra automorphism preserving eta, 1_L
  ActionHomomorphism,    // D2.6.hom  phi_b phi_c = phi_bc, phi_1 = id
  ActionOwnGrade,        // D2.6.2    phi_a = id on L_a
  TwistedCommutativity,  // D2.6.3    phi_b(a) b = b a
  TraceCondition,        // D2.6.4
  // extended tier
  ReversalInvolution,          // D2.8.1
  ReversalGraded,              // D2.8.2
  ReversalAntimultiplicative,  // D2.8.3
  ReversalUnit,                // D2.8.4
  ReversalPairing,             // D2.8.5
  ReversalCommutesAction,      // D2.8.6
  ComultReversal,              // D2.8.7 (both displays)
  CrosscapSlide,               // D2.8.8
  ReversalFixesCrosscap,       // D2.8.9
  ActionFixesCrosscap,         // D2.8.10
  ThreeCrosscaps,              // D2.8.11 (plus label independence of q(1))
};

std::string_view axiom_id(Axiom axiom);
Tier axiom_tier(Axiom axiom);
/// All axioms of the given tier and the tiers below it, in report order.
std::span<const Axiom> axioms_through(Tier tier);
/// Position of an id in report order; unknown ids sort last.
std::size_t axiom_order(std::string_view id);

struct Violation {
  std::string axiom;
  /// Group element indices of the witness tuple.
  std::vector<std::size_t> grades;
  /// Basis indices of the witness tuple (per grade, or global for Phi).
  std::vector<std::size_t> basis;
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct AxiomReport {
  Tier tier = Tier::Frobenius;
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
  /// Distinct axiom ids with at least one violation, in report order.
  std::vector<std::string> failed_ids() const;
  bool names(std::string_view id) const;
  std::string to_text() const;
};

/// Violations of one axiom; with first_only the scan stops at the first one.
/// Axioms that need the inverse pairing report a single "degenerate" entry
/// when some Gram matrix is not invertible.
std::vector<Violation> check_axiom(const AlgebraData& A, Axiom axiom, bool first_only = false);
inline bool holds(const AlgebraData& A, Axiom axiom) { return check_axiom(A, axiom, true).empty(); }

AxiomReport verify(const AlgebraData& A, Tier tier);
inline AxiomReport verify_frobenius(const AlgebraData& A) { return verify(A, Tier::Frobenius); }
inline AxiomReport verify_crossed(const AlgebraData& A) { return verify(A, Tier::Crossed); }
inline AxiomReport verify_extended(const AlgebraData& A) { return verify(A, Tier::Extended); }

/// Compares the two composition orders of the trace condition,
/// Tr(phi_a o M_c) and Tr(M_c o phi_a) on L_b, and lists every (a, b, c)
/// where they differ.
std::vector<std::string> trace_reading_discrepancies(const AlgebraData& A);

}  // namespace hqft
