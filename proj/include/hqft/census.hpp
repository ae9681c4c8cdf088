#pragma once

// Exhaustive search for algebras of a given rank profile over Z/n.
//
// The search walks the structure maps in stages (unit and multiplication,
// then pairing, action, reversal and crosscaps) and discards a partial
// assignment as soon as an axiom that only involves the maps fixed so far
// fails. Components a tier does not search keep the make_blank defaults
// (phi = id, Phi = id, theta = 0).

#include <gmpxx.h>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hqft/algebra.hpp"
#include "hqft/axioms.hpp"

namespace hqft {

struct CensusQuery {
  RingDesc ring = RingDesc::integers_mod(2);
  int pi_rank = 0;
  std::vector<std::size_t> ranks{1};
  Tier tier = Tier::Extended;
  /// Largest search space, in raw structure-constant assignments, that
  /// enumerate accepts.
  std::uint64_t bound = 1'000'000'000;

  std::string to_string() const;
};

/// Number of raw assignments of every structure constant the tier searches.
/// Throws InputError for infinite rings or a bad rank profile.
mpz_class search_space_size(const CensusQuery& q);

/// All algebras passing verify(q.tier), sorted by compact serialization.
/// Throws SearchSpaceTooLarge when search_space_size exceeds q.bound.
std::vector<AlgebraData> enumerate(const CensusQuery& q);
std::vector<AlgebraData> enumerate_serial(const CensusQuery& q);

/// Every invertible r x r matrix over a finite ring, in lexicographic order
/// of entries. Throws SearchSpaceTooLarge beyond `bound` raw matrices.
std::vector<Matrix> invertible_matrices(const RingDesc& ring, std::size_t r,
                                        std::uint64_t bound = 1'000'000);

/// Transports A along the grade-preserving basis change whose columns are
/// the new basis vectors, one matrix per grade.
AlgebraData change_basis(const AlgebraData& A, const std::vector<Matrix>& basis);

/// Least compact serialization over the orbit of A under basis changes.
AlgebraData canonical_form(const AlgebraData& A, std::uint64_t bound = 1'000'000);

/// One canonical representative per isomorphism class, sorted.
std::vector<AlgebraData> dedup_isomorphism(const std::vector<AlgebraData>& list,
                                           std::uint64_t bound = 1'000'000);

struct CensusResult {
  CensusQuery query;
  std::vector<AlgebraData> algebras;
  /// Indices into `algebras` of the class representatives.
  std::vector<std::size_t> representatives;
  double elapsed_seconds = 0;
};

CensusResult run_census(const CensusQuery& q);

/// Writes algebra_NNNN.json per result and summary.json into `dir`. The
/// summary omits timing so reruns are byte identical. Files are staged in a
/// sibling directory and renamed into place, so a failure leaves no partial
/// set. Throws InputError when `dir` exists and
/// is not empty.
void write_census(const CensusResult& result, const std::filesystem::path& dir);

/// summary.json contents; elapsed time is omitted when include_timing is false.
std::string census_summary_json(const CensusResult& result, bool include_timing = true);

}  // namespace hqft
