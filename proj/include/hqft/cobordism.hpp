#pragma once

// Generator words for unoriented (1+1)-dimensional X-cobordisms and their
// evaluation against an AlgebraData.
//
// A word is a list of layers read bottom to top; each layer is a list of
// generators placed side by side. Circles on a boundary are ordered left to
// right and tensor factors follow the same order (left factor slowest).

#include <cstddef>
#include <string>
#include <vector>

#include "hqft/algebra.hpp"
#include "hqft/axioms.hpp"

namespace hqft {

struct BoundarySignature {
  std::vector<GroupElement> circles;

  std::string to_string() const;
  friend bool operator==(const BoundarySignature&, const BoundarySignature&) = default;
};

BoundarySignature concat(const BoundarySignature& a, const BoundarySignature& b);

enum class GenKind { Id, Swap, Cup, Cap, Mult, Comult, Pair, Copair, Hol, Flip, Moebius };

std::string_view gen_name(GenKind kind);
/// Throws InputError for an unknown name.
GenKind parse_gen_name(std::string_view name);
/// Number of labels the generator carries in the file format.
std::size_t gen_label_count(GenKind kind);

struct Generator {
  GenKind kind = GenKind::Id;
  /// Labels as written in the file format: Hol carries (circle, holonomy).
  std::vector<GroupElement> labels;
  /// Rank of pi; needed by Cup and Cap, which carry no labels.
  int pi_rank = 0;

  static Generator id(const GroupElement& a);
  static Generator swap(const GroupElement& a, const GroupElement& b);
  static Generator cup(int pi_rank);
  static Generator cap(int pi_rank);
  static Generator mult(const GroupElement& a, const GroupElement& b);
  static Generator comult(const GroupElement& a, const GroupElement& b);
  static Generator pair(const GroupElement& a);
  static Generator copair(const GroupElement& a);
  /// Holonomy `by` around a circle labelled `a`; acts as phi_by on L_a.
  static Generator hol(const GroupElement& a, const GroupElement& by);
  static Generator flip(const GroupElement& a);
  static Generator moebius(const GroupElement& a);
  /// Validates the label count and ranks. Throws InputError.
  static Generator make(GenKind kind, std::vector<GroupElement> labels, int pi_rank);

  BoundarySignature inputs() const;
  BoundarySignature outputs() const;
  std::string to_string() const;

  friend bool operator==(const Generator&, const Generator&) = default;
};

using Layer = std::vector<Generator>;

struct CobordismWord {
  std::vector<Layer> layers;

  friend bool operator==(const CobordismWord&, const CobordismWord&) = default;
};

BoundarySignature layer_inputs(const Layer& layer);
BoundarySignature layer_outputs(const Layer& layer);

/// (input, output) signatures. Throws SignatureMismatch naming the first
/// layer whose input differs from the previous layer's output.
std::pair<BoundarySignature, BoundarySignature> typecheck(const CobordismWord& word);

/// Layers of `first` followed by layers of `second`; throws SignatureMismatch
/// when they do not compose.
CobordismWord concatenate(const CobordismWord& first, const CobordismWord& second);

struct LinearMap {
  BoundarySignature source;
  BoundarySignature target;
  Matrix matrix;

  std::string to_text() const;
  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

/// Dimension of the tensor product of the pieces on a boundary.
std::size_t boundary_dim(const AlgebraData& A, const BoundarySignature& sig);

Matrix generator_matrix(const AlgebraData& A, const Generator& g);
LinearMap evaluate_layer(const AlgebraData& A, const Layer& layer);
LinearMap evaluate(const AlgebraData& A, const CobordismWord& word);

// Closed surfaces --------------------------------------------------------------

struct SurfaceSpec {
  std::vector<std::pair<GroupElement, GroupElement>> handles;
  std::vector<GroupElement> crosscaps;

  std::string to_string() const;
  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

/// Mult o (Hol(a; b) (x) Id(a)) o Copair(a): [] -> [1].
CobordismWord handle_word(const GroupElement& a, const GroupElement& b);

/// eta(1_L H_1 ... H_h, theta_1 ... theta_c), or the counit of the handle
/// product when there are no crosscaps.
CobordismWord surface_word(const SurfaceSpec& s, int pi_rank);
Scalar surface_invariant(const AlgebraData& A, const SurfaceSpec& s);

/// The same closed surface through a different word: crosscaps first, then
/// handles, closed with the counit.
Scalar surface_invariant_alt(const AlgebraData& A, const SurfaceSpec& s);

/// Three crosscaps (a, b, c) against one handle (ba, bc) plus crosscap abc.
bool three_crosscap_check(const AlgebraData& A, const GroupElement& a, const GroupElement& b,
                          const GroupElement& c);

struct TableEntry {
  SurfaceSpec surface;
  Scalar value;
  /// Both words agree, and for three or more crosscaps the first three
  /// trade for a handle without changing the value.
  bool consistent = true;
  std::string detail;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

/// Every surface with handles + crosscaps <= max_complexity and every label
/// assignment, ordered by complexity, then handle count, then labels.
std::vector<SurfaceSpec> surfaces_up_to(int pi_rank, int max_complexity);
std::vector<TableEntry> surface_table(const AlgebraData& A, int max_complexity);
std::vector<TableEntry> surface_table_serial(const AlgebraData& A, int max_complexity);

// Underlying algebra -----------------------------------------------------------

/// Reads every structure map back off the generator evaluations.
AlgebraData extract_underlying(const AlgebraData& A);

/// Identities between pairs of words, checked for every label assignment.
/// Violations carry the relation name as their id.
AxiomReport relation_suite(const AlgebraData& A);
AxiomReport relation_suite_serial(const AlgebraData& A);
std::vector<std::string> relation_names();

}  // namespace hqft
