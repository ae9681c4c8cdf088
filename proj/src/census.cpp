#include "hqft/census.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <set>

#include "hqft/io.hpp"
#include "json.hpp"

namespace hqft {

namespace {

/// Mixed-radix counter, first digit slowest. Returns false after the last tuple.
bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

mpz_class power(std::int64_t base, std::size_t exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return out;
}

std::vector<Vector> all_vectors(const RingDesc& ring, std::size_t r) {
  const auto elems = ring.elements();
  std::vector<Vector> out;
  std::vector<std::size_t> digits(r, 0), radix(r, elems.size());
  do {
    std::vector<Scalar> e;
    for (std::size_t d : digits) e.push_back(elems[d]);
    out.emplace_back(ring, std::move(e));
  } while (advance(digits, radix));
  return out;
}

std::vector<Matrix> square_matrices(const RingDesc& ring, std::size_t r) {
  std::vector<Matrix> out;
  for (auto& v : all_vectors(ring, r * r)) {
    out.emplace_back(ring, r, r, std::vector<Scalar>(v.entries().begin(), v.entries().end()));
  }
  return out;
}

bool holds_all(const AlgebraData& A, std::initializer_list<Axiom> axioms) {
  return std::all_of(axioms.begin(), axioms.end(), [&](Axiom ax) { return holds(A, ax); });
}

std::size_t mult_scalars(const CensusQuery& q, std::size_t order) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) count += q.ranks[a ^ b] * q.ranks[a] * q.ranks[b];
  }
  return count;
}

void check_query(const CensusQuery& q) {
  if (!q.ring.is_finite()) throw InputError("census needs a finite ring, got " + q.ring.to_string());
  if (q.pi_rank < 0 || q.pi_rank > 8) throw InputError("census supports pi_rank 0..8");
  if (q.ranks.size() != group_order(q.pi_rank)) {
    throw InputError("rank profile has " + std::to_string(q.ranks.size()) + " entries, expected " +
                     std::to_string(group_order(q.pi_rank)));
  }
}

// Candidate lists for the later stages, shared read-only by all workers.
struct Candidates {
  std::vector<std::vector<Matrix>> eta;     // per grade, unit determinant
  std::vector<std::size_t> phi_slots;       // action indices b * |pi| + a that are searched
  std::vector<std::vector<Matrix>> phi;     // per searched slot, unit determinant
  std::vector<std::vector<Matrix>> Phi;     // per grade, square to the identity
  std::vector<Vector> theta;                // all of L_1
};

Candidates make_candidates(const CensusQuery& q) {
  Candidates c;
  const std::size_t order = q.ranks.size();
  std::map<std::size_t, std::vector<Matrix>> units, involutions;
  for (std::size_t r : q.ranks) {
    if (units.count(r)) continue;
    units[r] = invertible_matrices(q.ring, r, q.bound);
    for (const auto& m : units[r]) {
      if ((m * m).is_identity()) involutions[r].push_back(m);
    }
  }
  for (std::size_t a = 0; a < order; ++a) {
    c.eta.push_back(units[q.ranks[a]]);
    c.Phi.push_back(involutions[q.ranks[a]]);
  }
  // phi_1 and phi_a on L_a are forced to the identity; everything else is searched.
  for (std::size_t b = 1; b < order; ++b) {
    for (std::size_t a = 0; a < order; ++a) {
      if (a == b || q.ranks[a] == 0) continue;
      c.phi_slots.push_back(b * order + a);
      c.phi.push_back(units[q.ranks[a]]);
    }
  }
  c.theta = all_vectors(q.ring, q.ranks[0]);
  return c;
}

void search_extended(const CensusQuery& q, const Candidates& c, AlgebraData& A,
                     std::vector<AlgebraData>& out) {
  const std::size_t order = A.order();
  std::vector<std::size_t> radix;
  for (const auto& l : c.Phi) radix.push_back(l.size());
  std::vector<std::size_t> digits(order, 0);
  do {
    A.reversal = Matrix(A.ring, A.total_rank(), A.total_rank());
    for (std::size_t a = 0; a < order; ++a) {
      const Matrix& block = c.Phi[a][digits[a]];
      const std::size_t off = A.offset(A.element(a));
      for (std::size_t i = 0; i < block.rows(); ++i) {
        for (std::size_t j = 0; j < block.cols(); ++j) A.reversal(off + i, off + j) = block(i, j);
      }
    }
    if (!holds_all(A, {Axiom::ReversalUnit, Axiom::ReversalPairing,
                       Axiom::ReversalCommutesAction, Axiom::ReversalAntimultiplicative})) {
      continue;
    }
    std::vector<std::size_t> td(order, 0), tr(order, c.theta.size());
    do {
      for (std::size_t a = 0; a < order; ++a) A.crosscap[a] = c.theta[td[a]];
      if (!holds_all(A, {Axiom::ReversalFixesCrosscap, Axiom::ActionFixesCrosscap,
                         Axiom::CrosscapSlide})) {
        continue;
      }
      if (verify(A, q.tier).passed()) out.push_back(A);
    } while (advance(td, tr));
  } while (advance(digits, radix));
}

void search_crossed(const CensusQuery& q, const Candidates& c, AlgebraData& A,
                    std::vector<AlgebraData>& out) {
  std::vector<std::size_t> radix;
  for (const auto& l : c.phi) radix.push_back(l.size());
  std::vector<std::size_t> digits(radix.size(), 0);
  do {
    for (std::size_t s = 0; s < c.phi_slots.size(); ++s) {
      A.action[c.phi_slots[s]] = c.phi[s][digits[s]];
    }
    if (!holds_all(A, {Axiom::ActionHomomorphism, Axiom::ActionAutomorphism,
                       Axiom::TwistedCommutativity, Axiom::TraceCondition})) {
      continue;
    }
    if (q.tier == Tier::Crossed) {
      if (verify(A, q.tier).passed()) out.push_back(A);
    } else {
      search_extended(q, c, A, out);
    }
  } while (advance(digits, radix));
}

// Everything downstream of one fixed (unit, multiplication) assignment.
void search_from(const CensusQuery& q, const Candidates& c, AlgebraData A,
                 std::vector<AlgebraData>& out) {
  if (!holds(A, Axiom::UnitLaw) || !holds(A, Axiom::Associativity)) return;
  const std::size_t order = A.order();
  std::vector<std::size_t> radix;
  for (const auto& l : c.eta) radix.push_back(l.size());
  if (std::any_of(radix.begin(), radix.end(), [](std::size_t n) { return n == 0; })) return;
  std::vector<std::size_t> digits(order, 0);
  do {
    for (std::size_t a = 0; a < order; ++a) A.pairing[a] = c.eta[a][digits[a]];
    if (!holds(A, Axiom::PairingInvariance)) continue;
    if (q.tier == Tier::Frobenius) {
      if (verify(A, q.tier).passed()) out.push_back(A);
    } else {
      search_crossed(q, c, A, out);
    }
  } while (advance(digits, radix));
}

// Decodes a flat index into the unit and multiplication blocks.
AlgebraData stage_a(const CensusQuery& q, const std::vector<Scalar>& elems, std::uint64_t index,
                    std::size_t free_count) {
  AlgebraData A = make_blank(q.ring, q.pi_rank, q.ranks);
  const std::uint64_t n = elems.size();
  std::vector<std::size_t> digits(free_count);
  for (std::size_t i = free_count; i-- > 0;) {
    digits[i] = static_cast<std::size_t>(index % n);
    index /= n;
  }
  std::size_t pos = 0;
  for (std::size_t i = 0; i < A.unit.size(); ++i) A.unit[i] = elems[digits[pos++]];
  for (auto& m : A.mult) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t col = 0; col < m.cols(); ++col) m(r, col) = elems[digits[pos++]];
    }
  }
  return A;
}

struct Prepared {
  std::vector<Scalar> elems;
  std::size_t free_count = 0;
  std::uint64_t stage_a_count = 0;
  Candidates candidates;
};

std::optional<Prepared> prepare(const CensusQuery& q) {
  check_query(q);
  const mpz_class size = search_space_size(q);
  if (size > mpz_class(std::to_string(q.bound))) throw SearchSpaceTooLarge(size.get_str());
  if (q.ranks[0] == 0) return std::nullopt;
  Prepared p;
  p.elems = q.ring.elements();
  p.free_count = q.ranks[0] + mult_scalars(q, q.ranks.size());
  p.stage_a_count = power(q.ring.modulus(), p.free_count).get_ui();
  p.candidates = make_candidates(q);
  return p;
}

void sort_results(std::vector<AlgebraData>& list) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < list.size(); ++i) keys.emplace_back(dump_algebra_compact(list[i]), i);
  std::sort(keys.begin(), keys.end());
  std::vector<AlgebraData> sorted;
  sorted.reserve(list.size());
  for (const auto& [key, i] : keys) sorted.push_back(std::move(list[i]));
  list = std::move(sorted);
}

}  // namespace

std::string CensusQuery::to_string() const {
  std::string out = "ring=" + ring.to_string() + " pi_rank=" + std::to_string(pi_rank) + " ranks=";
  for (std::size_t i = 0; i < ranks.size(); ++i) out += (i ? "," : "") + std::to_string(ranks[i]);
  return out + " tier=" + std::string(tier_name(tier));
}

mpz_class search_space_size(const CensusQuery& q) {
  check_query(q);
  const std::size_t order = q.ranks.size();
  std::size_t count = q.ranks[0] + mult_scalars(q, order);
  std::size_t total = 0;
  for (std::size_t r : q.ranks) {
    count += r * r;  // eta
    total += r;
  }
  if (q.tier != Tier::Frobenius) {
    for (std::size_t r : q.ranks) count += order * r * r;  // phi
  }
  if (q.tier == Tier::Extended) count += total * total + order * q.ranks[0];  // Phi, theta
  return power(q.ring.modulus(), count);
}

std::vector<AlgebraData> enumerate_serial(const CensusQuery& q) {
  auto p = prepare(q);
  if (!p) return {};
  std::vector<AlgebraData> out;
  for (std::uint64_t i = 0; i < p->stage_a_count; ++i) {
    search_from(q, p->candidates, stage_a(q, p->elems, i, p->free_count), out);
  }
  sort_results(out);
  return out;
}

std::vector<AlgebraData> enumerate(const CensusQuery& q) {
  auto p = prepare(q);
  if (!p) return {};
  std::vector<std::vector<AlgebraData>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
  const auto count = static_cast<std::int64_t>(p->stage_a_count);
  std::string error;
#pragma omp parallel
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        search_from(q, p->candidates,
                    stage_a(q, p->elems, static_cast<std::uint64_t>(i), p->free_count), local);
      } catch (const std::exception& ex) {
#pragma omp critical
        error = ex.what();
      }
    }
  }
  if (!error.empty()) throw Error(error);
  std::vector<AlgebraData> out;
  for (auto& l : per_thread) {
    for (auto& a : l) out.push_back(std::move(a));
  }
  sort_results(out);
  return out;
}

std::vector<Matrix> invertible_matrices(const RingDesc& ring, std::size_t r, std::uint64_t bound) {
  if (!ring.is_finite()) throw InputError("basis changes need a finite ring");
  const mpz_class raw = power(ring.modulus(), r * r);
  if (raw > mpz_class(std::to_string(bound))) throw SearchSpaceTooLarge(raw.get_str());
  std::vector<Matrix> out;
  for (auto& m : square_matrices(ring, r)) {
    if (is_unit(determinant(m))) out.push_back(std::move(m));
  }
  return out;
}

AlgebraData change_basis(const AlgebraData& A, const std::vector<Matrix>& basis) {
  if (basis.size() != A.order()) throw InputError("one basis change per grade is required");
  std::vector<Matrix> inv;
  for (const auto& a : A.elements()) {
    const Matrix& p = basis[a.index()];
    if (p.rows() != A.rank(a) || p.cols() != A.rank(a)) {
      throw InputError("basis change for grade " + a.to_string() + " has the wrong shape");
    }
    inv.push_back(mat_inverse(p));
  }
  AlgebraData B = A;
  const std::size_t one = 0;
  B.unit = inv[one].apply(A.unit);
  Matrix full(A.ring, A.total_rank(), A.total_rank());
  Matrix full_inv = full;
  for (const auto& a : A.elements()) {
    const std::size_t i = a.index();
    B.pairing[i] = basis[i].transpose() * A.pairing[i] * basis[i];
    B.crosscap[i] = inv[one].apply(A.crosscap[i]);
    for (const auto& b : A.elements()) {
      const std::size_t j = b.index();
      B.mult_block(a, b) =
          inv[(a * b).index()] * A.mult_block(a, b) * mat_tensor(basis[i], basis[j]);
      B.action_block(b, a) = inv[i] * A.action_block(b, a) * basis[i];
    }
    const std::size_t off = A.offset(a);
    for (std::size_t r = 0; r < A.rank(a); ++r) {
      for (std::size_t c = 0; c < A.rank(a); ++c) {
        full(off + r, off + c) = basis[i](r, c);
        full_inv(off + r, off + c) = inv[i](r, c);
      }
    }
  }
  B.reversal = full_inv * A.reversal * full;
  return B;
}

AlgebraData canonical_form(const AlgebraData& A, std::uint64_t bound) {
  std::vector<std::vector<Matrix>> groups;
  mpz_class orbit_bound = 1;
  for (std::size_t r : A.ranks) {
    groups.push_back(invertible_matrices(A.ring, r, bound));
    orbit_bound *= static_cast<unsigned long>(groups.back().size());
  }
  if (orbit_bound > mpz_class(std::to_string(bound))) throw SearchSpaceTooLarge(orbit_bound.get_str());
  std::vector<std::size_t> radix, digits(groups.size(), 0);
  for (const auto& g : groups) radix.push_back(g.size());
  AlgebraData best = A;
  std::string best_key = dump_algebra_compact(A);
  do {
    std::vector<Matrix> basis;
    for (std::size_t i = 0; i < groups.size(); ++i) basis.push_back(groups[i][digits[i]]);
    AlgebraData B = change_basis(A, basis);
    std::string key = dump_algebra_compact(B);
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(B);
    }
  } while (advance(digits, radix));
  return best;
}

std::vector<AlgebraData> dedup_isomorphism(const std::vector<AlgebraData>& list,
                                           std::uint64_t bound) {
  std::map<std::string, AlgebraData> classes;
  for (const auto& A : list) {
    AlgebraData c = canonical_form(A, bound);
    classes.emplace(dump_algebra_compact(c), std::move(c));
  }
  std::vector<AlgebraData> out;
  for (auto& [key, A] : classes) out.push_back(std::move(A));
  return out;
}

CensusResult run_census(const CensusQuery& q) {
  const auto start = std::chrono::steady_clock::now();
  CensusResult r;
  r.query = q;
  r.algebras = enumerate(q);
  std::set<std::string> reps;
  for (const auto& A : dedup_isomorphism(r.algebras)) reps.insert(dump_algebra_compact(A));
  for (std::size_t i = 0; i < r.algebras.size(); ++i) {
    if (reps.count(dump_algebra_compact(r.algebras[i]))) r.representatives.push_back(i);
  }
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

std::string fixture_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "algebra_%04zu.json", i);
  return buf;
}

}  // namespace

std::string census_summary_json(const CensusResult& result, bool include_timing) {
  using nlohmann::json;
  const CensusQuery& q = result.query;
  json reps = json::array();
  for (std::size_t i : result.representatives) reps.push_back(fixture_name(i));
  json j{{"query",
          {{"ring", q.ring.to_string()},
           {"pi_rank", q.pi_rank},
           {"ranks", q.ranks},
           {"tier", std::string(tier_name(q.tier))},
           {"search_space", search_space_size(q).get_str()}}},
         {"raw_count", result.algebras.size()},
         {"iso_count", result.representatives.size()},
         {"representatives", reps}};
  if (include_timing) j["elapsed_seconds"] = result.elapsed_seconds;
  return j.dump(2) + "\n";
}

void write_census(const CensusResult& result, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (fs::exists(dir) && !(fs::is_directory(dir) && fs::is_empty(dir))) {
    throw InputError("output directory " + dir.string() + " exists and is not empty");
  }
  fs::path stage = dir;
  stage += ".partial";
  fs::remove_all(stage);
  fs::create_directories(stage);
  try {
    for (std::size_t i = 0; i < result.algebras.size(); ++i) {
      write_text_file(stage / fixture_name(i), dump_algebra(result.algebras[i]));
    }
    write_text_file(stage / "summary.json", census_summary_json(result, false));
    if (fs::exists(dir)) fs::remove(dir);
    fs::rename(stage, dir);
  } catch (...) {
    std::error_code ec;
    fs::remove_all(stage, ec);
    throw;
  }
}

}  // namespace hqft
