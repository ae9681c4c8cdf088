#pragma once

#include <string>
#include <vector>

#include "hqft/algebra.hpp"
#include "hqft/census.hpp"
#include "hqft/io.hpp"

namespace testing {

inline std::string data_path(const std::string& rel) { return std::string(HQFT_DATA_DIR) + "/" + rel; }

inline hqft::AlgebraData load(const std::string& rel) {
  return hqft::parse_algebra(hqft::read_text_file(data_path(rel)));
}

inline hqft::RingDesc z5() { return hqft::RingDesc::integers_mod(5); }

/// The Z/5 cocycle algebra with t = 2, a = 4.
inline hqft::AlgebraData cocycle_z5() {
  const auto R = z5();
  return hqft::make_cocycle_algebra(R, R.from_int(2), R.from_int(4));
}

inline hqft::AlgebraData cocycle_z() {
  const auto R = hqft::RingDesc::integers();
  return hqft::make_cocycle_algebra(R, R.one(), R.one());
}

inline std::vector<hqft::AlgebraData> census(long n, int pi_rank, std::vector<std::size_t> ranks) {
  hqft::CensusQuery q;
  q.ring = hqft::RingDesc::integers_mod(n);
  q.pi_rank = pi_rank;
  q.ranks = std::move(ranks);
  return hqft::enumerate(q);
}

}  // namespace testing

namespace testing {

/// R[x]/(x^2 - 1) over the trivial grading, basis (1, x), eta(a, b) = the
/// coefficient of 1 in ab, unit 1, theta = 0.
inline hqft::AlgebraData group_ring_z2(const hqft::RingDesc& R) {
  using hqft::Matrix;
  hqft::AlgebraData A = hqft::make_blank(R, 0, {2});
  // columns (1,1) (1,x) (x,1) (x,x)
  A.mult[0] = Matrix::from_ints(R, {{1, 0, 0, 1}, {0, 1, 1, 0}});
  A.pairing[0] = Matrix::identity(R, 2);
  A.unit = hqft::Vector::basis(R, 2, 0);
  return A;
}

}  // namespace testing
