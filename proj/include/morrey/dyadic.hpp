#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "morrey/errors.hpp"

namespace morrey {

// Cells within one dyadic level are keyed by bit-interleaved (Morton)
// coordinates, so that the parent cell at the next coarser level is just
// code >> d and siblings are contiguous.
uint64_t morton_encode(const std::vector<int64_t>& m, int j, int d);
std::vector<int64_t> morton_decode(uint64_t code, int j, int d);

struct LevelData {
  bool dense = false;
  std::vector<std::pair<uint64_t, double>> cells;  // sparse, sorted by code
  std::vector<double> grid;                        // dense, indexed by code
};

// Truncated non-negative coefficient sequence on the dyadic subcubes of the
// unit cube: levels 0..J, level j holding up to 2^(j*d) cells. Absent cells
// mean zero. The truncation level J is part of the value.
struct DyadicSeq {
  int d = 1;
  int J = 0;
  std::vector<LevelData> levels;

  DyadicSeq() : levels(1) {}
  DyadicSeq(int d_, int J_);

  uint64_t cells_at(int j) const { return uint64_t(1) << (uint64_t(j) * d); }
  void set(int j, const std::vector<int64_t>& m, double value);
  void set_coded(int j, uint64_t code, double value);
  double get_coded(int j, uint64_t code) const;
  bool level_empty(int j) const;
  double level_max(int j) const;
  uint64_t level_nnz(int j) const;
};

// Sorted (code, value) traversal of one level, zeros skipped.
void for_each_coded(const DyadicSeq& seq, int j,
                    const std::function<void(uint64_t, double)>& fn);

uint64_t nnz(const DyadicSeq& seq);
DyadicSeq seq_abs_diff(const DyadicSeq& a, const DyadicSeq& b);
DyadicSeq scale_seq(const DyadicSeq& a, double c);

// Deterministic sparse random sequence. distribution is "uniform01" or
// "dyadic-decaying" (level-j values scaled by 2^-j).
DyadicSeq random_seq(uint64_t seed, int d, int J, double density,
                     const std::string& distribution);

}  // namespace morrey
