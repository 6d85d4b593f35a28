#include "morrey/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace morrey {

namespace {

// Levels at least this small are stored as a flat grid; larger ones as a
// sorted sparse vector. 4096 doubles per level keeps dense storage cheap
// while covering the fully-filled levels the witness builders produce.
constexpr uint64_t kDenseLimit = 4096;

void check_level_shape(int j, int d) {
  if (d < 1 || d > 4) throw config_error("dimension must be in 1..4");
  if (j < 0 || j * d > 62) throw config_error("dyadic level out of range");
}

}  // namespace

uint64_t morton_encode(const std::vector<int64_t>& m, int j, int d) {
  check_level_shape(j, d);
  if (static_cast<int>(m.size()) != d)
    throw config_error("cell index arity does not match dimension");
  const int64_t side = int64_t(1) << j;
  uint64_t code = 0;
  for (int i = 0; i < d; ++i) {
    if (m[i] < 0 || m[i] >= side)
      throw config_error("cell index out of range for its level");
    for (int b = 0; b < j; ++b)
      code |= ((static_cast<uint64_t>(m[i]) >> b) & 1u) << (b * d + i);
  }
  return code;
}

std::vector<int64_t> morton_decode(uint64_t code, int j, int d) {
  check_level_shape(j, d);
  if (j * d < 62 && code >= (uint64_t(1) << (j * d)))
    throw config_error("cell code out of range for its level");
  std::vector<int64_t> m(static_cast<size_t>(d), 0);
  for (int b = 0; b < j; ++b)
    for (int i = 0; i < d; ++i)
      m[static_cast<size_t>(i)] |=
          static_cast<int64_t>((code >> (b * d + i)) & 1u) << b;
  return m;
}

DyadicSeq::DyadicSeq(int d_, int J_) : d(d_), J(J_) {
  if (d < 1 || d > 4) throw config_error("dimension must be in 1..4");
  if (J < 0 || J * d > 62)
    throw config_error("truncation level out of range");
  levels.resize(static_cast<size_t>(J) + 1);
  for (int j = 0; j <= J; ++j) {
    if (cells_at(j) <= kDenseLimit) {
      levels[static_cast<size_t>(j)].dense = true;
      levels[static_cast<size_t>(j)].grid.assign(cells_at(j), 0.0);
    }
  }
}

void DyadicSeq::set(int j, const std::vector<int64_t>& m, double value) {
  set_coded(j, morton_encode(m, j, d), value);
}

void DyadicSeq::set_coded(int j, uint64_t code, double value) {
  if (j < 0 || j > J) throw config_error("level outside the truncation range");
  if (code >= cells_at(j))
    throw config_error("cell code out of range for its level");
  if (!(value >= 0) || !std::isfinite(value))
    throw config_error("cell values must be finite non-negative");
  LevelData& lv = levels[static_cast<size_t>(j)];
  if (lv.dense) {
    lv.grid[code] = value;
    return;
  }
  auto it = std::lower_bound(
      lv.cells.begin(), lv.cells.end(), code,
      [](const std::pair<uint64_t, double>& c, uint64_t k) { return c.first < k; });
  if (it != lv.cells.end() && it->first == code)
    it->second = value;
  else
    lv.cells.insert(it, {code, value});
}

double DyadicSeq::get_coded(int j, uint64_t code) const {
  if (j < 0 || j > J) return 0.0;
  const LevelData& lv = levels[static_cast<size_t>(j)];
  if (lv.dense) return code < lv.grid.size() ? lv.grid[code] : 0.0;
  auto it = std::lower_bound(
      lv.cells.begin(), lv.cells.end(), code,
      [](const std::pair<uint64_t, double>& c, uint64_t k) { return c.first < k; });
  if (it != lv.cells.end() && it->first == code) return it->second;
  return 0.0;
}

bool DyadicSeq::level_empty(int j) const { return level_nnz(j) == 0; }

double DyadicSeq::level_max(int j) const {
  double m = 0.0;
  for_each_coded(*this, j, [&](uint64_t, double v) { m = std::max(m, v); });
  return m;
}

uint64_t DyadicSeq::level_nnz(int j) const {
  uint64_t n = 0;
  for_each_coded(*this, j, [&](uint64_t, double) { ++n; });
  return n;
}

void for_each_coded(const DyadicSeq& seq, int j,
                    const std::function<void(uint64_t, double)>& fn) {
  if (j < 0 || j > seq.J) return;
  const LevelData& lv = seq.levels[static_cast<size_t>(j)];
  if (lv.dense) {
    for (uint64_t c = 0; c < lv.grid.size(); ++c)
      if (lv.grid[c] != 0.0) fn(c, lv.grid[c]);
    return;
  }
  for (const auto& [code, value] : lv.cells)
    if (value != 0.0) fn(code, value);
}

uint64_t nnz(const DyadicSeq& seq) {
  uint64_t n = 0;
  for (int j = 0; j <= seq.J; ++j) n += seq.level_nnz(j);
  return n;
}

DyadicSeq seq_abs_diff(const DyadicSeq& a, const DyadicSeq& b) {
  if (a.d != b.d)
    throw config_error("sequence difference needs matching dimensions");
  DyadicSeq out(a.d, std::max(a.J, b.J));
  for (int j = 0; j <= out.J; ++j) {
    for_each_coded(a, j, [&](uint64_t code, double v) {
      out.set_coded(j, code, std::abs(v - b.get_coded(j, code)));
    });
    for_each_coded(b, j, [&](uint64_t code, double v) {
      if (a.get_coded(j, code) == 0.0) out.set_coded(j, code, v);
    });
  }
  return out;
}

DyadicSeq scale_seq(const DyadicSeq& a, double c) {
  if (!(c >= 0) || !std::isfinite(c))
    throw config_error("scale factor must be finite non-negative");
  DyadicSeq out(a.d, a.J);
  for (int j = 0; j <= a.J; ++j)
    for_each_coded(a, j,
                   [&](uint64_t code, double v) { out.set_coded(j, code, v * c); });
  return out;
}

DyadicSeq random_seq(uint64_t seed, int d, int J, double density,
                     const std::string& distribution) {
  if (!(density >= 0.0 && density <= 1.0))
    throw config_error("density must lie in [0,1]");
  const bool decay = distribution == "dyadic-decaying";
  if (!decay && distribution != "uniform01")
    throw config_error("unknown distribution: " + distribution);
  DyadicSeq out(d, J);
  std::mt19937_64 rng(seed);
  // Canonical 53-bit doubles straight off the generator keep the stream
  // identical across standard library implementations.
  auto unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  for (int j = 0; j <= J; ++j) {
    const uint64_t n = out.cells_at(j);
    for (uint64_t code = 0; code < n; ++code) {
      if (unit() >= density) continue;
      double v = unit();
      if (decay) v = std::ldexp(v, -j);
      if (v > 0.0) out.set_coded(j, code, v);
    }
  }
  return out;
}

}  // namespace morrey
