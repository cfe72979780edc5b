#include <algorithm>
#include <numeric>

#include "affgr/kernels.hpp"

namespace affgr {

namespace {

bool below_or_equal(const std::int64_t* a, const std::int64_t* b, std::size_t rank) {
  for (std::size_t j = 0; j < rank; ++j)
    if (a[j] > b[j]) return false;
  return true;
}

bool is_zero(const std::int64_t* a, std::size_t rank) {
  return std::all_of(a, a + rank, [](auto x) { return x == 0; });
}

}  // namespace

std::vector<char> cover_scan_serial(std::span<const std::int64_t> depths, std::size_t rank) {
  const std::size_t count = rank == 0 ? 0 : depths.size() / rank;
  std::vector<char> cover(count, 0);
  for (std::size_t k = 0; k < count; ++k) {
    const auto* row = depths.data() + k * rank;
    if (is_zero(row, rank)) continue;
    bool covered = true;
    for (std::size_t r = 0; r < count && covered; ++r) {
      if (r == k) continue;
      const auto* other = depths.data() + r * rank;
      if (is_zero(other, rank) || std::equal(row, row + rank, other)) continue;
      if (below_or_equal(other, row, rank)) covered = false;
    }
    cover[k] = covered ? 1 : 0;
  }
  return cover;
}

std::vector<char> cover_scan_parallel(std::span<const std::int64_t> depths, std::size_t rank) {
  const std::size_t count = rank == 0 ? 0 : depths.size() / rank;
  std::vector<std::int64_t> height(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto* row = depths.data() + k * rank;
    height[k] = std::accumulate(row, row + rank, std::int64_t{0});
  }
  // Only rows of strictly smaller positive height can sit below row k.
  std::vector<std::size_t> by_height(count);
  std::iota(by_height.begin(), by_height.end(), std::size_t{0});
  std::stable_sort(by_height.begin(), by_height.end(),
                   [&](std::size_t a, std::size_t b) { return height[a] < height[b]; });

  std::vector<char> cover(count, 0);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t kk = 0; kk < n; ++kk) {
    const auto k = static_cast<std::size_t>(kk);
    if (height[k] == 0) continue;
    const auto* row = depths.data() + k * rank;
    bool covered = true;
    for (std::size_t r : by_height) {
      if (height[r] >= height[k]) break;
      if (height[r] == 0) continue;
      if (below_or_equal(depths.data() + r * rank, row, rank)) {
        covered = false;
        break;
      }
    }
    cover[k] = covered ? 1 : 0;
  }
  return cover;
}

std::vector<char> cover_scan(std::span<const std::int64_t> depths, std::size_t rank, Execution exec) {
  return exec == Execution::parallel ? cover_scan_parallel(depths, rank) : cover_scan_serial(depths, rank);
}

}  // namespace affgr
