#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace affgr {

enum class Execution { serial, parallel };

/// Rows of `depths` (count x rank, row-major) hold lambda - nu in simple-root
/// coordinates for a set of weights nu <= lambda. Entry k of the result is 1
/// iff row k is nonzero and no other nonzero row lies coordinatewise below it,
/// i.e. nu_k is covered by lambda inside the set.
std::vector<char> cover_scan_serial(std::span<const std::int64_t> depths, std::size_t rank);
std::vector<char> cover_scan_parallel(std::span<const std::int64_t> depths, std::size_t rank);
std::vector<char> cover_scan(std::span<const std::int64_t> depths, std::size_t rank, Execution exec);

/// body(i) for every i in [0, n). In parallel mode iterations run under an
/// OpenMP dynamic schedule; the first exception thrown is rethrown afterwards.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, Execution exec);

int max_threads();

}  // namespace affgr
