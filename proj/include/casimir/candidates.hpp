#pragma once

#include <cstddef>
#include <vector>

namespace casimir {

/// 1 followed by the primes: 1, 2, 3, 5, 7, 11, …; the first `count` terms.
std::vector<long> candidate_sequence(std::size_t count);

/// Index vectors of the given length whose largest entry equals `level`,
/// in lexicographic order.
std::vector<std::vector<std::size_t>> level_indices(std::size_t length, std::size_t level);

}  // namespace casimir
