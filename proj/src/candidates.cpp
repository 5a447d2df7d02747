#include "casimir/candidates.hpp"


namespace casimir {

std::vector<long> candidate_sequence(std::size_t count) {
  std::vector<long> out;
  if (count == 0) return out;
  out.push_back(1);
  for (long v = 2; out.size() < count; ++v) {
    bool prime = true;
    for (std::size_t i = 1; i < out.size() && out[i] * out[i] <= v; ++i)
      if (v % out[i] == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(v);
  }
  return out;
}

namespace {

void extend(std::vector<std::size_t>& prefix, std::size_t length, std::size_t level, bool has_level,
            std::vector<std::vector<std::size_t>>& out) {
  if (prefix.size() == length) {
    out.push_back(prefix);
    return;
  }
  const bool last = prefix.size() + 1 == length;
  for (std::size_t v = 0; v <= level; ++v) {
    if (last && !has_level && v != level) continue;
    prefix.push_back(v);
    extend(prefix, length, level, has_level || v == level, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> level_indices(std::size_t length, std::size_t level) {
  std::vector<std::vector<std::size_t>> out;
  if (length == 0) return out;
  std::vector<std::size_t> prefix;
  extend(prefix, length, level, false, out);
  return out;
}

}  // namespace casimir
