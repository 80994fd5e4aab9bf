#pragma once

#include <string>
#include <vector>

#include "arr/arrangement.hpp"

namespace arr {

/// Ordered partition of the hyperplane indices of an arrangement.
/// Blocks are kept sorted; block order matters only for reporting.
struct Partition {
  std::vector<std::vector<int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  bool empty() const { return blocks.empty(); }
  /// Block containing hyperplane h, or -1.
  int block_of(int h) const;

  /// Blocks sorted by minimum element (members already sorted).
  Partition canonical() const;
  bool same_as(const Partition& o) const;  // equality up to block order

  /// "1,3|2,4" with 1-based indices.
  static Partition parse(const std::string& text, int n);
  std::string render() const;  // "{1,3},{2,4}", 1-based
};

/// Checks that p is a partition of 0..a.size()-1 into nonempty disjoint
/// blocks; NotAPartition otherwise.
void validate_partition(const Arrangement& a, const Partition& p);

std::vector<MemberMask> block_masks(const Partition& p);

}  // namespace arr
