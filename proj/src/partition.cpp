#include "arr/partition.hpp"

#include <algorithm>
#include <sstream>

namespace arr {

int Partition::block_of(int h) const {
  for (int b = 0; b < block_count(); ++b)
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), h)) return b;
  return -1;
}

Partition Partition::canonical() const {
  Partition p = *this;
  for (auto& b : p.blocks) std::sort(b.begin(), b.end());
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) { return x[0] < y[0]; });
  return p;
}

bool Partition::same_as(const Partition& o) const {
  return canonical().blocks == o.canonical().blocks;
}

Partition Partition::parse(const std::string& text, int n) {
  Partition p;
  std::stringstream ss(text);
  std::string blocktext;
  while (std::getline(ss, blocktext, '|')) {
    std::vector<int> block;
    std::stringstream bs(blocktext);
    std::string tok;
    while (std::getline(bs, tok, ',')) {
      size_t a = tok.find_first_not_of(" \t");
      size_t b = tok.find_last_not_of(" \t");
      if (a == std::string::npos) fail(ErrorKind::ParseError, "empty index in partition");
      tok = tok.substr(a, b - a + 1);
      if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6)
        fail(ErrorKind::ParseError, "bad index '" + tok + "' in partition");
      long idx = std::stol(tok);
      if (idx < 1 || idx > n)
        fail(ErrorKind::OutOfRange, "hyperplane index " + std::to_string(idx) + " out of range 1.." + std::to_string(n));
      block.push_back(static_cast<int>(idx - 1));
    }
    if (block.empty()) fail(ErrorKind::ParseError, "empty block in partition");
    std::sort(block.begin(), block.end());
    p.blocks.push_back(std::move(block));
  }
  return p;
}

std::string Partition::render() const {
  std::ostringstream os;
  for (int b = 0; b < block_count(); ++b) {
    if (b) os << ",";
    os << "{";
    for (size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) os << ",";
      os << blocks[b][i] + 1;
    }
    os << "}";
  }
  return os.str();
}

void validate_partition(const Arrangement& a, const Partition& p) {
  std::vector<int> seen(a.size(), 0);
  for (const auto& block : p.blocks) {
    if (block.empty()) fail(ErrorKind::NotAPartition, "empty block");
    for (int h : block) {
      if (h < 0 || h >= a.size()) fail(ErrorKind::NotAPartition, "index out of range");
      if (seen[h]++) fail(ErrorKind::NotAPartition, "index " + std::to_string(h + 1) + " repeated");
    }
  }
  for (int h = 0; h < a.size(); ++h)
    if (!seen[h]) fail(ErrorKind::NotAPartition, "index " + std::to_string(h + 1) + " not covered");
}

std::vector<MemberMask> block_masks(const Partition& p) {
  std::vector<MemberMask> masks;
  masks.reserve(p.blocks.size());
  for (const auto& block : p.blocks) {
    MemberMask m = 0;
    for (int h : block) m |= MemberMask(1) << h;
    masks.push_back(m);
  }
  return masks;
}

}  // namespace arr
