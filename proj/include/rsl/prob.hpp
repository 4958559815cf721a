#pragma once

// Finite probability spaces and measurable partitions over their atoms.

#include <cstddef>
#include <string>
#include <vector>

namespace rsl {

class FiniteProbSpace {
 public:
  // Weights must be strictly positive and sum to 1 within 1e-12; ids must be
  // distinct. Empty ids are replaced by "w0", "w1", ...
  explicit FiniteProbSpace(std::vector<double> weights, std::vector<std::string> ids = {});

  std::size_t size() const noexcept { return weights_.size(); }
  const std::vector<double>& weights() const noexcept { return weights_; }
  double weight(std::size_t atom) const { return weights_[atom]; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  friend bool operator==(const FiniteProbSpace&, const FiniteProbSpace&) = default;

 private:
  std::vector<double> weights_;
  std::vector<std::string> ids_;
};

void require_same_space(const FiniteProbSpace& a, const FiniteProbSpace& b, const char* where);

FiniteProbSpace uniform_space(std::size_t n);
// Atoms 1..N with weights 1/2, 1/4, ..., 2^-(N-1) and a last atom carrying
// the folded tail 2^-(N-1), so the total is exactly 1.
FiniteProbSpace geometric_space(std::size_t n);

// Atom index -> block label in [0, k).
using Assignment = std::vector<std::size_t>;

// A partition with labeled blocks: blocks[i] holds the atoms sent to
// labels[i]. Empty blocks are dropped; blocks are ordered by label.
struct Partition {
  std::vector<std::size_t> labels;
  std::vector<std::vector<std::size_t>> blocks;

  friend bool operator==(const Partition&, const Partition&) = default;
};

Partition to_partition(const Assignment& assignment);

// All k^n labeled assignments of atoms to blocks, in lexicographic order
// (atom 0 most significant). Throws EnumerationTooLarge when k^n > 10^7.
std::vector<Assignment> all_assignments(std::size_t atoms, std::size_t k);

// The labeled partitions induced by all_assignments(space, k). Labeled
// assignments are pairwise distinct, so there are exactly k^n of them.
std::vector<Partition> all_partitions(const FiniteProbSpace& space, std::size_t k);

// Unlabeled set partitions with at most k blocks (sum of Stirling numbers
// S(n,1..k)), each in canonical form with labels 0..b-1.
std::vector<Partition> distinct_partitions(const FiniteProbSpace& space, std::size_t k);

}  // namespace rsl
