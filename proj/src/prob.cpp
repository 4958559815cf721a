#include "rsl/prob.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "rsl/error.hpp"
#include "rsl/tolerances.hpp"

namespace rsl {

FiniteProbSpace::FiniteProbSpace(std::vector<double> weights, std::vector<std::string> ids)
    : weights_(std::move(weights)), ids_(std::move(ids)) {
  if (weights_.empty()) throw Error(ErrorCode::NotAProbability, "space needs at least one atom");
  double total = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::NotAProbability, "atom weights must be finite and > 0");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorCode::NotAProbability, "atom weights sum to " + std::to_string(total));
  }
  if (ids_.empty()) {
    for (std::size_t i = 0; i < weights_.size(); ++i) ids_.push_back("w" + std::to_string(i));
  }
  if (ids_.size() != weights_.size()) {
    throw Error(ErrorCode::InvalidArgument, "atom id count differs from weight count");
  }
  if (std::set<std::string>(ids_.begin(), ids_.end()).size() != ids_.size()) {
    throw Error(ErrorCode::InvalidArgument, "atom ids must be distinct");
  }
}

void require_same_space(const FiniteProbSpace& a, const FiniteProbSpace& b, const char* where) {
  if (!(a == b)) throw Error(ErrorCode::SpaceMismatch, where);
}

FiniteProbSpace uniform_space(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "uniform_space needs n >= 1");
  return FiniteProbSpace(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

FiniteProbSpace geometric_space(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "geometric_space needs N >= 1");
  if (n > 1000) throw Error(ErrorCode::InvalidArgument, "geometric_space weights underflow for N > 1000");
  std::vector<double> w(n);
  for (std::size_t k = 0; k + 1 < n; ++k) w[k] = std::ldexp(1.0, -static_cast<int>(k + 1));
  w[n - 1] = n == 1 ? 1.0 : std::ldexp(1.0, -static_cast<int>(n - 1));
  std::vector<std::string> ids;
  for (std::size_t k = 1; k <= n; ++k) ids.push_back("B" + std::to_string(k));
  return FiniteProbSpace(std::move(w), std::move(ids));
}

Partition to_partition(const Assignment& assignment) {
  std::size_t k = 0;
  for (std::size_t label : assignment) k = std::max(k, label + 1);
  std::vector<std::vector<std::size_t>> by_label(k);
  for (std::size_t atom = 0; atom < assignment.size(); ++atom) by_label[assignment[atom]].push_back(atom);
  Partition p;
  for (std::size_t label = 0; label < k; ++label) {
    if (by_label[label].empty()) continue;
    p.labels.push_back(label);
    p.blocks.push_back(std::move(by_label[label]));
  }
  return p;
}

std::vector<Assignment> all_assignments(std::size_t atoms, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "partition size k must be >= 1");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < atoms; ++i) count = saturating_mul(count, k);
  if (count > kPartitionGuard) {
    throw Error(ErrorCode::EnumerationTooLarge, std::to_string(k) + "^" + std::to_string(atoms) +
                                                    " labeled assignments exceed 10^7");
  }
  std::vector<Assignment> out;
  out.reserve(count);
  Assignment current(atoms, 0);
  for (std::uint64_t c = 0; c < count; ++c) {
    out.push_back(current);
    for (std::size_t pos = atoms; pos-- > 0;) {
      if (++current[pos] < k) break;
      current[pos] = 0;
    }
  }
  return out;
}

std::vector<Partition> all_partitions(const FiniteProbSpace& space, std::size_t k) {
  std::vector<Partition> out;
  for (const auto& a : all_assignments(space.size(), k)) out.push_back(to_partition(a));
  return out;
}

std::vector<Partition> distinct_partitions(const FiniteProbSpace& space, std::size_t k) {
  // Restricted growth strings: atom i may open block max_so_far+1.
  const std::size_t n = space.size();
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "partition size k must be >= 1");
  std::vector<Partition> out;
  Assignment rgs(n, 0);
  auto recurse = [&](auto&& self, std::size_t atom, std::size_t used) -> void {
    if (atom == n) {
      out.push_back(to_partition(rgs));
      if (out.size() > kPartitionGuard) throw Error(ErrorCode::EnumerationTooLarge, "set partitions exceed 10^7");
      return;
    }
    const std::size_t limit = std::min(used + 1, k);
    for (std::size_t b = 0; b < limit; ++b) {
      rgs[atom] = b;
      self(self, atom + 1, std::max(used, b + 1));
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

}  // namespace rsl
