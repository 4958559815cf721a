#pragma once

// Hull operators on finite sets of selections.
//
// Two representations are used. A finite-exact set is an explicit list of
// selections. An atomwise set stores F(ω) per atom (a PointCloud or a convex
// Body) and stands for every selection s with s(ω) ∈ F(ω) for all ω, i.e. the
// product set. Decomposable-type hulls (dec, chd, chcd) are product-structured
// and land in atomwise form; convex hulls of selection sets are not, so conv
// returns a finite-exact lattice sample flagged `sampled`.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rsl/geometry.hpp"
#include "rsl/prob.hpp"
#include "rsl/randomset.hpp"

namespace rsl {

class SelectionSet {
 public:
  enum class Form { FiniteExact, Atomwise };

  static SelectionSet finite(FiniteProbSpace space, std::vector<Selection> members, bool sampled = false);
  static SelectionSet atomwise(FiniteProbSpace space, std::vector<PointCloud> values);
  static SelectionSet atomwise(FiniteProbSpace space, std::vector<Body> values);

  Form form() const noexcept { return form_; }
  bool is_finite() const noexcept { return form_ == Form::FiniteExact; }
  // True for atomwise sets holding convex bodies.
  bool has_convex_atoms() const noexcept { return !bodies_.empty(); }
  // True when the set is a lattice sample of a continuum (conv hulls).
  bool sampled() const noexcept { return sampled_; }

  const FiniteProbSpace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return dim_; }

  // Finite-exact members; throws InvalidArgument for atomwise sets.
  const std::vector<Selection>& members() const;
  const std::vector<PointCloud>& atom_clouds() const;
  const std::vector<Body>& atom_bodies() const;

  // Membership: exact (point_eq) for finite and cloud forms, within
  // tol.membership for body forms.
  bool contains(const Selection& s, const Tolerances& tol = {}) const;

  // Explicit member list; atomwise clouds are expanded as a product.
  std::vector<Selection> enumerate(std::uint64_t guard = enumeration_guard()) const;

 private:
  SelectionSet(FiniteProbSpace space, Form form, std::size_t dim);

  FiniteProbSpace space_;
  Form form_;
  std::size_t dim_;
  bool sampled_ = false;
  std::vector<Selection> members_;
  std::vector<PointCloud> clouds_;
  std::vector<Body> bodies_;
};

// result(ω) = selections[assignment[ω]](ω).
Selection decompose(std::span<const Selection> selections, const Assignment& assignment);

// Values {ξ(ω) : ξ ∈ A} per atom, duplicates merged.
std::vector<PointCloud> atom_values(const SelectionSet& a, const Tolerances& tol = {});

// Selections with duplicates (within tol) removed, order kept.
std::vector<Selection> unique_selections(std::span<const Selection> s, double tol = 1e-12);

// dec A: every atomwise mixture of the members. Returned finite-exact and
// deduplicated; the result is cross-checked against the atomwise product of
// atom_values(A). Atomwise inputs are already decomposable and returned as is.
SelectionSet dec_hull(const SelectionSet& a, const Tolerances& tol = {},
                      std::uint64_t guard = enumeration_guard());

// Convex combinations with barycentric weights on the simplex lattice of
// resolution 1/grid. Exact members are always included. Flagged sampled.
SelectionSet conv_hull_sel(const SelectionSet& a, std::size_t grid, const Tolerances& tol = {},
                           std::uint64_t guard = enumeration_guard());

// chd A = cl dec A; on finite spaces closure is the identity, so this is the
// atomwise cloud form F_A(ω) = {ξ(ω) : ξ ∈ A}. Atomwise inputs are returned
// unchanged.
SelectionSet chd_hull(const SelectionSet& a, const Tolerances& tol = {});

// Closed convex hull applied atom by atom: F(ω) -> conv F(ω) as a Body.
SelectionSet cconv_atomwise(const SelectionSet& a, const Tolerances& tol = {});

// chcd A: atomwise bodies conv(F_A(ω)). Computed as cconv∘chd and compared
// against chd∘conv (lattice conv with default grid 8) on the shared direction
// set; throws std::logic_error if the two routes disagree beyond tol.set_eq.
SelectionSet chcd_hull(const SelectionSet& a, const Tolerances& tol = {}, std::size_t grid = 8);

// Deviation between two sets of selections. Finite/cloud forms compare as
// point sets in R^{n·d} (discrete Hausdorff); if either side has convex atoms
// the comparison is the per-atom support gap on dirs, clouds entering through
// their hulls.
double set_deviation(const SelectionSet& a, const SelectionSet& b, const Tolerances& tol = {});

// Finite-exact set closed under every decomposition, i.e. equal to the
// product of its atom values.
bool is_decomposable(const SelectionSet& a, const Tolerances& tol = {});

struct IdentityCheck {
  std::string identity;
  bool pass = false;
  double max_dev = 0.0;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

// Verifies the hull-operator algebra on a small finite-exact instance:
// conv∘dec = dec∘conv on the lattice, chd and chcd idempotent, chcd∘chd =
// chcd, chd∘chcd = chcd, chcd = cconv∘chd = chd∘conv, plus the chd/dec
// round trip and decomposability of the sampled conv(dec A).
IdentityReport operator_identity_suite(const SelectionSet& a, std::size_t grid = 3,
                                       const Tolerances& tol = {});

// Extreme points of conv(members) viewed as vectors in R^{n·d}. Extremality
// is affine-invariant, so the atom weights play no role.
SelectionSet extreme_selections(const SelectionSet& a, const Tolerances& tol = {});

// Smallest number of generators (equivalently of partition blocks) whose
// decomposition equals `target`, found by exhaustive search over generator
// subsets in increasing size. nullopt when no decomposition exists.
std::optional<std::size_t> min_decomposition_blocks(const Selection& target,
                                                    std::span<const Selection> generators,
                                                    double tol = 1e-12);

// Exhaustive search over all labeled partitions into k blocks (k^n of them):
// returns an assignment atom -> generator realizing `target` with at most k
// distinct generators, or nullopt.
std::optional<Assignment> find_decomposition(const Selection& target,
                                             std::span<const Selection> generators, std::size_t k,
                                             double tol = 1e-12);

// Truncated staircase model on geometric_space(n): generators are the
// constants c_k ≡ 2^-k and the target takes 2^-k on atom k. Checks chd
// membership and that no decomposition uses fewer than n blocks, by the
// generator-subset search and, when (n−1)^n ≤ 10^7, by brute force over the
// labeled partitions into n−1 blocks.
struct StaircaseReport {
  std::size_t atoms = 0;
  bool in_chd = false;
  std::size_t min_blocks = 0;  // 0 when no decomposition exists
  bool brute_force_run = false;
  bool smaller_found = false;
  bool pass = false;
};

StaircaseReport staircase_check(std::size_t n, const Tolerances& tol = {});

}  // namespace rsl
