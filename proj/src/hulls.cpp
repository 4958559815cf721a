#include "rsl/hulls.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rsl/error.hpp"

namespace rsl {

// ---------------------------------------------------------------- SelectionSet

SelectionSet::SelectionSet(FiniteProbSpace space, Form form, std::size_t dim)
    : space_(std::move(space)), form_(form), dim_(dim) {}

SelectionSet SelectionSet::finite(FiniteProbSpace space, std::vector<Selection> members, bool sampled) {
  if (members.empty()) throw Error(ErrorCode::InvalidArgument, "selection set must be nonempty");
  const std::size_t d = members.front().dim();
  for (const auto& m : members) {
    require_same_space(space, m.space(), "selection set members");
    require_same_dim(d, m.dim(), "selection set members");
  }
  SelectionSet s(std::move(space), Form::FiniteExact, d);
  s.members_ = std::move(members);
  s.sampled_ = sampled;
  return s;
}

SelectionSet SelectionSet::atomwise(FiniteProbSpace space, std::vector<PointCloud> values) {
  if (values.size() != space.size()) throw Error(ErrorCode::SpaceMismatch, "one cloud per atom");
  const std::size_t d = values.front().dim();
  for (const auto& v : values) require_same_dim(d, v.dim(), "atomwise clouds");
  SelectionSet s(std::move(space), Form::Atomwise, d);
  s.clouds_ = std::move(values);
  return s;
}

SelectionSet SelectionSet::atomwise(FiniteProbSpace space, std::vector<Body> values) {
  if (values.size() != space.size()) throw Error(ErrorCode::SpaceMismatch, "one body per atom");
  const std::size_t d = values.front().dim();
  for (const auto& v : values) require_same_dim(d, v.dim(), "atomwise bodies");
  SelectionSet s(std::move(space), Form::Atomwise, d);
  s.bodies_ = std::move(values);
  return s;
}

const std::vector<Selection>& SelectionSet::members() const {
  if (!is_finite()) throw Error(ErrorCode::InvalidArgument, "members() on an atomwise selection set");
  return members_;
}

const std::vector<PointCloud>& SelectionSet::atom_clouds() const {
  if (is_finite() || has_convex_atoms()) throw Error(ErrorCode::InvalidArgument, "not an atomwise cloud set");
  return clouds_;
}

const std::vector<Body>& SelectionSet::atom_bodies() const {
  if (!has_convex_atoms()) throw Error(ErrorCode::InvalidArgument, "not an atomwise body set");
  return bodies_;
}

bool SelectionSet::contains(const Selection& s, const Tolerances& tol) const {
  require_same_space(space_, s.space(), "SelectionSet::contains");
  require_same_dim(dim_, s.dim(), "SelectionSet::contains");
  if (is_finite()) {
    return std::any_of(members_.begin(), members_.end(),
                       [&](const Selection& m) { return approx_equal(m, s, tol.point_eq); });
  }
  for (std::size_t i = 0; i < s.atoms(); ++i) {
    if (has_convex_atoms()) {
      if (!rsl::contains(bodies_[i], s[i], tol)) return false;
    } else {
      const auto& pts = clouds_[i].points();
      const bool hit = std::any_of(pts.begin(), pts.end(),
                                   [&](const Point& p) { return approx_equal(p, s[i], tol.point_eq); });
      if (!hit) return false;
    }
  }
  return true;
}

std::vector<Selection> SelectionSet::enumerate(std::uint64_t guard) const {
  if (is_finite()) return members_;
  if (has_convex_atoms()) {
    throw Error(ErrorCode::EnumerationTooLarge, "atomwise convex bodies are a continuum");
  }
  return enumerate_selections(RandomCloud(space_, clouds_), guard);
}

// ---------------------------------------------------------------- helpers

Selection decompose(std::span<const Selection> selections, const Assignment& assignment) {
  if (selections.empty()) throw Error(ErrorCode::InvalidArgument, "decompose needs selections");
  const auto& space = selections.front().space();
  for (const auto& s : selections) require_same_space(space, s.space(), "decompose");
  if (assignment.size() != space.size()) {
    throw Error(ErrorCode::SpaceMismatch, "assignment must cover every atom");
  }
  std::vector<Point> pts;
  pts.reserve(space.size());
  for (std::size_t atom = 0; atom < assignment.size(); ++atom) {
    if (assignment[atom] >= selections.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "assignment index " + std::to_string(assignment[atom]));
    }
    pts.push_back(selections[assignment[atom]][atom]);
  }
  return Selection(space, std::move(pts));
}

namespace {

bool lex_less(const Selection& a, const Selection& b) {
  for (std::size_t i = 0; i < a.atoms(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

std::vector<Selection> sorted_unique(std::vector<Selection> s, double tol) {
  s = unique_selections(s, tol);
  std::sort(s.begin(), s.end(), lex_less);
  return s;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    r = r * num / i;
  }
  return r;
}

std::uint64_t power(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

// Compositions of `total` into `parts` nonnegative integers, lexicographic.
template <class Visit>
void for_each_composition(std::size_t total, std::size_t parts, Visit&& visit) {
  std::vector<std::size_t> c(parts, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == parts) {
      c[pos] = left;
      visit(c);
      return;
    }
    for (std::size_t v = left + 1; v-- > 0;) {
      c[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
}

std::vector<Body> atom_hulls(const SelectionSet& a, const Tolerances& tol) {
  if (a.has_convex_atoms()) return a.atom_bodies();
  std::vector<Body> out;
  for (const auto& c : atom_values(a, tol)) out.push_back(convex_hull(c, tol));
  return out;
}

double cloud_sets_deviation(std::span<const Selection> a, std::span<const Selection> b) {
  std::vector<Point> fa;
  std::vector<Point> fb;
  for (const auto& s : a) fa.push_back(s.flatten());
  for (const auto& s : b) fb.push_back(s.flatten());
  return hausdorff(PointCloud(std::move(fa)), PointCloud(std::move(fb)));
}

}  // namespace

std::vector<Selection> unique_selections(std::span<const Selection> s, double tol) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return lex_less(s[x], s[y]); });
  std::vector<bool> keep(s.size(), false);
  std::size_t rep = s.size();
  for (std::size_t idx : order) {
    if (rep != s.size() && approx_equal(s[rep], s[idx], tol)) continue;
    rep = idx;
    keep[idx] = true;
  }
  std::vector<Selection> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (keep[i]) out.push_back(s[i]);
  }
  return out;
}

std::vector<PointCloud> atom_values(const SelectionSet& a, const Tolerances& tol) {
  if (a.has_convex_atoms()) throw Error(ErrorCode::InvalidArgument, "atom_values of convex atoms");
  if (!a.is_finite()) return a.atom_clouds();
  std::vector<PointCloud> out;
  const auto& members = a.members();
  for (std::size_t atom = 0; atom < a.space().size(); ++atom) {
    std::vector<Point> pts;
    pts.reserve(members.size());
    for (const auto& m : members) pts.push_back(m[atom]);
    out.emplace_back(unique_points(pts, tol.point_eq));
  }
  return out;
}

// ---------------------------------------------------------------- hulls

SelectionSet dec_hull(const SelectionSet& a, const Tolerances& tol, std::uint64_t guard) {
  if (!a.is_finite()) return a;
  const auto gens = unique_selections(a.members(), tol.point_eq);
  const std::size_t n = a.space().size();
  const std::uint64_t count = power(gens.size(), n);
  if (count > guard) {
    throw Error(ErrorCode::EnumerationTooLarge,
                "dec hull needs " + std::to_string(gens.size()) + "^" + std::to_string(n) + " mixtures");
  }
  std::vector<Selection> mixtures;
  mixtures.reserve(count);
  Assignment assign(n, 0);
  for (std::uint64_t c = 0; c < count; ++c) {
    mixtures.push_back(decompose(gens, assign));
    for (std::size_t pos = n; pos-- > 0;) {
      if (++assign[pos] < gens.size()) break;
      assign[pos] = 0;
    }
  }
  auto members = unique_selections(mixtures, tol.point_eq);

  // Cross-check against the product of atom values.
  const auto product = sorted_unique(
      enumerate_selections(RandomCloud(a.space(), atom_values(a, tol)), guard), tol.point_eq);
  const auto sorted = sorted_unique(members, tol.point_eq);
  bool same = product.size() == sorted.size();
  for (std::size_t i = 0; same && i < sorted.size(); ++i) same = approx_equal(product[i], sorted[i], tol.point_eq);
  if (!same) throw std::logic_error("dec hull enumeration disagrees with its atomwise form");

  return SelectionSet::finite(a.space(), std::move(members), a.sampled());
}

SelectionSet conv_hull_sel(const SelectionSet& a, std::size_t grid, const Tolerances& tol,
                           std::uint64_t guard) {
  if (grid == 0) throw Error(ErrorCode::InvalidArgument, "conv lattice grid must be >= 1");
  if (!a.is_finite()) throw Error(ErrorCode::InvalidArgument, "conv_hull_sel needs a finite-exact set");
  const auto gens = unique_selections(a.members(), tol.point_eq);
  const std::size_t m = gens.size();
  const std::uint64_t count = binomial(grid + m - 1, m - 1);
  if (count > guard) {
    throw Error(ErrorCode::EnumerationTooLarge,
                "conv lattice needs " + std::to_string(count) + " combinations");
  }
  const std::size_t n = a.space().size();
  const double denom = static_cast<double>(grid);
  std::vector<Selection> out;
  out.reserve(count);
  std::vector<std::pair<Point, std::size_t>> terms;
  for_each_composition(grid, m, [&](const std::vector<std::size_t>& c) {
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t atom = 0; atom < n; ++atom) {
      // Merge equal atom values and sum in sorted order, so a lattice point
      // reached through different generator weights has identical bits.
      terms.clear();
      for (std::size_t j = 0; j < m; ++j) {
        if (c[j] == 0) continue;
        const Point& v = gens[j][atom];
        auto it = std::find_if(terms.begin(), terms.end(), [&](const auto& t) { return t.first == v; });
        if (it == terms.end()) {
          terms.emplace_back(v, c[j]);
        } else {
          it->second += c[j];
        }
      }
      std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      Point acc = Point::zero(a.dim());
      for (const auto& [v, cnt] : terms) acc += (static_cast<double>(cnt) / denom) * v;
      pts.push_back(std::move(acc));
    }
    out.emplace_back(a.space(), std::move(pts));
  });
  return SelectionSet::finite(a.space(), unique_selections(out, tol.point_eq), /*sampled=*/grid > 1 || a.sampled());
}

SelectionSet chd_hull(const SelectionSet& a, const Tolerances& tol) {
  if (!a.is_finite()) return a;
  return SelectionSet::atomwise(a.space(), atom_values(a, tol));
}

SelectionSet cconv_atomwise(const SelectionSet& a, const Tolerances& tol) {
  if (a.is_finite()) throw Error(ErrorCode::InvalidArgument, "cconv_atomwise needs an atomwise set");
  std::vector<Body> bodies;
  if (a.has_convex_atoms()) {
    for (const auto& b : a.atom_bodies()) bodies.push_back(reduce(b, tol));
  } else {
    for (const auto& c : a.atom_clouds()) bodies.push_back(convex_hull(c, tol));
  }
  return SelectionSet::atomwise(a.space(), std::move(bodies));
}

SelectionSet chcd_hull(const SelectionSet& a, const Tolerances& tol, std::size_t grid) {
  SelectionSet via_chd = cconv_atomwise(chd_hull(a, tol), tol);
  if (a.is_finite() && grid > 0) {
    // Largest lattice resolution the guard allows for the second route.
    const std::size_t m = unique_selections(a.members(), tol.point_eq).size();
    std::size_t g = grid;
    while (g > 1 && binomial(g + m - 1, m - 1) > enumeration_guard()) --g;
    const SelectionSet via_conv = chd_hull(conv_hull_sel(a, g, tol), tol);
    const double dev = set_deviation(via_chd, via_conv, tol);
    if (dev > tol.set_eq) {
      throw std::logic_error("chcd routes disagree: deviation " + std::to_string(dev));
    }
  }
  return via_chd;
}

double set_deviation(const SelectionSet& a, const SelectionSet& b, const Tolerances& tol) {
  require_same_space(a.space(), b.space(), "set_deviation");
  require_same_dim(a.dim(), b.dim(), "set_deviation");
  if (a.has_convex_atoms() || b.has_convex_atoms()) {
    const auto ha = atom_hulls(a, tol);
    const auto hb = atom_hulls(b, tol);
    const auto dirs = DirectionSet::standard(a.dim());
    double dev = 0.0;
    for (std::size_t i = 0; i < ha.size(); ++i) dev = std::max(dev, support_gap(ha[i], hb[i], dirs));
    return dev;
  }
  if (!a.is_finite() && !b.is_finite()) {
    // Product sets: compare factor by factor.
    double dev = 0.0;
    for (std::size_t i = 0; i < a.space().size(); ++i) {
      dev = std::max(dev, hausdorff(a.atom_clouds()[i], b.atom_clouds()[i]));
    }
    return dev;
  }
  return cloud_sets_deviation(a.enumerate(), b.enumerate());
}

bool is_decomposable(const SelectionSet& a, const Tolerances& tol) {
  if (!a.is_finite()) return true;
  const auto members = unique_selections(a.members(), tol.point_eq);
  std::uint64_t product = 1;
  for (const auto& c : atom_values(a, tol)) product = saturating_mul(product, c.size());
  return product == members.size();
}

bool IdentityReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

IdentityReport operator_identity_suite(const SelectionSet& a, std::size_t grid, const Tolerances& tol) {
  if (!a.is_finite()) throw Error(ErrorCode::InvalidArgument, "identity suite needs a finite-exact set");
  IdentityReport report;
  auto record = [&](std::string name, double dev, double bound) {
    report.checks.push_back({std::move(name), dev <= bound, dev});
  };
  const double eq = tol.set_eq;

  const SelectionSet dec = dec_hull(a, tol);
  const SelectionSet conv = conv_hull_sel(a, grid, tol);
  const SelectionSet conv_dec = conv_hull_sel(dec, grid, tol);
  const SelectionSet dec_conv = dec_hull(conv, tol);
  record("conv(dec A) = dec(conv A)", set_deviation(conv_dec, dec_conv, tol), eq);
  record("dec(dec A) = dec A", set_deviation(dec_hull(dec, tol), dec, tol), eq);
  record("conv(dec A) is decomposable", is_decomposable(conv_dec, tol) ? 0.0 : 1.0, 0.0);

  const SelectionSet chd = chd_hull(a, tol);
  record("chd(chd A) = chd A", set_deviation(chd_hull(chd, tol), chd, tol), eq);
  record("chd A = dec A", set_deviation(chd, dec, tol), eq);

  double worst_norm = 0.0;
  bool finite_norms = true;
  for (const auto& s : chd.enumerate()) {
    const double v = lp_norm(s, 2.0);
    finite_norms = finite_norms && std::isfinite(v);
    worst_norm = std::max(worst_norm, v);
  }
  record("chd_p A = chd_0 A ∩ L^p", finite_norms ? 0.0 : worst_norm, 0.0);

  const SelectionSet chcd = chcd_hull(a, tol);
  record("chcd(chcd A) = chcd A", set_deviation(chcd_hull(chcd, tol), chcd, tol), eq);
  record("chcd(chd A) = chcd A", set_deviation(chcd_hull(chd, tol), chcd, tol), eq);
  record("chd(chcd A) = chcd A", set_deviation(chd_hull(chcd, tol), chcd, tol), eq);
  record("chcd A = cconv(chd A)", set_deviation(cconv_atomwise(chd, tol), chcd, tol), eq);
  record("chcd A = chd(conv A)", set_deviation(chd_hull(conv, tol), chcd, tol), eq);
  return report;
}

SelectionSet extreme_selections(const SelectionSet& a, const Tolerances& tol) {
  if (!a.is_finite()) throw Error(ErrorCode::InvalidArgument, "extreme_selections needs a finite-exact set");
  const auto& members = a.members();
  std::vector<Point> flat;
  flat.reserve(members.size());
  for (const auto& m : members) flat.push_back(m.flatten());
  std::vector<Selection> out;
  for (std::size_t i : extreme_indices(flat, tol)) out.push_back(members[i]);
  return SelectionSet::finite(a.space(), std::move(out));
}

// ---------------------------------------------------------------- decompositions

std::optional<std::size_t> min_decomposition_blocks(const Selection& target,
                                                    std::span<const Selection> generators, double tol) {
  const std::size_t n = target.atoms();
  const std::size_t m = generators.size();
  if (n > 64) throw Error(ErrorCode::InvalidArgument, "min_decomposition_blocks supports at most 64 atoms");
  if (m > 30) throw Error(ErrorCode::EnumerationTooLarge, "generator subsets exceed 2^30");
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> cover(m, 0);
  std::uint64_t all = 0;
  for (std::size_t j = 0; j < m; ++j) {
    require_same_space(target.space(), generators[j].space(), "min_decomposition_blocks");
    for (std::size_t atom = 0; atom < n; ++atom) {
      if (approx_equal(generators[j][atom], target[atom], tol)) cover[j] |= std::uint64_t{1} << atom;
    }
    all |= cover[j];
  }
  if (all != full) return std::nullopt;
  for (std::size_t k = 1; k <= m; ++k) {
    // Visit every k-subset of generators.
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      std::uint64_t u = 0;
      for (std::size_t j : pick) u |= cover[j];
      if (u == full) return k;
      std::size_t i = k;
      while (i-- > 0 && pick[i] == m - k + i) {
      }
      if (i == static_cast<std::size_t>(-1)) break;
      ++pick[i];
      for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<Assignment> find_decomposition(const Selection& target, std::span<const Selection> generators,
                                             std::size_t k, double tol) {
  const std::size_t n = target.atoms();
  // matches[atom] = generators agreeing with the target there.
  std::vector<std::vector<std::size_t>> matches(n);
  for (std::size_t j = 0; j < generators.size(); ++j) {
    require_same_space(target.space(), generators[j].space(), "find_decomposition");
    for (std::size_t atom = 0; atom < n; ++atom) {
      if (approx_equal(generators[j][atom], target[atom], tol)) matches[atom].push_back(j);
    }
  }
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "partition size k must be >= 1");
  const std::uint64_t count = power(k, n);
  if (count > kPartitionGuard) {
    throw Error(ErrorCode::EnumerationTooLarge, "labeled partitions exceed 10^7");
  }
  if (generators.size() > 64) throw Error(ErrorCode::InvalidArgument, "find_decomposition supports at most 64 generators");
  // Bit j of fit[atom] is set when generator j matches the target there; a
  // block is realizable when the masks of its atoms intersect.
  std::vector<std::uint64_t> fit(n, 0);
  for (std::size_t atom = 0; atom < n; ++atom) {
    for (std::size_t j : matches[atom]) fit[atom] |= std::uint64_t{1} << j;
  }
  Assignment block_labels(n, 0);
  std::vector<std::uint64_t> common(k);
  for (std::uint64_t c = 0; c < count; ++c) {
    if (c > 0) {
      for (std::size_t pos = n; pos-- > 0;) {
        if (++block_labels[pos] < k) break;
        block_labels[pos] = 0;
      }
    }
    std::fill(common.begin(), common.end(), ~std::uint64_t{0});
    bool ok = true;
    for (std::size_t atom = 0; ok && atom < n; ++atom) {
      common[block_labels[atom]] &= fit[atom];
      ok = common[block_labels[atom]] != 0;
    }
    if (!ok) continue;
    Assignment result(n);
    for (std::size_t atom = 0; atom < n; ++atom) {
      result[atom] = static_cast<std::size_t>(std::countr_zero(common[block_labels[atom]]));
    }
    return result;
  }
  return std::nullopt;
}

StaircaseReport staircase_check(std::size_t n, const Tolerances& tol) {
  const FiniteProbSpace space = geometric_space(n);
  std::vector<Selection> gens;
  std::vector<Point> stair;
  for (std::size_t k = 1; k <= n; ++k) {
    const Point v{std::ldexp(1.0, -static_cast<int>(k))};
    gens.push_back(Selection::constant(space, v));
    stair.push_back(v);
  }
  const Selection target(space, std::move(stair));

  StaircaseReport r;
  r.atoms = n;
  r.in_chd = chd_hull(SelectionSet::finite(space, gens), tol).contains(target, tol);
  r.min_blocks = min_decomposition_blocks(target, gens, tol.point_eq).value_or(0);
  if (n >= 2 && power(n - 1, n) <= kPartitionGuard) {
    r.brute_force_run = true;
    r.smaller_found = find_decomposition(target, gens, n - 1, tol.point_eq).has_value();
  }
  r.pass = r.in_chd && r.min_blocks == n && !r.smaller_found;
  return r;
}

}  // namespace rsl
