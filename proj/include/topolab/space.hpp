#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topolab/point_set.hpp"
#include "topolab/set_family.hpp"
#include "topolab/variant.hpp"

namespace topolab {

namespace detail {

/// Lazily-built per-space family memos. Results are pure functions of the
/// space, so duplicated computation would be harmless; the recursive mutex
/// simply makes each slot behave as computed-once even when family
/// computations nest (a feebly scan needs the semi-closed family, etc.).
class FamilyCaches {
 public:
  static constexpr int kSlots = 3 * kVariantCount + kLCVariantCount;

  template <typename F>
  const SetFamily& family(int slot, F&& compute) const {
    std::scoped_lock lk(mu_);
    auto& s = slots_[slot];
    if (!s) s = compute();
    return *s;
  }

  template <typename F>
  const std::vector<PointSet>& scl_of_opens(F&& compute) const {
    std::scoped_lock lk(mu_);
    if (!scl_) scl_ = compute();
    return *scl_;
  }

 private:
  mutable std::recursive_mutex mu_;
  mutable std::array<std::optional<SetFamily>, kSlots> slots_;
  mutable std::optional<std::vector<PointSet>> scl_;
};

}  // namespace detail

/**
 * A finite topological space: named points plus the family of open sets.
 *
 * Immutable after construction. Construction always derives, per point p,
 * the minimal open neighborhood N(p) (intersection of all opens containing
 * p) and the minimal regular-open neighborhood R(p); the four primitive
 * operators then run in O(n) bit operations per query:
 *
 *   interior(A)  = { p in A : N(p) subseteq A }
 *   closure(A)   = { p : N(p) meets A }
 *   dinterior(A) = { p in A : R(p) subseteq A }
 *   dclosure(A)  = complement dual of dinterior
 *
 * Copies share the underlying immutable payload, so passing spaces by
 * value is cheap and all queries are safe from any number of threads.
 */
class FiniteSpace {
 public:
  int point_count() const { return data_->n; }
  const std::vector<std::string>& point_names() const { return data_->names; }
  PointSet universe() const { return PointSet::full(data_->n); }
  const SetFamily& opens() const { return data_->opens; }
  const SetFamily& closeds() const { return data_->closeds; }
  const SetFamily& regular_opens() const { return data_->regular; }

  /// Minimal open neighborhood of point p.
  PointSet min_nbhd(int p) const { return data_->nbhd[p]; }
  /// Minimal regular-open neighborhood of point p.
  PointSet min_regular_nbhd(int p) const { return data_->rnbhd[p]; }

  int point_index(std::string_view name) const {
    for (std::size_t i = 0; i < data_->names.size(); ++i)
      if (data_->names[i] == name) return static_cast<int>(i);
    return -1;
  }

  detail::FamilyCaches& caches() const { return data_->caches; }

  /// Structural equality: same point names, same open family.
  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.data_->names == b.data_->names && a.data_->opens == b.data_->opens;
  }

  /// Trusted fast path: builds the space whose opens are exactly the
  /// up-sets of the given minimal-neighborhood table. Used by the
  /// enumerator and by products, where closure under union/intersection
  /// holds by construction.
  static FiniteSpace from_min_neighborhoods(std::vector<std::string> names,
                                            const std::array<PointSet, kMaxPoints>& nbhd) {
    const int n = static_cast<int>(names.size());
    std::vector<PointSet> opens;
    for (PointSet s : canonical_subset_order(n)) {
      bool up = true;
      for (int p : s.points())
        if (!nbhd[p].subset_of(s)) { up = false; break; }
      if (up) opens.push_back(s);
    }
    return FiniteSpace(std::move(names), SetFamily::of(n, std::move(opens)));
  }

 private:
  friend FiniteSpace validate_space(std::vector<std::string>, const std::vector<PointSet>&);

  FiniteSpace(std::vector<std::string> names, SetFamily opens) {
    auto d = std::make_shared<Data>();
    d->n = static_cast<int>(names.size());
    d->names = std::move(names);
    const PointSet full = PointSet::full(d->n);
    d->opens = std::move(opens);
    d->closeds = d->opens.complements(full);
    for (int p = 0; p < d->n; ++p) {
      PointSet m = full;
      for (PointSet o : d->opens)
        if (o.contains(p)) m &= o;
      d->nbhd[p] = m;
    }
    // regular opens: fixed points of A -> int(cl(A))
    std::vector<PointSet> ro;
    for (std::uint32_t m = 0; m < (1u << d->n); ++m) {
      const PointSet A{m};
      PointSet cl;
      for (int p = 0; p < d->n; ++p)
        if (d->nbhd[p].intersects(A)) cl = cl.with(p);
      PointSet ic;
      for (int p : cl.points())
        if (d->nbhd[p].subset_of(cl)) ic = ic.with(p);
      if (ic == A) ro.push_back(A);
    }
    d->regular = SetFamily::of(d->n, std::move(ro));
    for (int p = 0; p < d->n; ++p) {
      PointSet m = full;
      for (PointSet w : d->regular)
        if (w.contains(p)) m &= w;
      d->rnbhd[p] = m;
    }
    data_ = std::move(d);
  }

  struct Data {
    int n = 0;
    std::vector<std::string> names;
    SetFamily opens;
    SetFamily closeds;
    SetFamily regular;
    std::array<PointSet, kMaxPoints> nbhd{};
    std::array<PointSet, kMaxPoints> rnbhd{};
    mutable detail::FamilyCaches caches;
  };

  std::shared_ptr<const Data> data_;
};

namespace detail {

inline void require_wellformed(const FiniteSpace& s, PointSet a, const char* op) {
  if (!a.subset_of(s.universe()))
    throw PreconditionError(std::string(op) + ": subset uses points outside the space");
}

}  // namespace detail

/// Union of all opens contained in A. Open, contained in A, idempotent.
inline PointSet interior(const FiniteSpace& s, PointSet a) {
  detail::require_wellformed(s, a, "interior");
  PointSet r;
  for (int p : a.points())
    if (s.min_nbhd(p).subset_of(a)) r = r.with(p);
  return r;
}

/// Smallest closed superset of A.
inline PointSet closure(const FiniteSpace& s, PointSet a) {
  detail::require_wellformed(s, a, "closure");
  PointSet r;
  for (int p = 0; p < s.point_count(); ++p)
    if (s.min_nbhd(p).intersects(a)) r = r.with(p);
  return r;
}

/// Exactly the subsets with int(cl(A)) = A; always contains the empty set
/// and the whole space.
inline const SetFamily& regular_open_family(const FiniteSpace& s) {
  return s.regular_opens();
}

/// Union of all regular-open sets contained in A.
inline PointSet delta_interior(const FiniteSpace& s, PointSet a) {
  detail::require_wellformed(s, a, "delta_interior");
  PointSet r;
  for (int p : a.points())
    if (s.min_regular_nbhd(p).subset_of(a)) r = r.with(p);
  return r;
}

/// Complement dual of delta_interior; contains closure(A).
inline PointSet delta_closure(const FiniteSpace& s, PointSet a) {
  detail::require_wellformed(s, a, "delta_closure");
  const PointSet u = s.universe();
  return delta_interior(s, a.complement_in(u)).complement_in(u);
}

namespace detail {

inline std::string raw_set_to_string(const std::vector<std::string>& names, PointSet a) {
  std::string out = "{";
  bool first = true;
  for (int p : a.points()) {
    if (!first) out += ',';
    out += names[static_cast<std::size_t>(p)];
    first = false;
  }
  return out + "}";
}

}  // namespace detail

/**
 * Checks the topology axioms and builds the space. The empty set and the
 * full set are added automatically; a repeated open, a repeated point name
 * or a union/intersection closure failure is reported as a ValidationError
 * (closure failures name the offending pair). The input order of the opens
 * never affects the result.
 */
inline FiniteSpace validate_space(std::vector<std::string> point_names,
                                  const std::vector<PointSet>& raw_opens) {
  const int n = static_cast<int>(point_names.size());
  if (n < 1 || n > kMaxPoints)
    throw ValidationError("point count must be between 1 and 16, got " + std::to_string(n));
  for (std::size_t i = 0; i < point_names.size(); ++i)
    for (std::size_t j = i + 1; j < point_names.size(); ++j)
      if (point_names[i] == point_names[j])
        throw ValidationError("duplicate point name: " + point_names[i]);

  const PointSet full = PointSet::full(n);
  for (PointSet o : raw_opens)
    if (!o.subset_of(full))
      throw ValidationError("open set uses undeclared points");
  for (std::size_t i = 0; i < raw_opens.size(); ++i)
    for (std::size_t j = i + 1; j < raw_opens.size(); ++j)
      if (raw_opens[i] == raw_opens[j])
        throw ValidationError("duplicate open set: " +
                              detail::raw_set_to_string(point_names, raw_opens[i]));

  std::vector<PointSet> all = raw_opens;
  all.push_back(PointSet::empty_set());
  all.push_back(full);
  SetFamily fam = SetFamily::of(n, std::move(all));

  // Fast validity check: a family containing {} and X is closed under
  // pairwise union and intersection iff it is exactly the up-set family of
  // its own minimal-neighborhood table. On failure fall back to the pair
  // scan so the error can name an offending pair.
  std::array<PointSet, kMaxPoints> nbhd{};
  for (int p = 0; p < n; ++p) {
    PointSet m = full;
    for (PointSet o : fam)
      if (o.contains(p)) m &= o;
    nbhd[p] = m;
  }
  bool ok = true;
  for (PointSet o : fam) {
    for (int p : o.points())
      if (!nbhd[p].subset_of(o)) { ok = false; break; }
    if (!ok) break;
  }
  if (ok) {
    std::size_t upsets = 0;
    for (std::uint32_t m = 0; m < (1u << n) && ok; ++m) {
      const PointSet s{m};
      bool up = true;
      for (int p : s.points())
        if (!nbhd[p].subset_of(s)) { up = false; break; }
      if (up) {
        ++upsets;
        if (!fam.contains(s)) ok = false;
      }
    }
    if (ok && upsets != fam.size()) ok = false;
  }
  if (!ok) {
    for (PointSet x : fam) {
      for (PointSet y : fam) {
        if (!fam.contains(x | y))
          throw ValidationError("opens not closed under union: " +
                                detail::raw_set_to_string(point_names, x) + " and " +
                                detail::raw_set_to_string(point_names, y));
        if (!fam.contains(x & y))
          throw ValidationError("opens not closed under intersection: " +
                                detail::raw_set_to_string(point_names, x) + " and " +
                                detail::raw_set_to_string(point_names, y));
      }
    }
    throw ValidationError("opens fail the topology axioms");
  }
  return FiniteSpace(std::move(point_names), std::move(fam));
}

/**
 * Binary product. Points are the ordered pairs "p×q" in row-major order
 * (left index major); the opens are all unions of boxes U×V with U open on
 * the left and V open on the right, which is exactly the up-set family of
 * the componentwise minimal neighborhoods.
 */
inline FiniteSpace product_space(const FiniteSpace& left, const FiniteSpace& right) {
  const int n1 = left.point_count(), n2 = right.point_count();
  if (n1 * n2 > kMaxPoints)
    throw BoundError("product size overflow: " + std::to_string(n1) + "*" +
                     std::to_string(n2) + " points exceeds " + std::to_string(kMaxPoints));
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n1) * n2);
  std::array<PointSet, kMaxPoints> nbhd{};
  auto box = [n2](PointSet u, PointSet v) {
    PointSet r;
    for (int i : u.points())
      for (int j : v.points()) r = r.with(i * n2 + j);
    return r;
  };
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      names.push_back(left.point_names()[i] + "×" + right.point_names()[j]);
      nbhd[i * n2 + j] = box(left.min_nbhd(i), right.min_nbhd(j));
    }
  return FiniteSpace::from_min_neighborhoods(std::move(names), nbhd);
}

}  // namespace topolab
