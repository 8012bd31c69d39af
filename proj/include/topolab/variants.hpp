#pragma once

#include <string>
#include <vector>

#include "topolab/space.hpp"

namespace topolab {

namespace detail {

// Cache slot layout: [0,9) variant-open, [9,18) variant-closed,
// [18,27) reserved, [27,33) locally-closed.
constexpr int slot_open(Variant v) { return index_of(v); }
constexpr int slot_closed(Variant v) { return kVariantCount + index_of(v); }
constexpr int slot_lc(LCVariant v) { return 3 * kVariantCount + index_of(v); }

}  // namespace detail

inline const SetFamily& variant_closed_family(const FiniteSpace& s, Variant v);

/// Semi-closure: the smallest semi-closed superset (declared here, defined
/// with the other derived operators below).
inline PointSet semi_closure(const FiniteSpace& s, PointSet a);

/// Decides the defining containment of each openness notion exactly.
inline bool is_variant_open(const FiniteSpace& s, Variant v, PointSet a) {
  detail::require_wellformed(s, a, "is_variant_open");
  switch (v) {
    case Variant::Open:
      return s.opens().contains(a);
    case Variant::Delta:
      return delta_interior(s, a) == a;
    case Variant::RegularOpen:
      return s.regular_opens().contains(a);
    case Variant::Semi:
      return a.subset_of(closure(s, interior(s, a)));
    case Variant::Alpha:
      return a.subset_of(interior(s, closure(s, interior(s, a))));
    case Variant::AOpen:
      return a.subset_of(interior(s, closure(s, delta_interior(s, a))));
    case Variant::BOpen:
      return a.subset_of(closure(s, interior(s, a)) | interior(s, closure(s, a)));
    case Variant::EOpen:
      return a.subset_of(closure(s, delta_interior(s, a)) |
                         interior(s, delta_closure(s, a)));
    case Variant::Feebly: {
      // witness scan: some open U with U subseteq A subseteq scl(U)
      const auto& scl = s.caches().scl_of_opens([&s] {
        std::vector<PointSet> t;
        t.reserve(s.opens().size());
        for (PointSet u : s.opens()) t.push_back(semi_closure(s, u));
        return t;
      });
      const auto& members = s.opens().members();
      for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i].subset_of(a) && a.subset_of(scl[i])) return true;
      return false;
    }
  }
  return false;
}

/// All 2^n subsets filtered by the variant predicate, canonically ordered.
/// Computed once per space and memoized.
inline const SetFamily& variant_open_family(const FiniteSpace& s, Variant v) {
  return s.caches().family(detail::slot_open(v), [&] {
    const int n = s.point_count();
    std::vector<PointSet> out;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
      if (is_variant_open(s, v, PointSet{m})) out.push_back(PointSet{m});
    return SetFamily::of(n, std::move(out));
  });
}

/// Complements of the variant-open family.
inline const SetFamily& variant_closed_family(const FiniteSpace& s, Variant v) {
  return s.caches().family(detail::slot_closed(v), [&] {
    return variant_open_family(s, v).complements(s.universe());
  });
}

namespace detail {

inline void require_closure_variant(Variant v, const char* op) {
  if (v != Variant::Semi && v != Variant::AOpen && v != Variant::EOpen)
    throw PreconditionError(std::string(op) +
                            ": only the semi, a and e families support closure; got '" +
                            std::string(name_of(v)) + "'");
}

}  // namespace detail

/// Smallest variant-closed superset of A, computed as the intersection of
/// all variant-closed supersets. The result is checked to be
/// variant-closed itself; a failure would mean the closed family is not
/// intersection stable and "smallest" is ill-defined.
inline PointSet variant_closure(const FiniteSpace& s, Variant v, PointSet a) {
  detail::require_wellformed(s, a, "variant_closure");
  detail::require_closure_variant(v, "variant_closure");
  const SetFamily& closed = variant_closed_family(s, v);
  PointSet r = s.universe();
  for (PointSet c : closed)
    if (a.subset_of(c)) r &= c;
  if (!closed.contains(r))
    throw ConstructionError("variant_closure: the '" + std::string(name_of(v)) +
                            "'-closed family is not intersection stable");
  return r;
}

/// Largest variant-open subset of A: the union of all variant-open subsets.
inline PointSet variant_interior(const FiniteSpace& s, Variant v, PointSet a) {
  detail::require_wellformed(s, a, "variant_interior");
  detail::require_closure_variant(v, "variant_interior");
  PointSet r;
  for (PointSet o : variant_open_family(s, v))
    if (o.subset_of(a)) r |= o;
  return r;
}

inline PointSet semi_closure(const FiniteSpace& s, PointSet a) {
  return variant_closure(s, Variant::Semi, a);
}

inline PointSet a_closure(const FiniteSpace& s, PointSet a) {
  return variant_closure(s, Variant::AOpen, a);
}

inline PointSet a_interior(const FiniteSpace& s, PointSet a) {
  return variant_interior(s, Variant::AOpen, a);
}

}  // namespace topolab
