#pragma once

// Test-only reference implementations. Everything here is computed by
// scanning the open/closed families straight off the definitions, never
// through the minimal-neighborhood tables the library uses, so these are
// an independent route for cross-checking.

#include <vector>

#include "topolab/topolab.hpp"

namespace oracle {

using topolab::FiniteSpace;
using topolab::PointSet;
using topolab::SetFamily;
using topolab::Variant;

inline PointSet interior_scan(const FiniteSpace& s, PointSet a) {
  PointSet u;
  for (PointSet o : s.opens())
    if (o.subset_of(a)) u |= o;
  return u;
}

inline PointSet closure_scan(const FiniteSpace& s, PointSet a) {
  PointSet r = s.universe();
  for (PointSet c : s.closeds())
    if (a.subset_of(c)) r &= c;
  return r;
}

inline SetFamily regular_scan(const FiniteSpace& s) {
  std::vector<PointSet> out;
  const int n = s.point_count();
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    const PointSet a{m};
    if (interior_scan(s, closure_scan(s, a)) == a) out.push_back(a);
  }
  return SetFamily::of(n, std::move(out));
}

inline PointSet dint_scan(const FiniteSpace& s, PointSet a) {
  PointSet u;
  for (PointSet w : regular_scan(s))
    if (w.subset_of(a)) u |= w;
  return u;
}

inline PointSet dcl_scan(const FiniteSpace& s, PointSet a) {
  const PointSet x = s.universe();
  return dint_scan(s, a.complement_in(x)).complement_in(x);
}

inline PointSet scl_scan(const FiniteSpace& s, PointSet a);

inline bool variant_open_def(const FiniteSpace& s, Variant v, PointSet a) {
  switch (v) {
    case Variant::Open: return s.opens().contains(a);
    case Variant::Delta: return dint_scan(s, a) == a;
    case Variant::RegularOpen: return interior_scan(s, closure_scan(s, a)) == a;
    case Variant::Semi: return a.subset_of(closure_scan(s, interior_scan(s, a)));
    case Variant::Alpha:
      return a.subset_of(interior_scan(s, closure_scan(s, interior_scan(s, a))));
    case Variant::AOpen:
      return a.subset_of(interior_scan(s, closure_scan(s, dint_scan(s, a))));
    case Variant::BOpen:
      return a.subset_of(closure_scan(s, interior_scan(s, a)) |
                         interior_scan(s, closure_scan(s, a)));
    case Variant::EOpen:
      return a.subset_of(closure_scan(s, dint_scan(s, a)) |
                         interior_scan(s, dcl_scan(s, a)));
    case Variant::Feebly:
      for (PointSet u : s.opens())
        if (u.subset_of(a) && a.subset_of(scl_scan(s, u))) return true;
      return false;
  }
  return false;
}

inline SetFamily family_def(const FiniteSpace& s, Variant v) {
  std::vector<PointSet> out;
  const int n = s.point_count();
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (variant_open_def(s, v, PointSet{m})) out.push_back(PointSet{m});
  return SetFamily::of(n, std::move(out));
}

inline PointSet scl_scan(const FiniteSpace& s, PointSet a) {
  PointSet r = s.universe();
  const SetFamily semi_closed = family_def(s, Variant::Semi).complements(s.universe());
  for (PointSet c : semi_closed)
    if (a.subset_of(c)) r &= c;
  return r;
}

inline SetFamily lc_def(const FiniteSpace& s, topolab::LCVariant lcv) {
  const Variant v = underlying_variant(lcv);
  const SetFamily open = family_def(s, v);
  const SetFamily closed = open.complements(s.universe());
  std::vector<PointSet> out;
  for (PointSet u : open)
    for (PointSet c : closed) out.push_back(u & c);
  return SetFamily::of(s.point_count(), std::move(out));
}

/// Product opens by the letter of the definition: collect every box U×V
/// and close the collection under pairwise union to a fixpoint.
inline SetFamily product_by_boxes(const FiniteSpace& l, const FiniteSpace& r) {
  const int n2 = r.point_count();
  const int n = l.point_count() * n2;
  auto box = [n2](PointSet u, PointSet v) {
    PointSet out;
    for (int i : u.points())
      for (int j : v.points()) out = out.with(i * n2 + j);
    return out;
  };
  std::vector<bool> seen(std::size_t{1} << n, false);
  std::vector<PointSet> fam;
  auto push = [&](PointSet p) {
    if (!seen[p.bits()]) {
      seen[p.bits()] = true;
      fam.push_back(p);
    }
  };
  for (PointSet u : l.opens())
    for (PointSet v : r.opens()) push(box(u, v));
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) push(fam[i] | fam[j]);
  return SetFamily::of(n, std::move(fam));
}

/// Collects every space the enumerator streams for ground size n.
inline std::vector<FiniteSpace> all_spaces(int n) {
  std::vector<FiniteSpace> out;
  topolab::enumerate_topologies(n, false, [&](const FiniteSpace& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace oracle
