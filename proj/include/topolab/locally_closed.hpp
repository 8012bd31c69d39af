#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topolab/variants.hpp"

namespace topolab {

/// Certificate that a set is variant-locally closed: the set equals
/// open_part ∩ closed_part with the parts taken from the variant's open
/// and closed families.
struct LCWitness {
  PointSet open_part;
  PointSet closed_part;
  LCVariant variant = LCVariant::LC;

  PointSet witnessed() const { return open_part & closed_part; }
};

/// { U ∩ V : U variant-open, V variant-closed }, canonically ordered.
/// Always contains both the open and the closed family.
inline const SetFamily& lc_family(const FiniteSpace& s, LCVariant lcv) {
  return s.caches().family(detail::slot_lc(lcv), [&] {
    const Variant v = underlying_variant(lcv);
    const SetFamily& open = variant_open_family(s, v);
    const SetFamily& closed = variant_closed_family(s, v);
    const int n = s.point_count();
    std::vector<bool> seen(std::size_t{1} << n, false);
    std::vector<PointSet> out;
    for (PointSet u : open)
      for (PointSet c : closed) {
        const PointSet x = u & c;
        if (!seen[x.bits()]) {
          seen[x.bits()] = true;
          out.push_back(x);
        }
      }
    return SetFamily::of(n, std::move(out));
  });
}

/// The canonically least witness (least open part, then least closed
/// part), or nothing when A is not variant-locally closed.
inline std::optional<LCWitness> lc_witness(const FiniteSpace& s, LCVariant lcv, PointSet a) {
  detail::require_wellformed(s, a, "lc_witness");
  const Variant v = underlying_variant(lcv);
  for (PointSet u : variant_open_family(s, v)) {
    if (!a.subset_of(u)) continue;
    for (PointSet c : variant_closed_family(s, v))
      if ((u & c) == a) return LCWitness{u, c, lcv};
  }
  return std::nullopt;
}

/// Five independently evaluated forms of the membership characterization;
/// they agree on every input. `witness` is the canonically least witness
/// set of the existential form when it holds.
struct CharacterizationRecord {
  bool form_a = false;
  bool form_b = false;
  bool form_c = false;
  bool form_d = false;
  bool form_e = false;
  std::optional<PointSet> witness;

  bool all_agree() const {
    return form_a == form_b && form_b == form_c && form_c == form_d && form_d == form_e;
  }
  bool holds() const { return form_a; }
};

inline std::string format_characterization(const FiniteSpace& s, const CharacterizationRecord& r) {
  auto tf = [](bool b) { return b ? "true" : "false"; };
  std::string out = "a=";
  out += tf(r.form_a);
  out += " b="; out += tf(r.form_b);
  out += " c="; out += tf(r.form_c);
  out += " d="; out += tf(r.form_d);
  out += " e="; out += tf(r.form_e);
  if (r.witness) {
    out += " P=";
    out += format_set(s, *r.witness);
  }
  return out;
}

/// Membership of A in the a-locally-closed family, decided five ways:
///   (a) A = U ∩ V for a-open U, a-closed V
///   (b) A = P ∩ a-cl(A) for some a-open P
///   (c) a-cl(A) \ A is a-closed
///   (d) A ∪ (X \ a-cl(A)) is a-open
///   (e) A ⊆ a-int(A ∪ (X \ a-cl(A)))
/// No form is derived from another here; the agreement of all five is a
/// model-checked theorem, not an implementation shortcut.
inline CharacterizationRecord characterize_alc(const FiniteSpace& s, PointSet a) {
  detail::require_wellformed(s, a, "characterize_alc");
  const PointSet x = s.universe();
  const PointSet acl = a_closure(s, a);
  CharacterizationRecord r;
  r.form_a = lc_family(s, LCVariant::ALC).contains(a);
  for (PointSet p : variant_open_family(s, Variant::AOpen))
    if ((p & acl) == a) {
      r.form_b = true;
      r.witness = p;
      break;
    }
  r.form_c = variant_closed_family(s, Variant::AOpen).contains(acl - a);
  r.form_d = variant_open_family(s, Variant::AOpen).contains(a | acl.complement_in(x));
  r.form_e = a.subset_of(a_interior(s, a | acl.complement_in(x)));
  return r;
}

/// The a-locally-open dual: A is a-locally open iff X \ A is a-locally
/// closed. Forms:
///   (a) X \ A is a-locally closed
///   (b) A = Q ∪ a-int(A) for some a-closed Q
///   (c) (X \ A) ∪ a-int(A) is a-open
///   (d) A ∩ (X \ a-int(A)) is a-closed
///   (e) a-cl(A ∩ (X \ a-int(A))) ⊆ A
inline CharacterizationRecord characterize_alo(const FiniteSpace& s, PointSet a) {
  detail::require_wellformed(s, a, "characterize_alo");
  const PointSet x = s.universe();
  const PointSet aint = a_interior(s, a);
  CharacterizationRecord r;
  r.form_a = lc_family(s, LCVariant::ALC).contains(a.complement_in(x));
  for (PointSet q : variant_closed_family(s, Variant::AOpen))
    if (q.subset_of(a) && (q | aint) == a) {
      r.form_b = true;
      r.witness = q;
      break;
    }
  r.form_c = variant_open_family(s, Variant::AOpen).contains(a.complement_in(x) | aint);
  r.form_d = variant_closed_family(s, Variant::AOpen).contains(a & aint.complement_in(x));
  r.form_e = a_closure(s, a & aint.complement_in(x)).subset_of(a);
  return r;
}

/// From an a-locally-closed witness (U, V) produces the a-closed set
/// F = V \ U, which is disjoint from the witnessed set.
inline PointSet disjoint_aclosed_witness(const FiniteSpace& s, const LCWitness& w) {
  if (w.variant != LCVariant::ALC)
    throw PreconditionError("disjoint_aclosed_witness: witness must be for the aLC family");
  detail::require_wellformed(s, w.open_part, "disjoint_aclosed_witness");
  detail::require_wellformed(s, w.closed_part, "disjoint_aclosed_witness");
  if (!variant_open_family(s, Variant::AOpen).contains(w.open_part) ||
      !variant_closed_family(s, Variant::AOpen).contains(w.closed_part))
    throw PreconditionError("disjoint_aclosed_witness: invalid witness parts");
  return w.closed_part - w.open_part;
}

/// True iff A itself refutes the converse of the disjointness fact: some
/// nonempty a-closed set misses A although A is not a-locally closed.
inline bool converse_fails_check(const FiniteSpace& s, PointSet a) {
  detail::require_wellformed(s, a, "converse_fails_check");
  if (lc_family(s, LCVariant::ALC).contains(a)) return false;
  for (PointSet f : variant_closed_family(s, Variant::AOpen))
    if (!f.empty() && !f.intersects(a)) return true;
  return false;
}

/// Interpolates an a-open E and an a-closed F around an a-open P and an
/// a-closed Q:  E := P ∪ a-int(Q),  F := Q ∩ a-cl(P), so that
/// P ∩ Q ⊆ F and E ⊆ P ∪ Q.
inline std::pair<PointSet, PointSet> interpolation_witness(const FiniteSpace& s,
                                                           PointSet p, PointSet q) {
  detail::require_wellformed(s, p, "interpolation_witness");
  detail::require_wellformed(s, q, "interpolation_witness");
  if (!variant_open_family(s, Variant::AOpen).contains(p))
    throw PreconditionError("interpolation_witness: P is not a-open");
  if (!variant_closed_family(s, Variant::AOpen).contains(q))
    throw PreconditionError("interpolation_witness: Q is not a-closed");
  return {p | a_interior(s, q), q & a_closure(s, p)};
}

/// For W ⊆ H with H a-locally closed, returns K = P ∩ a-cl(W), where P is
/// the least a-open set with H = P ∩ a-cl(H); then W ⊆ K ⊆ H and K is
/// a-locally closed.
inline PointSet sandwich_witness(const FiniteSpace& s, PointSet w, PointSet h) {
  detail::require_wellformed(s, w, "sandwich_witness");
  detail::require_wellformed(s, h, "sandwich_witness");
  if (!w.subset_of(h)) throw PreconditionError("sandwich_witness: W must be contained in H");
  const CharacterizationRecord rec = characterize_alc(s, h);
  if (!rec.holds() || !rec.witness)
    throw PreconditionError("sandwich_witness: H is not a-locally closed");
  return *rec.witness & a_closure(s, w);
}

/// Variant density: the variant closure of A is the whole space. The
/// plain-open flavor uses the ordinary closure.
inline bool is_variant_dense(const FiniteSpace& s, Variant v, PointSet a) {
  detail::require_wellformed(s, a, "is_variant_dense");
  if (v == Variant::Open) return closure(s, a) == s.universe();
  detail::require_closure_variant(v, "is_variant_dense");
  return variant_closure(s, v, a) == s.universe();
}

/// True iff every variant-dense subset is variant-open.
inline bool is_variant_submaximal(const FiniteSpace& s, Variant v) {
  const int n = s.point_count();
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    const PointSet a{m};
    if (is_variant_dense(s, v, a) && !is_variant_open(s, v, a)) return false;
  }
  return true;
}

/// True iff the variant-open family coincides with the topology itself.
inline bool is_variant_space(const FiniteSpace& s, Variant v) {
  if (v != Variant::AOpen && v != Variant::EOpen)
    throw PreconditionError("is_variant_space: only the a and e families compare against the topology");
  return variant_open_family(s, v) == s.opens();
}

/// Classical regularity: every closed set and every point outside it are
/// separated by disjoint opens. Checked through minimal neighborhoods.
inline bool is_regular(const FiniteSpace& s) {
  for (PointSet c : s.closeds()) {
    PointSet hull;
    for (int p : c.points()) hull |= s.min_nbhd(p);
    for (int x = 0; x < s.point_count(); ++x)
      if (!c.contains(x) && s.min_nbhd(x).intersects(hull)) return false;
  }
  return true;
}

/// A and B are a-separated when each misses the a-closure of the other.
inline bool are_a_separated(const FiniteSpace& s, PointSet a, PointSet b) {
  detail::require_wellformed(s, a, "are_a_separated");
  detail::require_wellformed(s, b, "are_a_separated");
  return !a.intersects(a_closure(s, b)) && !b.intersects(a_closure(s, a));
}

/// For a-separated a-locally closed A and B, builds the witness
/// (U ∪ V, a-cl(A ∪ B)) with U = P ∩ (X \ a-cl(B)), V = Q ∩ (X \ a-cl(A)),
/// where P, Q are the least a-open sets recovering A and B from their
/// a-closures. The constructed pair is verified to cut out exactly A ∪ B
/// before it is returned.
inline LCWitness separated_union_witness(const FiniteSpace& s, PointSet a, PointSet b) {
  detail::require_wellformed(s, a, "separated_union_witness");
  detail::require_wellformed(s, b, "separated_union_witness");
  const CharacterizationRecord ra = characterize_alc(s, a);
  const CharacterizationRecord rb = characterize_alc(s, b);
  if (!ra.holds() || !rb.holds())
    throw PreconditionError("separated_union_witness: both sets must be a-locally closed");
  if (!are_a_separated(s, a, b))
    throw PreconditionError("separated_union_witness: sets are not a-separated");
  const PointSet x = s.universe();
  const PointSet u = *ra.witness & a_closure(s, b).complement_in(x);
  const PointSet v = *rb.witness & a_closure(s, a).complement_in(x);
  LCWitness w{u | v, a_closure(s, a | b), LCVariant::ALC};
  if (w.witnessed() != (a | b))
    throw ConstructionError("separated_union_witness: construction does not cut out the union on " +
                            format_set(s, a) + ", " + format_set(s, b));
  return w;
}

/// Lifts a-locally-closed witnesses through a binary product: the box of
/// the open parts and the box of the closed parts witness A × B inside
/// product_space(left, right). The boxes are re-checked to be a-open and
/// a-closed there.
inline LCWitness product_lc_witness(const FiniteSpace& left, const FiniteSpace& right,
                                    PointSet a, PointSet b) {
  detail::require_wellformed(left, a, "product_lc_witness");
  detail::require_wellformed(right, b, "product_lc_witness");
  const auto wa = lc_witness(left, LCVariant::ALC, a);
  const auto wb = lc_witness(right, LCVariant::ALC, b);
  if (!wa || !wb)
    throw PreconditionError("product_lc_witness: inputs must be a-locally closed in their factors");
  const FiniteSpace prod = product_space(left, right);
  const int n2 = right.point_count();
  auto box = [n2](PointSet u, PointSet v) {
    PointSet r;
    for (int i : u.points())
      for (int j : v.points()) r = r.with(i * n2 + j);
    return r;
  };
  LCWitness w{box(wa->open_part, wb->open_part), box(wa->closed_part, wb->closed_part),
              LCVariant::ALC};
  if (!is_variant_open(prod, Variant::AOpen, w.open_part))
    throw ConstructionError("product_lc_witness: open box is not a-open in the product");
  if (!is_variant_open(prod, Variant::AOpen, w.closed_part.complement_in(prod.universe())))
    throw ConstructionError("product_lc_witness: closed box is not a-closed in the product");
  if (w.witnessed() != box(a, b))
    throw ConstructionError("product_lc_witness: boxes do not cut out the product set");
  return w;
}

}  // namespace topolab
