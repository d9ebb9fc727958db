#pragma once

// Orbit classification of solution sets under the stabilizer of C in
// PGL(3,q). The stabilizer is enumerated from sharp 3-transitivity on the
// points of C: each ordered triple of parameters determines one Moebius map,
// lifted through the parametrization (s:t) -> (st, s^2, t^2). Line sets are
// reduced to canonical forms by full orbit minimization and matched against
// one constructed representative per family.

#include <map>
#include <vector>

#include "pgconic/search.hpp"

namespace pgconic {

struct StabilizerGroup {
  std::vector<Collineation> elements;        // sorted by canonical matrix
  std::vector<std::vector<int>> line_perms;  // aligned with elements

  int order() const noexcept { return static_cast<int>(elements.size()); }
};

// All (q+1)q(q-1) collineations fixing C setwise. Each element is verified to
// map the point set of C onto itself.
inline StabilizerGroup conic_stabilizer(const Conic& K) {
  if (K.pencil_index() != 0) fail(errc::bad_argument, "stabilizer is built for C_0");
  const Field& f = K.field();
  const Plane& pl = K.plane();
  const int q = f.q();

  // parameters of the points of C as projective pairs (s:t)
  std::vector<std::array<int, 2>> prm;
  for (int a = 0; a < q; ++a) prm.push_back({a, f.one()});
  prm.push_back({f.one(), 0});

  std::vector<Collineation> elems;
  elems.reserve((q + 1) * q * (q - 1));
  const int n = q + 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        // Moebius map sending the base triple (0, 1, inf) to (p_i, p_j, p_k):
        // columns alpha*p_k, beta*p_i where [p_k p_i] (alpha,beta)^T = p_j.
        const int sk = prm[k][0], tk = prm[k][1];
        const int si = prm[i][0], ti = prm[i][1];
        const int sj = prm[j][0], tj = prm[j][1];
        const int det = f.sub(f.mul(sk, ti), f.mul(si, tk));
        const int alpha = f.div(f.sub(f.mul(sj, ti), f.mul(si, tj)), det);
        const int beta = f.div(f.sub(f.mul(sk, tj), f.mul(sj, tk)), det);
        const std::array<int, 4> mobius = {f.mul(alpha, sk), f.mul(beta, si),
                                           f.mul(alpha, tk), f.mul(beta, ti)};
        elems.push_back(collineation_from_mobius(f, mobius));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (static_cast<int>(elems.size()) != (q + 1) * q * (q - 1))
    throw std::logic_error("stabilizer enumeration produced the wrong order");

  StabilizerGroup g;
  g.elements = std::move(elems);
  g.line_perms.reserve(g.elements.size());
  for (const Collineation& e : g.elements) {
    for (int pid : K.points_on())
      if (K.classify_point(e.apply_point(pl, pid)) != PointClass::OnConic)
        throw std::logic_error("stabilizer element moved a conic point off the conic");
    g.line_perms.push_back(e.line_permutation(pl));
  }
  return g;
}

inline LineSet apply_to_line_set(const std::vector<int>& line_perm, const LineSet& L) {
  std::vector<int> ids;
  ids.reserve(L.line_ids.size());
  for (int lid : L.line_ids) ids.push_back(line_perm[lid]);
  std::sort(ids.begin(), ids.end());
  return LineSet{L.q, std::move(ids), L.provenance};
}

// Lexicographically minimal image of L over the group: idempotent, constant
// on orbits.
inline LineSet canonical_partition(const LineSet& L, const StabilizerGroup& g) {
  if (g.order() == 0) fail(errc::bad_argument, "empty group");
  if (static_cast<int>(g.line_perms.front().size()) != L.q * L.q + L.q + 1)
    fail(errc::field_mismatch, "line set does not live in the group's plane");
  LineSet best = apply_to_line_set(g.line_perms.front(), L);
  for (size_t i = 1; i < g.line_perms.size(); ++i) {
    LineSet candidate = apply_to_line_set(g.line_perms[i], L);
    if (candidate.line_ids < best.line_ids) best = std::move(candidate);
  }
  return best;
}

enum class FamilyLabel { ExternalPencil, ConicPointPencil, BaerSubplane, ExceptionalCover, Unknown };

inline const char* to_string(FamilyLabel l) {
  switch (l) {
    case FamilyLabel::ExternalPencil: return "external_pencil";
    case FamilyLabel::ConicPointPencil: return "conic_point_pencil";
    case FamilyLabel::BaerSubplane: return "baer_subplane";
    case FamilyLabel::ExceptionalCover: return "exceptional_cover";
    case FamilyLabel::Unknown: return "unknown";
  }
  return "?";
}

struct Orbit {
  LineSet canonical_form;
  int orbit_size = 0;
  FamilyLabel label = FamilyLabel::Unknown;
};

struct OrbitReport {
  std::vector<Orbit> orbits;  // ordered by canonical id lists
  int total_solutions = 0;
};

// Canonical forms of the constructed families, used for label matching.
struct FamilyReference {
  LineSet external_pencil;
  LineSet conic_point_pencil;
  std::optional<LineSet> baer;
};

inline FamilyReference family_reference(const Conic& K, const StabilizerGroup& g) {
  FamilyReference ref;
  int external = 0;
  while (K.classify_point(external) != PointClass::External) ++external;
  ref.external_pencil = canonical_partition(external_pencil_partition(K, external), g);
  ref.conic_point_pencil =
      canonical_partition(conic_point_pencil_partition(K, K.points_on().front()), g);
  if (K.field().square_order())
    ref.baer = canonical_partition(baer_subplane_partition(K), g);
  return ref;
}

// Group the solutions into orbits by canonical form and label each orbit by
// comparison with the constructed representatives. In cover mode an orbit
// matching no partition family is the exceptional-cover witness; in exact
// mode it is Unknown.
inline OrbitReport classify_solutions(const Conic& K, const SolutionSet& sols,
                                      const StabilizerGroup& g) {
  for (const LineSet& ls : sols.solutions)
    if (ls.q != K.plane().q())
      fail(errc::field_mismatch, "solutions come from a different field");

  const FamilyReference ref = family_reference(K, g);
  std::map<std::vector<int>, Orbit> orbits;
  for (const LineSet& ls : sols.solutions) {
    LineSet canon = canonical_partition(ls, g);
    auto [it, fresh] = orbits.try_emplace(canon.line_ids);
    if (fresh) {
      if (canon == ref.external_pencil) {
        canon.provenance = Provenance::ExternalPencil;
        it->second.label = FamilyLabel::ExternalPencil;
      } else if (canon == ref.conic_point_pencil) {
        canon.provenance = Provenance::ConicPointPencil;
        it->second.label = FamilyLabel::ConicPointPencil;
      } else if (ref.baer && canon == *ref.baer) {
        canon.provenance = Provenance::BaerSubplane;
        it->second.label = FamilyLabel::BaerSubplane;
      } else {
        it->second.label = sols.mode == CoverMode::AtLeastOnce ? FamilyLabel::ExceptionalCover
                                                               : FamilyLabel::Unknown;
      }
      it->second.canonical_form = std::move(canon);
    }
    ++it->second.orbit_size;
  }

  OrbitReport report;
  report.total_solutions = static_cast<int>(sols.solutions.size());
  for (auto& [ids, orbit] : orbits) report.orbits.push_back(std::move(orbit));
  return report;
}

}  // namespace pgconic
