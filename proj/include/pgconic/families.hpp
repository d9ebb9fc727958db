#pragma once

// The three families of line partitions of the internal points of C, a total
// verifier for arbitrary line sets, and the tangency profile of a size-q
// partition at a point of the conic.

#include <map>
#include <string>
#include <vector>

#include "pgconic/conic.hpp"

namespace pgconic {

enum class Provenance { ExternalPencil, ConicPointPencil, BaerSubplane, SearchResult };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::ExternalPencil: return "external_pencil";
    case Provenance::ConicPointPencil: return "conic_point_pencil";
    case Provenance::BaerSubplane: return "baer_subplane";
    case Provenance::SearchResult: return "search_result";
  }
  return "?";
}

// A candidate line partition: sorted unique line ids plus the field order,
// which downstream consumers use to reject cross-field mixing.
struct LineSet {
  int q = 0;
  std::vector<int> line_ids;
  Provenance provenance = Provenance::SearchResult;

  friend bool operator==(const LineSet& a, const LineSet& b) {
    return a.q == b.q && a.line_ids == b.line_ids;
  }
  friend bool operator<(const LineSet& a, const LineSet& b) { return a.line_ids < b.line_ids; }
};

inline LineSet make_line_set(const Plane& pl, std::vector<int> ids, Provenance prov) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    fail(errc::bad_argument, "duplicate line ids");
  if (!ids.empty() && (ids.front() < 0 || ids.back() >= pl.size()))
    fail(errc::bad_argument, "line id out of range");
  return LineSet{pl.q(), std::move(ids), prov};
}

struct PartitionReport {
  bool is_exact_partition = false;
  int size = 0;
  int secant_count = 0;
  int external_line_count = 0;
  int tangent_count = 0;
  int uncovered_internal = 0;
  int multiply_covered_internal = 0;
  std::map<int, int> per_conic_point_line_counts;  // on-conic point id -> lines through it
  bool covers_all_conic_points = false;
};

// Full census of a line set against the internal points of K. Never throws on
// broken input; it reports.
inline PartitionReport verify_partition(const Conic& K, const LineSet& L) {
  const Plane& pl = K.plane();
  PartitionReport r;
  r.size = static_cast<int>(L.line_ids.size());
  std::vector<int> cover(pl.size(), 0);
  for (int pid : K.points_on()) r.per_conic_point_line_counts[pid] = 0;
  for (int lid : L.line_ids) {
    switch (K.classify_line(lid)) {
      case LineClass::Tangent: ++r.tangent_count; break;
      case LineClass::Secant: ++r.secant_count; break;
      case LineClass::ExternalLine: ++r.external_line_count; break;
    }
    for (int pid : pl.points_on_line(lid)) {
      if (K.classify_point(pid) == PointClass::Internal) ++cover[pid];
      else if (K.classify_point(pid) == PointClass::OnConic)
        ++r.per_conic_point_line_counts[pid];
    }
  }
  for (int pid : K.internal_points()) {
    if (cover[pid] == 0) ++r.uncovered_internal;
    else if (cover[pid] > 1) ++r.multiply_covered_internal;
  }
  r.is_exact_partition =
      r.uncovered_internal == 0 && r.multiply_covered_internal == 0 && r.tangent_count == 0;
  r.covers_all_conic_points = true;
  for (const auto& [pid, count] : r.per_conic_point_line_counts)
    if (count == 0) r.covers_all_conic_points = false;
  return r;
}

// The q-1 non-tangent lines through an external point.
inline LineSet external_pencil_partition(const Conic& K, int pid) {
  if (K.classify_point(pid) != PointClass::External)
    fail(errc::not_external_point, "base point must be external to the conic");
  std::vector<int> ids;
  for (int lid : K.plane().lines_through_point(pid))
    if (K.classify_line(lid) != LineClass::Tangent) ids.push_back(lid);
  return make_line_set(K.plane(), std::move(ids), Provenance::ExternalPencil);
}

// The q secants through a point of the conic (every line through it except
// the tangent).
inline LineSet conic_point_pencil_partition(const Conic& K, int pid) {
  if (K.classify_point(pid) != PointClass::OnConic)
    fail(errc::not_on_conic, "base point must lie on the conic");
  const int tangent = K.polar_line(pid);
  std::vector<int> ids;
  for (int lid : K.plane().lines_through_point(pid))
    if (lid != tangent) ids.push_back(lid);
  return make_line_set(K.plane(), std::move(ids), Provenance::ConicPointPencil);
}

// Point and line ids of the canonical subfield subplane PG(2, sqrt(q)): the
// classes whose normalized coordinates all lie in GF(sqrt(q)).
struct BaerSubplane {
  std::vector<int> point_ids;
  std::vector<int> line_ids;
};

inline BaerSubplane subfield_subplane(const Plane& pl) {
  const Field& f = pl.field();
  if (!f.square_order()) fail(errc::not_a_square, "q is not a square");
  BaerSubplane b;
  for (int id = 0; id < pl.size(); ++id) {
    const Triple& v = pl.point(id);
    if (f.in_subfield(v[0]) && f.in_subfield(v[1]) && f.in_subfield(v[2])) {
      b.point_ids.push_back(id);
      b.line_ids.push_back(id);  // lines enumerate over the same triples
    }
  }
  const int r = f.subfield_order();
  if (static_cast<int>(b.point_ids.size()) != r * r + r + 1)
    throw std::logic_error("subfield subplane has the wrong size");
  return b;
}

// The q non-tangent lines of the subfield Baer subplane, for square q. The
// subplane shares sqrt(q)+1 points with C and contributes sqrt(q)+1 tangents.
inline LineSet baer_subplane_partition(const Conic& K) {
  if (K.pencil_index() != 0) fail(errc::bad_argument, "Baer partition is built against C_0");
  const BaerSubplane b = subfield_subplane(K.plane());
  std::vector<int> ids;
  int tangents = 0;
  for (int lid : b.line_ids) {
    if (K.classify_line(lid) == LineClass::Tangent) ++tangents;
    else ids.push_back(lid);
  }
  const int r = K.field().subfield_order();
  if (tangents != r + 1 || static_cast<int>(ids.size()) != K.field().q())
    throw std::logic_error("Baer subplane line census is off");
  return make_line_set(K.plane(), std::move(ids), Provenance::BaerSubplane);
}

struct TangencyProfile {
  int m = 0;                 // lines of L through the base point
  std::map<int, int> phi;    // internal pencil index -> tangent lines of L
  int t = -1;                // the common value of phi when constant
  bool identity_holds = false;
};

// Tangency profile of an exact size-q partition at a conic point P, for
// q = 3 mod 4. The frame is normalized by a stabilizer element sending P to
// Y_inf; then every line of L off P has a tangency index in I, phi is
// constant on I with value t in {0,1,2}, and t(q-1)/2 = q - m.
inline TangencyProfile tangency_profile(const Conic& K, const LineSet& L, int pid) {
  const Field& f = K.field();
  const Plane& pl = K.plane();
  const int q = f.q();
  if (q % 4 != 3) fail(errc::wrong_congruence_class, "requires q = 3 mod 4");
  if (K.pencil_index() != 0) fail(errc::bad_argument, "profiles are bound to C_0");
  if (K.classify_point(pid) != PointClass::OnConic)
    fail(errc::not_on_conic, "profile point must lie on the conic");
  const PartitionReport rep = verify_partition(K, L);
  if (!rep.is_exact_partition || rep.size != q)
    fail(errc::not_a_partition, "requires an exact partition of size q");

  const Collineation g = conic_frame_map(K, pid);
  const std::vector<int> lperm = g.line_permutation(pl);

  TangencyProfile prof;
  for (int s : internal_pencil_indices(f)) prof.phi[s] = 0;
  const int yinf = pl.y_infinity();
  bool indices_in_I = true;
  for (int lid : L.line_ids) {
    const int mapped = lperm[lid];
    if (pl.incident(yinf, mapped)) {
      ++prof.m;
      continue;
    }
    const int s = tangent_pencil_index(pl, mapped);
    if (f.chi(s) == -1) ++prof.phi[s];
    else indices_in_I = false;
  }

  int sum = 0;
  bool constant = true;
  bool first = true;
  for (const auto& [s, count] : prof.phi) {
    sum += count;
    if (first) {
      prof.t = count;
      first = false;
    } else if (count != prof.t) {
      constant = false;
    }
  }
  prof.identity_holds = indices_in_I && constant && sum == q - prof.m &&
                        prof.t >= 0 && prof.t <= 2 && prof.t * (q - 1) / 2 == q - prof.m;
  if (!constant) prof.t = -1;
  return prof;
}

}  // namespace pgconic
