#pragma once

// The conic C: X^2 - YZ = 0 (affine Y = X^2) and the pencil C_s: Y = X^2 - s,
// together with point/line classification against any pencil member, the
// tangency index of a line, internal/external relations between pencil
// members, and the character matrix of the non-squares with its exact
// integer-arithmetic diagnostics.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pgconic/gf.hpp"
#include "pgconic/plane.hpp"

namespace pgconic {

enum class PointClass { OnConic, Internal, External };
enum class LineClass { Tangent, Secant, ExternalLine };

inline const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::OnConic: return "on_conic";
    case PointClass::Internal: return "internal";
    case PointClass::External: return "external";
  }
  return "?";
}

inline const char* to_string(LineClass c) {
  switch (c) {
    case LineClass::Tangent: return "tangent";
    case LineClass::Secant: return "secant";
    case LineClass::ExternalLine: return "external";
  }
  return "?";
}

// Pencil member C_s with homogeneous form X^2 - YZ - s Z^2. All members pass
// through Y_inf = (0,1,0) and share the tangent Z = 0 there. Point classes
// are tabulated once per conic by counting tangents through each point.
class Conic {
 public:
  Conic(const Plane& pl, int s) : pl_(&pl), s_(s) {
    const Field& f = pl.field();
    const int mhalf = f.neg(f.inv(f.from_int(2)));
    form_ = {f.one(), 0, 0, 0, 0, mhalf, 0, mhalf, f.neg(s)};

    const int n = pl.size();
    for (int pid = 0; pid < n; ++pid)
      if (evaluate(pid) == 0) on_.push_back(pid);
    if (static_cast<int>(on_.size()) != f.q() + 1)
      throw std::logic_error("pencil conic is not irreducible");

    for (int pid : on_) tangent_lines_.push_back(polar_line(pid));
    std::sort(tangent_lines_.begin(), tangent_lines_.end());

    std::vector<int> tangent_count(n, 0);
    for (int lid : tangent_lines_)
      for (int pid : pl.points_on_line(lid)) ++tangent_count[pid];
    pclass_.resize(n);
    for (int pid = 0; pid < n; ++pid) {
      if (evaluate(pid) == 0) {
        pclass_[pid] = PointClass::OnConic;
      } else if (tangent_count[pid] == 2) {
        pclass_[pid] = PointClass::External;
      } else if (tangent_count[pid] == 0) {
        pclass_[pid] = PointClass::Internal;
        internal_.push_back(pid);
      } else {
        throw std::logic_error("point off the conic on exactly one tangent");
      }
    }

    // Calibrate the character-of-form oracle on a known external point.
    const int calib = pl.meet(tangent_lines_[0], tangent_lines_[1]);
    chi_external_ = f.chi(evaluate(calib));
  }

  static Conic standard(const Plane& pl) { return Conic(pl, 0); }

  const Plane& plane() const noexcept { return *pl_; }
  const Field& field() const noexcept { return pl_->field(); }
  int pencil_index() const noexcept { return s_; }
  const std::array<int, 9>& form() const noexcept { return form_; }

  // Value of the quadratic form at the stored (normalized) representative.
  // Its quadratic character is scale-invariant since rescaling multiplies
  // the value by a square.
  int evaluate(int pid) const {
    const Triple& v = pl_->point(pid);
    const Field& f = pl_->field();
    int s = 0;
    for (int i = 0; i < 3; ++i) {
      int row = 0;
      for (int j = 0; j < 3; ++j) row = f.add(row, f.mul(form_[3 * i + j], v[j]));
      s = f.add(s, f.mul(v[i], row));
    }
    return s;
  }

  const std::vector<int>& points_on() const noexcept { return on_; }
  const std::vector<int>& tangents() const noexcept { return tangent_lines_; }
  const std::vector<int>& internal_points() const noexcept { return internal_; }
  int internal_count() const noexcept { return static_cast<int>(internal_.size()); }

  PointClass classify_point(int pid) const { return pclass_[pid]; }

  // Independent oracle: external iff chi(form value) matches the calibrated
  // sign. The calibration avoids fixing a sign convention a priori.
  PointClass classify_point_by_character(int pid) const {
    const int e = evaluate(pid);
    if (e == 0) return PointClass::OnConic;
    return pl_->field().chi(e) == chi_external_ ? PointClass::External : PointClass::Internal;
  }

  LineClass classify_line(int lid) const {
    int on = 0;
    for (int pid : pl_->points_on_line(lid))
      if (pclass_[pid] == PointClass::OnConic) ++on;
    switch (on) {
      case 0: return LineClass::ExternalLine;
      case 1: return LineClass::Tangent;
      case 2: return LineClass::Secant;
      default: throw std::logic_error("line meets the conic in more than two points");
    }
  }

  int internal_points_on_line(int lid) const {
    int n = 0;
    for (int pid : pl_->points_on_line(lid))
      if (pclass_[pid] == PointClass::Internal) ++n;
    return n;
  }

  // Polar line of P: the dual triple form * P; the tangent at P when P is on
  // the conic.
  int polar_line(int pid) const {
    const Triple& v = pl_->point(pid);
    const Field& f = pl_->field();
    Triple l{};
    for (int i = 0; i < 3; ++i) {
      int s = 0;
      for (int j = 0; j < 3; ++j) s = f.add(s, f.mul(form_[3 * i + j], v[j]));
      l[i] = s;
    }
    return pl_->line_id(l);
  }

  int pole_point(int lid) const {
    // Solve form * v = l via the adjugate of the form.
    const Field& f = pl_->field();
    const auto& m = form_;
    auto minor2 = [&](int a, int b, int c, int d) {
      return f.sub(f.mul(m[a], m[b]), f.mul(m[c], m[d]));
    };
    const std::array<int, 9> adj = {minor2(4, 8, 5, 7), f.neg(minor2(1, 8, 2, 7)),
                                    minor2(1, 5, 2, 4),  f.neg(minor2(3, 8, 5, 6)),
                                    minor2(0, 8, 2, 6),  f.neg(minor2(0, 5, 2, 3)),
                                    minor2(3, 7, 4, 6),  f.neg(minor2(0, 7, 1, 6)),
                                    minor2(0, 4, 1, 3)};
    const Triple& l = pl_->line(lid);
    Triple v{};
    for (int i = 0; i < 3; ++i) {
      int s = 0;
      for (int j = 0; j < 3; ++j) s = f.add(s, f.mul(adj[3 * i + j], l[j]));
      v[i] = s;
    }
    return pl_->point_id(v);
  }

  // Parameter of a point of the conic: affine points (a, a^2 - s, 1) map to
  // a, and Y_inf maps to nullopt (the infinite parameter).
  std::optional<int> point_parameter(int pid) const {
    if (pclass_[pid] != PointClass::OnConic) fail(errc::not_on_conic, "point is not on the conic");
    if (pid == pl_->y_infinity()) return std::nullopt;
    return pl_->point(pid)[0];
  }

  int point_from_parameter(std::optional<int> theta) const {
    if (!theta) return pl_->y_infinity();
    const Field& f = pl_->field();
    const int a = *theta;
    return pl_->point_id({a, f.sub(f.mul(a, a), s_), f.one()});
  }

 private:
  const Plane* pl_;
  int s_;
  std::array<int, 9> form_;
  std::vector<int> on_, tangent_lines_, internal_;
  std::vector<PointClass> pclass_;
  int chi_external_;
};

// ---------------------------------------------------------------------------
// Pencil machinery
// ---------------------------------------------------------------------------

// Value of the C_s form at a raw triple, without building the conic.
inline int pencil_form_value(const Field& f, int s, const Triple& v) {
  const int x2 = f.mul(v[0], v[0]);
  const int yz = f.mul(v[1], v[2]);
  const int z2 = f.mul(v[2], v[2]);
  return f.sub(f.sub(x2, yz), f.mul(s, z2));
}

// The unique s such that the given line is tangent to C_s. The line must not
// pass through Y_inf: for Y = aX + b the index is s = -(a^2 + 4b)/4, and the
// result is checked by recounting the intersection.
inline int tangent_pencil_index(const Plane& pl, int lid) {
  const Field& f = pl.field();
  const Triple& l = pl.line(lid);
  if (l[1] == 0) fail(errc::line_through_y_infinity, "line passes through (0:1:0)");
  const int alpha = f.div(f.neg(l[0]), l[1]);
  const int beta = f.div(f.neg(l[2]), l[1]);
  const int four = f.from_int(4);
  const int s = f.neg(f.div(f.add(f.mul(alpha, alpha), f.mul(four, beta)), four));
  int hits = 0;
  for (int pid : pl.points_on_line(lid))
    if (pencil_form_value(f, s, pl.point(pid)) == 0) ++hits;
  if (hits != 1) throw std::logic_error("tangency index failed the intersection check");
  return s;
}

enum class PencilRelation { ExternalTo, InternalTo };

// Relation of C_{s2} to C_s: all affine points of C_{s2} are external or
// internal to C_s according to chi(s2 - s).
inline PencilRelation pencil_relation(const Field& f, int s, int s2) {
  if (s == s2) fail(errc::equal_arguments, "pencil members must be distinct");
  return f.chi(f.sub(s2, s)) == 1 ? PencilRelation::ExternalTo : PencilRelation::InternalTo;
}

// I = { s : chi(s) = -1 }, the pencil indices whose conics consist of
// internal points of C. Ascending element order.
inline std::vector<int> internal_pencil_indices(const Field& f) { return f.nonsquares(); }

// I_s = { s' in I : chi(s' - s) = -1 }, the members of I internal to C_s.
// Defined for q = 3 mod 4 and s in I; has size (q-3)/4.
inline std::vector<int> internal_subfamily(const Field& f, int s) {
  if (f.q() % 4 != 3) fail(errc::wrong_congruence_class, "requires q = 3 mod 4");
  if (f.chi(s) != -1) fail(errc::not_internal_index, "s must be a non-square");
  std::vector<int> out;
  for (int s2 : f.nonsquares())
    if (s2 != s && f.chi(f.sub(s2, s)) == -1) out.push_back(s2);
  return out;
}

struct CharacterMatrixInfo {
  std::vector<int> indices;             // the non-squares s_1 < s_2 < ...
  std::vector<std::vector<int>> a;      // a_ij = chi(s_i - s_j)
  int rank = 0;                         // exact rank over the rationals
  std::vector<std::vector<long long>> nullspace;  // integer-normalized basis
  bool minor_det_odd = false;           // det(A_{1,1}) mod 2 != 0
};

namespace detail {

using bigint = boost::multiprecision::cpp_int;

// Fraction-free (Bareiss) elimination; returns the rank.
inline int bareiss_rank(std::vector<std::vector<bigint>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  bigint prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < n; ++c) {
    int pivot = -1;
    for (int i = r; i < n; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = r + 1; i < n; ++i) {
      for (int j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

// Exact nullspace basis via Gauss-Jordan over the rationals. Entries of the
// input are small integers, so we keep numerators/denominators as bigints.
inline std::vector<std::vector<long long>> integer_nullspace(
    const std::vector<std::vector<int>>& a) {
  using rat = boost::multiprecision::cpp_rational;
  const int n = static_cast<int>(a.size());
  if (n == 0) return {};
  std::vector<std::vector<rat>> m(n, std::vector<rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];

  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int pivot = -1;
    for (int i = r; i < n; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    const rat inv = m[r][c];
    for (int j = 0; j < n; ++j) m[r][j] /= inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const rat factor = m[i][c];
      for (int j = 0; j < n; ++j) m[i][j] -= factor * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<long long>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<rat> v(n, 0);
    v[free] = 1;
    for (int k = 0; k < r; ++k) v[pivot_col[k]] = -m[k][free];
    // clear denominators
    bigint lcm = 1;
    for (const rat& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    std::vector<bigint> w(n);
    for (int j = 0; j < n; ++j) w[j] = numerator(v[j]) * (lcm / denominator(v[j]));
    bigint g = 0;
    for (const bigint& x : w) g = boost::multiprecision::gcd(g, x);
    if (g == 0) g = 1;
    std::vector<long long> out(n);
    for (int j = 0; j < n; ++j) out[j] = static_cast<long long>(w[j] / g);
    basis.push_back(std::move(out));
  }
  return basis;
}

// Determinant of the matrix over GF(2); rows as bitmasks, n <= 64.
inline bool gf2_det_is_one(std::vector<uint64_t> rows, int n) {
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (rows[i] >> c & 1) {
        pivot = i;
        break;
      }
    if (pivot < 0) return false;
    std::swap(rows[c], rows[pivot]);
    for (int i = 0; i < n; ++i)
      if (i != c && (rows[i] >> c & 1)) rows[i] ^= rows[c];
  }
  return true;
}

}  // namespace detail

// The matrix A = (chi(s_i - s_j)) over the ordered non-squares, for q = 3 mod
// 4, with exact diagnostics: rank (q-1)/2 - 1, nullspace spanned by the
// all-ones vector, and an odd minor det(A_{1,1}).
inline CharacterMatrixInfo character_matrix(const Field& f) {
  if (f.q() % 4 != 3) fail(errc::wrong_congruence_class, "requires q = 3 mod 4");
  CharacterMatrixInfo info;
  info.indices = f.nonsquares();
  const int n = static_cast<int>(info.indices.size());
  info.a.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) info.a[i][j] = f.chi(f.sub(info.indices[i], info.indices[j]));

  std::vector<std::vector<detail::bigint>> m(n, std::vector<detail::bigint>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = info.a[i][j];
  info.rank = detail::bareiss_rank(std::move(m));
  info.nullspace = detail::integer_nullspace(info.a);

  if (n <= 1) {
    info.minor_det_odd = true;  // determinant of the empty matrix is 1
  } else {
    std::vector<uint64_t> rows(n - 1, 0);
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        if (info.a[i][j] % 2 != 0) rows[i - 1] |= uint64_t{1} << (j - 1);
    info.minor_det_odd = detail::gf2_det_is_one(std::move(rows), n - 1);
  }
  return info;
}

inline bool nullspace_is_all_ones_span(const CharacterMatrixInfo& info) {
  if (info.nullspace.size() != 1) return false;
  const auto& v = info.nullspace[0];
  for (long long x : v)
    if (x != v[0] || x == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// The stabilizer lift
// ---------------------------------------------------------------------------

// Lift of a 2x2 matrix acting on the parameter line to the collineation of
// PG(2,q) stabilizing C = C_0, via the parametrization (s:t) -> (st, s^2, t^2).
inline Collineation collineation_from_mobius(const Field& f, const std::array<int, 4>& m) {
  const int a = m[0], b = m[1], c = m[2], d = m[3];
  const int two = f.from_int(2);
  const std::array<int, 9> lift = {
      f.add(f.mul(a, d), f.mul(b, c)), f.mul(a, c), f.mul(b, d),
      f.mul(two, f.mul(a, b)), f.mul(a, a), f.mul(b, b),
      f.mul(two, f.mul(c, d)), f.mul(c, c), f.mul(d, d)};
  return Collineation(f, lift);
}

// A stabilizer element of C mapping the given conic point to Y_inf: the lift
// of z -> 1/(z - theta), or the identity when the point is already Y_inf.
inline Collineation conic_frame_map(const Conic& C, int pid) {
  const Field& f = C.field();
  if (C.pencil_index() != 0) fail(errc::bad_argument, "frame maps are bound to C_0");
  const std::optional<int> theta = C.point_parameter(pid);
  if (!theta) return Collineation::identity(f);
  Collineation g = collineation_from_mobius(f, {0, f.one(), f.one(), f.neg(*theta)});
  if (g.apply_point(C.plane(), pid) != C.plane().y_infinity())
    throw std::logic_error("frame map failed to send the point to Y_inf");
  return g;
}

// ---------------------------------------------------------------------------
// Standard geometry bundle
// ---------------------------------------------------------------------------

// Field, plane, and the conic C = C_0, built once and used by reference.
// Not movable: the members hold pointers into each other.
struct Context {
  Field field;
  Plane plane;
  Conic conic;

  explicit Context(int p, int h = 1, std::vector<int> modulus = {},
                   int order_cap = Field::default_order_cap)
      : field(p, h, std::move(modulus), order_cap), plane(field), conic(plane, 0) {}

  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  int q() const noexcept { return field.q(); }
};

}  // namespace pgconic
