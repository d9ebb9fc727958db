#pragma once

// The projective plane PG(2,q): points, lines, incidence, joins and meets,
// and collineations acting on both.
//
// A point is a homogeneous triple (x,y,z) of element indices, normalized so
// the last nonzero coordinate is 1; a line is a dual triple [u,v,w] with the
// same normalization, and P lies on l iff ux + vy + wz = 0. Points and lines
// get dense ids in a fixed enumeration order, so downstream sets are plain
// integer lists.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "pgconic/gf.hpp"

namespace pgconic {

using Triple = std::array<int, 3>;

class Plane {
 public:
  explicit Plane(const Field& f) : f_(&f), q_(f.q()), n_(q_ * q_ + q_ + 1) {
    pts_.reserve(n_);
    for (int x = 0; x < q_; ++x)
      for (int y = 0; y < q_; ++y) pts_.push_back({x, y, f.one()});
    for (int x = 0; x < q_; ++x) pts_.push_back({x, f.one(), 0});
    pts_.push_back({f.one(), 0, 0});
    lns_ = pts_;
    build_incidence();
  }

  Plane(const Plane&) = delete;
  Plane& operator=(const Plane&) = delete;

  const Field& field() const noexcept { return *f_; }
  int q() const noexcept { return q_; }
  int size() const noexcept { return n_; }  // number of points; lines count the same

  const Triple& point(int pid) const { return pts_[pid]; }
  const Triple& line(int lid) const { return lns_[lid]; }

  Triple normalize(Triple v) const {
    int k = 2;
    while (k >= 0 && v[k] == 0) --k;
    if (k < 0) fail(errc::bad_argument, "zero triple has no projective class");
    const int s = f_->inv(v[k]);
    for (int& c : v) c = f_->mul(c, s);
    return v;
  }

  int id_of(Triple v) const {
    v = normalize(v);
    const int one = f_->one();
    if (v[2] == one) return coord_rank(v[0]) * q_ + coord_rank(v[1]);
    if (v[1] == one) return q_ * q_ + coord_rank(v[0]);
    return q_ * q_ + q_;
  }

  int point_id(const Triple& v) const { return id_of(v); }
  int line_id(const Triple& v) const { return id_of(v); }

  int y_infinity() const { return q_ * q_ + coord_rank(0); }  // (0,1,0)

  bool incident(int pid, int lid) const {
    const Triple& p = pts_[pid];
    const Triple& l = lns_[lid];
    int s = f_->mul(p[0], l[0]);
    s = f_->add(s, f_->mul(p[1], l[1]));
    s = f_->add(s, f_->mul(p[2], l[2]));
    return s == 0;
  }

  std::span<const int> points_on_line(int lid) const {
    return {line_pts_.data() + static_cast<size_t>(lid) * (q_ + 1),
            static_cast<size_t>(q_ + 1)};
  }
  std::span<const int> lines_through_point(int pid) const {
    return {pt_lns_.data() + static_cast<size_t>(pid) * (q_ + 1), static_cast<size_t>(q_ + 1)};
  }

  int join(int pid, int qid) const {
    if (pid == qid) fail(errc::equal_arguments, "join of equal points");
    return line_id(cross(pts_[pid], pts_[qid]));
  }
  int meet(int lid, int mid) const {
    if (lid == mid) fail(errc::equal_arguments, "meet of equal lines");
    return point_id(cross(lns_[lid], lns_[mid]));
  }

  std::string point_string(int pid) const {
    const Triple& v = pts_[pid];
    return "(" + f_->to_string(v[0]) + ":" + f_->to_string(v[1]) + ":" + f_->to_string(v[2]) + ")";
  }
  std::string line_string(int lid) const {
    const Triple& v = lns_[lid];
    return "[" + f_->to_string(v[0]) + ":" + f_->to_string(v[1]) + ":" + f_->to_string(v[2]) + "]";
  }

  Triple cross(const Triple& a, const Triple& b) const {
    const Field& f = *f_;
    return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
            f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
            f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
  }

 private:
  // Coordinates are element indices already ordered 0..q-1.
  static int coord_rank(int e) { return e; }

  void build_incidence() {
    line_pts_.assign(static_cast<size_t>(n_) * (q_ + 1), -1);
    const int one = f_->one();
    for (int lid = 0; lid < n_; ++lid) {
      const Triple& l = lns_[lid];
      const int u = l[0], v = l[1], w = l[2];
      std::vector<int> ids;
      ids.reserve(q_ + 1);
      if (v != 0) {
        for (int x = 0; x < q_; ++x) {
          const int y = f_->div(f_->neg(f_->add(f_->mul(u, x), w)), v);
          ids.push_back(point_id({x, y, one}));
        }
        ids.push_back(u == 0 ? point_id({one, 0, 0})
                             : point_id({f_->div(f_->neg(v), u), one, 0}));
      } else if (u != 0) {
        const int x = f_->div(f_->neg(w), u);
        for (int y = 0; y < q_; ++y) ids.push_back(point_id({x, y, one}));
        ids.push_back(y_infinity());
      } else {
        for (int x = 0; x < q_; ++x) ids.push_back(point_id({x, one, 0}));
        ids.push_back(point_id({one, 0, 0}));
      }
      std::sort(ids.begin(), ids.end());
      std::copy(ids.begin(), ids.end(), line_pts_.begin() + static_cast<size_t>(lid) * (q_ + 1));
    }
    // transpose; line ids ascending per point by construction
    pt_lns_.assign(static_cast<size_t>(n_) * (q_ + 1), -1);
    std::vector<int> fill(n_, 0);
    for (int lid = 0; lid < n_; ++lid)
      for (int pid : points_on_line(lid))
        pt_lns_[static_cast<size_t>(pid) * (q_ + 1) + fill[pid]++] = lid;
  }

  const Field* f_;
  int q_, n_;
  std::vector<Triple> pts_, lns_;
  std::vector<int> line_pts_, pt_lns_;
};

// Projectivity of PG(2,q): an invertible 3x3 matrix over GF(q), canonicalized
// so the first nonzero entry in row-major order is 1.
class Collineation {
 public:
  Collineation(const Field& f, std::array<int, 9> m) : f_(&f), m_(canonicalize(f, m)) {
    if (det() == 0) fail(errc::bad_argument, "singular matrix is not a collineation");
  }

  static Collineation identity(const Field& f) {
    const int one = f.one();
    return Collineation(f, {one, 0, 0, 0, one, 0, 0, 0, one});
  }

  const Field& field() const noexcept { return *f_; }
  const std::array<int, 9>& matrix() const noexcept { return m_; }

  int det() const {
    const Field& f = *f_;
    const auto& m = m_;
    const int a = f.mul(m[0], f.sub(f.mul(m[4], m[8]), f.mul(m[5], m[7])));
    const int b = f.mul(m[1], f.sub(f.mul(m[3], m[8]), f.mul(m[5], m[6])));
    const int c = f.mul(m[2], f.sub(f.mul(m[3], m[7]), f.mul(m[4], m[6])));
    return f.add(f.sub(a, b), c);
  }

  // this * other, i.e. apply other first.
  Collineation compose(const Collineation& other) const {
    check_field(other.field());
    const Field& f = *f_;
    std::array<int, 9> r{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int s = 0;
        for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(m_[3 * i + k], other.m_[3 * k + j]));
        r[3 * i + j] = s;
      }
    return Collineation(f, r);
  }

  Collineation inverse() const { return Collineation(*f_, adjugate()); }

  Triple apply(const Triple& v) const {
    const Field& f = *f_;
    Triple r{};
    for (int i = 0; i < 3; ++i) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(m_[3 * i + k], v[k]));
      r[i] = s;
    }
    return r;
  }

  int apply_point(const Plane& pl, int pid) const {
    check_field(pl.field());
    return pl.point_id(apply(pl.point(pid)));
  }

  // Lines transform by the inverse transpose, so incidence is preserved.
  int apply_line(const Plane& pl, int lid) const {
    check_field(pl.field());
    const std::array<int, 9> inv = adjugate();
    return pl.line_id(transposed_apply(inv, pl.line(lid)));
  }

  std::vector<int> point_permutation(const Plane& pl) const {
    check_field(pl.field());
    std::vector<int> perm(pl.size());
    for (int pid = 0; pid < pl.size(); ++pid) perm[pid] = pl.point_id(apply(pl.point(pid)));
    return perm;
  }

  std::vector<int> line_permutation(const Plane& pl) const {
    check_field(pl.field());
    const std::array<int, 9> inv = adjugate();
    std::vector<int> perm(pl.size());
    for (int lid = 0; lid < pl.size(); ++lid)
      perm[lid] = pl.line_id(transposed_apply(inv, pl.line(lid)));
    return perm;
  }

  friend bool operator==(const Collineation& a, const Collineation& b) {
    return a.f_->same(*b.f_) && a.m_ == b.m_;
  }
  friend bool operator!=(const Collineation& a, const Collineation& b) { return !(a == b); }
  friend bool operator<(const Collineation& a, const Collineation& b) { return a.m_ < b.m_; }

 private:
  static std::array<int, 9> canonicalize(const Field& f, std::array<int, 9> m) {
    for (int i = 0; i < 9; ++i) {
      if (m[i] != 0) {
        const int s = f.inv(m[i]);
        for (int& e : m) e = f.mul(e, s);
        return m;
      }
    }
    fail(errc::bad_argument, "zero matrix");
  }

  // Adjugate; equals the inverse up to a scalar, which projectively is enough.
  std::array<int, 9> adjugate() const {
    const Field& f = *f_;
    const auto& m = m_;
    auto minor2 = [&](int a, int b, int c, int d) { return f.sub(f.mul(m[a], m[b]), f.mul(m[c], m[d])); };
    return {minor2(4, 8, 5, 7), f.neg(minor2(1, 8, 2, 7)), minor2(1, 5, 2, 4),
            f.neg(minor2(3, 8, 5, 6)), minor2(0, 8, 2, 6), f.neg(minor2(0, 5, 2, 3)),
            minor2(3, 7, 4, 6), f.neg(minor2(0, 7, 1, 6)), minor2(0, 4, 1, 3)};
  }

  Triple transposed_apply(const std::array<int, 9>& m, const Triple& v) const {
    const Field& f = *f_;
    Triple r{};
    for (int i = 0; i < 3; ++i) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(m[3 * k + i], v[k]));
      r[i] = s;
    }
    return r;
  }

  void check_field(const Field& other) const {
    if (!f_->same(other)) fail(errc::field_mismatch, "collineation bound to a different field");
  }

  const Field* f_;
  std::array<int, 9> m_;
};

}  // namespace pgconic
