#pragma once

// Exact arithmetic in GF(p^h) for odd prime p, with the quadratic character.
//
// Elements are dense integer indices 0..q-1. The index of an element is the
// lexicographic rank of its coefficient vector (c0, c1, ..., c_{h-1}), with
// c0 compared first, so enumeration order is lexicographic on canonical
// representations and the zero element is always index 0.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pgconic {

enum class errc {
  not_odd_prime,
  reducible_modulus,
  degree_mismatch,
  division_by_zero,
  field_mismatch,
  equal_arguments,
  line_through_y_infinity,
  wrong_congruence_class,
  not_internal_index,
  not_external_point,
  not_on_conic,
  not_a_square,
  not_a_partition,
  instance_too_large,
  unsupported_field,
  bad_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_odd_prime: return "NotOddPrime";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::equal_arguments: return "EqualArguments";
    case errc::line_through_y_infinity: return "LineThroughYInfinity";
    case errc::wrong_congruence_class: return "WrongCongruenceClass";
    case errc::not_internal_index: return "NotInternalIndex";
    case errc::not_external_point: return "NotExternalPoint";
    case errc::not_on_conic: return "NotOnConic";
    case errc::not_a_square: return "NotASquare";
    case errc::not_a_partition: return "NotAPartition";
    case errc::instance_too_large: return "InstanceTooLarge";
    case errc::unsupported_field: return "UnsupportedField";
    case errc::bad_argument: return "BadArgument";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

namespace detail {

inline bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; static_cast<long long>(d) * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, low degree first.
inline int poly_degree(const std::vector<int>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// Remainder of a modulo the monic polynomial m.
inline std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& m, int p) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) {
    const int lead = a[da];
    if (lead != 0) {
      for (int i = 0; i <= dm; ++i) {
        int& c = a[da - dm + i];
        c = (c - lead * m[i]) % p;
        if (c < 0) c += p;
      }
    }
    a.resize(da);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool poly_irreducible(const std::vector<int>& m, int p) {
  const int d = poly_degree(m);
  if (d <= 0) return false;
  for (int gd = 1; 2 * gd <= d; ++gd) {
    std::vector<int> g(gd + 1, 0);
    g[gd] = 1;
    long long combos = 1;
    for (int i = 0; i < gd; ++i) combos *= p;
    for (long long n = 0; n < combos; ++n) {
      long long t = n;
      for (int i = 0; i < gd; ++i) {
        g[i] = static_cast<int>(t % p);
        t /= p;
      }
      if (poly_degree(poly_rem(m, g, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace detail

class Element;

class Field {
 public:
  static constexpr int default_order_cap = 128;

  explicit Field(int p, int h = 1, std::vector<int> modulus = {},
                 int order_cap = default_order_cap)
      : p_(p), h_(h) {
    if (!detail::is_odd_prime(p))
      fail(errc::not_odd_prime, "p must be an odd prime, got " + std::to_string(p));
    if (h < 1) fail(errc::bad_argument, "extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < h; ++i) {
      q *= p;
      if (q > order_cap)
        fail(errc::unsupported_field,
             "q = " + std::to_string(p) + "^" + std::to_string(h) + " exceeds the order cap " +
                 std::to_string(order_cap));
    }
    q_ = static_cast<int>(q);

    pw_.assign(h_ + 1, 1);
    for (int i = 1; i <= h_; ++i) pw_[i] = pw_[i - 1] * p_;

    if (h_ == 1) {
      modulus_.clear();
    } else if (modulus.empty()) {
      modulus_ = default_modulus();
    } else {
      for (int& c : modulus) c = ((c % p_) + p_) % p_;
      if (static_cast<int>(modulus.size()) != h_ + 1 || modulus.back() != 1)
        fail(errc::degree_mismatch, "modulus must be monic of degree h = " + std::to_string(h_));
      if (!detail::poly_irreducible(modulus, p_))
        fail(errc::reducible_modulus, "modulus is reducible over GF(" + std::to_string(p_) + ")");
      modulus_ = std::move(modulus);
    }
    build_tables();
  }

  int p() const noexcept { return p_; }
  int h() const noexcept { return h_; }
  int q() const noexcept { return q_; }

  // Monic degree-h modulus, low degree first; empty for prime fields.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  bool same(const Field& other) const noexcept {
    return p_ == other.p_ && h_ == other.h_ && modulus_ == other.modulus_;
  }

  int add(int a, int b) const { return add_[static_cast<size_t>(a) * q_ + b]; }
  int sub(int a, int b) const { return add_[static_cast<size_t>(a) * q_ + neg_[b]]; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero");
    return inv_[a];
  }
  int div(int a, int b) const { return mul(a, inv(b)); }

  int pow(int a, long long e) const {
    if (e < 0) fail(errc::bad_argument, "negative exponent");
    int r = one();
    int base = a;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  int zero() const noexcept { return 0; }
  int one() const { return from_int(1); }

  // The constant polynomial n mod p.
  int from_int(long long n) const {
    int c = static_cast<int>(((n % p_) + p_) % p_);
    return c * pw_[h_ - 1];
  }

  // Quadratic character: 0 at 0, +1 on nonzero squares, -1 on non-squares.
  int chi(int a) const { return chi_[a]; }

  std::vector<int> coeffs(int a) const {
    std::vector<int> c(h_);
    for (int i = 0; i < h_; ++i) c[i] = a / pw_[h_ - 1 - i] % p_;
    return c;
  }

  int from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) > h_)
      fail(errc::degree_mismatch, "coefficient vector longer than extension degree");
    int a = 0;
    for (size_t i = 0; i < c.size(); ++i) a += (((c[i] % p_) + p_) % p_) * pw_[h_ - 1 - i];
    return a;
  }

  std::string to_string(int a) const {
    if (h_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    const std::vector<int> c = coeffs(a);
    std::string s;
    for (int i = h_ - 1; i >= 0; --i) {
      if (c[i] == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0) {
        s += std::to_string(c[i]);
      } else {
        if (c[i] != 1) s += std::to_string(c[i]);
        s += (i == 1) ? "t" : "t^" + std::to_string(i);
      }
    }
    return s;
  }

  std::vector<int> elements() const {
    std::vector<int> e(q_);
    for (int i = 0; i < q_; ++i) e[i] = i;
    return e;
  }

  std::vector<int> nonsquares() const {
    std::vector<int> ns;
    for (int a = 1; a < q_; ++a)
      if (chi_[a] == -1) ns.push_back(a);
    return ns;
  }

  bool square_order() const noexcept { return h_ % 2 == 0; }

  int subfield_order() const {
    if (!square_order()) fail(errc::not_a_square, "q is not a square");
    int r = 1;
    for (int i = 0; i < h_ / 2; ++i) r *= p_;
    return r;
  }

  // Membership in the subfield GF(sqrt(q)), i.e. fixed by x -> x^sqrt(q).
  bool in_subfield(int a) const { return pow(a, subfield_order()) == a; }

  inline Element operator()(long long n) const;
  inline Element element(int index) const;

 private:
  std::vector<int> default_modulus() const {
    // Lexicographic scan over coefficient vectors (c0,...,c_{h-1}), c0 first.
    long long combos = 1;
    for (int i = 0; i < h_; ++i) combos *= p_;
    for (long long n = 0; n < combos; ++n) {
      std::vector<int> m(h_ + 1, 0);
      m[h_] = 1;
      long long t = n;
      for (int i = h_ - 1; i >= 0; --i) {
        m[i] = static_cast<int>(t % p_);
        t /= p_;
      }
      if (detail::poly_irreducible(m, p_)) return m;
    }
    fail(errc::reducible_modulus, "no irreducible polynomial found");  // unreachable
  }

  void build_tables() {
    neg_.resize(q_);
    add_.resize(static_cast<size_t>(q_) * q_);
    mul_.resize(static_cast<size_t>(q_) * q_);
    for (int a = 0; a < q_; ++a) {
      const std::vector<int> ca = coeffs(a);
      std::vector<int> cn(h_);
      for (int i = 0; i < h_; ++i) cn[i] = (p_ - ca[i]) % p_;
      neg_[a] = static_cast<uint16_t>(from_coeffs(cn));
    }
    for (int a = 0; a < q_; ++a) {
      const std::vector<int> ca = coeffs(a);
      for (int b = 0; b <= a; ++b) {
        const std::vector<int> cb = coeffs(b);
        std::vector<int> cs(h_);
        for (int i = 0; i < h_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
        const auto s = static_cast<uint16_t>(from_coeffs(cs));
        add_[static_cast<size_t>(a) * q_ + b] = s;
        add_[static_cast<size_t>(b) * q_ + a] = s;

        std::vector<int> prod(2 * h_ - 1, 0);
        for (int i = 0; i < h_; ++i) {
          if (ca[i] == 0) continue;
          for (int j = 0; j < h_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        }
        if (h_ > 1) prod = detail::poly_rem(std::move(prod), modulus_, p_);
        prod.resize(h_, 0);
        const auto m = static_cast<uint16_t>(from_coeffs(prod));
        mul_[static_cast<size_t>(a) * q_ + b] = m;
        mul_[static_cast<size_t>(b) * q_ + a] = m;
      }
    }
    inv_.assign(q_, 0);
    for (int a = 1; a < q_; ++a) inv_[a] = static_cast<uint16_t>(pow(a, q_ - 2));
    chi_.assign(q_, 0);
    const int minus_one = neg_[one()];
    for (int a = 1; a < q_; ++a) {
      const int t = pow(a, (q_ - 1) / 2);
      if (t == one()) {
        chi_[a] = 1;
      } else if (t == minus_one) {
        chi_[a] = -1;
      } else {
        throw std::logic_error("quadratic character out of range");
      }
    }
  }

  int p_, h_, q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> pw_;
  std::vector<uint16_t> neg_, inv_;
  std::vector<uint16_t> add_, mul_;
  std::vector<int8_t> chi_;
};

// Value wrapper binding an element index to its field.
class Element {
 public:
  Element() = default;
  Element(const Field& f, int index) : f_(&f), v_(index) {
    if (index < 0 || index >= f.q()) fail(errc::bad_argument, "element index out of range");
  }

  int index() const noexcept { return v_; }
  const Field& field() const {
    if (!f_) fail(errc::bad_argument, "unbound element");
    return *f_;
  }
  std::vector<int> coeffs() const { return field().coeffs(v_); }
  std::string str() const { return field().to_string(v_); }
  int chi() const { return field().chi(v_); }
  Element inverse() const { return Element(*f_, field().inv(v_)); }

  friend Element operator+(const Element& a, const Element& b) {
    return Element(a.field(), a.field().add(a.v_, check(a, b).v_));
  }
  friend Element operator-(const Element& a, const Element& b) {
    return Element(a.field(), a.field().sub(a.v_, check(a, b).v_));
  }
  friend Element operator*(const Element& a, const Element& b) {
    return Element(a.field(), a.field().mul(a.v_, check(a, b).v_));
  }
  friend Element operator/(const Element& a, const Element& b) {
    return Element(a.field(), a.field().div(a.v_, check(a, b).v_));
  }
  Element operator-() const { return Element(field(), field().neg(v_)); }

  friend bool operator==(const Element& a, const Element& b) {
    if (!a.f_ || !b.f_) return a.f_ == b.f_;
    return a.f_->same(*b.f_) && a.v_ == b.v_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  static const Element& check(const Element& a, const Element& b) {
    if (!a.f_ || !b.f_ || !a.f_->same(*b.f_))
      fail(errc::field_mismatch, "elements from different fields");
    return b;
  }

  const Field* f_ = nullptr;
  int v_ = 0;
};

inline Element Field::operator()(long long n) const { return Element(*this, from_int(n)); }
inline Element Field::element(int index) const { return Element(*this, index); }

inline Field make_field(int p, int h = 1, std::vector<int> modulus = {},
                        int order_cap = Field::default_order_cap) {
  return Field(p, h, std::move(modulus), order_cap);
}

}  // namespace pgconic
