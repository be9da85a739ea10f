#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "liefield/error.hpp"

namespace liefield {

using Quad = boost::multiprecision::cpp_bin_float_quad;

/// Monomial layout of truncated multivariate Taylor series in `vars`
/// variables up to total degree `order`, with product and derivative tables.
/// Shared between all jets of the same shape.
class JetSpace {
 public:
  static std::shared_ptr<const JetSpace> get(int vars, int order);

  int vars() const { return vars_; }
  int order() const { return order_; }
  std::size_t size() const { return degree_.size(); }
  int degree(std::size_t i) const { return degree_[i]; }
  const std::vector<int>& exponents(std::size_t i) const { return exps_[i]; }
  std::size_t indexOf(const std::vector<int>& e) const;
  /// (j, k) with x^i x^j = x^k and deg k <= order.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& products(std::size_t i) const { return products_[i]; }
  /// d/dx_v x^i = factor * x^target; target is -1 when x_v is absent.
  std::pair<int, int> derivative(int v, std::size_t i) const { return deriv_[static_cast<std::size_t>(v)][i]; }

 private:
  JetSpace(int vars, int order);

  int vars_;
  int order_;
  std::vector<std::vector<int>> exps_;
  std::vector<int> degree_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> products_;
  std::vector<std::vector<std::pair<int, int>>> deriv_;
};

template <class T>
struct ScalarOps;

template <>
struct ScalarOps<mpq_class> {
  static mpq_class fromRational(const mpq_class& q) { return q; }
  static bool isZero(const mpq_class& x) { return sgn(x) == 0; }
  static mpq_class abs(const mpq_class& x) { return ::abs(x); }
  /// Exact square root; throws Domain unless x is the square of a rational.
  static mpq_class sqrt(const mpq_class& x);
  static std::string format(const mpq_class& x) { return x.get_str(); }
  /// Relative tolerance for "zero".
  static mpq_class tolerance() { return 0; }
  static constexpr bool exact = true;
};

template <>
struct ScalarOps<Quad> {
  static Quad fromRational(const mpq_class& q) {
    return Quad(q.get_num().get_str()) / Quad(q.get_den().get_str());
  }
  static bool isZero(const Quad& x) { return x == 0; }
  static Quad abs(const Quad& x) { return boost::multiprecision::abs(x); }
  static Quad sqrt(const Quad& x);
  static std::string format(const Quad& x);
  static Quad tolerance() { return Quad("1e-20"); }
  static constexpr bool exact = false;
};

/// Truncated Taylor expansion around a base point. Coefficients of total
/// degree <= valid are exact; differentiation lowers `valid` by one and
/// higher coefficients are kept at zero.
template <class T>
class Jet {
 public:
  Jet() = default;
  explicit Jet(std::shared_ptr<const JetSpace> space)
      : space_(std::move(space)), c_(space_->size()), valid_(space_->order()) {}

  static Jet constant(std::shared_ptr<const JetSpace> space, const T& value) {
    Jet j(std::move(space));
    j.c_[0] = value;
    return j;
  }
  /// base + x_v
  static Jet variable(std::shared_ptr<const JetSpace> space, int v, const T& base) {
    Jet j = constant(space, base);
    std::vector<int> e(static_cast<std::size_t>(space->vars()), 0);
    e[static_cast<std::size_t>(v)] = 1;
    if (space->order() >= 1) j.c_[space->indexOf(e)] = 1;
    return j;
  }

  const JetSpace& space() const { return *space_; }
  const std::shared_ptr<const JetSpace>& spacePtr() const { return space_; }
  int valid() const { return valid_; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T& operator[](std::size_t i) { return c_[i]; }

  Jet& operator+=(const Jet& o) {
    valid_ = std::min(valid_, o.valid_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    truncate();
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    valid_ = std::min(valid_, o.valid_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    truncate();
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }

  Jet scaled(const T& s) const {
    Jet r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.space_);
    r.valid_ = std::min(a.valid_, b.valid_);
    const auto& sp = *a.space_;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (ScalarOps<T>::isZero(a.c_[i]) || sp.degree(i) > r.valid_) continue;
      for (auto [j, k] : sp.products(i)) {
        if (ScalarOps<T>::isZero(b.c_[j]) || sp.degree(k) > r.valid_) continue;
        r.c_[k] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  Jet derivative(int v) const {
    if (valid_ < 1) throw Error(ErrorKind::InsufficientOrder, "jet order exhausted by differentiation");
    Jet r(space_);
    r.valid_ = valid_ - 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (ScalarOps<T>::isZero(c_[i])) continue;
      auto [factor, target] = space_->derivative(v, i);
      if (target >= 0 && space_->degree(static_cast<std::size_t>(target)) <= r.valid_) {
        r.c_[static_cast<std::size_t>(target)] += c_[i] * factor;
      }
    }
    return r;
  }

  /// Square root with positive constant term, order by order.
  Jet sqrt() const {
    const auto& sp = *space_;
    Jet r(space_);
    r.valid_ = valid_;
    if (!(c_[0] > 0)) throw Error(ErrorKind::Domain, "jet sqrt needs a positive constant term");
    r.c_[0] = ScalarOps<T>::sqrt(c_[0]);
    T twoS = r.c_[0] * 2;
    // indices are sorted by degree, so every product below is already final
    std::vector<T> sq(c_.size());
    for (std::size_t k = 1; k < c_.size(); ++k) {
      if (sp.degree(k) > valid_) break;
      r.c_[k] = (c_[k] - sq[k]) / twoS;
      // fold r_k into the running square for later indices
      for (auto [j, t] : sp.products(k)) {
        if (j == 0 || j > k) continue;
        T add = r.c_[k] * r.c_[j];
        if (j != k) add *= 2;
        sq[t] += add;
      }
    }
    return r;
  }

  bool isZero() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (space_->degree(i) <= valid_ && !ScalarOps<T>::isZero(c_[i])) return false;
    }
    return true;
  }

  /// Zero up to the scalar type's relative tolerance against `scale`.
  bool negligible(const T& scale) const {
    if constexpr (ScalarOps<T>::exact) {
      return isZero();
    } else {
      return maxAbs() <= ScalarOps<T>::tolerance() * std::max(T(1), scale);
    }
  }

  T maxAbs() const {
    T m = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (space_->degree(i) > valid_) continue;
      T a = ScalarOps<T>::abs(c_[i]);
      if (a > m) m = a;
    }
    return m;
  }

 private:
  void truncate() {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (space_->degree(i) > valid_) c_[i] = 0;
    }
  }

  std::shared_ptr<const JetSpace> space_;
  std::vector<T> c_;
  int valid_ = 0;
};

using ExactJet = Jet<mpq_class>;
using FloatJet = Jet<Quad>;

}  // namespace liefield
