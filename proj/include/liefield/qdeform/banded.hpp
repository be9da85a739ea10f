#pragma once

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liefield/error.hpp"

namespace liefield {

/// Operator on the Fourier modes basis_m, |m| <= window, stored by columns:
/// column m lists the coefficients of the image of basis_m. A column is
/// complete when every contribution to it stayed inside the window and no
/// undefined diagonal entry was involved; identities are only asserted on
/// complete columns.
template <class S>
class BandedOperator {
 public:
  struct Column {
    std::map<int, S> entries;
    bool complete = true;
  };

  BandedOperator(int window, int bandwidth)
      : window_(window), bandwidth_(bandwidth), cols_(static_cast<std::size_t>(2 * window + 1)) {}

  /// f(m) is the eigenvalue on basis_m; nullopt marks a degenerate mode.
  static BandedOperator diagonal(int window, const std::function<std::optional<S>(int)>& f) {
    BandedOperator d(window, 0);
    for (int m = -window; m <= window; ++m) {
      auto v = f(m);
      if (!v) {
        d.column(m).complete = false;
      } else if (!v->isZero()) {
        d.column(m).entries.emplace(m, std::move(*v));
      }
    }
    return d;
  }

  /// basis_m -> c * basis_{m+shift}; columns whose target leaves the window
  /// are incomplete.
  static BandedOperator shift(int window, int shift, const S& c) {
    BandedOperator op(window, std::abs(shift));
    for (int m = -window; m <= window; ++m) {
      if (op.inWindow(m + shift)) {
        op.column(m).entries.emplace(m + shift, c);
      } else {
        op.column(m).complete = false;
      }
    }
    return op;
  }

  int window() const { return window_; }
  int bandwidth() const { return bandwidth_; }
  bool inWindow(int m) const { return m >= -window_ && m <= window_; }
  const Column& column(int m) const { return cols_.at(static_cast<std::size_t>(m + window_)); }
  Column& column(int m) { return cols_.at(static_cast<std::size_t>(m + window_)); }

  /// Largest |target - source| over nonzero stored entries.
  int effectiveBandwidth() const {
    int bw = 0;
    for (int m = -window_; m <= window_; ++m) {
      for (const auto& [k, v] : column(m).entries) bw = std::max(bw, std::abs(k - m));
    }
    return bw;
  }

  BandedOperator& operator+=(const BandedOperator& o) { return accumulate(o, false); }
  BandedOperator& operator-=(const BandedOperator& o) { return accumulate(o, true); }
  friend BandedOperator operator+(BandedOperator a, const BandedOperator& b) { return a += b; }
  friend BandedOperator operator-(BandedOperator a, const BandedOperator& b) { return a -= b; }

  BandedOperator scaled(const S& c) const {
    BandedOperator r = *this;
    for (auto& col : r.cols_) {
      for (auto it = col.entries.begin(); it != col.entries.end();) {
        it->second = it->second * c;
        it = it->second.isZero() ? col.entries.erase(it) : std::next(it);
      }
    }
    return r;
  }

  /// a * b: apply b first.
  friend BandedOperator operator*(const BandedOperator& a, const BandedOperator& b) {
    requireSameWindow(a, b);
    BandedOperator r(a.window_, a.bandwidth_ + b.bandwidth_);
    for (int m = -a.window_; m <= a.window_; ++m) {
      const auto& bc = b.column(m);
      auto& out = r.column(m);
      out.complete = bc.complete;
      for (const auto& [k, v] : bc.entries) {
        const auto& ac = a.column(k);
        if (!ac.complete) out.complete = false;
        for (const auto& [j, w] : ac.entries) addTo(out.entries, j, w * v);
      }
    }
    return r;
  }

  friend BandedOperator commutator(const BandedOperator& a, const BandedOperator& b) { return a * b - b * a; }

  template <class T, class F>
  BandedOperator<T> map(F f) const {
    BandedOperator<T> r(window_, bandwidth_);
    for (int m = -window_; m <= window_; ++m) {
      auto& out = r.column(m);
      out.complete = column(m).complete;
      for (const auto& [k, v] : column(m).entries) {
        T t = f(v);
        if (!t.isZero()) out.entries.emplace(k, std::move(t));
      }
    }
    return r;
  }

 private:
  static void requireSameWindow(const BandedOperator& a, const BandedOperator& b) {
    if (a.window_ != b.window_) throw Error(ErrorKind::Domain, "banded operators on different windows");
  }

  static void addTo(std::map<int, S>& entries, int k, S v) {
    auto it = entries.find(k);
    if (it == entries.end()) {
      if (!v.isZero()) entries.emplace(k, std::move(v));
      return;
    }
    it->second = it->second + v;
    if (it->second.isZero()) entries.erase(it);
  }

  BandedOperator& accumulate(const BandedOperator& o, bool negate) {
    requireSameWindow(*this, o);
    bandwidth_ = std::max(bandwidth_, o.bandwidth_);
    for (int m = -window_; m <= window_; ++m) {
      auto& col = column(m);
      const auto& oc = o.column(m);
      col.complete = col.complete && oc.complete;
      for (const auto& [k, v] : oc.entries) addTo(col.entries, k, negate ? -v : v);
    }
    return *this;
  }

  int window_;
  int bandwidth_;
  std::vector<Column> cols_;
};

struct InteriorComparison {
  /// Columns compared (complete in both operands).
  std::vector<int> compared;
  /// Columns skipped inside |m| <= window - bandwidth, where completeness
  /// would otherwise be expected.
  std::vector<int> excluded;
  /// Entries that differ.
  std::size_t mismatches = 0;

  bool holds() const { return mismatches == 0 && !compared.empty(); }
};

/// Compares a and b column by column on the modes where both are complete.
template <class S>
InteriorComparison compareInterior(const BandedOperator<S>& a, const BandedOperator<S>& b) {
  InteriorComparison out;
  const int inner = a.window() - std::max(a.bandwidth(), b.bandwidth());
  for (int m = -a.window(); m <= a.window(); ++m) {
    const auto& ca = a.column(m);
    const auto& cb = b.column(m);
    if (!ca.complete || !cb.complete) {
      if (std::abs(m) <= inner) out.excluded.push_back(m);
      continue;
    }
    out.compared.push_back(m);
    auto ia = ca.entries.begin();
    auto ib = cb.entries.begin();
    while (ia != ca.entries.end() || ib != cb.entries.end()) {
      if (ib == cb.entries.end() || (ia != ca.entries.end() && ia->first < ib->first)) {
        ++out.mismatches;
        ++ia;
      } else if (ia == ca.entries.end() || ib->first < ia->first) {
        ++out.mismatches;
        ++ib;
      } else {
        if (!(ia->second - ib->second).isZero()) ++out.mismatches;
        ++ia;
        ++ib;
      }
    }
  }
  return out;
}

}  // namespace liefield
