// Copyright 2026 The toruspack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense two-phase simplex with Bland's rule over an ordered field.
//
// Problems are  maximize c.x  subject to  row_i . x (<=, =, >=) b_i,  x >= 0.
// With an exact scalar (boost::multiprecision::cpp_rational) the verdicts are
// certificates; with double, comparisons use LpTraits<double>::eps.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstddef>
#include <vector>

namespace toruspack {

using Rational = boost::multiprecision::cpp_rational;

template <typename T>
struct LpTraits {
  static bool positive(const T& v) { return v > 0; }
  static bool negative(const T& v) { return v < 0; }
  static bool zero(const T& v) { return v == 0; }
};

template <>
struct LpTraits<double> {
  static constexpr double eps = 1e-11;
  static bool positive(double v) { return v > eps; }
  static bool negative(double v) { return v < -eps; }
  static bool zero(double v) { return std::abs(v) <= eps; }
};

enum class Sense { le, eq, ge };
enum class LpStatus { optimal, infeasible, unbounded };

template <typename T>
struct LinearProgram {
  std::size_t variables = 0;
  std::vector<std::vector<T>> rows;
  std::vector<Sense> senses;
  std::vector<T> rhs;
  std::vector<T> objective;  // maximized; empty means feasibility only

  void add_row(std::vector<T> coeffs, Sense s, T b) {
    coeffs.resize(variables, T(0));
    rows.push_back(std::move(coeffs));
    senses.push_back(s);
    rhs.push_back(std::move(b));
  }
};

template <typename T>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  T value = T(0);
  std::vector<T> x;
};

namespace detail {

template <typename T>
class Tableau {
 public:
  using Tr = LpTraits<T>;

  // Columns: structural, slack/surplus, artificial, then the right-hand side.
  explicit Tableau(const LinearProgram<T>& lp) : nvar_(lp.variables) {
    const std::size_t m = lp.rows.size();
    std::size_t slack = 0, art = 0;
    for (auto s : lp.senses) {
      if (s != Sense::eq) ++slack;
    }
    // Rows are normalized to nonnegative right-hand sides first, so the
    // artificial count depends on the flipped senses.
    std::vector<Sense> senses = lp.senses;
    std::vector<int> flip(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
      if (Tr::negative(lp.rhs[i])) {
        flip[i] = -1;
        if (senses[i] == Sense::le) senses[i] = Sense::ge;
        else if (senses[i] == Sense::ge) senses[i] = Sense::le;
      }
      if (senses[i] != Sense::le) ++art;
    }
    slack_begin_ = nvar_;
    art_begin_ = slack_begin_ + slack;
    cols_ = art_begin_ + art;
    t_.assign(m, std::vector<T>(cols_ + 1, T(0)));
    basis_.assign(m, 0);
    std::size_t sk = slack_begin_, ak = art_begin_;
    for (std::size_t i = 0; i < m; ++i) {
      const T f = T(flip[i]);
      for (std::size_t j = 0; j < nvar_; ++j) t_[i][j] = f * lp.rows[i][j];
      t_[i][cols_] = f * lp.rhs[i];
      switch (senses[i]) {
        case Sense::le:
          t_[i][sk] = T(1);
          basis_[i] = sk++;
          break;
        case Sense::ge:
          t_[i][sk++] = T(-1);
          t_[i][ak] = T(1);
          basis_[i] = ak++;
          break;
        case Sense::eq:
          t_[i][ak] = T(1);
          basis_[i] = ak++;
          break;
      }
    }
  }

  // Phase 1 then phase 2. Columns at or beyond art_begin_ never re-enter.
  LpResult<T> solve(const std::vector<T>& objective) {
    LpResult<T> out;
    std::vector<T> phase1(cols_, T(0));
    for (std::size_t j = art_begin_; j < cols_; ++j) phase1[j] = T(-1);
    if (!run(phase1, cols_)) return out;  // cannot be unbounded
    if (Tr::negative(value(phase1))) return out;
    drive_out_artificials();
    std::vector<T> c(cols_, T(0));
    for (std::size_t j = 0; j < objective.size() && j < nvar_; ++j) c[j] = objective[j];
    if (!run(c, art_begin_)) {
      out.status = LpStatus::unbounded;
      return out;
    }
    out.status = LpStatus::optimal;
    out.value = value(c);
    out.x.assign(nvar_, T(0));
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (basis_[i] < nvar_) out.x[basis_[i]] = t_[i][cols_];
    return out;
  }

 private:
  T value(const std::vector<T>& c) const {
    T v(0);
    for (std::size_t i = 0; i < t_.size(); ++i) v += c[basis_[i]] * t_[i][cols_];
    return v;
  }

  void pivot(std::size_t r, std::size_t col) {
    const T p = t_[r][col];
    for (auto& v : t_[r]) v /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || Tr::zero(t_[i][col])) continue;
      const T f = t_[i][col];
      for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = col;
  }

  // Maximizes c over the current basis using columns [0, limit). Returns
  // false when unbounded.
  bool run(const std::vector<T>& c, std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        T reduced = c[j];
        for (std::size_t i = 0; i < t_.size(); ++i) reduced -= c[basis_[i]] * t_[i][j];
        if (Tr::positive(reduced)) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = t_.size();
      T best(0);
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (!Tr::positive(t_[i][enter])) continue;
        const T ratio = t_[i][cols_] / t_[i][enter];
        if (leave == t_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t_.size()) return false;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (basis_[i] < art_begin_) continue;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (!Tr::zero(t_[i][j])) {
          pivot(i, j);
          break;
        }
      }
      // A row left with an artificial basic variable at zero is redundant;
      // zeroing it keeps it inert.
      if (basis_[i] >= art_begin_)
        for (std::size_t j = 0; j < art_begin_; ++j) t_[i][j] = T(0);
    }
  }

  std::size_t nvar_, slack_begin_ = 0, art_begin_ = 0, cols_ = 0;
  std::vector<std::vector<T>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

template <typename T>
LpResult<T> solve_lp(const LinearProgram<T>& lp) {
  detail::Tableau<T> tab(lp);
  return tab.solve(lp.objective);
}

// Nearest fraction with denominator 10^12 (or the given bound); exact for
// inputs that are already such fractions.
inline Rational rationalize(double v, std::int64_t denominator = 1'000'000'000'000LL) {
  const auto num = static_cast<std::int64_t>(std::llround(v * static_cast<double>(denominator)));
  return Rational(num, denominator);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace toruspack
