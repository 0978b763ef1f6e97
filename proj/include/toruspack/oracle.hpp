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

// Numerical searches that do not use the closed forms: max-min distance
// configurations on a fixed torus, and equal-edge realizations of embedded
// graphs on an unknown torus.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "toruspack/closed_form.hpp"
#include "toruspack/embedding.hpp"
#include "toruspack/packing.hpp"
#include "toruspack/random.hpp"
#include "toruspack/rational_lp.hpp"

namespace toruspack {

// Worker count from TORUSPACK_THREADS, else the hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("TORUSPACK_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(k) for k in [0, count) on up to thread_count() workers. Each k is
// handled exactly once; callers write results by index, so output does not
// depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(thread_count(), count));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) fn(k);
    });
  }
}

struct OracleOptions {
  int restarts = 200;
  std::uint64_t seed = 1;
  int polish_candidates = 4;
};

struct OracleResult {
  double best_radius = 0.0;
  std::vector<TorusPoint> best_centers;
  int restarts_used = 0;
  double converged_fraction = 0.0;

  Packing packing(const ModuliPoint& m) const { return {m, best_centers, best_radius}; }
};

namespace detail {

// Smallest centre distance, capped at 1 (the self distance |v1|).
inline double capped_min_distance(const ModuliPoint& m, const std::vector<Vec2>& p) {
  double best = 1.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      best = std::min(best, torus_distance({p[i].x, p[i].y}, {p[j].x, p[j].y}, m));
  return best;
}

struct Term {
  std::size_t i, j;
  Vec2 v;  // p_j + translate - p_i
  double d;
};

inline void near_terms(const ModuliPoint& m, const std::vector<Vec2>& p,
                       double cutoff, std::vector<Term>& out) {
  out.clear();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const Vec2 raw = p[j] - p[i];
      auto [t1, t2] = lattice_coordinates(raw, m);
      const Vec2 c = raw + m.lattice(static_cast<std::int64_t>(-std::round(t1)),
                                     static_cast<std::int64_t>(-std::round(t2)));
      for_each_translate_within(c, m, cutoff, [&](std::int64_t, std::int64_t, Vec2 v) {
        out.push_back({i, j, v, norm(v)});
      });
    }
}

// Soft minimum -1/beta log(e^{-beta} + sum e^{-beta d}) and its gradient
// with respect to every position (entry 0 is ignored by callers).
inline double soft_min(const ModuliPoint& m, const std::vector<Vec2>& p,
                       double beta, std::vector<Vec2>* grad,
                       std::vector<Term>& terms) {
  near_terms(m, p, 1.25, terms);
  double lo = 1.0;
  for (const auto& t : terms) lo = std::min(lo, t.d);
  double sum = std::exp(-beta * (1.0 - lo));
  for (const auto& t : terms) sum += std::exp(-beta * (t.d - lo));
  if (grad) {
    grad->assign(p.size(), Vec2{});
    for (const auto& t : terms) {
      if (t.d < 1e-12) continue;
      const double w = std::exp(-beta * (t.d - lo)) / sum;
      const Vec2 u = t.v / t.d;
      (*grad)[t.j] += w * u;
      (*grad)[t.i] -= w * u;
    }
  }
  return lo - std::log(sum) / beta;
}

inline std::vector<Vec2> soft_ascent(const ModuliPoint& m, std::vector<Vec2> p) {
  std::vector<Term> terms;
  std::vector<Vec2> grad, trial;
  double step = 0.05;
  for (double beta = 64.0; beta <= 65536.0; beta *= 2.0) {
    double f = soft_min(m, p, beta, &grad, terms);
    for (int it = 0; it < 80 && step > 1e-12; ++it) {
      double gn = 0.0;
      for (std::size_t k = 1; k < p.size(); ++k) gn += dot(grad[k], grad[k]);
      gn = std::sqrt(gn);
      if (gn < 1e-14) break;
      trial = p;
      for (std::size_t k = 1; k < p.size(); ++k) trial[k] += (step / gn) * grad[k];
      std::vector<Vec2> tgrad;
      const double ft = soft_min(m, trial, beta, &tgrad, terms);
      if (ft > f) {
        p.swap(trial);
        grad.swap(tgrad);
        f = ft;
        step = std::min(step * 1.5, 0.1);
      } else {
        step *= 0.5;
      }
    }
    step = std::max(step, 1e-4);
  }
  return p;
}

// Sequential linear programming on the exact max-min objective: maximize t
// subject to linearized distances >= t, t <= 1, inside a trust box.
inline std::vector<Vec2> slp_polish(const ModuliPoint& m, std::vector<Vec2> p) {
  const std::size_t n = p.size();
  if (n < 2) return p;
  const std::size_t nv = 2 * (n - 1);
  double cur = capped_min_distance(m, p);
  double h = 1e-3;
  std::vector<Term> terms;
  for (int it = 0; it < 400 && h > 1e-14; ++it) {
    near_terms(m, p, cur + 8.0 * h, terms);
    // Variables y_k = delta_k / h + 1 in [0, 2] and tau = (t - cur)/h + 4.
    LinearProgram<double> lp;
    lp.variables = nv + 1;
    for (const auto& t : terms) {
      if (t.d < 1e-12) continue;
      const Vec2 u = t.v / t.d;
      std::vector<double> row(lp.variables, 0.0);
      double gsum = 0.0;
      auto put = [&](std::size_t v, Vec2 g) {
        if (v == 0) return;
        row[2 * (v - 1)] -= g.x;
        row[2 * (v - 1) + 1] -= g.y;
        gsum += g.x + g.y;
      };
      put(t.j, u);
      put(t.i, -u);
      row[nv] = 1.0;
      lp.add_row(std::move(row), Sense::le, (t.d - cur) / h - gsum + 4.0);
    }
    {
      std::vector<double> row(lp.variables, 0.0);
      row[nv] = 1.0;
      lp.add_row(std::move(row), Sense::le, (1.0 - cur) / h + 4.0);
    }
    for (std::size_t k = 0; k < nv; ++k) {
      std::vector<double> row(lp.variables, 0.0);
      row[k] = 1.0;
      lp.add_row(std::move(row), Sense::le, 2.0);
    }
    lp.objective.assign(lp.variables, 0.0);
    lp.objective[nv] = 1.0;
    const auto res = solve_lp(lp);
    bool improved = false;
    if (res.status == LpStatus::optimal && res.value > 4.0 + 1e-9) {
      auto trial = p;
      for (std::size_t v = 1; v < n; ++v) {
        trial[v].x += h * (res.x[2 * (v - 1)] - 1.0);
        trial[v].y += h * (res.x[2 * (v - 1) + 1] - 1.0);
      }
      const double val = capped_min_distance(m, trial);
      if (val > cur) {
        p.swap(trial);
        cur = val;
        improved = true;
      }
    }
    h = improved ? std::min(h * 2.0, 1e-2) : h * 0.25;
  }
  return p;
}

}  // namespace detail

inline OracleResult maximize_min_distance(int n, const ModuliPoint& m,
                                          const OracleOptions& opt = {}) {
  require_moduli_strip(m);
  OracleResult out;
  out.restarts_used = std::max(1, opt.restarts);
  if (n <= 1) {
    out.best_radius = 0.5;
    if (n == 1) out.best_centers = {{0.0, 0.0}};
    out.converged_fraction = 1.0;
    return out;
  }
  const auto R = static_cast<std::size_t>(out.restarts_used);
  std::vector<std::vector<Vec2>> found(R);
  std::vector<double> value(R);
  parallel_for(R, [&](std::size_t k) {
    auto rng = seeded_rng(opt.seed, k);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Vec2> p(static_cast<std::size_t>(n));
    for (std::size_t v = 1; v < p.size(); ++v) {
      const double t1 = unit(rng), t2 = unit(rng);
      p[v] = {t1 + t2 * m.x, t2 * m.y};
    }
    found[k] = detail::soft_ascent(m, std::move(p));
    value[k] = detail::capped_min_distance(m, found[k]);
  });
  std::vector<std::size_t> order(R);
  for (std::size_t k = 0; k < R; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return value[a] > value[b]; });
  const std::size_t P = std::min<std::size_t>(R, static_cast<std::size_t>(std::max(1, opt.polish_candidates)));
  std::vector<std::vector<Vec2>> polished(P);
  std::vector<double> pval(P);
  parallel_for(P, [&](std::size_t k) {
    polished[k] = detail::slp_polish(m, found[order[k]]);
    pval[k] = detail::capped_min_distance(m, polished[k]);
  });
  std::size_t best = 0;
  for (std::size_t k = 1; k < P; ++k)
    if (pval[k] > pval[best]) best = k;
  out.best_radius = pval[best] / 2.0;
  for (const auto& v : polished[best]) out.best_centers.push_back(canonical({v.x, v.y}, m));
  out.best_centers[0] = {0.0, 0.0};
  std::size_t close = 0;
  for (double v : value) close += (v >= pval[best] - 1e-3);
  out.converged_fraction = static_cast<double>(close) / static_cast<double>(R);
  return out;
}

struct ComparisonReport {
  int n = 0;
  ModuliPoint m;
  RegionId region;
  double formula_radius = 0.0;
  double oracle_radius = 0.0;
  double gap = 0.0;                 // |oracle - formula|
  bool oracle_within_bound = true;  // oracle <= formula + 1e-6
  int restarts = 0;
  std::uint64_t seed = 0;
  double converged_fraction = 0.0;

  friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

inline ComparisonReport compare_with_closed_form(int n, const ModuliPoint& m,
                                                 const OracleOptions& opt = {}) {
  ComparisonReport r;
  r.n = n;
  r.m = m;
  r.region = classify(n, m);
  r.formula_radius = optimal_radius(n, m);
  const auto o = maximize_min_distance(n, m, opt);
  r.oracle_radius = o.best_radius;
  r.gap = std::abs(r.oracle_radius - r.formula_radius);
  r.oracle_within_bound = r.oracle_radius <= r.formula_radius + 1e-6;
  r.restarts = o.restarts_used;
  r.seed = opt.seed;
  r.converged_fraction = o.converged_fraction;
  return r;
}

// ---------------------------------------------------------------------------
// Equal-edge realizations.

struct RealizationOptions {
  int attempts = 200;
  std::uint64_t seed = 1;
  bool require_angle_window = true;  // every corner angle in [pi/3, pi)
  std::size_t max_samples = std::numeric_limits<std::size_t>::max();
};

struct RealizationSample {
  std::string id;
  ModuliPoint m;                     // standard form of the realized torus
  std::vector<TorusPoint> positions; // in standard coordinates
  double length = 0.0;               // common edge length (2r)
  double residual = 0.0;             // max |edge length - length| before reduction

  Packing packing() const { return {m, positions, length / 2.0}; }
};

namespace detail {

struct EdgeEquation {
  int tail, head;
  Voltage t;
};

inline std::vector<EdgeEquation> edge_equations(const EmbeddedGraph& e) {
  const auto volt = assign_voltages(e);
  std::vector<EdgeEquation> out;
  for (int k = 0; k < e.darts.edge_count(); ++k) {
    const int d = 2 * k;
    out.push_back({e.darts.tail(d), e.darts.head(d), dart_voltage(volt, d)});
  }
  return out;
}

// Unknowns: positions of vertices 1..V-1, then x, y, length. Residuals are
// the edge length errors followed by one-sided overlap terms
// max(0, length - d) for every non-edge pair of lifts closer than the edge
// length; the latter keep the search away from collapsed lattices.
class EqualLengthSystem {
 public:
  EqualLengthSystem(std::vector<EdgeEquation> eqs, int V) : eqs_(std::move(eqs)), V_(V) {
    for (const auto& q : eqs_) {
      if (q.tail < q.head) edges_.push_back({q.tail, q.head, q.t[0], q.t[1]});
      else edges_.push_back({q.head, q.tail, -q.t[0], -q.t[1]});
    }
    std::sort(edges_.begin(), edges_.end());
  }

  int unknowns() const { return 2 * (V_ - 1) + 3; }

  // Returns false when the lattice is too thin to enumerate translates.
  bool evaluate(const Eigen::VectorXd& z, Eigen::VectorXd& r, Eigen::MatrixXd* jac) const {
    const int nz = unknowns();
    const ModuliPoint lat{z[nz - 3], z[nz - 2]};
    const double len = z[nz - 1];
    if (!(std::abs(lat.y) > 1e-3) || !(std::abs(len) < 1e3)) return false;
    std::vector<double> vals;
    std::vector<Eigen::VectorXd> jrows;
    auto emit = [&](double value, int i, int j, double b, Vec2 u, double sign) {
      vals.push_back(value);
      if (!jac) return;
      Eigen::VectorXd row = Eigen::VectorXd::Zero(nz);
      if (j != 0) {
        row[2 * (j - 1)] += sign * u.x;
        row[2 * (j - 1) + 1] += sign * u.y;
      }
      if (i != 0) {
        row[2 * (i - 1)] -= sign * u.x;
        row[2 * (i - 1) + 1] -= sign * u.y;
      }
      row[nz - 3] += sign * b * u.x;
      row[nz - 2] += sign * b * u.y;
      row[nz - 1] = -sign;
      jrows.push_back(std::move(row));
    };
    for (const auto& q : eqs_) {
      const double t2 = static_cast<double>(q.t[1]);
      const Vec2 w = pos(z, q.head) - pos(z, q.tail) + lat.lattice(q.t[0], q.t[1]);
      const double d = norm(w);
      emit(d - len, q.tail, q.head, t2, d > 1e-15 ? w / d : Vec2{1.0, 0.0}, 1.0);
    }
    const double lattice_y = std::abs(lat.y);
    const ModuliPoint probe{lat.x, lattice_y};
    const double sgn = lat.y < 0 ? -1.0 : 1.0;
    for (int i = 0; i < V_; ++i)
      for (int j = i; j < V_; ++j) {
        Vec2 raw = pos(z, j) - pos(z, i);
        raw.y *= sgn;  // enumerate in the mirrored lattice when y < 0
        auto [t1, t2] = lattice_coordinates(raw, probe);
        const auto a0 = static_cast<std::int64_t>(-std::round(t1));
        const auto b0 = static_cast<std::int64_t>(-std::round(t2));
        const Vec2 c = raw + probe.lattice(a0, b0);
        for_each_translate_within(c, probe, std::abs(len), [&](std::int64_t a, std::int64_t b, Vec2) {
          const std::int64_t ta = a0 + a, tb = b0 + b;
          if (i == j && (tb < 0 || (tb == 0 && ta <= 0))) return;
          if (std::binary_search(edges_.begin(), edges_.end(), std::array<std::int64_t, 4>{i, j, ta, tb}))
            return;
          const Vec2 w = pos(z, j) - pos(z, i) + lat.lattice(ta, tb);
          const double d = norm(w);
          if (d >= len) return;
          emit(len - d, i, j, static_cast<double>(tb), d > 1e-15 ? w / d : Vec2{1.0, 0.0}, -1.0);
        });
      }
    r = Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<Eigen::Index>(vals.size()));
    if (jac) {
      jac->resize(static_cast<Eigen::Index>(jrows.size()), nz);
      for (std::size_t k = 0; k < jrows.size(); ++k) jac->row(static_cast<Eigen::Index>(k)) = jrows[k];
    }
    return true;
  }

  std::size_t edge_count() const { return eqs_.size(); }

 private:
  static Vec2 pos(const Eigen::VectorXd& z, int v) {
    return v == 0 ? Vec2{} : Vec2{z[2 * (v - 1)], z[2 * (v - 1) + 1]};
  }
  std::vector<EdgeEquation> eqs_;
  int V_;
  std::vector<std::array<std::int64_t, 4>> edges_;
};

// Damped Newton (Levenberg-Marquardt). Returns the largest residual, or
// infinity if the iterate left the valid domain.
inline double solve_equal_lengths(const EqualLengthSystem& sys, Eigen::VectorXd& z) {
  Eigen::MatrixXd J;
  Eigen::VectorXd r;
  if (!sys.evaluate(z, r, &J)) return std::numeric_limits<double>::infinity();
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  const int nz = sys.unknowns();
  for (int it = 0; it < 400; ++it) {
    if (r.size() == 0 || r.lpNorm<Eigen::Infinity>() < 1e-14) break;
    const Eigen::MatrixXd A = J.transpose() * J + lambda * Eigen::MatrixXd::Identity(nz, nz);
    const Eigen::VectorXd step = A.ldlt().solve(-J.transpose() * r);
    const Eigen::VectorXd trial = z + step;
    Eigen::MatrixXd Jt;
    Eigen::VectorXd rt;
    if (sys.evaluate(trial, rt, &Jt) && rt.squaredNorm() < cost) {
      z = trial;
      r = rt;
      J = Jt;
      cost = r.squaredNorm();
      lambda = std::max(lambda * 0.3, 1e-15);
    } else {
      lambda *= 10.0;
      if (lambda > 1e12) break;
    }
  }
  return r.size() == 0 ? 0.0 : r.lpNorm<Eigen::Infinity>();
}

}  // namespace detail

// Checks that a candidate packing is a genuine realization of e: no overlap,
// exactly the embedding's tangencies with the same rotation system, and (if
// requested) every corner angle below pi.
inline bool realizes(const EmbeddedGraph& e, const Packing& p,
                     bool require_angle_window, double tol = 1e-6) {
  try {
    if (max_radius_for_centers(p.m, p.centers) < p.radius * (1.0 - 1e-9)) return false;
    const auto g = extract_graph(p, tol * 2.0 * p.radius);
    if (g.loop_count() != 0) return false;
    if (static_cast<int>(g.edge_count()) != e.darts.edge_count()) return false;
    if (!(canonicalize(underlying_multigraph(g)) == canonicalize(e.graph))) return false;
    const auto ge = embedding_from_packing(g);
    if (ge.canonical_form != e.canonical_form) return false;
    if (require_angle_window) {
      for (const auto& gaps : angle_spectrum(g, p)) {
        if (gaps.empty() || gaps.back() >= kPi - 1e-9) return false;
        if (gaps.front() < kPi / 3.0 - 1e-9) return false;
      }
    }
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Random-start search for equal-edge realizations of e. Returns every
// accepted sample (empty when none was found; that is evidence, not proof,
// of non-realizability).
inline std::vector<RealizationSample> realize_embedding(
    const EmbeddedGraph& e, const RealizationOptions& opt = {},
    const std::string& id = {}) {
  const int V = e.darts.vertex_count;
  const detail::EqualLengthSystem sys(detail::edge_equations(e), V);
  const auto A = static_cast<std::size_t>(std::max(0, opt.attempts));
  std::vector<std::optional<RealizationSample>> got(A);
  parallel_for(A, [&](std::size_t k) {
    auto rng = seeded_rng(opt.seed, k);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Eigen::VectorXd z(2 * (V - 1) + 3);
    const double x = unit(rng) - 0.5, y = 0.5 + 2.5 * unit(rng);
    for (int v = 1; v < V; ++v) {
      const double t1 = unit(rng), t2 = unit(rng);
      z[2 * (v - 1)] = t1 + t2 * x;
      z[2 * (v - 1) + 1] = t2 * y;
    }
    z[2 * (V - 1)] = x;
    z[2 * (V - 1) + 1] = y;
    z[2 * (V - 1) + 2] = 0.3 + 0.7 * unit(rng);
    const double res = detail::solve_equal_lengths(sys, z);
    if (!(res < 1e-10)) return;
    const double lx = z[2 * (V - 1)], ly = z[2 * (V - 1) + 1], len = z[2 * (V - 1) + 2];
    if (!(len > 1e-6) || !(std::abs(ly) > 1e-6)) return;
    StandardForm sf;
    try {
      sf = reduce_to_standard_basis({{1.0, 0.0}, {lx, ly}});
    } catch (const DegenerateLattice&) {
      return;
    }
    RealizationSample s;
    s.id = id;
    s.m = sf.point;
    s.length = len * sf.transform.scale;
    s.residual = res;
    for (int v = 0; v < V; ++v) {
      const Vec2 p = v == 0 ? Vec2{} : Vec2{z[2 * (v - 1)], z[2 * (v - 1) + 1]};
      const Vec2 q = sf.transform.apply(p);
      s.positions.push_back(v == 0 ? TorusPoint{0.0, 0.0} : canonical({q.x, q.y}, s.m));
    }
    if (!realizes(e, s.packing(), opt.require_angle_window)) return;
    got[k] = std::move(s);
  });
  std::vector<RealizationSample> out;
  for (auto& g : got) {
    if (!g) continue;
    if (out.size() >= opt.max_samples) break;
    out.push_back(std::move(*g));
  }
  return out;
}

}  // namespace toruspack
