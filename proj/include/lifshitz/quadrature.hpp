// Copyright (c) 2026 The lifshitz-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "lifshitz/summation.hpp"

namespace lifshitz {

/// Largest absolute component; used as the norm in tolerance tests so the
/// same routines integrate scalars and small Eigen arrays (the s/p pair).
template <typename Scalar>
  requires std::is_floating_point_v<Scalar>
Scalar magnitude(Scalar x) {
  return x < Scalar(0) ? -x : x;
}

template <typename Derived>
typename Derived::Scalar magnitude(const Eigen::ArrayBase<Derived>& x) {
  return x.abs().maxCoeff();
}

template <typename Value>
Value zero_like() {
  if constexpr (std::is_arithmetic_v<Value>) {
    return Value(0);
  } else {
    return Value::Zero();
  }
}

/// n-point Gauss-Legendre rule on [-1, 1], nodes found by Newton iteration in
/// the working precision.
template <typename Scalar>
class GaussLegendre {
 public:
  explicit GaussLegendre(int n) : nodes_(static_cast<std::size_t>(n)), weights_(nodes_.size()) {
    using std::abs;
    using std::cos;
    if (n < 1) throw std::invalid_argument("GaussLegendre: n must be >= 1");
    const Scalar pi = std::numbers::pi_v<Scalar>;
    for (int i = 0; i < (n + 1) / 2; ++i) {
      Scalar x = cos(pi * (Scalar(i) + Scalar(0.75)) / (Scalar(n) + Scalar(0.5)));
      Scalar derivative = 0;
      for (int iter = 0; iter < 100; ++iter) {
        Scalar p0 = 1;
        Scalar p1 = x;
        for (int k = 2; k <= n; ++k) {
          const Scalar p2 = ((Scalar(2 * k - 1)) * x * p1 - Scalar(k - 1) * p0) / Scalar(k);
          p0 = p1;
          p1 = p2;
        }
        if (n == 1) p0 = 1;
        derivative = Scalar(n) * (x * p1 - p0) / (x * x - Scalar(1));
        const Scalar step = p1 / derivative;
        x -= step;
        if (abs(step) <= std::numeric_limits<Scalar>::epsilon()) {
          break;
        }
      }
      // Recompute the derivative at the converged node.
      {
        Scalar p0 = 1;
        Scalar p1 = x;
        for (int k = 2; k <= n; ++k) {
          const Scalar p2 = ((Scalar(2 * k - 1)) * x * p1 - Scalar(k - 1) * p0) / Scalar(k);
          p0 = p1;
          p1 = p2;
        }
        derivative = n == 1 ? Scalar(1) : Scalar(n) * (x * p1 - p0) / (x * x - Scalar(1));
      }
      const Scalar weight = Scalar(2) / ((Scalar(1) - x * x) * derivative * derivative);
      const auto lo = static_cast<std::size_t>(i);
      const auto hi = static_cast<std::size_t>(n - 1 - i);
      nodes_[lo] = -x;
      nodes_[hi] = x;
      weights_[lo] = weight;
      weights_[hi] = weight;
    }
    if (n % 2 == 1) nodes_[static_cast<std::size_t>(n / 2)] = 0;
  }

  int size() const { return static_cast<int>(nodes_.size()); }
  std::span<const Scalar> nodes() const { return nodes_; }
  std::span<const Scalar> weights() const { return weights_; }

  /// Integral of f over [a, b].
  template <typename F>
  auto integrate(F&& f, Scalar a, Scalar b) const {
    using Value = decltype(f(a));
    const Scalar half = (b - a) / Scalar(2);
    const Scalar mid = (a + b) / Scalar(2);
    Value sum = zero_like<Value>();
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      sum += weights_[i] * f(mid + half * nodes_[i]);
    }
    return Value(sum * half);
  }

 private:
  std::vector<Scalar> nodes_;
  std::vector<Scalar> weights_;
};

/// Breakpoints {0, first, first*ratio, ...} ending exactly at `last`.
template <typename Scalar>
std::vector<Scalar> geometric_breakpoints(Scalar first, Scalar last, Scalar ratio) {
  std::vector<Scalar> points{Scalar(0)};
  for (Scalar x = first; x < last; x *= ratio) {
    points.push_back(x);
  }
  if (points.size() > 1 && last / points.back() < std::sqrt(ratio)) {
    points.back() = last;
  } else {
    points.push_back(last);
  }
  return points;
}

/// A fixed composite Gauss-Legendre rule on a list of breakpoints, flattened
/// to nodes and weights. Applying it to a family of integrands that depends
/// smoothly on a parameter yields a result that is itself smooth in that
/// parameter, which adaptive schemes do not guarantee.
template <typename Scalar>
class CompositeRule {
 public:
  CompositeRule(std::span<const Scalar> breakpoints, const GaussLegendre<Scalar>& rule) {
    for (std::size_t j = 0; j + 1 < breakpoints.size(); ++j) {
      const Scalar a = breakpoints[j];
      const Scalar b = breakpoints[j + 1];
      const Scalar half = (b - a) / Scalar(2);
      const Scalar mid = (a + b) / Scalar(2);
      for (int i = 0; i < rule.size(); ++i) {
        nodes_.push_back(mid + half * rule.nodes()[static_cast<std::size_t>(i)]);
        weights_.push_back(half * rule.weights()[static_cast<std::size_t>(i)]);
      }
    }
  }

  std::span<const Scalar> nodes() const { return nodes_; }
  std::span<const Scalar> weights() const { return weights_; }
  std::size_t size() const { return nodes_.size(); }

 private:
  std::vector<Scalar> nodes_;
  std::vector<Scalar> weights_;
};

template <typename Scalar, typename Value>
struct QuadratureResult {
  Value value;
  Scalar error;
  long evaluations = 0;
  bool converged = false;
};

/// Globally adaptive bisection. Each panel is integrated once whole and once
/// as two halves with the same rule; the difference is the panel error. The
/// panel with the largest error is bisected until the summed error meets
/// max(abs_tol, rel_tol |I|) or every candidate panel has reached max_depth.
template <typename Scalar, typename F>
auto adaptive_integrate(F&& f, std::span<const Scalar> breakpoints,
                        const GaussLegendre<Scalar>& rule, Scalar rel_tol, Scalar abs_tol,
                        int max_depth) {
  using Value = std::decay_t<decltype(f(Scalar{}))>;
  struct Panel {
    Scalar a, b;
    Value left, right;
    Scalar error;
    int depth;
  };

  QuadratureResult<Scalar, Value> result{zero_like<Value>(), Scalar(0)};
  auto make_panel = [&](Scalar a, Scalar b, const Value& whole, int depth) {
    const Scalar mid = (a + b) / Scalar(2);
    Panel panel{a, b, rule.integrate(f, a, mid), rule.integrate(f, mid, b), Scalar(0), depth};
    result.evaluations += 2L * rule.size();
    panel.error = magnitude(Value(whole - panel.left - panel.right));
    return panel;
  };

  std::vector<Panel> panels;
  panels.reserve(breakpoints.size() * 4);
  for (std::size_t j = 0; j + 1 < breakpoints.size(); ++j) {
    const Scalar a = breakpoints[j];
    const Scalar b = breakpoints[j + 1];
    const Value whole = rule.integrate(f, a, b);
    result.evaluations += rule.size();
    panels.push_back(make_panel(a, b, whole, 0));
  }

  auto totals = [&]() {
    Value sum = zero_like<Value>();
    Scalar error = 0;
    for (const Panel& p : panels) {
      sum += p.left;
      sum += p.right;
      error += p.error;
    }
    return std::pair{sum, error};
  };

  constexpr int max_splits = 20000;
  for (int split = 0;; ++split) {
    const auto [sum, error] = totals();
    result.value = sum;
    result.error = error;
    const Scalar target = std::max(abs_tol, rel_tol * magnitude(sum));
    if (error <= target) {
      result.converged = true;
      break;
    }
    if (split >= max_splits) break;
    auto worst = panels.end();
    for (auto it = panels.begin(); it != panels.end(); ++it) {
      if (it->depth < max_depth && (worst == panels.end() || it->error > worst->error)) {
        worst = it;
      }
    }
    if (worst == panels.end()) break;
    const Panel parent = *worst;
    const Scalar mid = (parent.a + parent.b) / Scalar(2);
    *worst = make_panel(parent.a, mid, parent.left, parent.depth + 1);
    panels.push_back(make_panel(mid, parent.b, parent.right, parent.depth + 1));
  }
  return result;
}

}  // namespace lifshitz
