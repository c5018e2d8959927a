#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "acolcs/errors.hpp"
#include "acolcs/instance.hpp"

namespace acolcs {

// Component s_ij: 0-based string index, 1-based position within the string.
struct ComponentId {
  std::size_t string = 0;
  std::size_t position = 1;

  friend auto operator<=>(const ComponentId&, const ComponentId&) = default;
};

// A real value per component, one row per string (jagged).
class ComponentMap {
 public:
  ComponentMap() = default;
  ComponentMap(const Instance& inst, double value) {
    rows_.reserve(inst.count());
    for (const auto& s : inst.strings()) rows_.emplace_back(s.size(), value);
  }

  double operator[](ComponentId c) const { return rows_[c.string][c.position - 1]; }
  double& operator[](ComponentId c) { return rows_[c.string][c.position - 1]; }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::span<const double> row(std::size_t i) const { return rows_[i]; }
  std::span<double> row(std::size_t i) { return rows_[i]; }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < rows_[i].size(); ++j) fn(ComponentId{i, j + 1}, rows_[i][j]);
  }

  bool same_shape(const Instance& inst) const noexcept {
    if (rows_.size() != inst.count()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (rows_[i].size() != inst.length(i)) return false;
    return true;
  }

  friend bool operator==(const ComponentMap&, const ComponentMap&) = default;

 private:
  std::vector<std::vector<double>> rows_;
};

// The learned model T: one trail per component, never below tau_min.
class PheromoneMatrix {
 public:
  PheromoneMatrix(const Instance& inst, double tau0, double tau_min)
      : trails_(inst, tau0), tau0_(tau0), tau_min_(tau_min) {
    if (!(tau_min > 0) || !(tau0 >= tau_min)) throw InvalidConfig("need 0 < tau_min <= tau0");
  }

  double operator[](ComponentId c) const { return trails_[c]; }

  void set(ComponentId c, double value) { trails_[c] = std::max(tau_min_, value); }
  void add(ComponentId c, double delta) { set(c, trails_[c] + delta); }

  // tau <- max(tau_min, (1 - rho) tau) on every component.
  void evaporate(double rho) {
    if (!(rho > 0 && rho <= 1)) throw InvalidConfig("rho must be in (0, 1]");
    for (std::size_t i = 0; i < trails_.rows(); ++i)
      for (double& t : trails_.row(i)) t = std::max(tau_min_, (1.0 - rho) * t);
  }

  double tau0() const noexcept { return tau0_; }
  double tau_min() const noexcept { return tau_min_; }
  const ComponentMap& values() const noexcept { return trails_; }

  double min_value() const noexcept {
    double m = std::numeric_limits<double>::infinity();
    trails_.for_each([&m](ComponentId, double t) { m = std::min(m, t); });
    return m;
  }

 private:
  ComponentMap trails_;
  double tau0_;
  double tau_min_;
};

inline void evaporate(PheromoneMatrix& trails, double rho) { trails.evaporate(rho); }

}  // namespace acolcs
