#pragma once

#include <cmath>

#include "fracdyn/errors.hpp"

namespace fracdyn {

/// Order of a fractional derivative: alpha > 0 together with the smallest
/// integer m >= alpha.
class FracOrder {
 public:
  explicit FracOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
      throw DomainError("fractional order must be finite and > 0");
    }
    m_ = static_cast<int>(std::ceil(alpha));
  }

  double alpha() const { return alpha_; }
  int m() const { return m_; }
  bool is_integer() const { return alpha_ == static_cast<double>(m_); }

  friend bool operator==(const FracOrder&, const FracOrder&) = default;

 private:
  double alpha_;
  int m_;
};

}  // namespace fracdyn
