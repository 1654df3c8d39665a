#pragma once

#include <nlohmann/json.hpp>

#include "unitlat/linalg.hpp"

namespace unitlat {

// Symmetric positive-definite matrix of real balls. Construction checks
// exact symmetry of the midpoints and certifies positive definiteness.
class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(BallMatrix entries);

  // Gram matrix of the rows of a basis (rows are ball vectors in R^m).
  static GramMatrix of_rows(const BallMatrix& basis);
  static GramMatrix from_rational(const RationalMatrix& m, Prec prec);

  size_t rank() const { return m_.size(); }
  Prec prec() const { return prec_; }
  const BallMatrix& entries() const { return m_; }
  const Ball& operator()(size_t i, size_t j) const { return m_[i][j]; }

  Ball det() const;
  GramMatrix scaled(const Ball& s) const;
  // T g T^T for an integer matrix T acting on rows.
  GramMatrix transformed_rows(const IntMatrix& t) const;

  nlohmann::json to_json() const;
  static GramMatrix from_json(const nlohmann::json& j);

 private:
  BallMatrix m_;
  Prec prec_ = 53;
};

// Ball serialization: midpoint with enough decimal digits to round-trip,
// radius rounded upward.
nlohmann::json ball_to_json(const Ball& b);
Ball ball_from_json(const nlohmann::json& j, Prec prec);

}  // namespace unitlat
