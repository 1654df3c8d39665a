#include "unitlat/gram.hpp"

#include <string>

#include "unitlat/error.hpp"

namespace unitlat {

namespace {

std::string digits_string(mpfr_srcptr x, size_t ndigits, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(x)) return "0";
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, ndigits, x, rnd);
  std::string d(s);
  mpfr_free_str(s);
  bool neg = d[0] == '-';
  if (neg) d.erase(0, 1);
  return std::string(neg ? "-" : "") + "0." + d + "e" + std::to_string(static_cast<long>(e));
}

constexpr const char* kGramSchema = "unitlat.gram/v1";

}  // namespace

nlohmann::json ball_to_json(const Ball& b) {
  nlohmann::json j;
  j["mid"] = digits_string(b.mid().get(), mpfr_get_str_ndigits(10, b.prec()), MPFR_RNDN);
  j["rad"] = digits_string(b.rad().get(), mpfr_get_str_ndigits(10, Ball::kRadPrec) + 1, MPFR_RNDU);
  return j;
}

Ball ball_from_json(const nlohmann::json& j, Prec prec) {
  if (!j.is_object() || !j.contains("mid") || !j.contains("rad") || !j["mid"].is_string() ||
      !j["rad"].is_string())
    fail(ErrorCode::SchemaError, "ball must be an object with string fields mid and rad");
  Real mid = Real::parse(j["mid"].get<std::string>(), prec, MPFR_RNDN);
  Real rad = Real::parse(j["rad"].get<std::string>(), Ball::kRadPrec, MPFR_RNDN);
  if (rad.sign() < 0) fail(ErrorCode::SchemaError, "negative radius");
  return Ball(mid, rad);
}

GramMatrix::GramMatrix(BallMatrix entries) : m_(std::move(entries)), prec_(min_prec(m_)) {
  for (size_t i = 0; i < m_.size(); ++i) {
    if (m_[i].size() != m_.size()) fail(ErrorCode::DimensionMismatch, "Gram matrix must be square");
    for (size_t j = 0; j < i; ++j) {
      if (!(m_[i][j].mid() == m_[j][i].mid()) || !(m_[i][j].rad() == m_[j][i].rad()))
        fail(ErrorCode::InvalidArgument, "Gram matrix midpoints are not symmetric");
    }
  }
  if (!is_positive_definite(m_))
    fail(ErrorCode::NotPositiveDefinite, "Gram matrix not certified positive definite");
}

GramMatrix GramMatrix::of_rows(const BallMatrix& basis) {
  size_t n = basis.size();
  Prec p = min_prec(basis);
  BallMatrix g(n, BallVector(n, Ball(p)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      if (basis[i].size() != basis[j].size()) fail(ErrorCode::DimensionMismatch, "ragged basis");
      Ball s(p);
      for (size_t k = 0; k < basis[i].size(); ++k) s += basis[i][k] * basis[j][k];
      g[i][j] = s;
      g[j][i] = s;
    }
  return GramMatrix(std::move(g));
}

GramMatrix GramMatrix::from_rational(const RationalMatrix& m, Prec prec) {
  return GramMatrix(ball_matrix(m, prec));
}

Ball GramMatrix::det() const { return unitlat::det(m_); }

GramMatrix GramMatrix::scaled(const Ball& s) const {
  BallMatrix r = m_;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = i; j < r.size(); ++j) {
      r[i][j] = m_[i][j] * s;
      r[j][i] = r[i][j];
    }
  return GramMatrix(std::move(r));
}

GramMatrix GramMatrix::transformed_rows(const IntMatrix& t) const {
  size_t n = t.size();
  BallMatrix tb = ball_matrix(t, prec_);
  BallMatrix tg = unitlat::mul(tb, m_);
  BallMatrix r(n, BallVector(n, Ball(prec_)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      Ball s(prec_);
      for (size_t k = 0; k < m_.size(); ++k) s += tg[i][k] * tb[j][k];
      r[i][j] = s;
      r[j][i] = s;
    }
  return GramMatrix(std::move(r));
}

nlohmann::json GramMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m_) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& b : row) jr.push_back(ball_to_json(b));
    rows.push_back(jr);
  }
  return {{"schema", kGramSchema}, {"rank", m_.size()}, {"prec", prec_}, {"entries", rows}};
}

GramMatrix GramMatrix::from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("schema", "") != kGramSchema)
    fail(ErrorCode::SchemaError, std::string("expected schema ") + kGramSchema);
  if (!j.contains("prec") || !j["prec"].is_number_integer() || !j.contains("entries") ||
      !j["entries"].is_array())
    fail(ErrorCode::SchemaError, "Gram JSON needs integer prec and entries array");
  Prec prec = j["prec"].get<long>();
  if (prec < MPFR_PREC_MIN || prec > (1L << 20)) fail(ErrorCode::SchemaError, "precision out of range");
  BallMatrix m;
  for (const auto& row : j["entries"]) {
    if (!row.is_array()) fail(ErrorCode::SchemaError, "Gram rows must be arrays");
    BallVector r;
    for (const auto& e : row) r.push_back(ball_from_json(e, prec));
    m.push_back(std::move(r));
  }
  if (j.contains("rank") && j["rank"].get<size_t>() != m.size())
    fail(ErrorCode::SchemaError, "rank field disagrees with entries");
  return GramMatrix(std::move(m));
}

}  // namespace unitlat
