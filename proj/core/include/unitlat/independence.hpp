#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "unitlat/bundle.hpp"
#include "unitlat/galois.hpp"
#include "unitlat/isometry.hpp"
#include "unitlat/relation.hpp"

namespace unitlat {

inline constexpr Prec kDefaultProbePrec = 512;
inline const Integer kDefaultProbeBound{1000000};
constexpr int kDefaultProbeDegree = 2;
constexpr size_t kMonomialBudget = 500;

struct ResidueRecord {
  std::string label;
  int r = 0;
  int s = 0;
  long class_number = 0;
  long torsion = 2;
  Integer disc;
  Ball regulator;
  Ball residue;
  // residue / reg = rational_factor * pi^s / sqrt|disc|, with
  // rational_factor = 2^(r+s) h / w
  Rational rational_factor;
};

// Class number formula 2^r (2 pi)^s h reg / (w sqrt|disc|). Throws
// MissingClassNumber, RankDeficient, InvalidArgument for degree 1.
ResidueRecord residue_at_one(const FieldBundle& b, Prec prec);
// Recomputes the residue from the record's own fields.
Ball residue_from_record(const ResidueRecord& r);

enum class ProbeVerdict { Found, Spurious, NoneBelow, Undecided };

const char* to_string(ProbeVerdict v);

// Values as a function of the working precision, so that a probe can
// recompute them for its cross-check.
using ValueSource = std::function<BallVector(Prec)>;

struct ProbeReport {
  std::vector<std::string> labels;
  BallVector values;
  Integer coeff_bound;
  Prec prec = 0;
  ProbeVerdict verdict = ProbeVerdict::Undecided;
  IntVector relation;       // Found / Spurious
  Ball residual;            // r . x at prec
  Ball recheck_residual;    // r . x at 2 prec
  Real bound;               // NoneBelow: no relation with |r|_2 <= bound
  bool stable = false;      // the 2 prec run agrees with the verdict
  std::string text;

  nlohmann::json to_json() const;
};

// Wraps integer_relation. A relation found at prec must vanish again at
// 2 prec (ball containing zero or below 2^(-3 prec / 2)), otherwise the
// verdict is Spurious. NoneBelow is rerun at 2 prec to report stability.
ProbeReport relation_probe(const std::vector<std::string>& labels, const ValueSource& values,
                           const Integer& coeff_bound, Prec prec);

// All monomials of total degree <= degree in k variables (constant first,
// graded lex). Throws CombinatorialBudgetExceeded above kMonomialBudget.
std::vector<std::vector<int>> monomials_up_to(size_t k, int degree);

// Integer relations among the monomials of the given coordinates.
ProbeReport genericity_probe(const ValueSource& coordinates, int degree, const Integer& coeff_bound, Prec prec);

// Coordinates of Gr_v, v = Log(u), in the rational basis of Sym^G(R_Q[G]).
ValueSource gram_form_coordinates(const GaloisAction& a, const FieldElement& u);

struct ImplicationRow {
  std::string statement;
  bool conditional = false;  // holds only under a transcendence hypothesis
  std::string status;        // consistent | violated | not-applicable | implied
};

struct PairReport {
  std::string label1, label2;
  Prec prec = 0;
  Ball reg1, reg2;
  bool regulators_overlap = false;
  long equal_bits = 0;  // -log2 |reg1 - reg2| upper bound when overlapping
  ProbeReport regulator_probe;
  std::string gassmann;  // true | false | unknown
  std::string gassmann_reason;
  std::optional<bool> conjugate;
  Ball min1, min2;  // lattice minima after scaling to covolume 1
  bool minima_separated = false;
  IsometryResult isometry;
  SimilarityResult similarity;
  std::optional<Ball> res1, res2;
  std::vector<ImplicationRow> implications;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

PairReport pair_report(const FieldBundle& a, const FieldBundle& b, Prec prec);

}  // namespace unitlat
