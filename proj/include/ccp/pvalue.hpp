#pragma once

#include <cstdint>
#include <vector>

#include "ccp/dataset.hpp"

namespace ccp {

// Exact rational, gcd-normalized with a positive denominator. Rank-based
// p-values are rationals by construction and stay exact until the reporting
// boundary, which makes the rank-sum / modified-mean identity testable with
// no tolerance.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);

  Rational operator+(const Rational& other) const;
  Rational operator-(const Rational& other) const;
  Rational operator*(const Rational& other) const;
  bool operator==(const Rational& other) const { return num == other.num && den == other.den; }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// A p-value in (0, 1]. Exact (rational) when produced by rank counting;
// inexact (double only) when produced by Fisher combination.
class PValue {
 public:
  PValue() = default;

  static PValue exact(std::int64_t num, std::int64_t den);
  static PValue exact(Rational r);
  static PValue approx(double value);

  double value() const { return value_; }
  bool is_exact() const { return exact_.den != 0; }
  const Rational& rational() const;  // throws std::logic_error if inexact

 private:
  Rational exact_{0, 0};
  double value_ = 0.0;
};

// Per-candidate-label p-values for one test object; exactly one entry per
// label in the alphabet.
class PValueMap {
 public:
  explicit PValueMap(std::vector<PValue> by_label);

  std::size_t alphabet_size() const { return by_label_.size(); }
  const PValue& operator[](Label y) const { return by_label_[static_cast<std::size_t>(y)]; }
  double value(Label y) const { return by_label_[static_cast<std::size_t>(y)].value(); }
  const std::vector<PValue>& entries() const { return by_label_; }

 private:
  std::vector<PValue> by_label_;
};

// Labels whose p-value strictly exceeds epsilon. May be empty.
struct PredictionSet {
  double epsilon = 0.0;
  std::vector<Label> members;  // ascending

  bool contains(Label y) const;
};

// Throws std::invalid_argument unless epsilon is in (0, 1).
PredictionSet prediction_set(const PValueMap& pvalues, double epsilon);

struct ConfidenceCredibility {
  double confidence = 0.0;   // 1 - second largest p-value
  double credibility = 0.0;  // largest p-value
};

// Requires an alphabet of at least two labels.
ConfidenceCredibility confidence_credibility(const PValueMap& pvalues);

}  // namespace ccp
