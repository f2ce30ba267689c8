#include "ccp/pvalue.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ccp {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

Rational Rational::operator+(const Rational& other) const {
  return make(num * other.den + other.num * den, den * other.den);
}

Rational Rational::operator-(const Rational& other) const {
  return make(num * other.den - other.num * den, den * other.den);
}

Rational Rational::operator*(const Rational& other) const {
  return make(num * other.num, den * other.den);
}

PValue PValue::exact(std::int64_t num, std::int64_t den) {
  return exact(Rational::make(num, den));
}

PValue PValue::exact(Rational r) {
  if (r.num <= 0 || r.num > r.den) throw std::invalid_argument("p-value outside (0, 1]");
  PValue p;
  p.exact_ = r;
  p.value_ = r.value();
  return p;
}

PValue PValue::approx(double value) {
  if (!(value > 0.0) || value > 1.0) throw std::invalid_argument("p-value outside (0, 1]");
  PValue p;
  p.value_ = value;
  return p;
}

const Rational& PValue::rational() const {
  if (!is_exact()) throw std::logic_error("p-value has no exact representation");
  return exact_;
}

PValueMap::PValueMap(std::vector<PValue> by_label) : by_label_(std::move(by_label)) {
  if (by_label_.empty()) throw std::invalid_argument("empty p-value map");
}

bool PredictionSet::contains(Label y) const {
  return std::binary_search(members.begin(), members.end(), y);
}

PredictionSet prediction_set(const PValueMap& pvalues, double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw std::invalid_argument("significance level must lie in (0, 1)");
  }
  PredictionSet out;
  out.epsilon = epsilon;
  for (std::size_t y = 0; y < pvalues.alphabet_size(); ++y) {
    if (pvalues.value(static_cast<Label>(y)) > epsilon) out.members.push_back(static_cast<Label>(y));
  }
  return out;
}

ConfidenceCredibility confidence_credibility(const PValueMap& pvalues) {
  if (pvalues.alphabet_size() < 2) {
    throw std::invalid_argument("confidence/credibility need at least two labels");
  }
  double largest = 0.0, second = 0.0;
  for (const PValue& p : pvalues.entries()) {
    const double v = p.value();
    if (v > largest) {
      second = largest;
      largest = v;
    } else if (v > second) {
      second = v;
    }
  }
  return {1.0 - second, largest};
}

}  // namespace ccp
