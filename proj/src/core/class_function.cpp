#include "core/class_function.hpp"

#include "core/errors.hpp"

namespace modstab {

ClassFunction::ClassFunction(int n) : n_(n) {
  if (n < 0) throw ContractViolation("class function on S_n with n < 0");
  values_.assign(partitions_cached(n).size(), Rational(0));
}

ClassFunction::ClassFunction(int n, std::vector<Rational> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != partitions_cached(n).size())
    throw ContractViolation("class function needs exactly one value per cycle type");
}

ClassFunction ClassFunction::trivial(int n) {
  ClassFunction chi(n);
  for (auto& v : chi.values_) v = 1;
  return chi;
}

ClassFunction ClassFunction::from(int n, const std::function<Rational(const CycleType&)>& value) {
  ClassFunction chi(n);
  const auto& classes = partitions_cached(n);
  for (std::size_t k = 0; k < classes.size(); ++k) chi.values_[k] = value(classes[k]);
  return chi;
}

const Rational& ClassFunction::operator()(const CycleType& mu) const {
  if (mu.size() != n_) throw ContractViolation("cycle type " + mu.to_string() + " is not of S_" + std::to_string(n_));
  return values_[partition_index(mu)];
}

bool ClassFunction::is_integral() const {
  for (const auto& v : values_)
    if (!is_integer(v)) return false;
  return true;
}

bool ClassFunction::is_zero() const {
  for (const auto& v : values_)
    if (v != 0) return false;
  return true;
}

void ClassFunction::require_same_degree(const ClassFunction& other) const {
  if (other.n_ != n_) throw ContractViolation("class functions on different symmetric groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  require_same_degree(other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  require_same_degree(other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= other.values_[k];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& other) {
  require_same_degree(other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] *= other.values_[k];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

Rational inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (chi.degree() != psi.degree()) throw ContractViolation("inner product across different S_n");
  Rational sum = 0;
  const auto& classes = chi.classes();
  for (std::size_t k = 0; k < classes.size(); ++k)
    sum += Rational(class_size(classes[k])) * chi.at(k) * psi.at(k);
  sum /= Rational(factorial(chi.degree()));
  return sum;
}

ClassFunction fixed_points_minus_one(int n) {
  return ClassFunction::from(n, [](const CycleType& mu) { return Rational(mu.multiplicity(1) - 1); });
}

}  // namespace modstab
