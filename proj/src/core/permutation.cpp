#include "core/permutation.hpp"

#include "core/errors.hpp"

namespace modstab {

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  for (int k = 0; k < n; ++k) images[k] = k + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size() + 1, false);
  for (int image : images) {
    if (image < 1 || image > static_cast<int>(images.size()) || seen[image])
      throw ContractViolation("image list is not a permutation");
    seen[image] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(n);
  for (int k = 0; k < n; ++k) images[k] = k + 1;
  std::vector<bool> used(n + 1, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int point = cycle[k];
      if (point < 1 || point > n || used[point])
        throw ContractViolation("cycles must be disjoint and within 1..n");
      used[point] = true;
      images[point - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::representative(const CycleType& mu) {
  std::vector<int> images(mu.size());
  int start = 1;
  for (int length : mu.parts()) {
    for (int k = 0; k < length; ++k) images[start + k - 1] = start + (k + 1) % length;
    start += length;
  }
  return Permutation(std::move(images));
}

CycleType Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size() + 1, false);
  std::vector<int> lengths;
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (int point = start; !seen[point]; point = (*this)(point)) {
      seen[point] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  return Partition::from_unsorted(std::move(lengths));
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree()) throw ContractViolation("degree mismatch in composition");
  std::vector<int> images(tau.degree());
  for (int k = 1; k <= tau.degree(); ++k) images[k - 1] = sigma(tau(k));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int k = 1; k <= degree(); ++k) images[(*this)(k) - 1] = k;
  return Permutation(std::move(images));
}

}  // namespace modstab
