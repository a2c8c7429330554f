#include "core/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "core/errors.hpp"

namespace modstab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw ContractViolation("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw ContractViolation("partition parts must be weakly decreasing");
    size_ += parts_[k];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> parts;
  parts.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::without_first_row() const {
  if (parts_.empty()) return {};
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(parts_[k]);
  }
  return out + ")";
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& prefix,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

struct PartitionCache {
  std::mutex mutex;
  std::map<int, std::unique_ptr<const std::vector<Partition>>> lists;
  std::map<int, std::unique_ptr<const std::map<Partition, std::size_t>>> indices;
};

PartitionCache& cache() {
  static PartitionCache instance;
  return instance;
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw ContractViolation("partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate(n, n, prefix, out);
  return out;
}

const std::vector<Partition>& partitions_cached(int n) {
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  auto& slot = c.lists[n];
  if (!slot) slot = std::make_unique<const std::vector<Partition>>(partitions(n));
  return *slot;
}

std::size_t partition_index(const Partition& lambda) {
  const auto& list = partitions_cached(lambda.size());
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  auto& slot = c.indices[lambda.size()];
  if (!slot) {
    auto index = std::make_unique<std::map<Partition, std::size_t>>();
    for (std::size_t k = 0; k < list.size(); ++k) index->emplace(list[k], k);
    slot = std::move(index);
  }
  return slot->at(lambda);
}

Integer centralizer_order(const CycleType& mu) {
  Integer z = 1;
  auto parts = mu.parts();
  for (std::size_t k = 0; k < parts.size();) {
    std::size_t run = k;
    while (run < parts.size() && parts[run] == parts[k]) ++run;
    const int m = static_cast<int>(run - k);
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[k]),
                  static_cast<unsigned long>(m));
    z *= power * factorial(m);
    k = run;
  }
  return z;
}

Integer class_size(const CycleType& mu) { return factorial(mu.size()) / centralizer_order(mu); }

Partition pad(const Partition& lambda, int n) {
  const int first = n - lambda.size();
  if (first < lambda.first())
    throw ContractViolation("padding " + lambda.to_string() + " to n=" + std::to_string(n) +
                            " is undefined: need n >= |λ| + λ_1");
  std::vector<int> parts{first};
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

std::vector<Partition> branch_restrict(const Partition& lambda) {
  std::vector<Partition> out;
  auto parts = lambda.parts();
  for (std::size_t row = 0; row < parts.size(); ++row) {
    // The last box of a row is a corner iff the next row is strictly shorter.
    if (row + 1 < parts.size() && parts[row + 1] == parts[row]) continue;
    std::vector<int> smaller(parts.begin(), parts.end());
    --smaller[row];
    out.push_back(Partition::from_unsorted(std::move(smaller)));
  }
  std::sort(out.begin(), out.end(), ReverseLex{});
  return out;
}

}  // namespace modstab
