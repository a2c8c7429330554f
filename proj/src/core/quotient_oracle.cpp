// Independent check of the normal-form basis: R_n in degree i computed as
// Λ^i(span of ω's) modulo the ideal generated by the three-term relations,
// by exact elimination. Shares nothing with straightening.

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "core/arnold.hpp"
#include "core/errors.hpp"
#include "core/linalg.hpp"

namespace modstab {

namespace {

class ExteriorWords {
 public:
  ExteriorWords(int n, int degree) : n_(n) {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) pairs_.emplace_back(a, b);
    std::vector<int> current;
    enumerate(0, degree, current);
  }

  int generator(int a, int b) const {
    if (a > b) std::swap(a, b);
    // Pairs are listed lexicographically: (1,2),(1,3),...,(1,n),(2,3),...
    return (a - 1) * n_ - (a - 1) * a / 2 + (b - a - 1);
  }
  std::pair<int, int> pair_of(int g) const { return pairs_[g]; }
  int generator_count() const { return static_cast<int>(pairs_.size()); }

  std::size_t size() const { return words_.size(); }
  const std::vector<int>& word(std::size_t column) const { return words_[column]; }
  std::size_t column(std::uint64_t mask) const { return index_.at(mask); }

  /// Sorts a product of generators into a basis word; nullopt if it vanishes.
  std::optional<std::pair<std::size_t, int>> signed_column(std::vector<int> product) const {
    int sign = 1;
    for (std::size_t k = 1; k < product.size(); ++k) {
      for (std::size_t j = k; j > 0 && product[j - 1] >= product[j]; --j) {
        if (product[j - 1] == product[j]) return std::nullopt;
        std::swap(product[j - 1], product[j]);
        sign = -sign;
      }
    }
    return std::pair(column(mask_of(product)), sign);
  }

  static std::uint64_t mask_of(const std::vector<int>& word) {
    std::uint64_t mask = 0;
    for (int g : word) mask |= std::uint64_t{1} << g;
    return mask;
  }

 private:
  void enumerate(int next, int remaining, std::vector<int>& current) {
    if (remaining == 0) {
      index_.emplace(mask_of(current), words_.size());
      words_.push_back(current);
      return;
    }
    for (int g = next; g + remaining <= generator_count(); ++g) {
      current.push_back(g);
      enumerate(g + 1, remaining - 1, current);
      current.pop_back();
    }
  }

  int n_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace

QuotientResult quotient_oracle(int n, int degree, int max_n) {
  if (n < 1 || degree < 0) throw ContractViolation("quotient_oracle needs n >= 1 and degree >= 0");
  if (n > max_n)
    throw BudgetExceeded("quotient_oracle refuses n = " + std::to_string(n) +
                         " above the configured bound " + std::to_string(max_n));
  if (n > 11) throw BudgetExceeded("quotient_oracle supports at most n = 11");

  const ExteriorWords space(n, degree);
  EchelonBasis relations(space.size());

  if (degree >= 2) {
    const ExteriorWords multipliers(n, degree - 2);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          // ω_ij ω_jk + ω_jk ω_ki + ω_ki ω_ij
          const std::pair<int, int> terms[3] = {
              {space.generator(i, j), space.generator(j, k)},
              {space.generator(j, k), space.generator(k, i)},
              {space.generator(k, i), space.generator(i, j)},
          };
          for (std::size_t m = 0; m < multipliers.size(); ++m) {
            std::vector<std::pair<std::size_t, Rational>> row;
            for (const auto& [x, y] : terms) {
              std::vector<int> product{x, y};
              product.insert(product.end(), multipliers.word(m).begin(), multipliers.word(m).end());
              if (auto hit = space.signed_column(std::move(product)))
                row.emplace_back(hit->first, Rational(hit->second));
            }
            relations.insert(make_sparse(std::move(row)));
          }
        }
      }
    }
  }

  QuotientResult result;
  result.dimension = space.size() - relations.rank();
  std::vector<std::size_t> quotient_basis;
  for (std::size_t c = 0; c < space.size(); ++c)
    if (!relations.is_pivot(c)) quotient_basis.push_back(c);

  result.character = ClassFunction::from(n, [&](const CycleType& mu) {
    const Permutation sigma = Permutation::representative(mu);
    Rational trace = 0;
    for (std::size_t c : quotient_basis) {
      std::vector<int> image;
      for (int g : space.word(c)) {
        const auto [a, b] = space.pair_of(g);
        image.push_back(space.generator(sigma(a), sigma(b)));
      }
      auto hit = space.signed_column(std::move(image));
      if (!hit) continue;
      const SparseVector reduced = relations.reduce({{hit->first, Rational(hit->second)}});
      trace += entry(reduced, c);
    }
    return trace;
  });
  return result;
}

}  // namespace modstab
