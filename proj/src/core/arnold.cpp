#include "core/arnold.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <thread>
#include <utility>

#include "core/errors.hpp"

namespace modstab {

GeneratorFactor GeneratorFactor::make(int i, int j) {
  if (i == j) throw ContractViolation("ω_{i,i} is not a generator");
  if (i < 1 || j < 1 || i > 255 || j > 255) throw ContractViolation("generator index out of range");
  if (i > j) std::swap(i, j);
  return {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}

Monomial::Monomial(std::initializer_list<GeneratorFactor> factors)
    : Monomial(std::span<const GeneratorFactor>(factors.begin(), factors.size())) {}

Monomial::Monomial(std::span<const GeneratorFactor> factors) {
  for (const auto& f : factors) push_back(f);
}

void Monomial::push_back(GeneratorFactor f) {
  if (size_ == kCapacity) throw BudgetExceeded("monomial degree exceeds " + std::to_string(kCapacity));
  factors_[size_++] = f;
}

bool Monomial::is_normal_form() const {
  for (int k = 0; k < size_; ++k) {
    if (factors_[k].a >= factors_[k].b) return false;
    if (k > 0 && factors_[k - 1].b >= factors_[k].b) return false;
  }
  return true;
}

int Monomial::max_index() const {
  int top = 0;
  for (const auto& f : factors()) top = std::max<int>(top, f.b);
  return top;
}

std::string Monomial::to_string() const {
  if (size_ == 0) return "1";
  std::string out;
  for (const auto& f : factors())
    out += "w(" + std::to_string(f.a) + "," + std::to_string(f.b) + ")";
  return out;
}

AlgebraElement::AlgebraElement(int n, int degree) : n_(n), degree_(degree) {
  if (n < 1 || degree < 0) throw ContractViolation("Arnold algebra needs n >= 1 and degree >= 0");
}

AlgebraElement AlgebraElement::from_monomial(int n, const Monomial& m, const Rational& coefficient) {
  AlgebraElement x(n, m.degree());
  x.add(m, coefficient);
  return x;
}

Rational AlgebraElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add(const Monomial& m, const Rational& c) {
  if (m.degree() != degree_ || !m.is_normal_form() || m.max_index() > n_)
    throw ContractViolation("term " + m.to_string() + " is not a degree-" + std::to_string(degree_) +
                            " normal-form monomial of R_" + std::to_string(n_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  if (other.n_ != n_ || other.degree_ != degree_)
    throw ContractViolation("adding elements of different Arnold algebras or degrees");
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " ";
    out += (it->second > 0 ? "+" : "") + modstab::to_string(it->second) + " " + it->first.to_string();
  }
  return out;
}

namespace {

void enumerate_basis(int n, int degree, int min_b, Monomial& prefix, std::vector<Monomial>& out) {
  if (prefix.degree() == degree) {
    out.push_back(prefix);
    return;
  }
  const int still_needed = degree - prefix.degree();
  for (int b = min_b; b + still_needed - 1 <= n; ++b) {
    for (int a = 1; a < b; ++a) {
      Monomial next = prefix;
      next.push_back(GeneratorFactor::make(a, b));
      enumerate_basis(n, degree, b + 1, next, out);
    }
  }
}

// Sorts the word by (second index, first index) with one sign flip per
// adjacent transposition. Returns 0 if a factor repeats (ω² = 0).
int sort_with_sign(Monomial& word) {
  int sign = 1;
  for (int k = 1; k < word.degree(); ++k) {
    for (int j = k; j > 0; --j) {
      const auto& left = word[j - 1];
      const auto& right = word[j];
      if (left == right) return 0;
      if (std::pair(left.b, left.a) < std::pair(right.b, right.a)) break;
      std::swap(word[j - 1], word[j]);
      sign = -sign;
    }
  }
  return sign;
}

#ifdef MODSTAB_MUTATE_STRAIGHTEN_SIGN
constexpr long kSecondTermSign = +1;
#else
constexpr long kSecondTermSign = -1;
#endif

// Expands `word` into normal-form monomials, calling emit(monomial, coefficient)
// for each normal-form leaf. Terms may repeat; the caller accumulates.
template <typename Emit>
void straighten_leaves(const Monomial& word, long coefficient, Emit&& emit) {
  std::vector<std::pair<Monomial, long>> stack;
  stack.emplace_back(word, coefficient);
  while (!stack.empty()) {
    auto [current, c] = std::move(stack.back());
    stack.pop_back();
    const int sign = sort_with_sign(current);
    if (sign == 0) continue;
    c *= sign;
    int clash = -1;
    for (int k = 0; k + 1 < current.degree(); ++k) {
      if (current[k].b == current[k + 1].b) {
        clash = k;
        break;
      }
    }
    if (clash < 0) {
      emit(current, c);
      continue;
    }
    // ω_{a,b} ω_{c,b} = ω_{a,c} ω_{c,b} - ω_{a,c} ω_{a,b}   (a < c < b)
    const int a = current[clash].a;
    const int cc = current[clash + 1].a;
    const int b = current[clash].b;
    Monomial first = current;
    first[clash] = GeneratorFactor::make(a, cc);
    first[clash + 1] = GeneratorFactor::make(cc, b);
    Monomial second = current;
    second[clash] = GeneratorFactor::make(a, cc);
    second[clash + 1] = GeneratorFactor::make(a, b);
    stack.emplace_back(std::move(first), c);
    stack.emplace_back(std::move(second), kSecondTermSign * c);
  }
}

Monomial relabel(const Permutation& sigma, const Monomial& m) {
  Monomial image;
  for (const auto& f : m.factors()) image.push_back(GeneratorFactor::make(sigma(f.a), sigma(f.b)));
  return image;
}

struct CharacterCache {
  std::mutex mutex;
  std::map<std::pair<int, int>, std::unique_ptr<const ClassFunction>> values;
};

CharacterCache& character_cache() {
  static CharacterCache instance;
  return instance;
}

ClassFunction compute_character(int n, int degree) {
  const auto monomials = basis(n, degree);
  const auto& classes = partitions_cached(n);
  std::vector<Rational> values(classes.size());

  auto trace_of_class = [&](std::size_t k) {
    const Permutation sigma = Permutation::representative(classes[k]);
    long trace = 0;
    for (const auto& m : monomials) trace += straighten_coefficient(relabel(sigma, m).factors(), m);
    values[k] = trace;
  };

  const std::size_t workers =
      std::min<std::size_t>(classes.size(), std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1 || monomials.size() < 64) {
    for (std::size_t k = 0; k < classes.size(); ++k) trace_of_class(k);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < classes.size(); k += workers) trace_of_class(k);
      });
    }
  }
  return ClassFunction(n, std::move(values));
}

}  // namespace

std::vector<Monomial> basis(int n, int degree) {
  if (n < 1 || degree < 0) throw ContractViolation("basis needs n >= 1 and degree >= 0");
  std::vector<Monomial> out;
  if (degree > Monomial::kCapacity) return out;
  Monomial prefix;
  enumerate_basis(n, degree, 2, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

AlgebraElement straighten(int n, std::span<const GeneratorFactor> word) {
  const Monomial w(word);
  if (w.max_index() > n) throw ContractViolation("word " + w.to_string() + " has an index above n = " + std::to_string(n));
  std::map<Monomial, long> accumulated;
  straighten_leaves(w, 1, [&](const Monomial& m, long c) { accumulated[m] += c; });
  AlgebraElement out(n, w.degree());
  for (const auto& [m, c] : accumulated) out.add(m, Rational(c));
  return out;
}

long straighten_coefficient(std::span<const GeneratorFactor> word, const Monomial& target) {
  long total = 0;
  straighten_leaves(Monomial(word), 1, [&](const Monomial& m, long c) {
    if (m == target) total += c;
  });
  return total;
}

AlgebraElement act(const Permutation& sigma, const AlgebraElement& x) {
  if (sigma.degree() != x.ambient()) throw ContractViolation("permutation and element live over different n");
  AlgebraElement out(x.ambient(), x.degree());
  for (const auto& [m, c] : x.terms()) {
    const Monomial image = relabel(sigma, m);
    out += straighten(x.ambient(), image.factors()) * c;
  }
  return out;
}

const ClassFunction& character(int n, int degree) {
  if (n < 1 || degree < 0) throw ContractViolation("character needs n >= 1 and degree >= 0");
  auto& cache = character_cache();
  const auto key = std::pair(n, degree);
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.values.find(key);
    if (it != cache.values.end()) return *it->second;
  }
  auto computed = std::make_unique<const ClassFunction>(compute_character(n, degree));
  std::lock_guard lock(cache.mutex);
  auto [it, inserted] = cache.values.emplace(key, std::move(computed));
  return *it->second;
}

}  // namespace modstab
