#include "expo/design.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

#include "expo/errors.hpp"
#include "expo/rng.hpp"

namespace expo {

std::uint64_t enumeration_cap() {
  static const std::uint64_t cap = [] {
    if (const char* env = std::getenv("EXPOSURE_ENGINE_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{2'000'000};
  }();
  return cap;
}

namespace {

std::uint64_t effective_cap(std::uint64_t cap) {
  return cap == 0 ? enumeration_cap() : cap;
}

}  // namespace

ValidationResult validate_design(int n_units, const std::vector<Assignment>& support,
                                 const std::vector<Rational>& mass) {
  if (n_units <= 0) return {false, "population size must be positive"};
  if (support.size() != mass.size())
    return {false, "support and mass lists have different lengths"};
  if (support.empty()) return {false, "support is empty"};
  for (size_t k = 0; k < support.size(); ++k) {
    if (static_cast<int>(support[k].size()) != n_units)
      return {false, "support vector " + std::to_string(k) + " has length " +
                         std::to_string(support[k].size()) + ", expected " +
                         std::to_string(n_units)};
    for (int code : support[k]) {
      if (code < 0)
        return {false, "support vector " + std::to_string(k) +
                           " contains a negative assignment code"};
    }
  }
  for (size_t k = 0; k < mass.size(); ++k) {
    if (mass[k] <= 0)
      return {false, "mass " + std::to_string(k) + " is not strictly positive"};
  }
  {
    std::map<Assignment, size_t> seen;
    for (size_t k = 0; k < support.size(); ++k) {
      auto [it, inserted] = seen.emplace(support[k], k);
      if (!inserted)
        return {false, "duplicate support vector at positions " +
                           std::to_string(it->second) + " and " + std::to_string(k)};
    }
  }
  Rational total = std::accumulate(mass.begin(), mass.end(), Rational(0));
  if (total != 1)
    return {false, "masses sum to " + to_decimal_string(total) + ", expected 1"};
  return {};
}

ValidationResult validate_design(const Design& design) {
  if (!design.enumerable()) return {};  // sampler-only designs hold by construction
  return validate_design(design.n_units(), design.support(), design.mass());
}

Design::Design(int n_units, std::vector<Assignment> support, std::vector<Rational> mass,
               std::string label)
    : n_units_(n_units),
      kind_(Kind::Explicit),
      label_(std::move(label)),
      support_(std::move(support)),
      mass_(std::move(mass)),
      support_size_(static_cast<unsigned long>(support_.size())) {
  ValidationResult v = validate_design(n_units_, support_, mass_);
  if (!v.ok) throw InputError("invalid design: " + v.error);
}

const std::vector<Assignment>& Design::support() const {
  if (!enumerable())
    throw EnumerationCapExceeded("design '" + label_ + "' has " +
                                 support_size_.get_str() +
                                 " support points, beyond the enumeration cap");
  return support_;
}

const std::vector<Rational>& Design::mass() const {
  support();  // enumerability check
  return mass_;
}

Design make_bernoulli_design(int n_units, const Rational& p, std::uint64_t cap) {
  if (n_units <= 0) throw InputError("population size must be positive");
  if (!(p > 0 && p < 1)) throw InputError("bernoulli design requires 0 < p < 1");
  Design d;
  d.n_units_ = n_units;
  d.kind_ = Design::Kind::Bernoulli;
  d.label_ = "bernoulli";
  d.p_ = p;
  mpz_class size = 1;
  size <<= n_units;
  d.support_size_ = size;
  if (size > effective_cap(cap)) return d;  // sampler-only

  const std::uint64_t count = size.get_ui();
  Rational q = 1 - p;
  d.support_.reserve(count);
  d.mass_.reserve(count);
  Assignment z(n_units, 0);
  for (std::uint64_t v = 0; v < count; ++v) {
    int ones = 0;
    for (int i = 0; i < n_units; ++i) {
      // lexicographic order: last unit varies fastest
      int bit = (v >> (n_units - 1 - i)) & 1;
      z[i] = bit;
      ones += bit;
    }
    Rational m = 1;
    for (int k = 0; k < ones; ++k) m *= p;
    for (int k = 0; k < n_units - ones; ++k) m *= q;
    d.support_.push_back(z);
    d.mass_.push_back(m);
  }
  return d;
}

Design make_complete_randomization(int n_units, int treated, std::uint64_t cap) {
  if (n_units <= 0) throw InputError("population size must be positive");
  if (treated < 0 || treated > n_units)
    throw InputError("treated count must lie in [0, N]");
  Design d;
  d.n_units_ = n_units;
  d.kind_ = Design::Kind::CompleteRandomization;
  d.label_ = "complete_randomization";
  d.m_ = treated;
  d.support_size_ = binomial(n_units, treated);
  if (d.support_size_ > effective_cap(cap)) return d;

  Rational m(1, d.support_size_);
  m.canonicalize();
  // Combinations in lexicographic order of the resulting binary vectors.
  std::vector<int> idx(treated);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    Assignment z(n_units, 0);
    for (int i : idx) z[i] = 1;
    d.support_.push_back(std::move(z));
    d.mass_.push_back(m);
    int k = treated - 1;
    while (k >= 0 && idx[k] == n_units - treated + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < treated; ++j) idx[j] = idx[j - 1] + 1;
  }
  return d;
}

Design make_ordered_sample_design(int n_units, int sampled, std::uint64_t cap) {
  if (n_units <= 0) throw InputError("population size must be positive");
  if (sampled < 1 || sampled > n_units)
    throw InputError("sample size must lie in [1, N]");
  Design d;
  d.n_units_ = n_units;
  d.kind_ = Design::Kind::OrderedSample;
  d.label_ = "ordered_sample";
  d.m_ = sampled;
  d.support_size_ = falling_factorial(n_units, sampled);
  if (d.support_size_ > effective_cap(cap)) return d;

  Rational m(1, d.support_size_);
  m.canonicalize();
  // Ordered selections (u_1, ..., u_n) of distinct units, lexicographic;
  // unit u_k is assigned ordinal position k+1.
  std::vector<int> pick(sampled, 0);
  std::vector<bool> used(n_units, false);
  std::function<void(int)> rec = [&](int depth) {
    if (depth == sampled) {
      Assignment z(n_units, 0);
      for (int k = 0; k < sampled; ++k) z[pick[k]] = k + 1;
      d.support_.push_back(std::move(z));
      d.mass_.push_back(m);
      return;
    }
    for (int u = 0; u < n_units; ++u) {
      if (used[u]) continue;
      used[u] = true;
      pick[depth] = u;
      rec(depth + 1);
      used[u] = false;
    }
  };
  rec(0);
  return d;
}

Design make_cluster_complete_design(const std::vector<int>& cluster_of,
                                    int treated_clusters, std::uint64_t cap) {
  if (cluster_of.empty()) throw InputError("population size must be positive");
  int n_clusters = 1 + *std::max_element(cluster_of.begin(), cluster_of.end());
  for (int c : cluster_of)
    if (c < 0) throw InputError("cluster ids must be non-negative");
  if (treated_clusters < 0 || treated_clusters > n_clusters)
    throw InputError("treated cluster count must lie in [0, #clusters]");
  Design d;
  d.n_units_ = static_cast<int>(cluster_of.size());
  d.kind_ = Design::Kind::ClusterComplete;
  d.label_ = "cluster_complete";
  d.m_ = treated_clusters;
  d.cluster_of_ = cluster_of;
  d.support_size_ = binomial(n_clusters, treated_clusters);
  if (d.support_size_ > effective_cap(cap)) return d;

  Rational m(1, d.support_size_);
  m.canonicalize();
  std::vector<int> idx(treated_clusters);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<bool> on(n_clusters, false);
    for (int c : idx) on[c] = true;
    Assignment z(d.n_units_, 0);
    for (int i = 0; i < d.n_units_; ++i) z[i] = on[cluster_of[i]] ? 1 : 0;
    d.support_.push_back(std::move(z));
    d.mass_.push_back(m);
    int k = treated_clusters - 1;
    while (k >= 0 && idx[k] == n_clusters - treated_clusters + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < treated_clusters; ++j) idx[j] = idx[j - 1] + 1;
  }
  return d;
}

namespace {

// m distinct values from [0, n) via partial Fisher-Yates on an index array.
std::vector<int> draw_subset(int n, int m, Rng& rng) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (int k = 0; k < m; ++k) {
    int j = k + static_cast<int>(rng.next_below(n - k));
    std::swap(idx[k], idx[j]);
  }
  idx.resize(m);
  return idx;
}

}  // namespace

Assignment Design::sample(std::uint64_t seed) const {
  Rng rng(seed);
  switch (kind_) {
    case Kind::Explicit: {
      // Inverse-CDF draw with exact rational comparison: u = k/2^53.
      std::uint64_t bits = rng.next_u64() >> 11;
      Rational u(mpz_class(static_cast<unsigned long>(bits)), mpz_class(1) << 53);
      u.canonicalize();
      Rational cum = 0;
      for (size_t k = 0; k < support_.size(); ++k) {
        cum += mass_[k];
        if (u < cum) return support_[k];
      }
      return support_.back();
    }
    case Kind::Bernoulli: {
      const double p = to_double(p_);
      Assignment z(n_units_, 0);
      for (int i = 0; i < n_units_; ++i) z[i] = rng.next_double() < p ? 1 : 0;
      return z;
    }
    case Kind::CompleteRandomization: {
      Assignment z(n_units_, 0);
      for (int i : draw_subset(n_units_, m_, rng)) z[i] = 1;
      return z;
    }
    case Kind::OrderedSample: {
      Assignment z(n_units_, 0);
      std::vector<int> order = draw_subset(n_units_, m_, rng);
      for (int k = 0; k < m_; ++k) z[order[k]] = k + 1;
      return z;
    }
    case Kind::ClusterComplete: {
      int n_clusters = 1 + *std::max_element(cluster_of_.begin(), cluster_of_.end());
      std::vector<bool> on(n_clusters, false);
      for (int c : draw_subset(n_clusters, m_, rng)) on[c] = true;
      Assignment z(n_units_, 0);
      for (int i = 0; i < n_units_; ++i) z[i] = on[cluster_of_[i]] ? 1 : 0;
      return z;
    }
  }
  throw std::logic_error("unreachable design kind");
}

void enumerate_support(const Design& design,
                       const std::function<void(const Assignment&, const Rational&)>& visit) {
  const auto& support = design.support();
  const auto& mass = design.mass();
  for (size_t k = 0; k < support.size(); ++k) visit(support[k], mass[k]);
}

DesignSpace DesignSpace::explicit_space(int n_units, std::vector<Assignment> vectors) {
  if (n_units <= 0) throw InputError("population size must be positive");
  DesignSpace s;
  s.n_units_ = n_units;
  s.kind_ = Kind::Explicit;
  for (const auto& z : vectors)
    if (static_cast<int>(z.size()) != n_units)
      throw InputError("design-space vector has wrong length");
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  s.vectors_ = std::move(vectors);
  return s;
}

DesignSpace DesignSpace::binary(int n_units) {
  DesignSpace s;
  s.n_units_ = n_units;
  s.kind_ = Kind::Binary;
  return s;
}

DesignSpace DesignSpace::ternary(int n_units) {
  DesignSpace s;
  s.n_units_ = n_units;
  s.kind_ = Kind::Ternary;
  return s;
}

DesignSpace DesignSpace::ordered_up_to(int n_units, int max_sampled) {
  if (max_sampled < 0 || max_sampled > n_units)
    throw InputError("max sample size must lie in [0, N]");
  DesignSpace s;
  s.n_units_ = n_units;
  s.kind_ = Kind::OrderedUpTo;
  s.max_sampled_ = max_sampled;
  return s;
}

mpz_class DesignSpace::size() const {
  switch (kind_) {
    case Kind::Explicit:
      return mpz_class(static_cast<unsigned long>(vectors_.size()));
    case Kind::Binary: {
      mpz_class s = 1;
      s <<= n_units_;
      return s;
    }
    case Kind::Ternary: {
      mpz_class s = 1;
      for (int i = 0; i < n_units_; ++i) s *= 3;
      return s;
    }
    case Kind::OrderedUpTo: {
      mpz_class s = 0;
      for (int k = 0; k <= max_sampled_; ++k) s += falling_factorial(n_units_, k);
      return s;
    }
  }
  throw std::logic_error("unreachable design-space kind");
}

bool DesignSpace::contains(const Assignment& z) const {
  if (static_cast<int>(z.size()) != n_units_) return false;
  switch (kind_) {
    case Kind::Explicit:
      return std::binary_search(vectors_.begin(), vectors_.end(), z);
    case Kind::Binary:
      return std::all_of(z.begin(), z.end(), [](int c) { return c == 0 || c == 1; });
    case Kind::Ternary:
      return std::all_of(z.begin(), z.end(), [](int c) { return c >= 0 && c <= 2; });
    case Kind::OrderedUpTo: {
      // positions 1..k for exactly the selected units, no repeats
      int top = 0;
      std::vector<bool> seen(n_units_ + 1, false);
      for (int c : z) {
        if (c < 0 || c > max_sampled_) return false;
        if (c == 0) continue;
        if (seen[c]) return false;
        seen[c] = true;
        top = std::max(top, c);
      }
      for (int k = 1; k <= top; ++k)
        if (!seen[k]) return false;
      return true;
    }
  }
  return false;
}

void DesignSpace::enumerate(const std::function<void(const Assignment&)>& visit) const {
  if (size() > enumeration_cap())
    throw EnumerationCapExceeded("design space has " + size().get_str() +
                                 " vectors, beyond the enumeration cap");
  switch (kind_) {
    case Kind::Explicit:
      for (const auto& z : vectors_) visit(z);
      return;
    case Kind::Binary:
    case Kind::Ternary: {
      const int base = kind_ == Kind::Binary ? 2 : 3;
      Assignment z(n_units_, 0);
      for (;;) {
        visit(z);
        int i = n_units_ - 1;
        while (i >= 0 && z[i] == base - 1) z[i--] = 0;
        if (i < 0) return;
        ++z[i];
      }
    }
    case Kind::OrderedUpTo: {
      // All ordered selections of 0..max_sampled units, in ascending
      // lexicographic order of the assignment vectors.
      std::vector<Assignment> all;
      for (int k = 0; k <= max_sampled_; ++k) {
        if (k == 0) {
          all.emplace_back(n_units_, 0);
          continue;
        }
        std::vector<int> pick(k, 0);
        std::vector<bool> used(n_units_, false);
        std::function<void(int)> rec = [&](int depth) {
          if (depth == k) {
            Assignment z(n_units_, 0);
            for (int j = 0; j < k; ++j) z[pick[j]] = j + 1;
            all.push_back(std::move(z));
            return;
          }
          for (int u = 0; u < n_units_; ++u) {
            if (used[u]) continue;
            used[u] = true;
            pick[depth] = u;
            rec(depth + 1);
            used[u] = false;
          }
        };
        rec(0);
      }
      std::sort(all.begin(), all.end());
      for (const auto& z : all) visit(z);
      return;
    }
  }
}

ValidationResult DesignSpace::check_pairing(const Design& design) const {
  if (design.n_units() != n_units_)
    return {false, "design and design space disagree on population size"};
  if (!design.enumerable()) return {};  // nothing to verify without a support list
  for (const auto& z : design.support()) {
    if (!contains(z)) {
      std::string repr = "(";
      for (size_t i = 0; i < z.size(); ++i)
        repr += (i ? "," : "") + std::to_string(z[i]);
      repr += ")";
      return {false, "support vector " + repr + " is not feasible in the design space"};
    }
  }
  return {};
}

}  // namespace expo
