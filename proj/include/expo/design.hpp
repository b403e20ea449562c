#ifndef EXPO_DESIGN_HPP
#define EXPO_DESIGN_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "expo/rational.hpp"

namespace expo {

// One intervention: the vector of treatment (or sampling) assignments for
// all N units. Code 0 means control/unsampled; positive codes are treatment
// levels or ordinal sampling positions.
using Assignment = std::vector<int>;

// Enumeration cap for exact operations. Constructors whose support would
// exceed the cap return sampler-only designs; exact operations on those
// throw EnumerationCapExceeded while sampling keeps working.
// EXPOSURE_ENGINE_CAP overrides the default of 2e6 support points.
std::uint64_t enumeration_cap();

struct ValidationResult {
  bool ok = true;
  std::string error;  // first violated invariant when !ok
};

// A design: a probability distribution over assignment vectors with exact
// rational masses. Immutable after construction; all downstream modules
// treat designs as read-only values, so sharing across workers is safe.
class Design {
 public:
  enum class Kind { Explicit, Bernoulli, CompleteRandomization, OrderedSample, ClusterComplete };

  // Explicit support with rational masses.
  Design(int n_units, std::vector<Assignment> support, std::vector<Rational> mass,
         std::string label = "explicit");

  int n_units() const { return n_units_; }
  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }

  // False for sampler-only designs (support would exceed the cap).
  bool enumerable() const { return !support_.empty() || support_size_ == 0; }
  // Exact support size, even when not materialized.
  const mpz_class& support_size() const { return support_size_; }

  const std::vector<Assignment>& support() const;
  const std::vector<Rational>& mass() const;

  // Draws one assignment vector with probability equal to its mass.
  // Deterministic given the seed; fresh stream per call.
  Assignment sample(std::uint64_t seed) const;

  // Constructor parameters for the standard kinds (empty for Explicit).
  Rational bernoulli_p() const { return p_; }
  int treated_count() const { return m_; }
  int sample_count() const { return m_; }
  const std::vector<int>& cluster_of() const { return cluster_of_; }

  friend Design make_bernoulli_design(int n_units, const Rational& p,
                                      std::uint64_t cap);
  friend Design make_complete_randomization(int n_units, int treated,
                                            std::uint64_t cap);
  friend Design make_ordered_sample_design(int n_units, int sampled,
                                           std::uint64_t cap);
  friend Design make_cluster_complete_design(const std::vector<int>& cluster_of,
                                             int treated_clusters,
                                             std::uint64_t cap);

 private:
  Design() = default;

  int n_units_ = 0;
  Kind kind_ = Kind::Explicit;
  std::string label_;
  std::vector<Assignment> support_;  // empty when sampler-only
  std::vector<Rational> mass_;
  mpz_class support_size_ = 0;
  Rational p_;                    // Bernoulli
  int m_ = 0;                     // treated count / sample size / treated clusters
  std::vector<int> cluster_of_;   // ClusterComplete
};

// Checks the Design invariants on explicit data before construction:
// lengths match N, masses positive, support vectors distinct, masses sum
// to exactly 1. Reports the first violated invariant.
ValidationResult validate_design(int n_units, const std::vector<Assignment>& support,
                                 const std::vector<Rational>& mass);
ValidationResult validate_design(const Design& design);

// All of {0,1}^N with mass p^(#ones) (1-p)^(#zeros). Requires 0 < p < 1.
Design make_bernoulli_design(int n_units, const Rational& p, std::uint64_t cap = 0);

// All binary vectors with exactly `treated` ones, uniform mass.
Design make_complete_randomization(int n_units, int treated, std::uint64_t cap = 0);

// All ordered selections of `sampled` distinct units; a selected unit
// carries its ordinal position 1..n, others carry 0. Uniform mass
// (N-n)!/N!.
Design make_ordered_sample_design(int n_units, int sampled, std::uint64_t cap = 0);

// Complete randomization over clusters, lifted to units: `treated_clusters`
// of the clusters are treated uniformly at random and every unit inherits
// its cluster's assignment. Used for cluster-aligned partial-interference
// populations.
Design make_cluster_complete_design(const std::vector<int>& cluster_of,
                                    int treated_clusters, std::uint64_t cap = 0);

// Yields every (assignment, mass) support pair exactly once.
void enumerate_support(const Design& design,
                       const std::function<void(const Assignment&, const Rational&)>& visit);

// The design space Z of feasible interventions. SUTVA quantifies over this;
// NURVA only over a design's support. May strictly contain any associated
// design's support.
class DesignSpace {
 public:
  enum class Kind {
    Explicit,       // a literal list of vectors
    Binary,         // all of {0,1}^N
    Ternary,        // all of {0,1,2}^N
    OrderedUpTo,    // all ordered selections of at most `max_sampled` units
  };

  static DesignSpace explicit_space(int n_units, std::vector<Assignment> vectors);
  static DesignSpace binary(int n_units);
  static DesignSpace ternary(int n_units);
  static DesignSpace ordered_up_to(int n_units, int max_sampled);

  int n_units() const { return n_units_; }
  Kind kind() const { return kind_; }
  int max_sampled() const { return max_sampled_; }
  mpz_class size() const;

  bool contains(const Assignment& z) const;
  // Feasible vectors in ascending lexicographic order.
  void enumerate(const std::function<void(const Assignment&)>& visit) const;

  // Checks that every support vector of `design` is feasible here.
  ValidationResult check_pairing(const Design& design) const;

 private:
  DesignSpace() = default;
  int n_units_ = 0;
  Kind kind_ = Kind::Binary;
  int max_sampled_ = 0;
  std::vector<Assignment> vectors_;
};

}  // namespace expo

#endif  // EXPO_DESIGN_HPP
