#ifndef EXPO_EXPOSURE_HPP
#define EXPO_EXPOSURE_HPP

#include <map>
#include <string>
#include <vector>

#include "expo/design.hpp"

namespace expo {

struct ExposureLabel {
  int code = 0;
  std::string name;
};

// Undirected peer network: symmetric binary matrix with zero diagonal.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(std::vector<std::vector<int>> entries);
  int n_units() const { return static_cast<int>(entries_.size()); }
  int at(int i, int j) const { return entries_[i][j]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

 private:
  std::vector<std::vector<int>> entries_;
};

// Network exposure label codes (the four-arm mapping).
enum NetworkExposure : int {
  kControl = 0,         // untreated, no treated neighbor
  kIsolatedDirect = 1,  // treated, no treated neighbor
  kIndirect = 2,        // untreated, at least one treated neighbor
  kDirectIndirect = 3,  // treated, at least one treated neighbor
};

// Per-unit rule g_i collapsing an assignment vector into an exposure label.
// Mappings are immutable rule objects evaluated lazily per assignment
// vector; evaluation is pure, so parallel use over (unit, assignment)
// pairs is safe.
class ExposureMapping {
 public:
  enum class Kind { Individualistic, Carryover, SurveyIndicator, Network, Table };

  int n_units() const { return n_units_; }
  Kind kind() const { return kind_; }

  // g_i(z). Unit index is 0-based; label is the exposure code.
  int label_of(int unit, const Assignment& z) const;

  // The whole exposure vector D = (g_1(z), ..., g_N(z)).
  std::vector<int> apply(const Assignment& z) const;

  // Known label set (codes with names). For table mappings this is the
  // set observed in the table; individualistic label sets list the codes
  // seen so far plus {0,1} as a base.
  const std::vector<ExposureLabel>& labels() const { return labels_; }

  const AdjacencyMatrix* adjacency() const {
    return kind_ == Kind::Network ? &adjacency_ : nullptr;
  }
  const std::map<Assignment, std::vector<int>>& table() const { return table_; }

  friend ExposureMapping make_individualistic_mapping(int n_units);
  friend ExposureMapping make_carryover_mapping(int n_units);
  friend ExposureMapping make_survey_indicator_mapping(int n_units);
  friend ExposureMapping make_network_mapping(const AdjacencyMatrix& adj);
  friend ExposureMapping make_table_mapping(int n_units,
                                            std::map<Assignment, std::vector<int>> table);

 private:
  ExposureMapping() : adjacency_({{0}}) {}

  int n_units_ = 0;
  Kind kind_ = Kind::Individualistic;
  std::vector<ExposureLabel> labels_;
  AdjacencyMatrix adjacency_;
  std::map<Assignment, std::vector<int>> table_;
};

// g_i(z) = z_i.
ExposureMapping make_individualistic_mapping(int n_units);

// One-period carryover: g_i(z) = 1 iff z_i = 1 or z_{i-1} = 1 (z_0 = 0).
ExposureMapping make_carryover_mapping(int n_units);

// Survey membership: g_i(z) = 1 iff z_i > 0 (any ordinal position).
ExposureMapping make_survey_indicator_mapping(int n_units);

// Four-arm network mapping: own assignment crossed with whether any
// neighbor is treated.
ExposureMapping make_network_mapping(const AdjacencyMatrix& adj);

// Explicit table z -> exposure vector; errors on out-of-table vectors.
ExposureMapping make_table_mapping(int n_units,
                                   std::map<Assignment, std::vector<int>> table);

std::vector<int> apply_exposure(const ExposureMapping& mapping, const Assignment& z);

}  // namespace expo

#endif  // EXPO_EXPOSURE_HPP
