#pragma once

#include <cstddef>
#include <vector>

#include "ydlcat/matrix.hpp"

namespace ydlcat {

/// Builds a linear map on a tensor product V_0 (x) ... (x) V_{k-1} as a
/// sequence of local steps: apply a matrix to a run of adjacent legs, or
/// permute legs. Sweedler-style formulas become short pipelines, e.g.
///
///   LegNetwork(f, {n, d})          // h (x) m
///       .act(0, 1, comult, {n, n}) // h_1 (x) h_2 (x) m
///       .act(1, 2, action, {d})    // h_1 (x) (h_2 > m)
///
/// The full operator is never materialized: matrix() pushes each input basis
/// vector through the steps as a sparse vector.
class LegNetwork {
 public:
  LegNetwork(FieldCtx field, std::vector<std::size_t> legs);

  /// Replaces legs [first, first + count) by out_legs, acting with op. The op
  /// must be prod(out_legs) x prod(in legs); count == 0 inserts legs (op is a
  /// column) and an empty out_legs contracts them away (op is a row).
  LegNetwork& act(std::size_t first, std::size_t count, const Matrix& op,
                  std::vector<std::size_t> out_legs);
  /// Applies a square op to a single leg.
  LegNetwork& act(std::size_t leg, const Matrix& op);
  /// New leg i is old leg order[i].
  LegNetwork& permute(std::vector<std::size_t> order);
  /// Swaps two adjacent legs.
  LegNetwork& swap(std::size_t leg);

  const std::vector<std::size_t>& legs() const { return legs_; }
  const std::vector<std::size_t>& input_legs() const { return input_legs_; }

  /// prod(legs) x prod(input_legs)
  Matrix matrix() const;

 private:
  struct Step {
    bool is_permutation = false;
    // act
    std::size_t prefix = 1, in = 1, out = 1, suffix = 1;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns;
    // permute
    std::vector<std::size_t> in_legs;
    std::vector<std::size_t> order;
  };

  FieldCtx field_;
  std::vector<std::size_t> input_legs_;
  std::vector<std::size_t> legs_;
  std::vector<Step> steps_;
};

std::size_t product(const std::vector<std::size_t>& dims);

}  // namespace ydlcat
