#include "ydlcat/network.hpp"

#include <algorithm>
#include <numeric>

#include "ydlcat/errors.hpp"

namespace ydlcat {

namespace {

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

void compact(SparseVec& v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < v.size();) {
    std::size_t idx = v[r].first;
    Scalar sum = v[r].second;
    for (++r; r < v.size() && v[r].first == idx; ++r) sum += v[r].second;
    if (!sum.is_zero()) v[w++] = {idx, std::move(sum)};
  }
  v.resize(w);
}

}  // namespace

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

LegNetwork::LegNetwork(FieldCtx field, std::vector<std::size_t> legs)
    : field_(field), input_legs_(legs), legs_(std::move(legs)) {}

LegNetwork& LegNetwork::act(std::size_t first, std::size_t count, const Matrix& op,
                            std::vector<std::size_t> out_legs) {
  if (first + count > legs_.size()) {
    throw DimensionMismatch("LegNetwork::act: leg range out of bounds");
  }
  if (!(op.field() == field_)) throw FieldMismatch("LegNetwork::act");
  Step s;
  s.prefix = product({legs_.begin(), legs_.begin() + first});
  s.in = product({legs_.begin() + first, legs_.begin() + first + count});
  s.suffix = product({legs_.begin() + first + count, legs_.end()});
  s.out = product(out_legs);
  if (op.cols() != s.in || op.rows() != s.out) {
    throw DimensionMismatch("LegNetwork::act: operator is " + std::to_string(op.rows()) +
                            "x" + std::to_string(op.cols()) + ", legs need " +
                            std::to_string(s.out) + "x" + std::to_string(s.in));
  }
  s.columns.resize(s.in);
  for (std::size_t c = 0; c < s.in; ++c)
    for (std::size_t r = 0; r < s.out; ++r)
      if (!op(r, c).is_zero()) s.columns[c].emplace_back(r, op(r, c));
  legs_.erase(legs_.begin() + first, legs_.begin() + first + count);
  legs_.insert(legs_.begin() + first, out_legs.begin(), out_legs.end());
  steps_.push_back(std::move(s));
  return *this;
}

LegNetwork& LegNetwork::act(std::size_t leg, const Matrix& op) {
  if (leg >= legs_.size()) throw DimensionMismatch("LegNetwork::act: no such leg");
  return act(leg, 1, op, {legs_[leg]});
}

LegNetwork& LegNetwork::permute(std::vector<std::size_t> order) {
  if (order.size() != legs_.size()) {
    throw DimensionMismatch("LegNetwork::permute: order has wrong length");
  }
  std::vector<bool> seen(order.size(), false);
  for (auto o : order) {
    if (o >= order.size() || seen[o]) {
      throw DimensionMismatch("LegNetwork::permute: not a permutation");
    }
    seen[o] = true;
  }
  Step s;
  s.is_permutation = true;
  s.in_legs = legs_;
  s.order = order;
  std::vector<std::size_t> next(legs_.size());
  for (std::size_t i = 0; i < order.size(); ++i) next[i] = legs_[order[i]];
  legs_ = std::move(next);
  steps_.push_back(std::move(s));
  return *this;
}

LegNetwork& LegNetwork::swap(std::size_t leg) {
  std::vector<std::size_t> order(legs_.size());
  std::iota(order.begin(), order.end(), 0);
  std::swap(order.at(leg), order.at(leg + 1));
  return permute(std::move(order));
}

Matrix LegNetwork::matrix() const {
  const std::size_t in_dim = product(input_legs_);
  const std::size_t out_dim = product(legs_);
  Matrix result(field_, out_dim, in_dim);
  SparseVec cur, next;
  for (std::size_t col = 0; col < in_dim; ++col) {
    cur.clear();
    cur.emplace_back(col, Scalar::one(field_));
    for (const Step& s : steps_) {
      next.clear();
      if (s.is_permutation) {
        const std::size_t k = s.in_legs.size();
        // Strides of the old legs measured in the new layout.
        std::vector<std::size_t> new_stride(k);
        std::size_t stride = 1;
        for (std::size_t i = k; i-- > 0;) {
          new_stride[s.order[i]] = stride;
          stride *= s.in_legs[s.order[i]];
        }
        for (const auto& [idx, v] : cur) {
          std::size_t rest = idx, out = 0;
          for (std::size_t i = k; i-- > 0;) {
            out += (rest % s.in_legs[i]) * new_stride[i];
            rest /= s.in_legs[i];
          }
          next.emplace_back(out, v);
        }
      } else {
        for (const auto& [idx, v] : cur) {
          const std::size_t c = idx % s.suffix;
          const std::size_t b = (idx / s.suffix) % s.in;
          const std::size_t a = idx / (s.suffix * s.in);
          for (const auto& [r, w] : s.columns[b]) {
            next.emplace_back((a * s.out + r) * s.suffix + c, v * w);
          }
        }
      }
      compact(next);
      std::swap(cur, next);
      if (cur.empty()) break;
    }
    for (const auto& [idx, v] : cur) result(idx, col) = v;
  }
  return result;
}

}  // namespace ydlcat
