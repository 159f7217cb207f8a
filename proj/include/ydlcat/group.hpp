#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ydlcat {

/// A finite group given by its multiplication table over indices 0..order-1.
class GroupTable {
 public:
  /// Validates closure, associativity, a two-sided identity and inverses;
  /// throws InvalidGroupTable otherwise.
  GroupTable(std::string name, std::vector<std::vector<std::size_t>> table,
             std::vector<std::string> labels = {});

  static GroupTable trivial();
  static GroupTable cyclic(std::size_t n);
  /// Permutations of {1,2,3} in lexicographic order, composed right to left.
  static GroupTable symmetric3();
  /// "C<n>", "S3" or "trivial".
  static GroupTable by_name(const std::string& name);

  const std::string& name() const { return name_; }
  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.table_ == b.table_;
  }

 private:
  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::string> labels_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// A group automorphism stored as the permutation g -> images[g].
class GroupAut {
 public:
  /// Throws InvalidAutomorphism unless images is a bijective homomorphism.
  GroupAut(const GroupTable& group, std::vector<std::size_t> images);

  static GroupAut identity(const GroupTable& group);
  /// g -> t g t^-1
  static GroupAut conjugation(const GroupTable& group, std::size_t t);

  std::size_t operator()(std::size_t g) const { return images_[g]; }
  const std::vector<std::size_t>& images() const { return images_; }
  std::size_t size() const { return images_.size(); }

  friend bool operator==(const GroupAut&, const GroupAut&) = default;

 private:
  GroupAut() = default;
  friend GroupAut compose(const GroupAut& a, const GroupAut& b);
  friend GroupAut inverse(const GroupAut& a);

  std::vector<std::size_t> images_;
};

/// a o b
GroupAut compose(const GroupAut& a, const GroupAut& b);
GroupAut inverse(const GroupAut& a);

}  // namespace ydlcat
