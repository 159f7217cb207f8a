#include "ydlcat/group.hpp"

#include <algorithm>
#include <array>

#include "ydlcat/errors.hpp"

namespace ydlcat {

GroupTable::GroupTable(std::string name, std::vector<std::vector<std::size_t>> table,
                       std::vector<std::string> labels)
    : name_(std::move(name)), table_(std::move(table)), labels_(std::move(labels)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InvalidGroupTable(name_ + ": empty table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a].size() != n) throw InvalidGroupTable(name_ + ": table is not square");
    for (auto v : table_[a])
      if (v >= n) throw InvalidGroupTable(name_ + ": entry out of range");
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidGroupTable(name_ + ": no two-sided identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw InvalidGroupTable(name_ + ": not associative at (" + std::to_string(a) +
                                  "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (inverse_[a] == n) {
      throw InvalidGroupTable(name_ + ": element " + std::to_string(a) + " has no inverse");
    }
  if (labels_.empty()) {
    for (std::size_t a = 0; a < n; ++a) labels_.push_back("g" + std::to_string(a));
  }
  if (labels_.size() != n) throw InvalidGroupTable(name_ + ": wrong number of labels");
}

GroupTable GroupTable::trivial() { return GroupTable("trivial", {{0}}, {"e"}); }

GroupTable GroupTable::cyclic(std::size_t n) {
  if (n == 0) throw InvalidGroupTable("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "e" : a == 1 ? "a" : "a^" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return GroupTable("C" + std::to_string(n), std::move(t), std::move(labels));
}

GroupTable GroupTable::symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = std::find(perms.begin(), perms.end(), c) - perms.begin();
    }
  return GroupTable("S3", std::move(t), {"e", "(23)", "(12)", "(123)", "(132)", "(13)"});
}

GroupTable GroupTable::by_name(const std::string& name) {
  if (name == "trivial") return trivial();
  if (name == "S3") return symmetric3();
  if (name.size() > 1 && name[0] == 'C') {
    std::size_t n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') throw InvalidGroupTable("unknown group " + name);
      n = n * 10 + static_cast<std::size_t>(name[i] - '0');
    }
    return cyclic(n);
  }
  throw InvalidGroupTable("unknown group " + name);
}

GroupAut::GroupAut(const GroupTable& group, std::vector<std::size_t> images)
    : images_(std::move(images)) {
  const std::size_t n = group.order();
  if (images_.size() != n) throw InvalidAutomorphism("group automorphism has wrong length");
  std::vector<bool> hit(n, false);
  for (auto v : images_) {
    if (v >= n || hit[v]) throw InvalidAutomorphism("group map is not a bijection");
    hit[v] = true;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (images_[group.mul(a, b)] != group.mul(images_[a], images_[b])) {
        throw InvalidAutomorphism("group map is not a homomorphism");
      }
}

GroupAut GroupAut::identity(const GroupTable& group) {
  std::vector<std::size_t> id(group.order());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return GroupAut(group, std::move(id));
}

GroupAut GroupAut::conjugation(const GroupTable& group, std::size_t t) {
  std::vector<std::size_t> img(group.order());
  for (std::size_t g = 0; g < img.size(); ++g)
    img[g] = group.mul(group.mul(t, g), group.inverse(t));
  return GroupAut(group, std::move(img));
}

GroupAut compose(const GroupAut& a, const GroupAut& b) {
  if (a.size() != b.size()) throw InvalidAutomorphism("composing automorphisms of different groups");
  GroupAut c;
  c.images_.resize(a.size());
  for (std::size_t g = 0; g < a.size(); ++g) c.images_[g] = a(b(g));
  return c;
}

GroupAut inverse(const GroupAut& a) {
  GroupAut c;
  c.images_.resize(a.size());
  for (std::size_t g = 0; g < a.size(); ++g) c.images_[a(g)] = g;
  return c;
}

}  // namespace ydlcat
