#pragma once

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "ydlcat/ydl.hpp"

namespace ydlcat {

/// A component for group algebras k[G1], k[G2]: group automorphisms alpha,
/// beta of G1 and gamma, delta of G2, kept as index permutations.
struct GroupQuadruple {
  GroupTable g1;
  GroupTable g2;
  GroupAut alpha, beta, gamma, delta;

  static GroupQuadruple unit(const GroupTable& g1, const GroupTable& g2);
  friend bool operator==(const GroupQuadruple& a, const GroupQuadruple& b) {
    return a.g1 == b.g1 && a.g2 == b.g2 && a.alpha == b.alpha && a.beta == b.beta &&
           a.gamma == b.gamma && a.delta == b.delta;
  }
};

/// The group laws of the component group, on permutations.
GroupQuadruple group_mul(const GroupQuadruple& x, const GroupQuadruple& y);
GroupQuadruple group_inv(const GroupQuadruple& x);

/// Lifts every automorphism to k[G1] resp. k[G2].
AutQuadruple lift_quadruple(const GroupQuadruple& x, const HopfPtr& k1, const HopfPtr& k2);

/// (alpha(g') g beta(g'^-1), gamma(h'^-1) h delta(h')): where g' > _gM_h < h'
/// lands.
std::pair<std::size_t, std::size_t> grading_shift(std::size_t gp, std::size_t g, std::size_t hp,
                                                  std::size_t h, const GroupQuadruple& x);

/// A homogeneous piece _gM_h, given by the global basis indices it spans.
struct GradedComponent {
  std::size_t g;
  std::size_t h;
  std::vector<std::size_t> basis;
  std::size_t dim() const { return basis.size(); }
};

/// The action of one group element on one component: the component it
/// lands in and the (target dim) x (source dim) matrix.
struct Block {
  std::size_t target;
  Matrix map;
};

/// M = (+) _gM_h with the actions stored blockwise:
/// left[g'][c] is g' > - on component c, right[h'][c] is - < h'.
/// The constructor checks indices and block shapes; whether the blocks obey
/// the shift rule and define actions is decided by validate_graded.
class GradedBimodule {
 public:
  GradedBimodule(FieldCtx field, GroupQuadruple component, std::vector<GradedComponent> pieces,
                 std::vector<std::vector<Block>> left, std::vector<std::vector<Block>> right);

  const FieldCtx& field() const { return field_; }
  const GroupQuadruple& component() const { return component_; }
  const GroupTable& g1() const { return component_.g1; }
  const GroupTable& g2() const { return component_.g2; }
  const std::vector<GradedComponent>& pieces() const { return pieces_; }
  std::size_t dim() const { return dim_; }
  const Block& left(std::size_t gp, std::size_t c) const { return left_[gp][c]; }
  const Block& right(std::size_t hp, std::size_t c) const { return right_[hp][c]; }
  const std::vector<std::vector<Block>>& left_blocks() const { return left_; }
  const std::vector<std::vector<Block>>& right_blocks() const { return right_; }

 private:
  FieldCtx field_;
  GroupQuadruple component_;
  std::vector<GradedComponent> pieces_;
  std::vector<std::vector<Block>> left_, right_;
  std::size_t dim_ = 0;
};

/// Shift rule for every block (left_shift_rule, right_shift_rule), unit and
/// composition laws of both actions, and commutation of the two actions.
ValidationReport validate_graded(const GradedBimodule& m);

/// The same module over k[G1], k[G2] with rho1(m) = g (x) m and
/// rho2(m) = m (x) h on _gM_h.
YdlModule to_generic(const GradedBimodule& m, const HopfPtr& k1, const HopfPtr& k2);
YdlModule to_generic(const GradedBimodule& m);

/// M (x) N: component (i, j) sits in degree
/// (a2(g_i) a2 b1 a2^-1(g_j), h_i h_j) and spans the basis a dim(N) + b.
GradedBimodule graded_tensor(const GradedBimodule& m, const GradedBimodule& n);
/// ^x N, with g > n = b1^-1 a1(g) > n and n < h = n < g2^-1 d1 g2 g1^-1(h).
GradedBimodule graded_conjugate(const GroupQuadruple& x, const GradedBimodule& n);
/// M* (= *M for group algebras): (g > f)(m) = f(g^-1 > m),
/// (f < h)(m) = f(m < d^-1 g^-1(h^-1)), the dual of _gM_h in degree
/// (a^-1 b^-1(g^-1), h^-1).
GradedBimodule graded_dual(const GradedBimodule& m);

/// c_{M,N} as one block per component of M (x) N:
/// m (x) n -> b1^-1(g) > n (x) m < d1^-1(h') for m in _gM_h, n in _g'N_h'.
struct GradedBraiding {
  GradedBimodule source;
  GradedBimodule target;
  std::vector<Block> blocks;
  Matrix to_matrix() const;
};
GradedBraiding graded_braiding(const GradedBimodule& m, const GradedBimodule& n);

/// Informational comparison of closed-form decomposition indices with the
/// gradings computed above: tensor_index_closed_form uses
/// a2^-1(g1) a2 b1^-1 a2^-1(g2); conjugate_index_closed_form,
/// braiding_target_closed_form and dual_index_closed_form use the displays
/// given in the doc comments of the corresponding operations.
ValidationReport check_closed_form_indices(const GradedBimodule& m, const GradedBimodule& n);

/// Matrix images of a group, one per element.
struct GroupRep {
  std::vector<Matrix> images;
  std::size_t dim() const { return images.front().rows(); }
};
/// Representations available over any field of characteristic not 2 or 3:
/// the trivial one, and for S3 the sign and the two-dimensional standard
/// representation, for cyclic groups of even order the sign character and
/// for C3, C4, C6 a two-dimensional rotation.
std::vector<GroupRep> small_representations(const GroupTable& g, const FieldCtx& field);

/// The permutation module on the orbit of (g, h) under the shift action,
/// tensored with left (a G1-representation) and right (a G2-representation,
/// acting through inverses).
GradedBimodule orbit_module(const FieldCtx& field, const GroupQuadruple& x, std::size_t g,
                            std::size_t h, const GroupRep& left, const GroupRep& right);
/// Block sum; the basis of b follows the basis of a.
GradedBimodule graded_direct_sum(const GradedBimodule& a, const GradedBimodule& b);
/// Replaces each component's basis: blocks become P_t B P_s^-1.
GradedBimodule change_basis(const GradedBimodule& m, const std::vector<Matrix>& per_component);

/// A direct sum of orbit modules with random orbits, representations and
/// per-component bases; total dimension at most max_dim and component
/// dimensions at most 3.
GradedBimodule random_graded_module(const FieldCtx& field, const GroupQuadruple& x,
                                    std::mt19937_64& rng, std::size_t max_dim);

}  // namespace ydlcat
