#include "ydlcat/grpalg.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>

#include "ydlcat/errors.hpp"

namespace ydlcat {

GroupQuadruple GroupQuadruple::unit(const GroupTable& g1, const GroupTable& g2) {
  return {g1, g2, GroupAut::identity(g1), GroupAut::identity(g1), GroupAut::identity(g2),
          GroupAut::identity(g2)};
}

namespace {

void require_same_groups(const GroupQuadruple& x, const GroupQuadruple& y, const char* what) {
  if (!(x.g1 == y.g1) || !(x.g2 == y.g2)) {
    throw AlgebraMismatch(std::string(what) + ": components over different groups");
  }
}

void require_compatible(const GradedBimodule& m, const GradedBimodule& n, const char* what) {
  require_same_groups(m.component(), n.component(), what);
  if (!(m.field() == n.field())) throw FieldMismatch(std::string(what) + ": different fields");
}

GroupAut inv(const GroupAut& a) { return inverse(a); }

GroupAut comp(std::initializer_list<const GroupAut*> auts) {
  auto it = auts.begin();
  GroupAut out = **it;
  for (++it; it != auts.end(); ++it) out = compose(out, **it);
  return out;
}

}  // namespace

GroupQuadruple group_mul(const GroupQuadruple& x, const GroupQuadruple& y) {
  require_same_groups(x, y, "group_mul");
  const GroupAut a2_inv = inv(y.alpha);
  const GroupAut g2_inv = inv(y.gamma);
  return {x.g1,
          x.g2,
          compose(y.alpha, x.alpha),
          comp({&y.alpha, &x.beta, &a2_inv, &y.beta}),
          compose(x.gamma, y.gamma),
          comp({&y.delta, &g2_inv, &x.delta, &y.gamma})};
}

GroupQuadruple group_inv(const GroupQuadruple& x) {
  const GroupAut a_inv = inv(x.alpha), b_inv = inv(x.beta);
  const GroupAut g_inv = inv(x.gamma), d_inv = inv(x.delta);
  return {x.g1,  x.g2, a_inv, comp({&a_inv, &b_inv, &x.alpha}),
          g_inv, comp({&x.gamma, &d_inv, &g_inv})};
}

AutQuadruple lift_quadruple(const GroupQuadruple& x, const HopfPtr& k1, const HopfPtr& k2) {
  return AutQuadruple(lift_group_aut(k1, x.alpha), lift_group_aut(k1, x.beta),
                      lift_group_aut(k2, x.gamma), lift_group_aut(k2, x.delta));
}

std::pair<std::size_t, std::size_t> grading_shift(std::size_t gp, std::size_t g, std::size_t hp,
                                                  std::size_t h, const GroupQuadruple& x) {
  const GroupTable& G = x.g1;
  const GroupTable& H = x.g2;
  const std::size_t left = G.mul(G.mul(x.alpha(gp), g), x.beta(G.inverse(gp)));
  const std::size_t right = H.mul(H.mul(x.gamma(H.inverse(hp)), h), x.delta(hp));
  return {left, right};
}

GradedBimodule::GradedBimodule(FieldCtx field, GroupQuadruple component,
                               std::vector<GradedComponent> pieces,
                               std::vector<std::vector<Block>> left,
                               std::vector<std::vector<Block>> right)
    : field_(std::move(field)),
      component_(std::move(component)),
      pieces_(std::move(pieces)),
      left_(std::move(left)),
      right_(std::move(right)) {
  const std::size_t n1 = g1().order(), n2 = g2().order();
  for (const auto& p : pieces_) {
    if (p.g >= n1 || p.h >= n2) throw DimensionMismatch("graded component degree out of range");
    dim_ += p.dim();
  }
  std::vector<bool> seen(dim_, false);
  for (const auto& p : pieces_)
    for (auto b : p.basis) {
      if (b >= dim_ || seen[b]) {
        throw DimensionMismatch("component bases must partition 0.." + std::to_string(dim_));
      }
      seen[b] = true;
    }
  auto check_side = [&](const std::vector<std::vector<Block>>& blocks, std::size_t order,
                        const char* side) {
    if (blocks.size() != order) {
      throw DimensionMismatch(std::string(side) + " blocks: one row per group element needed");
    }
    for (const auto& row : blocks) {
      if (row.size() != pieces_.size()) {
        throw DimensionMismatch(std::string(side) + " blocks: one block per component needed");
      }
      for (std::size_t c = 0; c < row.size(); ++c) {
        const Block& b = row[c];
        if (b.target >= pieces_.size()) {
          throw DimensionMismatch(std::string(side) + " block targets a missing component");
        }
        if (b.map.rows() != pieces_[b.target].dim() || b.map.cols() != pieces_[c].dim()) {
          throw DimensionMismatch(std::string(side) + " block for component " +
                                  std::to_string(c) + " has the wrong shape");
        }
        if (!(b.map.field() == field_)) throw FieldMismatch("block over a different field");
      }
    }
  };
  check_side(left_, n1, "left");
  check_side(right_, n2, "right");
}

ValidationReport validate_graded(const GradedBimodule& m) {
  const auto& x = m.component();
  const GroupTable& G = m.g1();
  const GroupTable& H = m.g2();
  const auto& pieces = m.pieces();
  const std::size_t nc = pieces.size();
  auto comp_name = [&](std::size_t c) {
    return "component " + std::to_string(c) +
           (pieces[c].basis.empty() ? "" : " (basis " + std::to_string(pieces[c].basis.front()) + ")");
  };

  std::string left_shift, right_shift, left_unit, right_unit, left_comp, right_comp, commute;
  for (std::size_t c = 0; c < nc; ++c) {
    if (pieces[c].dim() == 0) continue;
    for (std::size_t gp = 0; gp < G.order() && left_shift.empty(); ++gp) {
      const auto& t = pieces[m.left(gp, c).target];
      if (std::make_pair(t.g, t.h) != grading_shift(gp, pieces[c].g, H.identity(), pieces[c].h, x))
        left_shift = G.label(gp) + " moves " + comp_name(c) + " off its degree";
    }
    for (std::size_t hp = 0; hp < H.order() && right_shift.empty(); ++hp) {
      const auto& t = pieces[m.right(hp, c).target];
      if (std::make_pair(t.g, t.h) != grading_shift(G.identity(), pieces[c].g, hp, pieces[c].h, x))
        right_shift = H.label(hp) + " moves " + comp_name(c) + " off its degree";
    }
    const Block& le = m.left(G.identity(), c);
    if (left_unit.empty() && !(le.target == c && le.map.is_identity())) left_unit = comp_name(c);
    const Block& re = m.right(H.identity(), c);
    if (right_unit.empty() && !(re.target == c && re.map.is_identity())) right_unit = comp_name(c);

    // (a b) > m = a > (b > m)
    for (std::size_t a = 0; a < G.order() && left_comp.empty(); ++a)
      for (std::size_t b = 0; b < G.order() && left_comp.empty(); ++b) {
        const Block& inner = m.left(b, c);
        const Block& outer = m.left(a, inner.target);
        const Block& whole = m.left(G.mul(a, b), c);
        if (whole.target != outer.target || !(whole.map == mat_mul(outer.map, inner.map)))
          left_comp = G.label(a) + " * " + G.label(b) + " on " + comp_name(c);
      }
    // m < (a b) = (m < a) < b
    for (std::size_t a = 0; a < H.order() && right_comp.empty(); ++a)
      for (std::size_t b = 0; b < H.order() && right_comp.empty(); ++b) {
        const Block& inner = m.right(a, c);
        const Block& outer = m.right(b, inner.target);
        const Block& whole = m.right(H.mul(a, b), c);
        if (whole.target != outer.target || !(whole.map == mat_mul(outer.map, inner.map)))
          right_comp = H.label(a) + " * " + H.label(b) + " on " + comp_name(c);
      }
    for (std::size_t a = 0; a < G.order() && commute.empty(); ++a)
      for (std::size_t b = 0; b < H.order() && commute.empty(); ++b) {
        const Block& l1 = m.left(a, c);
        const Block& r1 = m.right(b, l1.target);
        const Block& r2 = m.right(b, c);
        const Block& l2 = m.left(a, r2.target);
        if (r1.target != l2.target || !(mat_mul(r1.map, l1.map) == mat_mul(l2.map, r2.map)))
          commute = G.label(a) + " and " + H.label(b) + " on " + comp_name(c);
      }
  }
  ValidationReport rep;
  rep.add_flag("left_shift_rule", left_shift.empty(), left_shift);
  rep.add_flag("right_shift_rule", right_shift.empty(), right_shift);
  rep.add_flag("left_unit", left_unit.empty(), left_unit);
  rep.add_flag("right_unit", right_unit.empty(), right_unit);
  rep.add_flag("left_composition", left_comp.empty(), left_comp);
  rep.add_flag("right_composition", right_comp.empty(), right_comp);
  rep.add_flag("actions_commute", commute.empty(), commute);
  return rep;
}

YdlModule to_generic(const GradedBimodule& m, const HopfPtr& k1, const HopfPtr& k2) {
  const auto& f = m.field();
  const std::size_t n1 = m.g1().order(), n2 = m.g2().order(), d = m.dim();
  if (k1->dim() != n1 || k2->dim() != n2) {
    throw AlgebraMismatch("to_generic: group algebras do not match the groups");
  }
  const auto& pieces = m.pieces();
  Matrix L(f, d, n1 * d), R(f, d, d * n2), C1(f, n1 * d, d), C2(f, d * n2, d);
  for (std::size_t c = 0; c < pieces.size(); ++c) {
    const auto& src = pieces[c].basis;
    for (auto b : src) {
      C1(pieces[c].g * d + b, b) = Scalar::one(f);
      C2(b * n2 + pieces[c].h, b) = Scalar::one(f);
    }
    for (std::size_t gp = 0; gp < n1; ++gp) {
      const Block& blk = m.left(gp, c);
      const auto& tgt = pieces[blk.target].basis;
      for (std::size_t i = 0; i < tgt.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j) L(tgt[i], gp * d + src[j]) = blk.map(i, j);
    }
    for (std::size_t hp = 0; hp < n2; ++hp) {
      const Block& blk = m.right(hp, c);
      const auto& tgt = pieces[blk.target].basis;
      for (std::size_t i = 0; i < tgt.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j) R(tgt[i], src[j] * n2 + hp) = blk.map(i, j);
    }
  }
  return YdlModule(lift_quadruple(m.component(), k1, k2), d, std::move(L), std::move(R),
                   std::move(C1), std::move(C2));
}

YdlModule to_generic(const GradedBimodule& m) {
  return to_generic(m, group_algebra(m.g1(), m.field()), group_algebra(m.g2(), m.field()));
}

GradedBimodule graded_tensor(const GradedBimodule& m, const GradedBimodule& n) {
  require_compatible(m, n, "graded_tensor");
  const auto& x1 = m.component();
  const auto& x2 = n.component();
  const GroupTable& G = m.g1();
  const GroupTable& H = m.g2();
  const auto& pm = m.pieces();
  const auto& pn = n.pieces();
  const std::size_t cm = pm.size(), cn = pn.size(), dn = n.dim();
  const GroupAut a2_inv = inv(x2.alpha);
  const GroupAut twist = comp({&x2.alpha, &x1.beta, &a2_inv});
  const GroupAut g2_inv = inv(x2.gamma);
  const GroupAut right_twist = comp({&g2_inv, &x1.delta, &x2.gamma});

  std::vector<GradedComponent> pieces;
  pieces.reserve(cm * cn);
  for (std::size_t i = 0; i < cm; ++i)
    for (std::size_t j = 0; j < cn; ++j) {
      GradedComponent p{G.mul(x2.alpha(pm[i].g), twist(pn[j].g)), H.mul(pm[i].h, pn[j].h), {}};
      p.basis.reserve(pm[i].dim() * pn[j].dim());
      for (auto a : pm[i].basis)
        for (auto b : pn[j].basis) p.basis.push_back(a * dn + b);
      pieces.push_back(std::move(p));
    }
  std::vector<std::vector<Block>> left(G.order()), right(H.order());
  for (std::size_t gp = 0; gp < G.order(); ++gp) {
    left[gp].reserve(cm * cn);
    for (std::size_t i = 0; i < cm; ++i)
      for (std::size_t j = 0; j < cn; ++j) {
        const Block& bm = m.left(gp, i);
        const Block& bn = n.left(gp, j);
        left[gp].push_back({bm.target * cn + bn.target, kron(bm.map, bn.map)});
      }
  }
  for (std::size_t hp = 0; hp < H.order(); ++hp) {
    right[hp].reserve(cm * cn);
    for (std::size_t i = 0; i < cm; ++i)
      for (std::size_t j = 0; j < cn; ++j) {
        const Block& bm = m.right(x2.gamma(hp), i);
        const Block& bn = n.right(right_twist(hp), j);
        right[hp].push_back({bm.target * cn + bn.target, kron(bm.map, bn.map)});
      }
  }
  return GradedBimodule(m.field(), group_mul(x1, x2), std::move(pieces), std::move(left),
                        std::move(right));
}

GradedBimodule graded_conjugate(const GroupQuadruple& x, const GradedBimodule& n) {
  require_same_groups(x, n.component(), "graded_conjugate");
  const auto& x2 = n.component();
  const GroupAut a1_inv = inv(x.alpha), b1_inv = inv(x.beta), g1_inv = inv(x.gamma),
                 d1_inv = inv(x.delta), a2_inv = inv(x2.alpha), g2_inv = inv(x2.gamma);
  const GroupAut left_deg = comp({&a1_inv, &x2.alpha, &x.beta, &a2_inv});
  const GroupAut right_deg = compose(x.gamma, d1_inv);
  const GroupAut left_act = compose(b1_inv, x.alpha);
  const GroupAut right_act = comp({&g2_inv, &x.delta, &x2.gamma, &g1_inv});

  std::vector<GradedComponent> pieces = n.pieces();
  for (auto& p : pieces) {
    p.g = left_deg(p.g);
    p.h = right_deg(p.h);
  }
  std::vector<std::vector<Block>> left(n.g1().order()), right(n.g2().order());
  for (std::size_t gp = 0; gp < left.size(); ++gp) left[gp] = n.left_blocks()[left_act(gp)];
  for (std::size_t hp = 0; hp < right.size(); ++hp) right[hp] = n.right_blocks()[right_act(hp)];
  return GradedBimodule(n.field(), group_mul(group_mul(x, x2), group_inv(x)), std::move(pieces),
                        std::move(left), std::move(right));
}

GradedBimodule graded_dual(const GradedBimodule& m) {
  const auto& x = m.component();
  const GroupTable& G = m.g1();
  const GroupTable& H = m.g2();
  const GroupAut a_inv = inv(x.alpha), b_inv = inv(x.beta);
  const GroupAut g_inv = inv(x.gamma), d_inv = inv(x.delta);
  const GroupAut left_deg = compose(a_inv, b_inv);
  const GroupAut right_arg = compose(d_inv, g_inv);

  std::vector<GradedComponent> pieces = m.pieces();
  for (auto& p : pieces) {
    p.g = left_deg(G.inverse(p.g));
    p.h = H.inverse(p.h);
  }
  const std::size_t nc = pieces.size();
  std::vector<std::vector<Block>> left(G.order()), right(H.order());
  for (std::size_t gp = 0; gp < G.order(); ++gp) {
    left[gp].reserve(nc);
    for (std::size_t q = 0; q < nc; ++q) {
      const std::size_t p = m.left(gp, q).target;
      left[gp].push_back({p, m.left(G.inverse(gp), p).map.transpose()});
    }
  }
  for (std::size_t hp = 0; hp < H.order(); ++hp) {
    const std::size_t k = right_arg(H.inverse(hp));
    right[hp].reserve(nc);
    for (std::size_t q = 0; q < nc; ++q) {
      const std::size_t p = m.right(H.inverse(k), q).target;
      right[hp].push_back({p, m.right(k, p).map.transpose()});
    }
  }
  return GradedBimodule(m.field(), group_inv(x), std::move(pieces), std::move(left),
                        std::move(right));
}

Matrix GradedBraiding::to_matrix() const {
  const auto& f = source.field();
  Matrix out(f, target.dim(), source.dim());
  const auto& sp = source.pieces();
  const auto& tp = target.pieces();
  for (std::size_t c = 0; c < sp.size(); ++c) {
    const Block& b = blocks[c];
    const auto& src = sp[c].basis;
    const auto& tgt = tp[b.target].basis;
    for (std::size_t i = 0; i < tgt.size(); ++i)
      for (std::size_t j = 0; j < src.size(); ++j) out(tgt[i], src[j]) = b.map(i, j);
  }
  return out;
}

GradedBraiding graded_braiding(const GradedBimodule& m, const GradedBimodule& n) {
  require_compatible(m, n, "graded_braiding");
  const auto& x1 = m.component();
  GradedBimodule source = graded_tensor(m, n);
  GradedBimodule target = graded_tensor(graded_conjugate(x1, n), m);
  const GroupAut b1_inv = inv(x1.beta), d1_inv = inv(x1.delta);
  const auto& pm = m.pieces();
  const auto& pn = n.pieces();
  const std::size_t cm = pm.size(), cn = pn.size();
  std::vector<Block> blocks;
  blocks.reserve(cm * cn);
  for (std::size_t i = 0; i < cm; ++i)
    for (std::size_t j = 0; j < cn; ++j) {
      const Block& bn = n.left(b1_inv(pm[i].g), j);
      const Block& bm = m.right(d1_inv(pn[j].h), i);
      Matrix map = mat_mul(kron(bn.map, bm.map),
                           flip_map(m.field(), pm[i].dim(), pn[j].dim()).matrix());
      blocks.push_back({bn.target * cm + bm.target, std::move(map)});
    }
  return {std::move(source), std::move(target), std::move(blocks)};
}

ValidationReport check_closed_form_indices(const GradedBimodule& m, const GradedBimodule& n) {
  require_compatible(m, n, "check_closed_form_indices");
  const auto& x1 = m.component();
  const auto& x2 = n.component();
  const GroupTable& G = m.g1();
  const GroupTable& H = m.g2();
  const auto& pm = m.pieces();
  const auto& pn = n.pieces();
  ValidationReport rep;

  const GroupAut a2_inv = inv(x2.alpha), b1_inv = inv(x1.beta), g1_inv = inv(x1.gamma), d1_inv = inv(x1.delta);
  {
    const GroupAut twist = comp({&x2.alpha, &b1_inv, &a2_inv});
    auto t = graded_tensor(m, n);
    std::string note;
    for (std::size_t i = 0; i < pm.size() && note.empty(); ++i)
      for (std::size_t j = 0; j < pn.size() && note.empty(); ++j) {
        const std::size_t closed = G.mul(a2_inv(pm[i].g), twist(pn[j].g));
        const std::size_t actual = t.pieces()[i * pn.size() + j].g;
        if (closed != actual) {
          note = "degrees " + G.label(pm[i].g) + ", " + G.label(pn[j].g) + ": closed form gives " +
                 G.label(closed) + ", coaction gives " + G.label(actual);
        }
      }
    rep.add_info("tensor_index_closed_form", note.empty(), note);
  }
  {
    // _gN_h of ^x N is the piece of N in degree (a2 b1^-1 a2^-1 a1(g), d1 g1^-1(h)).
    const GroupAut back = comp({&x2.alpha, &b1_inv, &a2_inv, &x1.alpha});
    const GroupAut back_h = compose(x1.delta, g1_inv);
    auto c = graded_conjugate(x1, n);
    std::string note;
    for (std::size_t j = 0; j < pn.size() && note.empty(); ++j) {
      const auto& q = c.pieces()[j];
      if (back(q.g) != pn[j].g || back_h(q.h) != pn[j].h) note = "component " + std::to_string(j);
    }
    rep.add_info("conjugate_index_closed_form", note.empty(), note);
  }
  {
    // _g1M_h1 (x) _g2N_h2 -> _{a2 b1^-1(g1) g2 b2 b1^-1(g1^-1)}N_h2
    //                        (x) _g1M_{g1 d1^-1(h2^-1) h1 h2}
    auto br = graded_braiding(m, n);
    const GroupAut ab = compose(x2.alpha, b1_inv);
    const GroupAut bb = compose(x2.beta, b1_inv);
    const GroupAut gd = compose(x1.gamma, d1_inv);
    std::string note;
    for (std::size_t i = 0; i < pm.size() && note.empty(); ++i)
      for (std::size_t j = 0; j < pn.size() && note.empty(); ++j) {
        const Block& b = br.blocks[i * pn.size() + j];
        if (pm[i].dim() == 0 || pn[j].dim() == 0) continue;
        const std::size_t nt = b.target / pm.size(), mt = b.target % pm.size();
        const std::size_t g1 = pm[i].g, h1 = pm[i].h, g2 = pn[j].g, h2 = pn[j].h;
        const std::size_t ng = G.mul(G.mul(ab(g1), g2), bb(G.inverse(g1)));
        const std::size_t mh = H.mul(H.mul(gd(H.inverse(h2)), h1), h2);
        if (pn[nt].g != ng || pn[nt].h != h2 || pm[mt].g != g1 || pm[mt].h != mh) {
          note = "components " + std::to_string(i) + ", " + std::to_string(j);
        }
      }
    rep.add_info("braiding_target_closed_form", note.empty(), note);
  }
  {
    // (M*) in degree (g, h) is the dual of M in degree (b a(g^-1), h^-1).
    const GroupAut ba = compose(x1.beta, x1.alpha);
    auto d = graded_dual(m);
    std::string note;
    for (std::size_t i = 0; i < pm.size() && note.empty(); ++i) {
      const auto& q = d.pieces()[i];
      if (ba(G.inverse(q.g)) != pm[i].g || H.inverse(q.h) != pm[i].h) {
        note = "component " + std::to_string(i);
      }
    }
    rep.add_info("dual_index_closed_form", note.empty(), note);
  }
  return rep;
}

namespace {

std::vector<std::array<int, 3>> s3_permutations() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

bool is_representation(const GroupTable& g, const std::vector<Matrix>& images) {
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (!(images[g.mul(a, b)] == mat_mul(images[a], images[b]))) return false;
  return true;
}

// Generator of a cyclic table: an element whose powers exhaust the group.
std::optional<std::vector<std::size_t>> cyclic_powers(const GroupTable& g) {
  for (std::size_t t = 0; t < g.order(); ++t) {
    std::vector<std::size_t> powers{g.identity()};
    std::size_t cur = t;
    while (cur != g.identity() && powers.size() <= g.order()) {
      powers.push_back(cur);
      cur = g.mul(cur, t);
    }
    if (powers.size() == g.order() && cur == g.identity()) return powers;
  }
  return std::nullopt;
}

}  // namespace

std::vector<GroupRep> small_representations(const GroupTable& g, const FieldCtx& field) {
  const std::size_t n = g.order();
  std::vector<GroupRep> out;
  out.push_back({std::vector<Matrix>(n, Matrix::identity(field, 1))});
  if (g == GroupTable::symmetric3()) {
    auto perms = s3_permutations();
    GroupRep sign, standard;
    for (const auto& a : perms) {
      int inversions = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) inversions += a[i] > a[j];
      Matrix s(field, 1, 1);
      s.set(0, 0, inversions % 2 ? -1 : 1);
      sign.images.push_back(s);
      // Sum-zero vectors of k^3 in the basis e0 - e1, e1 - e2.
      Matrix m(field, 2, 2);
      for (int j = 0; j < 2; ++j) {
        std::array<int, 3> v{0, 0, 0};
        v[a[j]] += 1;
        v[a[j + 1]] -= 1;
        m.set(0, j, v[0]);
        m.set(1, j, -v[2]);
      }
      standard.images.push_back(m);
    }
    out.push_back(std::move(sign));
    out.push_back(std::move(standard));
  } else if (auto powers = cyclic_powers(g)) {
    if (n % 2 == 0) {
      GroupRep sign{std::vector<Matrix>(n, Matrix(field, 1, 1))};
      for (std::size_t k = 0; k < n; ++k) sign.images[(*powers)[k]].set(0, 0, k % 2 ? -1 : 1);
      out.push_back(std::move(sign));
    }
    std::optional<Matrix> gen;
    if (n == 3) gen = Matrix::from_rows(field, {{0, -1}, {1, -1}});
    if (n == 4) gen = Matrix::from_rows(field, {{0, -1}, {1, 0}});
    if (n == 6) gen = Matrix::from_rows(field, {{1, -1}, {1, 0}});
    if (gen) {
      GroupRep rot{std::vector<Matrix>(n, Matrix::identity(field, 2))};
      for (std::size_t k = 1; k < n; ++k)
        rot.images[(*powers)[k]] = mat_mul(rot.images[(*powers)[k - 1]], *gen);
      out.push_back(std::move(rot));
    }
  }
  std::vector<GroupRep> valid;
  for (auto& r : out)
    if (is_representation(g, r.images)) valid.push_back(std::move(r));
  return valid;
}

GradedBimodule orbit_module(const FieldCtx& field, const GroupQuadruple& x, std::size_t g,
                            std::size_t h, const GroupRep& left, const GroupRep& right) {
  const GroupTable& G = x.g1;
  const GroupTable& H = x.g2;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> points;
  std::deque<std::pair<std::size_t, std::size_t>> todo{{g, h}};
  index[{g, h}] = 0;
  points.push_back({g, h});
  while (!todo.empty()) {
    auto [pg, ph] = todo.front();
    todo.pop_front();
    auto visit = [&](std::pair<std::size_t, std::size_t> q) {
      if (index.emplace(q, points.size()).second) {
        points.push_back(q);
        todo.push_back(q);
      }
    };
    for (std::size_t gp = 0; gp < G.order(); ++gp)
      visit(grading_shift(gp, pg, H.identity(), ph, x));
    for (std::size_t hp = 0; hp < H.order(); ++hp)
      visit(grading_shift(G.identity(), pg, hp, ph, x));
  }
  const std::size_t r = left.dim() * right.dim();
  std::vector<GradedComponent> pieces;
  for (std::size_t c = 0; c < points.size(); ++c) {
    GradedComponent p{points[c].first, points[c].second, {}};
    for (std::size_t i = 0; i < r; ++i) p.basis.push_back(c * r + i);
    pieces.push_back(std::move(p));
  }
  const Matrix id_l = Matrix::identity(field, left.dim());
  const Matrix id_r = Matrix::identity(field, right.dim());
  std::vector<std::vector<Block>> lb(G.order()), rb(H.order());
  for (std::size_t gp = 0; gp < G.order(); ++gp) {
    const Matrix map = kron(left.images[gp], id_r);
    for (const auto& pt : points) {
      lb[gp].push_back(
          {index.at(grading_shift(gp, pt.first, H.identity(), pt.second, x)), map});
    }
  }
  for (std::size_t hp = 0; hp < H.order(); ++hp) {
    const Matrix map = kron(id_l, right.images[H.inverse(hp)]);
    for (const auto& pt : points) {
      rb[hp].push_back(
          {index.at(grading_shift(G.identity(), pt.first, hp, pt.second, x)), map});
    }
  }
  return GradedBimodule(field, x, std::move(pieces), std::move(lb), std::move(rb));
}

GradedBimodule graded_direct_sum(const GradedBimodule& a, const GradedBimodule& b) {
  require_compatible(a, b, "graded_direct_sum");
  if (!(a.component() == b.component())) {
    throw ComponentMismatch("graded_direct_sum: modules in different components");
  }
  const std::size_t ca = a.pieces().size(), da = a.dim();
  std::vector<GradedComponent> pieces = a.pieces();
  for (auto p : b.pieces()) {
    for (auto& i : p.basis) i += da;
    pieces.push_back(std::move(p));
  }
  auto join = [ca](const std::vector<std::vector<Block>>& x,
                   const std::vector<std::vector<Block>>& y) {
    auto out = x;
    for (std::size_t e = 0; e < out.size(); ++e)
      for (const auto& blk : y[e]) out[e].push_back({blk.target + ca, blk.map});
    return out;
  };
  return GradedBimodule(a.field(), a.component(), std::move(pieces),
                        join(a.left_blocks(), b.left_blocks()),
                        join(a.right_blocks(), b.right_blocks()));
}

GradedBimodule change_basis(const GradedBimodule& m, const std::vector<Matrix>& per_component) {
  if (per_component.size() != m.pieces().size()) {
    throw DimensionMismatch("change_basis: one matrix per component needed");
  }
  std::vector<Matrix> inverses;
  for (const auto& p : per_component) inverses.push_back(mat_inv(p));
  auto conj = [&](const std::vector<std::vector<Block>>& blocks) {
    auto out = blocks;
    for (auto& row : out)
      for (std::size_t c = 0; c < row.size(); ++c)
        row[c].map = mat_mul(per_component[row[c].target], mat_mul(row[c].map, inverses[c]));
    return out;
  };
  return GradedBimodule(m.field(), m.component(), m.pieces(), conj(m.left_blocks()),
                        conj(m.right_blocks()));
}

GradedBimodule random_graded_module(const FieldCtx& field, const GroupQuadruple& x,
                                    std::mt19937_64& rng, std::size_t max_dim) {
  const auto reps1 = small_representations(x.g1, field);
  const auto reps2 = small_representations(x.g2, field);
  std::uniform_int_distribution<std::size_t> pick_g(0, x.g1.order() - 1);
  std::uniform_int_distribution<std::size_t> pick_h(0, x.g2.order() - 1);
  std::uniform_int_distribution<std::size_t> pick_r1(0, reps1.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_r2(0, reps2.size() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);

  std::optional<GradedBimodule> out;
  for (int attempt = 0; attempt < 40; ++attempt) {
    const auto& r1 = reps1[pick_r1(rng)];
    const auto& r2 = reps2[pick_r2(rng)];
    if (r1.dim() * r2.dim() > 3) continue;
    auto piece = orbit_module(field, x, pick_g(rng), pick_h(rng), r1, r2);
    const std::size_t used = out ? out->dim() : 0;
    if (used + piece.dim() > max_dim) continue;
    out = out ? graded_direct_sum(*out, piece) : piece;
    if (out->dim() * 2 > max_dim || attempt % 3 == 2) break;
  }
  if (!out) out = orbit_module(field, x, x.g1.identity(), x.g2.identity(), reps1[0], reps2[0]);

  std::vector<Matrix> bases;
  for (const auto& p : out->pieces()) {
    const std::size_t r = p.dim();
    for (;;) {
      Matrix b(field, r, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) b(i, j) = Scalar(field, coeff(rng));
      try {
        mat_inv(b);
        bases.push_back(std::move(b));
        break;
      } catch (const SingularMatrix&) {
      }
    }
  }
  return change_basis(*out, bases);
}

}  // namespace ydlcat
