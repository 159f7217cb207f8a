#include "catalog.hpp"

#include <random>

#include "ydlcat/errors.hpp"
#include "ydlcat/grpalg.hpp"
#include "ydlcat/io.hpp"

namespace ydlcat::cli {

namespace {

// Regular module over (H4, k[C2]) in the component (alpha_a, alpha_b, id, id).
YdlModule h4_regular(const FieldCtx& f, int a, int b) {
  auto h4 = sweedler_h4(f);
  auto c2 = group_algebra(GroupTable::cyclic(2), f);
  auto id2 = HopfAutomorphism::identity(c2);
  return regular_module(
      AutQuadruple(sweedler_scaling(h4, Scalar(f, a)), sweedler_scaling(h4, Scalar(f, b)), id2, id2));
}

GradedBimodule graded_demo(const FieldCtx& f, unsigned seed) {
  const auto s3 = GroupTable::symmetric3();
  const auto c2 = GroupTable::cyclic(2);
  std::mt19937_64 rng(seed);
  GroupQuadruple x{s3,
                   c2,
                   GroupAut::conjugation(s3, seed % 6),
                   GroupAut::identity(s3),
                   GroupAut::identity(c2),
                   GroupAut::identity(c2)};
  return random_graded_module(f, x, rng, 4);
}

}  // namespace

std::vector<std::string> demo_names() {
  return {"sweedler",      "group:<name>",    "trivial-module",  "regular-module",
          "h4-module",     "counit-module",    "quadruple-h4",    "quadruple-counit",
          "graded-demo"};
}

std::string demo_text(const std::string& name, const FieldCtx& f, unsigned seed) {
  if (name == "sweedler") return serialize_hopf(*sweedler_h4(f));
  if (name.rfind("group:", 0) == 0) {
    return serialize_hopf(*group_algebra(GroupTable::by_name(name.substr(6)), f));
  }
  if (name == "trivial-module") {
    auto c2 = group_algebra(GroupTable::cyclic(2), f);
    return serialize_module(trivial_module(2, InvolutionQuadruple::trivial(*c2, *c2), unitG(c2, c2)));
  }
  if (name == "regular-module") return serialize_module(h4_regular(f, 2, 3));
  // Component (alpha_{-1}, id, id, id), matching quadruple-h4.
  if (name == "h4-module") return serialize_module(h4_regular(f, -1, 1));
  // Component (alpha_2, alpha_2, id, id), matching quadruple-counit.
  if (name == "counit-module") return serialize_module(h4_regular(f, 2, 2));
  if (name == "quadruple-counit") {
    auto h4 = sweedler_h4(f);
    auto c2 = group_algebra(GroupTable::cyclic(2), f);
    return serialize_quadruple(InvolutionQuadruple::trivial(*h4, *c2));
  }
  if (name == "quadruple-h4") {
    auto h4 = sweedler_h4(f);
    auto c2 = group_algebra(GroupTable::cyclic(2), f);
    Matrix f1(f, 1, 4);
    f1.set(0, 0, 1);
    f1.set(0, 1, -1);
    return serialize_quadruple({f1, h4->unit(), c2->counit(), c2->unit()});
  }
  if (name == "graded-demo") return serialize_graded(graded_demo(f, seed));
  throw Error("unknown demo '" + name + "'");
}

}  // namespace ydlcat::cli
