#include "ydlcat/autgroup.hpp"

#include "ydlcat/errors.hpp"

namespace ydlcat {

namespace {

void require_same(const HopfPtr& a, const HopfPtr& b, const char* what) {
  if (!same_algebra(a, b)) {
    throw AlgebraMismatch(std::string(what) + ": " + a->name() + " vs " + b->name());
  }
}

// Left-to-right product of automorphisms, i.e. the composite x1 o x2 o ...
template <typename... Rest>
HopfAutomorphism chain(const HopfAutomorphism& first, const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return first;
  } else {
    return aut_compose(first, chain(rest...));
  }
}

}  // namespace

AutPair1::AutPair1(HopfAutomorphism a, HopfAutomorphism b)
    : alpha(std::move(a)), beta(std::move(b)) {
  require_same(alpha.algebra(), beta.algebra(), "automorphism pair");
}

AutPair2::AutPair2(HopfAutomorphism g, HopfAutomorphism d)
    : gamma(std::move(g)), delta(std::move(d)) {
  require_same(gamma.algebra(), delta.algebra(), "automorphism pair");
}

AutPair1 mul1(const AutPair1& p, const AutPair1& q) {
  require_same(p.algebra(), q.algebra(), "mul1");
  return AutPair1(aut_compose(q.alpha, p.alpha),
                  chain(q.alpha, p.beta, aut_inverse(q.alpha), q.beta));
}

AutPair1 inv1(const AutPair1& p) {
  auto ai = aut_inverse(p.alpha);
  return AutPair1(ai, chain(ai, aut_inverse(p.beta), p.alpha));
}

AutPair2 mul2(const AutPair2& p, const AutPair2& q) {
  require_same(p.algebra(), q.algebra(), "mul2");
  return AutPair2(aut_compose(p.gamma, q.gamma),
                  chain(q.delta, aut_inverse(q.gamma), p.delta, q.gamma));
}

AutPair2 mul2_printed(const AutPair2& p, const AutPair2& q) {
  require_same(p.algebra(), q.algebra(), "mul2");
  return AutPair2(aut_compose(p.gamma, q.gamma),
                  chain(q.delta, aut_inverse(q.gamma), p.delta, q.delta));
}

AutPair2 inv2(const AutPair2& p) {
  auto gi = aut_inverse(p.gamma);
  return AutPair2(gi, chain(p.gamma, aut_inverse(p.delta), gi));
}

AutQuadruple mulG(const AutQuadruple& x, const AutQuadruple& y) {
  return AutQuadruple(mul1(x.pair1, y.pair1), mul2(x.pair2, y.pair2));
}

AutQuadruple invG(const AutQuadruple& x) {
  return AutQuadruple(inv1(x.pair1), inv2(x.pair2));
}

AutQuadruple unitG(const HopfPtr& h1, const HopfPtr& h2) {
  auto i1 = HopfAutomorphism::identity(h1);
  auto i2 = HopfAutomorphism::identity(h2);
  return AutQuadruple(i1, i1, i2, i2);
}

bool is_unit(const AutQuadruple& x) {
  return x.alpha().matrix().is_identity() && x.beta().matrix().is_identity() &&
         x.gamma().matrix().is_identity() && x.delta().matrix().is_identity();
}

std::string to_string(const AutQuadruple& x) {
  std::string s;
  const char* names[] = {"alpha", "beta", "gamma", "delta"};
  const HopfAutomorphism* auts[] = {&x.alpha(), &x.beta(), &x.gamma(), &x.delta()};
  for (int i = 0; i < 4; ++i) s += std::string(names[i]) + ":\n" + to_string(auts[i]->matrix());
  return s;
}

}  // namespace ydlcat
