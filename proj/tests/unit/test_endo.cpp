#include <gtest/gtest.h>

#include "retractlab/endo.hpp"
#include "retractlab/parse.hpp"

using namespace retractlab;

namespace {

Endo E(const char* f, const char* g) { return Endo{parse_poly2(f), parse_poly2(g)}; }

}  // namespace

TEST(Compose, Identity) {
  const Endo phi = E("x + x*y^2", "y - x^3");
  EXPECT_EQ(compose(Endo::identity(), phi), phi);
  EXPECT_EQ(compose(phi, Endo::identity()), phi);
}

TEST(Compose, SubstitutionExample) {
  // Substituting (x, y + x^3) into (x + y^2, y): the outer map acts last.
  EXPECT_EQ(compose(E("x", "y + x^3"), E("x + y^2", "y")), E("x + (y + x^3)^2", "y + x^3"));
}

TEST(Compose, SwapConvention) {
  // beta o phi' with phi' = (y, x*h3) has the shape (x, y*h3').
  const Endo beta = E("y", "x");
  const Endo phi = E("y", "x*(1 + x + y^2)");
  EXPECT_EQ(compose(beta, phi), E("x", "y*(1 + y + x^2)"));
}

TEST(Compose, PinsNormalizationShape) {
  // sigma o phi o sigma' = (x + y*h1, y*h2) for phi = (x, y + x^3), sigma = id,
  // sigma' = (x, y - x^3).
  const Endo phi = E("x", "y + x^3");
  EXPECT_EQ(compose(Endo::identity(), compose(phi, E("x", "y - x^3"))), E("x", "y"));
}

TEST(Jacobian, Examples) {
  EXPECT_EQ(jacobian(E("x + y^2", "y")), Poly2::constant(Rat(1)));
  EXPECT_EQ(jacobian(E("y", "x")), Poly2::constant(Rat(-1)));
  EXPECT_EQ(jacobian(E("x", "x*y")), Poly2::x());
}

TEST(Jacobian, ChainRule) {
  Rng rng(31);
  const TameParams tp{2, 2, 2};
  for (int k = 0; k < 50; ++k) {
    const Endo phi = to_endo(random_tame(rng, tp));
    Endo psi = to_endo(random_tame(rng, tp));
    psi.g = psi.g * parse_poly2("x + 1");  // not an automorphism; exercises a nonconstant factor
    // Ring-endomorphism order: jac(phi o psi) = phi(jac psi) * jac phi.
    EXPECT_EQ(jacobian(compose(phi, psi)), substitute2(jacobian(psi), phi.f, phi.g) * jacobian(phi));
  }
}

TEST(IsAutomorphism, Examples) {
  const auto id = is_automorphism(Endo::identity());
  EXPECT_TRUE(id.yes);
  EXPECT_TRUE(id.factorization.moves.empty());

  const Endo phi = E("x + (y + x^3)^2", "y + x^3");
  const auto d = is_automorphism(phi);
  ASSERT_TRUE(d.yes);
  EXPECT_EQ(to_endo(d.factorization), phi);

  const auto no = is_automorphism(E("x", "x*y"));
  EXPECT_FALSE(no.yes);
  EXPECT_EQ(no.reason, "nonconstant jacobian");
}

TEST(IsAutomorphism, NoFalsePositives) {
  for (const auto& [f, g] : std::vector<std::pair<const char*, const char*>>{{"x", "x*y"}, {"x", "y^2"}, {"x + y", "x + y"}}) {
    EXPECT_FALSE(is_automorphism(E(f, g)).yes) << f << ", " << g;
  }
  EXPECT_EQ(is_automorphism(E("x + y", "x + y")).reason, "vanishing jacobian");
}

TEST(IsAutomorphism, RoundTrip200) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const TameAuto tau = random_tame(seed, TameParams{3, 3, 3});
    const Endo phi = to_endo(tau);
    const auto d = is_automorphism(phi);
    ASSERT_TRUE(d.yes) << "seed " << seed << ": " << d.reason;
    EXPECT_EQ(to_endo(d.factorization), phi);
    for (std::size_t k = 1; k < d.trace.size(); ++k) {
      EXPECT_LT(d.trace[k].deg_f + d.trace[k].deg_g, d.trace[k - 1].deg_f + d.trace[k - 1].deg_g);
    }
  }
}

TEST(TameAuto, InverseLaw) {
  for (std::uint64_t seed = 100; seed < 150; ++seed) {
    const TameAuto tau = random_tame(seed, TameParams{3, 3, 3});
    EXPECT_TRUE(compose(to_endo(tau), to_endo(inverse(tau))).is_identity());
    EXPECT_TRUE(compose(to_endo(inverse(tau)), to_endo(tau)).is_identity());
  }
}

TEST(RandomTame, Deterministic) {
  EXPECT_TRUE(random_tame(5, TameParams{0, 3, 3}).moves.empty());
  EXPECT_EQ(random_tame(9, TameParams{}), random_tame(9, TameParams{}));
  EXPECT_TRUE(is_automorphism(to_endo(random_tame(1, TameParams{3, 3, 3}))).yes);
}

TEST(Affine, SingularRejected) {
  EXPECT_THROW(Affine::make({{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}}, {Rat(0), Rat(0)}), std::domain_error);
  EXPECT_EQ(to_endo(Affine::swap()), E("y", "x"));
}
