#include <gtest/gtest.h>

#include "retractlab/parse.hpp"
#include "retractlab/retracts.hpp"

using namespace retractlab;

namespace {

Poly2 P(const char* s) { return parse_poly2(s); }
UniPoly U(const char* s) { return parse_unipoly(s); }

}  // namespace

TEST(VerifyRetract, Examples) {
  EXPECT_TRUE(verify_retract_generator(P("x + y*(x^2 - 3*y + 1)"), U("z"), U("0")));
  EXPECT_TRUE(verify_retract_generator(P("x*y"), U("z"), U("1")));
  EXPECT_FALSE(verify_retract_generator(P("x + y"), U("z"), U("z")));
  try {
    (void)verify_retract_generator(P("3"), U("z"), U("0"));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_EQ(std::string(e.what()), "constant generates no proper retract");
  }
}

TEST(Retraction, RejectsBadCertificate) {
  EXPECT_THROW(Retraction::make(P("x + y"), U("z"), U("z")), std::invalid_argument);
}

TEST(RetractionEndo, Examples) {
  const auto a = retraction_endo(Retraction::make(P("x + y*x"), U("z"), U("0")));
  EXPECT_EQ(a.pi, (Endo{P("x + x*y"), Poly2{}}));
  EXPECT_EQ(a.pi_squared, a.pi);

  const auto b = retraction_endo(Retraction::make(P("x*y"), U("z"), U("1")));
  EXPECT_EQ(b.pi, (Endo{P("x*y"), P("1")}));
  EXPECT_EQ(b.pi_of_p, P("x*y"));

  const auto c = retraction_endo(Retraction::make(P("x"), U("z"), U("0")));
  EXPECT_EQ(c.pi, (Endo{P("x"), Poly2{}}));
}

TEST(RetractionEndo, FactoredSquareMatchesDirectComposition) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto cert = make_retract_generator(random_tame(seed, TameParams{2, 2, 2}), P("x - y + 2"));
    if (cert.p.deg() > Degree(4)) continue;
    const auto re = retraction_endo(cert.retraction());
    EXPECT_EQ(compose(re.pi, re.pi), re.pi_squared);
    EXPECT_EQ(re.pi.apply(cert.p), cert.p);
  }
}

TEST(Square, FastPath) {
  EXPECT_TRUE(is_constant_times_square(P("x^2")));
  EXPECT_TRUE(is_constant_times_square(P("-3*(x + y^2 - 1)^2")));
  EXPECT_TRUE(is_constant_times_square(P("1/4*(x*y + 2)^2")));
  EXPECT_FALSE(is_constant_times_square(P("x^2 + 1")));
  EXPECT_FALSE(is_constant_times_square(P("x^2*y")));
  EXPECT_FALSE(is_constant_times_square(P("x^2 + y^2")));
}

TEST(BoundedSearch, Examples) {
  const auto a = is_retract_generator_bounded(P("x^2*y"), SearchOptions{1});
  ASSERT_TRUE(a.yes);
  EXPECT_EQ(a.s, U("1"));
  EXPECT_EQ(a.t, U("z"));

  const auto b = is_retract_generator_bounded(P("x^2"), SearchOptions{6});
  EXPECT_FALSE(b.yes);
  EXPECT_EQ(b.reason, "square");

  const auto c = is_retract_generator_bounded(P("x"));
  ASSERT_TRUE(c.yes);
  EXPECT_EQ(c.s, U("z"));
  EXPECT_EQ(c.t, U("0"));
  EXPECT_THROW(is_retract_generator_bounded(P("5")), std::invalid_argument);
}

TEST(BoundedSearch, NormalFormsAndConjugates) {
  for (const char* text : {"x + x*y", "x + y^2*x^3 - 2*y", "x*y + x^2", "y + x*y^2", "2*x - y^3 + 1"}) {
    const Poly2 p = P(text);
    const auto d = is_retract_generator_bounded(p);
    ASSERT_TRUE(d.yes) << text;
    EXPECT_TRUE(verify_retract_generator(p, d.s, d.t));
  }
  // Both components nonconstant: p = x - y^2 has (s, t) = (z + z^2, z).
  const auto e = is_retract_generator_bounded(P("x - y^2"));
  ASSERT_TRUE(e.yes);
  EXPECT_TRUE(verify_retract_generator(P("x - y^2"), e.s, e.t));
}

TEST(BoundedSearch, TwoNonconstantComponents) {
  // sigma = (x + y^2, y + (x + y^2)^2) sends (z, 0) to (z, z^2).
  const TameAuto sigma{{ElemX{U("z^2")}, ElemY{U("z^2")}}};
  const auto cert = make_retract_generator(sigma, Poly2{});
  EXPECT_EQ(cert.s, U("z"));
  EXPECT_EQ(cert.t, U("z^2"));
  const auto st = search_degree_slot(cert.p, 1, 2, SearchOptions{}.candidates);
  ASSERT_TRUE(st.has_value());
  EXPECT_TRUE(verify_retract_generator(cert.p, st->first, st->second));
  const auto d = is_retract_generator_bounded(cert.p, SearchOptions{2});
  ASSERT_TRUE(d.yes);
  EXPECT_TRUE(verify_retract_generator(cert.p, d.s, d.t));
}

TEST(BoundedSearch, NoUpTo) {
  // x*y + (x + x^M y^M)^2: a constant s or t leaves degree 2M or a square, and
  // with both nonconstant the square term dominates.
  for (const char* text : {"x*y + (x + x^2*y^2)^2", "x*y + (x + x^5*y^5)^2"}) {
    const auto d = is_retract_generator_bounded(P(text), SearchOptions{3});
    EXPECT_FALSE(d.yes) << text;
    EXPECT_EQ(d.reason, "no certificate up to max_deg");
  }
}

TEST(BoundedSearch, SerialAndParallelAgree) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto cert = make_retract_generator(random_tame(seed, TameParams{2, 2, 2}), P("x*y - 1"));
    if (cert.p.deg() > Degree(4)) continue;
    SearchOptions so{3};
    so.execution = Execution::Serial;
    const auto a = is_retract_generator_bounded(cert.p, so);
    so.execution = Execution::Parallel;
    const auto b = is_retract_generator_bounded(cert.p, so);
    EXPECT_EQ(a.yes, b.yes);
    EXPECT_EQ(a.s, b.s);
    EXPECT_EQ(a.t, b.t);
    EXPECT_EQ(a.ds, b.ds);
    EXPECT_EQ(a.dt, b.dt);
    if (a.yes) EXPECT_TRUE(verify_retract_generator(cert.p, a.s, a.t));
  }
}

TEST(DegreeSlots, Order) {
  const auto slots = degree_slots(2);
  const std::vector<std::pair<long, long>> want{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}, {1, 2}, {2, 1}, {2, 2}};
  EXPECT_EQ(slots, want);
}

TEST(MakeRetract, Examples) {
  const auto a = make_retract_generator(TameAuto{}, P("x"));
  EXPECT_EQ(a.p, P("x + x*y"));
  EXPECT_EQ(a.s, U("z"));
  EXPECT_EQ(a.t, U("0"));
  EXPECT_EQ(a.kind, RetractCertificate::Kind::NormalForm);

  const TameAuto sigma{{ElemY{U("z^2")}}};
  const auto b = make_retract_generator(sigma, Poly2{});
  EXPECT_EQ(b.kind, RetractCertificate::Kind::Conjugated);
  EXPECT_TRUE(verify_retract_generator(b.p, b.s, b.t));
  EXPECT_TRUE(is_automorphism(Endo{b.p, to_endo(inverse(sigma)).g}).yes);
}

TEST(MakeRetract, SeededTransport) {
  Rng rng(41);
  for (int k = 0; k < 100; ++k) {
    const TameAuto sigma = random_tame(rng, TameParams{static_cast<unsigned>(uniform_int(rng, 0, 3)), 3, 2});
    Poly2 h;
    for (int i = 0; i < 3; ++i) {
      h += Poly2::term(Rat(uniform_int(rng, -3, 3)),
                       Monomial{static_cast<std::uint32_t>(uniform_int(rng, 0, 2)), static_cast<std::uint32_t>(uniform_int(rng, 0, 2))});
    }
    const auto c = make_retract_generator(sigma, h);
    EXPECT_TRUE(verify_retract_generator(c.p, c.s, c.t));
    EXPECT_EQ(to_endo(sigma).apply(c.p), Poly2::x() + Poly2::y() * h);
    const Retraction r = c.retraction();
    EXPECT_EQ(r.p(), c.p);
  }
}

TEST(GeneratesKz, Examples) {
  EXPECT_TRUE(generates_Kz(U("z"), U("0"), 1).yes);
  const auto b = generates_Kz(U("z^2 + z"), U("z^2"), 4);
  ASSERT_TRUE(b.yes);
  // z = s - t
  ASSERT_EQ(b.combination.size(), 2u);
  const auto c = generates_Kz(U("z^2"), U("z^3"), 12);
  EXPECT_FALSE(c.yes);
  EXPECT_EQ(c.bound, 12);
  EXPECT_FALSE(generates_Kz(U("2"), U("-1"), 10).yes);
  EXPECT_THROW(generates_Kz(U("z"), U("z"), 0), std::invalid_argument);
}

TEST(GeneratesKz, CombinationReconstructsZ) {
  const UniPoly s = U("z^3 + z"), t = U("z^3");
  const auto d = generates_Kz(s, t, 6);
  ASSERT_TRUE(d.yes);
  UniPoly sum;
  for (const auto& term : d.combination) {
    sum += term.c * s.pow(static_cast<unsigned>(term.i)) * t.pow(static_cast<unsigned>(term.j));
  }
  EXPECT_EQ(sum, U("z"));
}
