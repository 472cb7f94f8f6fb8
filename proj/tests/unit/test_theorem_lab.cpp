#include <gtest/gtest.h>

#include "retractlab/parse.hpp"
#include "retractlab/theorem_lab.hpp"

using namespace retractlab;

namespace {

Poly2 P(const char* s) { return parse_poly2(s); }
UniPoly U(const char* s) { return parse_unipoly(s); }
Endo E(const char* f, const char* g) { return Endo{P(f), P(g)}; }

NormalizedEndo normalized(const char* h1, const char* h2) {
  NormalizedEndo n;
  n.h1 = P(h1);
  n.h2 = P(h2);
  return n;
}

UniPoly random_uni(Rng& rng, long deg, long bound = 2) {
  std::vector<Rat> c(static_cast<std::size_t>(deg + 1));
  for (auto& v : c) v = uniform_int(rng, -bound, bound);
  long lead = uniform_int(rng, -bound, bound - 1);
  c.back() = lead >= 0 ? lead + 1 : lead;
  return UniPoly(std::move(c));
}

}  // namespace

TEST(Normalize, Examples) {
  const auto a = normalize(E("x", "y + x^3"), RetractCertificate::normal_form(Poly2{}));
  EXPECT_TRUE(a.sigma.moves.empty());
  ASSERT_EQ(a.sigma_prime.moves.size(), 1u);
  EXPECT_EQ(to_endo(a.sigma_prime), E("x", "y - x^3"));
  EXPECT_EQ(a.endo(), E("x", "y"));

  const auto b = normalize(E("x + x*y", "y"), RetractCertificate::normal_form(P("x")));
  EXPECT_EQ(b.h1, P("x"));
  EXPECT_EQ(b.h2, P("1"));
  EXPECT_TRUE(b.sigma.moves.empty());
  EXPECT_TRUE(b.sigma_prime.moves.empty());

  try {
    (void)normalize(E("x", "x^2"), RetractCertificate::normal_form(Poly2{}));
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_EQ(std::string(e.what()), "image lies in K[x] after normalization");
  }
  EXPECT_THROW(normalize(E("x", "y"), RetractCertificate::direct(P("x"), U("z"), U("0"))), std::invalid_argument);
}

TEST(Normalize, ConjugatedInvariant) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TameAuto sigma = random_tame(seed, TameParams{2, 2, 2});
    const auto cert = make_retract_generator(sigma, P("x - y"));
    const Endo phi{cert.p, P("x*y + y^2 - 3")};
    const auto n = normalize(phi, cert);
    EXPECT_EQ(compose(to_endo(n.sigma), compose(phi, to_endo(n.sigma_prime))), n.endo());
    EXPECT_FALSE(n.h2.is_zero());
  }
}

TEST(Witness, M) {
  EXPECT_EQ(witness_M(P("5"), 1), 3);
  EXPECT_EQ(witness_M(P("x^2 + y"), 3), 10);
  EXPECT_EQ(witness_M(Poly2{}, 4), 5);
  for (long n = 1; n <= 6; ++n) {
    for (const char* h : {"0", "x", "x*y", "y^3 + x"}) {
      const Poly2 h1 = P(h);
      const long d = h1.deg().value_or(0);
      const long m = witness_M(h1, n);
      EXPECT_GT(m, d + 2);
      EXPECT_GT(m, n);
      EXPECT_GT(m, 1 + (n + 1) * d);
    }
  }
  EXPECT_THROW(witness_M(Poly2{}, 0), std::invalid_argument);
}

TEST(Witness, Coordinate) {
  EXPECT_EQ(witness_coordinate(1), P("y + (x + y)^2"));
  EXPECT_EQ(witness_coordinate(2).to_string(), "x^2 + 2*x*y^2 + y^4 + y");
  EXPECT_THROW(witness_coordinate(0), std::invalid_argument);
  for (long m = 1; m <= 3; ++m) {
    const Endo pair = to_endo(witness_factorization(m));
    EXPECT_EQ(pair.g, witness_coordinate(m));
    EXPECT_EQ(pair.f, Poly2::x() + Poly2::y().pow(static_cast<unsigned>(m)));
    const auto d = is_automorphism(pair);
    ASSERT_TRUE(d.yes);
    EXPECT_EQ(to_endo(d.factorization), pair);
  }
}

TEST(Witness, Image) {
  EXPECT_EQ(image_of_witness(normalized("0", "1"), 2), P("y + (x + y^2)^2"));
  EXPECT_EQ(image_of_witness(normalized("x", "1"), 3).to_string(),
            "x^2*y^2 + 2*x^2*y + x^2 + 2*x*y^4 + 2*x*y^3 + y^6 + y");
}

TEST(Witness, ImageMatchesSubstitution) {
  Rng rng(51);
  for (int k = 0; k < 20; ++k) {
    NormalizedEndo n;
    for (int i = 0; i < 2; ++i) {
      n.h1 += Poly2::term(Rat(uniform_int(rng, -2, 2)), Monomial{static_cast<std::uint32_t>(uniform_int(rng, 0, 1)),
                                                                 static_cast<std::uint32_t>(uniform_int(rng, 0, 1))});
      n.h2 += Poly2::term(Rat(uniform_int(rng, 1, 2)), Monomial{static_cast<std::uint32_t>(uniform_int(rng, 0, 1)),
                                                                static_cast<std::uint32_t>(uniform_int(rng, 0, 1))});
    }
    const long m = uniform_int(rng, 1, 4);
    const Endo e = n.endo();
    EXPECT_EQ(image_of_witness(n, m), substitute2(witness_coordinate(m), e.f, e.g));
  }
}

TEST(DegreeAnalysis, OutsideHypothesesExample) {
  // h1 = 0, h2 = 1, M = 3, s = z^4, t = z.
  const auto r = lemma200_degree_analysis(normalized("0", "1"), WitnessParams{2, 3}, U("z^4"), U("z"));
  EXPECT_EQ(r.branch, DegreeCase::Both);
  EXPECT_FALSE(r.case_hypotheses_hold);  // 4 > 2 * 1
  EXPECT_EQ(r.image_degree, Degree(8));
  EXPECT_FALSE(r.image_equals_z);
  bool saw_bound = false;
  for (const auto& c : r.checks) {
    if (c.name == "deg t*(1 + (N+1)*deg h1) vs M*deg t") {
      saw_bound = true;
      EXPECT_EQ(c.lhs, Degree(1));
      EXPECT_EQ(c.rhs, Degree(3));
      EXPECT_TRUE(c.holds);
    }
  }
  EXPECT_TRUE(saw_bound);
}

TEST(DegreeAnalysis, Routing) {
  const auto n = normalized("x", "1 + y");
  EXPECT_EQ(lemma200_degree_analysis(n, {4, 7}, U("z"), U("0")).branch, DegreeCase::TConstant);
  EXPECT_EQ(lemma200_degree_analysis(n, {4, 7}, U("0"), U("z")).branch, DegreeCase::SConstant);
  EXPECT_EQ(lemma200_degree_analysis(n, {4, 7}, U("z^2"), U("z")).branch, DegreeCase::Both);
  EXPECT_THROW(lemma200_degree_analysis(n, {4, 7}, U("1"), U("2")), std::invalid_argument);
  // pi(h2) = 0 is routed to the square argument.
  const auto sq = lemma200_degree_analysis(n, {4, 7}, U("z^2"), U("-1"));
  EXPECT_EQ(sq.branch, DegreeCase::TConstant);
  EXPECT_EQ(sq.sub_branch, "pi(y*h2) constant");
  EXPECT_TRUE(sq.all_checks_hold());
}

TEST(DegreeAnalysis, SampledFamilies) {
  const std::vector<NormalizedEndo> family{normalized("0", "1"), normalized("x", "1 + y"), normalized("y - 2", "x")};
  Rng rng(52);
  for (const auto& n : family) {
    const long m = witness_M(n.h1, 4);
    const WitnessParams wp{4, m};
    const Endo e = n.endo();
    for (int k = 0; k < 50; ++k) {
      UniPoly s, t;
      switch (k % 3) {
        case 0:
          s = random_uni(rng, 1);
          t = UniPoly::constant(Rat(uniform_int(rng, -2, 2)));
          break;
        case 1:
          s = UniPoly::constant(Rat(uniform_int(rng, -2, 2)));
          t = random_uni(rng, 1);
          break;
        default: {
          const long dt = uniform_int(rng, 1, 2);
          t = random_uni(rng, dt);
          s = random_uni(rng, uniform_int(rng, 1, 4 * dt));
        }
      }
      const auto r = lemma200_degree_analysis(n, wp, s, t);
      EXPECT_TRUE(r.case_hypotheses_hold);
      EXPECT_TRUE(r.all_checks_hold()) << s.to_string() << " / " << t.to_string();
      EXPECT_FALSE(r.image_equals_z);
      if (k < 6) {
        EXPECT_EQ(substitute1(image_of_witness(n, m), s, t).deg(), r.image_degree);
        EXPECT_EQ(substitute1(substitute2(witness_coordinate(m), e.f, e.g), s, t) == UniPoly::z(), r.image_equals_z);
      }
    }
  }
}

TEST(LeadingDependence, Examples) {
  const auto a = leading_dependence(LeadingPair{2, 4, 1, 2});
  ASSERT_TRUE(a);
  EXPECT_EQ(a->k, 2);
  EXPECT_FALSE(a->swapped);
  EXPECT_FALSE(leading_dependence(LeadingPair{1, 2, 1, 1}));
  const auto c = leading_dependence(LeadingPair{0, 3, 0, 1});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->k, 3);
  const auto d = leading_dependence(LeadingPair{1, 1, 3, 3});
  ASSERT_TRUE(d);
  EXPECT_TRUE(d->swapped);
  EXPECT_EQ(d->k, 3);
}

TEST(RatioValue, Examples) {
  const auto a = ratio_value(2, 4, 1, 2, Rat(3));
  EXPECT_EQ(a.value, Rat(2));
  EXPECT_EQ(a.k, Rat(2));
  EXPECT_EQ(a.remainder, Rat(0));
  const auto b = ratio_value(3, 4, 1, 2, Rat(10));
  EXPECT_EQ(b.value, make_rat(43, 21));
  EXPECT_EQ(b.remainder, make_rat(1, 21));
  EXPECT_THROW(ratio_value(1, 3, 1, 0, Rat(1)), std::invalid_argument);
  EXPECT_THROW(ratio_value(1, 3, 1, 2, Rat(1)), std::invalid_argument);
}

TEST(AmDivisibility, Examples) {
  EXPECT_TRUE(am_divisibility(2, 6));
  EXPECT_FALSE(am_divisibility(2, 3));
  EXPECT_TRUE(am_divisibility(5, 5));
  EXPECT_THROW(am_divisibility(0, 3), std::invalid_argument);
}

TEST(ReductionStep, Examples) {
  // g = y is already linear in y, so the power relation is not consulted.
  const auto a = reduction_step(E("x + y^2", "y"));
  ASSERT_TRUE(std::holds_alternative<LinearComponent>(a));
  EXPECT_FALSE(std::get<LinearComponent>(a).first);

  // The power relation proper: v(g) = v(f)^2.
  const auto b = reduction_step(E("x", "y + x^2"));
  ASSERT_TRUE(std::holds_alternative<Reduced>(b));
  const auto& rb = std::get<Reduced>(b);
  EXPECT_EQ(rb.next, E("x", "y"));
  EXPECT_EQ(compose(E("x", "y + x^2"), to_endo(rb.move)), rb.next);

  const auto c = reduction_step(E("3*y - 1", "x^5 + y"));
  ASSERT_TRUE(std::holds_alternative<LinearComponent>(c));
  EXPECT_TRUE(std::get<LinearComponent>(c).first);

  const auto d = reduction_step(E("x", "x*y"));
  ASSERT_TRUE(std::holds_alternative<StuckReport>(d));
  EXPECT_EQ(std::get<StuckReport>(d).lead_f, (Monomial{0, 1}));
  EXPECT_EQ(std::get<StuckReport>(d).lead_g, (Monomial{1, 1}));

  EXPECT_THROW(reduction_step(E("x", "4")), std::invalid_argument);
}

TEST(RunReduction, Examples) {
  const auto id = run_reduction(Endo::identity());
  EXPECT_EQ(id.kind, ReductionOutcome::Kind::Automorphism);
  EXPECT_TRUE(id.trail.moves.empty());

  const auto st = run_reduction(E("x", "x*y"));
  EXPECT_EQ(st.kind, ReductionOutcome::Kind::Stuck);
  EXPECT_EQ(st.steps, 0);

  const auto h3 = run_reduction(E("x", "y + x*y"));
  EXPECT_EQ(h3.kind, ReductionOutcome::Kind::Stuck);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Endo phi = to_endo(random_tame(seed, TameParams{3, 3, 3}));
    const auto o = run_reduction(phi);
    ASSERT_EQ(o.kind, ReductionOutcome::Kind::Automorphism) << seed << ": " << o.stuck.reason;
    EXPECT_EQ(to_endo(o.trail), phi);
  }
  const auto budget = run_reduction(to_endo(TameAuto{{ElemX{U("z^2")}, ElemY{U("z^3")}}}), 0);
  EXPECT_EQ(budget.kind, ReductionOutcome::Kind::Budget);
}

TEST(RunReduction, AgreesWithDecision) {
  const std::vector<Endo> bad{E("x", "x*y"), E("x", "y^2"), E("x + y^2", "y^2"), E("x^2", "y")};
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Endo tame = to_endo(random_tame(seed, TameParams{2, 2, 2}));
    Endo phi = tame;
    if (seed % 2 == 1) phi = compose(tame, bad[seed / 2 % bad.size()]);
    const bool decided = is_automorphism(phi).yes;
    const bool reduced = run_reduction(phi).kind == ReductionOutcome::Kind::Automorphism;
    EXPECT_EQ(decided, reduced) << "seed " << seed;
    EXPECT_EQ(decided, seed % 2 == 0);
  }
}

TEST(Transport, Examples) {
  EXPECT_TRUE(transport_sequence_check(E("x + y^2", "y"), TameAuto{}, U("z"), U("0"), 4).equal());
  const auto b = transport_sequence_check(E("x + y^2", "y"), TameAuto{{ElemY{U("z^2")}}}, U("z"), U("0"), 4);
  EXPECT_TRUE(b.u_yes);
  EXPECT_TRUE(b.w_yes);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Endo psi = to_endo(random_tame(seed, TameParams{1, 2, 2}));
    const TameAuto alpha = random_tame(seed + 1000, TameParams{1, 2, 2});
    EXPECT_TRUE(transport_sequence_check(psi, alpha, U("z"), U("z^2 - 1"), 4).equal()) << seed;
  }
}

TEST(Experiment, DeterministicAndParallelMatchesSerial) {
  ExperimentOptions eo;
  eo.trials = 12;
  eo.sample_coords = false;
  eo.execution = Execution::Serial;
  const auto a = main_theorem_experiment(eo);
  eo.execution = Execution::Parallel;
  const auto b = main_theorem_experiment(eo);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].trial, static_cast<long>(i));
    EXPECT_EQ(a.records[i].seed, b.records[i].seed);
    EXPECT_EQ(a.records[i].verdict, b.records[i].verdict);
    EXPECT_EQ(a.records[i].steps, b.records[i].steps);
  }
  EXPECT_EQ(a.ok_count(), 12);
}

TEST(Experiment, NegativeLibrary) {
  const long m = witness_M(Poly2{}, 4);
  const auto xy = refute_by_sampling(E("x", "x*y"), 4, m, Execution::Parallel);
  ASSERT_TRUE(xy.coordinate);
  EXPECT_EQ(*xy.coordinate, witness_coordinate(m).to_string());
  const auto sq = refute_by_sampling(E("x", "y^2"), 4, m, Execution::Parallel);
  ASSERT_TRUE(sq.coordinate);
  EXPECT_EQ(sq.reason, "square");
  EXPECT_EQ(*sq.image, "y^2");
}

TEST(Sweep, SerialMatchesParallel) {
  SweepOptions so;
  so.pairs = 200;
  so.execution = Execution::Serial;
  const auto a = am_sweep(so);
  so.execution = Execution::Parallel;
  const auto b = am_sweep(so);
  ASSERT_EQ(a.size(), b.size());
  long yes = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].s, b[i].s);
    EXPECT_EQ(a[i].yes, b[i].yes);
    EXPECT_TRUE(a[i].consistent);
    yes += a[i].yes;
  }
  EXPECT_GT(yes, 50);
}
