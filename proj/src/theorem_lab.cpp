#include "retractlab/theorem_lab.hpp"

#include <algorithm>
#include <stdexcept>

#include "log.hpp"

namespace retractlab {

NormalizedEndo normalize(const Endo& phi, const RetractCertificate& f_cert) {
  if (f_cert.kind == RetractCertificate::Kind::Direct) {
    throw std::invalid_argument("normalization needs a certificate of the form sigma(f) = x + y*h");
  }
  if (!(f_cert.p == phi.f)) throw std::invalid_argument("certificate does not describe the first component");
  NormalizedEndo out;
  if (f_cert.kind == RetractCertificate::Kind::Conjugated) out.sigma = f_cert.sigma;
  out.h1 = f_cert.h;

  const Endo se = to_endo(out.sigma);
  if (!(se.apply(phi.f) == Poly2::x() + Poly2::y() * out.h1)) {
    throw std::invalid_argument("certificate: sigma(f) != x + y*h");
  }
  // sigma(g) = y*h2 + h(x); h collects the y-free terms.
  const Poly2 sg = se.apply(phi.g);
  std::vector<Rat> hc;
  for (const auto& [m, c] : sg.terms()) {
    if (m.i != 0) continue;
    if (hc.size() <= m.j) hc.resize(m.j + 1);
    hc[m.j] = c;
  }
  const UniPoly h(std::move(hc));
  if (!h.is_zero()) out.sigma_prime.moves.emplace_back(ElemY{-h});

  const Endo res = compose(se, compose(phi, to_endo(out.sigma_prime)));
  if (res.g.is_zero()) throw std::domain_error("image lies in K[x] after normalization");
  out.h2 = res.g.divide_by_y();
  if (!(res == out.endo())) throw std::logic_error("normalization produced the wrong shape");
  return out;
}

long witness_M(const Poly2& h1, long n) {
  if (n < 1) throw std::invalid_argument("N must be at least 1");
  const long d = h1.deg().value_or(0);
  return std::max({d + 2, n, 1 + (n + 1) * d}) + 1;
}

Poly2 witness_coordinate(long m) {
  if (m < 1) throw std::invalid_argument("witness exponent M must be at least 1");
  const Poly2 inner = Poly2::x() + Poly2::y().pow(static_cast<unsigned>(m));
  return Poly2::y() + inner * inner;
}

TameAuto witness_factorization(long m) {
  if (m < 1) throw std::invalid_argument("witness exponent M must be at least 1");
  return TameAuto{{ElemX{UniPoly::monomial(static_cast<std::size_t>(m))}, ElemY{UniPoly::monomial(2)}}};
}

Poly2 image_of_witness(const NormalizedEndo& n, long m) {
  const auto um = static_cast<unsigned>(m);
  const Poly2 y = Poly2::y();
  const Poly2 inner = Poly2::x() + y * n.h1 + y.pow(um) * n.h2.pow(um);
  const Poly2 closed = y * n.h2 + inner * inner;
  const Endo e = n.endo();
  if (!(closed == substitute2(witness_coordinate(m), e.f, e.g))) {
    throw std::logic_error("witness image: closed form disagrees with substitution");
  }
  return closed;
}

std::string to_string(DegreeCase c) {
  switch (c) {
    case DegreeCase::TConstant: return "t constant";
    case DegreeCase::SConstant: return "s constant";
    case DegreeCase::Both: return "both nonconstant";
  }
  return "?";
}

bool CaseReport::all_checks_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const InequalityCheck& c) { return c.holds; });
}

namespace {

Degree scale(const Degree& d, long k) { return d.is_neg_inf() ? d : Degree(d.value() * k); }

class CheckList {
 public:
  explicit CheckList(std::vector<InequalityCheck>& out) : out_(out) {}

  void add(std::string name, Degree lhs, const std::string& rel, Degree rhs) {
    bool holds = false;
    if (rel == "<") holds = lhs < rhs;
    else if (rel == "<=") holds = lhs <= rhs;
    else if (rel == "==") holds = lhs == rhs;
    else if (rel == ">=") holds = lhs >= rhs;
    else if (rel == ">") holds = lhs > rhs;
    else if (rel == "!=") holds = lhs != rhs;
    else throw std::logic_error("unknown relation " + rel);
    out_.push_back({std::move(name), lhs, rhs, rel, holds});
  }

 private:
  std::vector<InequalityCheck>& out_;
};

}  // namespace

CaseReport lemma200_degree_analysis(const NormalizedEndo& n, const WitnessParams& params, const UniPoly& s,
                                    const UniPoly& t) {
  if (s.is_constant() && t.is_constant()) throw std::invalid_argument("s and t are both constant");
  const long m = params.m;
  const long big_n = params.n;
  if (m < 1 || big_n < 1) throw std::invalid_argument("witness parameters must be positive");

  // pi applied to the pieces of the witness image, assembled without
  // expanding the image itself.
  const UniPoly ph1 = substitute1(n.h1, s, t);
  const UniPoly ph2 = substitute1(n.h2, s, t);
  const UniPoly pi_yh2 = t * ph2;
  const UniPoly pi_yh1 = t * ph1;
  const UniPoly pi_ymh2m = pi_yh2.pow(static_cast<unsigned>(m));
  const UniPoly inner = s + pi_yh1 + pi_ymh2m;
  const UniPoly inner_sq = inner * inner;
  const UniPoly image = pi_yh2 + inner_sq;

  CaseReport rep;
  rep.image_degree = image.deg();
  rep.image_equals_z = image == UniPoly::z();
  CheckList chk(rep.checks);

  const Degree ds = s.deg();
  const Degree dt = t.deg();
  const long dx_h1 = n.h1.deg_x().value_or(0);
  const long dy_h1 = n.h1.deg_y().value_or(0);
  const long d_h1 = n.h1.deg().value_or(0);
  const Degree d_sq = scale(pi_ymh2m.deg(), 2);

  auto square_branch = [&] {
    rep.sub_branch = "pi(h2) = 0";
    chk.add("deg(pi(image) - pi(x + y*h1)^2)", (image - (s + pi_yh1) * (s + pi_yh1)).deg(), "==", Degree::neg_inf());
    chk.add("deg pi(x + y*h1)^2", ((s + pi_yh1) * (s + pi_yh1)).deg(), "!=", Degree(1));
  };

  if (t.is_constant()) {
    rep.branch = DegreeCase::TConstant;
    rep.case_hypotheses_hold = ds == Degree(1);
    if (pi_yh2.is_constant()) {
      rep.sub_branch = "pi(y*h2) constant";
      chk.add("deg pi(x + y*h1 + y^M*h2^M)^2", inner_sq.deg(), "!=", Degree(1));
    } else {
      rep.sub_branch = "pi(y*h2) nonconstant";
      chk.add("deg pi(y*h2)", pi_yh2.deg(), ">=", Degree(1));
      chk.add("deg pi(y^M*h2^M)", pi_ymh2m.deg(), ">=", Degree(m));
      chk.add("deg pi(y*h1) vs deg_x h1", pi_yh1.deg(), "<=", Degree(dx_h1));
      chk.add("deg_x h1 vs M", Degree(dx_h1), "<", Degree(m));
      chk.add("deg pi(image) vs deg pi(y^2M*h2^2M)", rep.image_degree, "==", d_sq);
      chk.add("deg pi(y^2M*h2^2M)", d_sq, ">", Degree(2));
    }
  } else if (s.is_constant()) {
    rep.branch = DegreeCase::SConstant;
    rep.case_hypotheses_hold = dt == Degree(1);
    if (ph2.is_zero()) {
      square_branch();
    } else {
      rep.sub_branch = "pi(h2) != 0";
      chk.add("deg pi(y*h2)", pi_yh2.deg(), ">=", Degree(1));
      chk.add("deg pi(y*h1) vs 1 + deg_y h1", pi_yh1.deg(), "<=", Degree(1 + dy_h1));
      chk.add("1 + deg_y h1 vs M", Degree(1 + dy_h1), "<", Degree(m));
      chk.add("deg pi(x + y*h1 + y^M*h2^M) vs deg pi(y^M*h2^M)", inner.deg(), "==", pi_ymh2m.deg());
      chk.add("deg pi(y^M*h2^M)", pi_ymh2m.deg(), ">=", Degree(m));
      chk.add("deg pi(y^2M*h2^2M) vs deg pi(y*h2)", d_sq, ">", pi_yh2.deg());
      chk.add("deg pi(image) vs deg pi(y^2M*h2^2M)", rep.image_degree, "==", d_sq);
      chk.add("deg pi(image)", rep.image_degree, ">", Degree(1));
    }
  } else {
    rep.branch = DegreeCase::Both;
    const long vs = ds.value();
    const long vt = dt.value();
    rep.case_hypotheses_hold = vs <= big_n * vt;
    if (ph2.is_zero()) {
      square_branch();
    } else {
      rep.sub_branch = "pi(h2) != 0";
      const long b1 = vt * (1 + dy_h1) + vs * dx_h1;
      const long b2 = vt + (vs + vt) * d_h1;
      const long b3 = vt * (1 + (big_n + 1) * d_h1);
      chk.add("deg pi(y^M*h2^M) vs M*deg t", pi_ymh2m.deg(), ">=", Degree(m * vt));
      chk.add("deg pi(x) vs M*deg t", ds, "<", Degree(m * vt));
      chk.add("deg pi(y*h1) vs deg t*(1 + deg_y h1) + deg s*deg_x h1", pi_yh1.deg(), "<=", Degree(b1));
      chk.add("deg t*(1 + deg_y h1) + deg s*deg_x h1 vs deg t + (deg s + deg t)*deg h1", Degree(b1), "<=",
              Degree(b2));
      chk.add("deg t + (deg s + deg t)*deg h1 vs deg t*(1 + (N+1)*deg h1)", Degree(b2), "<=", Degree(b3));
      chk.add("deg t*(1 + (N+1)*deg h1) vs M*deg t", Degree(b3), "<", Degree(m * vt));
      chk.add("deg pi(x + y*h1 + y^M*h2^M) vs deg pi(y^M*h2^M)", inner.deg(), "==", pi_ymh2m.deg());
      chk.add("deg pi(image) vs 2*deg pi(x + y*h1 + y^M*h2^M)", rep.image_degree, "==", scale(inner.deg(), 2));
      chk.add("deg pi(image)", rep.image_degree, ">", Degree(1));
    }
  }
  return rep;
}

LeadingPair LeadingPair::of(const Endo& psi) {
  const Monomial f = psi.f.leading_monomial();
  const Monomial g = psi.g.leading_monomial();
  return LeadingPair{f.i, f.j, g.i, g.j};
}

namespace {

std::optional<long> multiple_of(long a, long b, long c, long d) {
  // (a, b) = k (c, d) with k >= 1
  if (c == 0 && d == 0) return (a == 0 && b == 0) ? std::optional<long>(1) : std::nullopt;
  const long num = c != 0 ? a : b;
  const long den = c != 0 ? c : d;
  if (num % den != 0) return std::nullopt;
  const long k = num / den;
  if (k < 1 || a != k * c || b != k * d) return std::nullopt;
  return k;
}

}  // namespace

std::optional<Dependence> leading_dependence(const LeadingPair& lp) {
  if (auto k = multiple_of(lp.a, lp.b, lp.c, lp.d)) return Dependence{*k, false};
  if (auto k = multiple_of(lp.c, lp.d, lp.a, lp.b)) return Dependence{*k, true};
  return std::nullopt;
}

RatioValue ratio_value(long a, long b, long c, long d, const Rat& m) {
  if (d == 0 || b % d != 0) throw std::invalid_argument("decomposition precondition not met: need d != 0 and d | b");
  const Rat den = Rat(c) + Rat(d) * m;
  if (den == 0) throw std::domain_error("c + d*m vanishes");
  RatioValue r;
  r.value = (Rat(a) + Rat(b) * m) / den;
  r.k = Rat(b / d);
  r.remainder = (Rat(a) - Rat(c) * r.k) / den;
  if (r.value != r.k + r.remainder) throw std::logic_error("ratio decomposition mismatch");
  return r;
}

bool am_divisibility(long d1, long d2) {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("degrees must be positive");
  return d2 % d1 == 0 || d1 % d2 == 0;
}

namespace {

// a'y + b' with a' != 0
bool is_linear_in_y(const Poly2& p) {
  if (p.coeff(Monomial{1, 0}) == 0) return false;
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& kv) { return kv.first.j == 0 && kv.first.i <= 1; });
}

std::string monomial_text(const Monomial& m) { return Poly2::term(Rat(1), m).to_string(); }

}  // namespace

ReductionStep reduction_step(const Endo& psi) {
  if (psi.f.is_constant() || psi.g.is_constant()) throw std::invalid_argument("constant component");
  if (is_linear_in_y(psi.f)) return LinearComponent{true};
  if (is_linear_in_y(psi.g)) return LinearComponent{false};

  const LeadingPair lp = LeadingPair::of(psi);
  const auto dep = leading_dependence(lp);
  const Monomial lf = psi.f.leading_monomial();
  const Monomial lg = psi.g.leading_monomial();
  if (!dep) {
    return StuckReport{"leading monomials " + monomial_text(lf) + " and " + monomial_text(lg) +
                           " are not powers of one another",
                       lf, lg};
  }
  const auto k = static_cast<unsigned>(dep->k);
  Reduced r;
  if (!dep->swapped) {
    const Rat c = psi.f.leading_coeff() / pow(psi.g.leading_coeff(), k);
    r.move = ElemX{UniPoly::monomial(k, -c)};
    r.next = Endo{psi.f - c * psi.g.pow(k), psi.g};
    r.first = true;
    if (!r.next.f.is_zero() && !(r.next.f.leading_monomial() < lf)) {
      throw std::logic_error("reduction step did not lower the leading monomial");
    }
  } else {
    const Rat c = psi.g.leading_coeff() / pow(psi.f.leading_coeff(), k);
    r.move = ElemY{UniPoly::monomial(k, -c)};
    r.next = Endo{psi.f, psi.g - c * psi.f.pow(k)};
    r.first = false;
    if (!r.next.g.is_zero() && !(r.next.g.leading_monomial() < lg)) {
      throw std::logic_error("reduction step did not lower the leading monomial");
    }
  }
  return r;
}

std::string to_string(ReductionOutcome::Kind k) {
  switch (k) {
    case ReductionOutcome::Kind::Automorphism: return "automorphism";
    case ReductionOutcome::Kind::Stuck: return "stuck";
    case ReductionOutcome::Kind::Budget: return "budget";
  }
  return "?";
}

namespace {

class Reducer {
 public:
  explicit Reducer(const Endo& psi) : cur_(psi) {}

  void right(const ElementaryMove& m) {
    cur_ = compose(cur_, to_endo(m));
    right_.push_back(m);
  }
  void left(const ElementaryMove& m) {
    cur_ = compose(to_endo(m), cur_);
    left_.insert(left_.begin(), m);
  }

  // cur_.f == a'y + b': bring cur_ to the identity or report why not.
  std::optional<std::string> finish_first(std::vector<std::string>& log) {
    const Rat a = cur_.f.coeff(Monomial{1, 0});
    const Rat b = cur_.f.constant_term();
    if (a != 1 || b != 0) right(Affine::make({{{1 / a, Rat(0)}, {Rat(0), Rat(1)}}}, {-b / a, Rat(0)}));
    // cur_ = (y, g); strip g(0, y).
    std::vector<Rat> w;
    for (const auto& [m, c] : cur_.g.terms()) {
      if (m.j != 0) continue;
      if (w.size() <= m.i) w.resize(m.i + 1);
      w[m.i] = -c;
    }
    if (!w.empty()) right(ElemY{UniPoly(std::move(w))});
    left(Affine::swap());
    log.push_back("swap: (x, " + cur_.g.to_string() + ")");
    if (cur_.g.is_zero()) return "second component vanished after finalization";
    const Poly2 h3 = cur_.g.divide_by_y();
    if (!h3.is_constant()) return "h3' = " + h3.to_string() + " is not a nonzero constant";
    const Rat c = h3.constant_term();
    if (c != 1) right(Affine::make({{{Rat(1), Rat(0)}, {Rat(0), 1 / c}}}, {Rat(0), Rat(0)}));
    if (!cur_.is_identity()) throw std::logic_error("finalization did not reach the identity");
    return std::nullopt;
  }

  void finish_second() {
    const Rat a = cur_.g.coeff(Monomial{1, 0});
    const Rat b = cur_.g.constant_term();
    if (a != 1 || b != 0) right(Affine::make({{{Rat(1), Rat(0)}, {Rat(0), 1 / a}}}, {Rat(0), -b / a}));
    right(Affine::swap());
  }

  TameAuto trail() const {
    TameAuto out = inverse(TameAuto{left_});
    const TameAuto r = inverse(TameAuto{right_});
    out.moves.insert(out.moves.end(), r.moves.begin(), r.moves.end());
    return out;
  }

  Endo cur_;

 private:
  std::vector<ElementaryMove> left_;
  std::vector<ElementaryMove> right_;
};

}  // namespace

ReductionOutcome run_reduction(const Endo& psi, long max_steps) {
  ReductionOutcome out;
  if (psi.is_identity()) {
    out.kind = ReductionOutcome::Kind::Automorphism;
    return out;
  }
  Reducer red(psi);
  for (;;) {
    if (red.cur_.f.is_constant() || red.cur_.g.is_constant()) {
      out.kind = ReductionOutcome::Kind::Stuck;
      out.stuck.reason = "constant component";
      return out;
    }
    const ReductionStep st = reduction_step(red.cur_);
    if (const auto* r = std::get_if<Reduced>(&st)) {
      if (out.steps >= max_steps) {
        out.kind = ReductionOutcome::Kind::Budget;
        return out;
      }
      red.right(r->move);
      if (!(red.cur_ == r->next)) throw std::logic_error("reduction move disagrees with its composition");
      ++out.steps;
      out.log.push_back(std::string(r->first ? "reduce f: " : "reduce g: ") + red.cur_.f.to_string() + " | " +
                        red.cur_.g.to_string());
      RLOG(Trace, "reduction step %ld: deg f = %s, deg g = %s", out.steps, red.cur_.f.deg().to_string().c_str(),
           red.cur_.g.deg().to_string().c_str());
      continue;
    }
    if (const auto* s = std::get_if<StuckReport>(&st)) {
      out.kind = ReductionOutcome::Kind::Stuck;
      out.stuck = *s;
      return out;
    }
    const bool first = std::get<LinearComponent>(st).first;
    out.log.push_back(std::string("linear component in ") + (first ? "f" : "g"));
    if (!first) red.finish_second();
    if (auto why = red.finish_first(out.log)) {
      out.kind = ReductionOutcome::Kind::Stuck;
      out.stuck.reason = *why;
      return out;
    }
    out.kind = ReductionOutcome::Kind::Automorphism;
    out.trail = red.trail();
    if (!(to_endo(out.trail) == psi)) throw std::logic_error("reduction trail does not recompose to the input");
    return out;
  }
}

TransportCheck transport_sequence_check(const Endo& psi, const TameAuto& alpha, const UniPoly& s, const UniPoly& t,
                                        long bound) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  const Endo pa = compose(psi, to_endo(alpha));
  const UniPoly u1 = substitute1(psi.f, s, t);
  const UniPoly u2 = substitute1(psi.g, s, t);
  const UniPoly w1 = substitute1(pa.f, s, t);
  const UniPoly w2 = substitute1(pa.g, s, t);
  const long dw = std::max({1L, w1.deg().value_or(0), w2.deg().value_or(0)});
  const long inflate = degree_bound(alpha) * dw;

  TransportCheck out;
  long b = bound;
  for (int round = 0;; ++round) {
    out.bound = b;
    out.w_bound = b * inflate;
    out.u_yes = generates_Kz(u1, u2, out.bound).yes;
    out.w_yes = generates_Kz(w1, w2, out.w_bound).yes;
    out.escalations = round;
    if (out.equal() || round == 3) return out;
    RLOG(Debug, "transport mismatch at bound %ld, doubling", b);
    b *= 2;
  }
}

long ExperimentReport::ok_count() const {
  return static_cast<long>(std::count_if(records.begin(), records.end(), [](const TrialRecord& r) { return r.ok; }));
}

std::vector<Endo> non_automorphism_library() {
  const Poly2 x = Poly2::x();
  const Poly2 y = Poly2::y();
  return {Endo{x, x * y}, Endo{x, y * y}, Endo{x + y * y, y * y}, Endo{x * x, y}};
}

std::vector<Poly2> sampled_coordinates(long witness_m) {
  const Poly2 x = Poly2::x();
  const Poly2 y = Poly2::y();
  std::vector<Poly2> out{x, y};
  for (unsigned j = 1; j <= 3; ++j) {
    out.push_back(x + y.pow(j));
    out.push_back(y + x.pow(j));
  }
  out.push_back(witness_coordinate(witness_m));
  for (std::uint64_t k = 1; k <= 2; ++k) out.push_back(to_endo(random_tame(k, TameParams{2, 2, 2})).f);
  std::vector<Poly2> uniq;
  for (auto& p : out) {
    if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(std::move(p));
  }
  return uniq;
}

NegativeRecord refute_by_sampling(const Endo& phi, unsigned max_deg, long witness_m, Execution execution) {
  NegativeRecord rec;
  rec.phi_f = phi.f.to_string();
  rec.phi_g = phi.g.to_string();
  SearchOptions so;
  so.max_deg = max_deg;
  so.execution = execution;
  for (const Poly2& c : sampled_coordinates(witness_m)) {
    ++rec.sampled;
    const Poly2 img = phi.apply(c);
    if (img.is_constant()) {
      rec.coordinate = c.to_string();
      rec.image = img.to_string();
      rec.reason = "constant image";
      return rec;
    }
    const GeneratorDecision d = is_retract_generator_bounded(img, so);
    if (!d.yes) {
      rec.coordinate = c.to_string();
      rec.image = img.to_string();
      rec.reason = d.reason;
      return rec;
    }
  }
  rec.reason = "every sampled image has a bounded certificate";
  return rec;
}

TrialRecord run_trial(std::uint64_t base_seed, long trial, const ExperimentOptions& opts) {
  TrialRecord rec;
  rec.trial = trial;
  rec.seed = base_seed + static_cast<std::uint64_t>(trial);
  Rng rng(rec.seed);
  TameParams tp;
  tp.n_moves = static_cast<unsigned>(uniform_int(rng, 1, opts.max_moves));
  tp.coeff_bound = opts.coeff_bound;
  tp.deg_bound = opts.deg_bound;
  const Endo phi = to_endo(random_tame(rng, tp));
  const ReductionOutcome o = run_reduction(phi, opts.max_steps);
  rec.steps = o.steps;
  rec.verdict = to_string(o.kind);
  rec.ok = o.kind == ReductionOutcome::Kind::Automorphism && to_endo(o.trail) == phi;
  return rec;
}

ExperimentReport main_theorem_experiment(const ExperimentOptions& opts) {
  if (opts.trials < 1) throw std::invalid_argument("trials must be at least 1");
  ExperimentReport rep;
  rep.seed = opts.seed;
  rep.trials = opts.trials;
  rep.max_deg = opts.max_deg;
  rep.records.resize(static_cast<std::size_t>(opts.trials));
  if (opts.execution == Execution::Serial) {
    for (long i = 0; i < opts.trials; ++i) rep.records[static_cast<std::size_t>(i)] = run_trial(opts.seed, i, opts);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < opts.trials; ++i) rep.records[static_cast<std::size_t>(i)] = run_trial(opts.seed, i, opts);
  }
  if (opts.sample_coords) {
    const long m = witness_M(Poly2{}, 4);
    for (const Endo& phi : non_automorphism_library()) {
      rep.negatives.push_back(refute_by_sampling(phi, opts.max_deg, m, opts.execution));
    }
  }
  return rep;
}

std::pair<UniPoly, UniPoly> sweep_pair(std::uint64_t seed, long index, const SweepOptions& opts) {
  Rng rng(seed + static_cast<std::uint64_t>(index));
  const long cb = opts.coeff_bound;
  const long md = opts.max_deg;
  if (index % 2 == 0) {
    const long m = uniform_int(rng, 1, md);
    const long sign = uniform_int(rng, 0, 1) == 0 ? 1 : -1;
    const UniPoly t = UniPoly::monomial(static_cast<std::size_t>(m), Rat(sign));
    const long k = uniform_int(rng, 0, md / m);
    long a = uniform_int(rng, -cb, cb - 1);
    if (a >= 0) ++a;
    const long b = uniform_int(rng, -cb, cb);
    const long c = uniform_int(rng, -cb, cb);
    const UniPoly s = UniPoly::monomial(1, Rat(a)) + UniPoly::constant(Rat(b)) + Rat(c) * t.pow(static_cast<unsigned>(k));
    if (uniform_int(rng, 0, 1) == 0) return {s, t};
    return {t, s};
  }
  auto draw = [&] {
    const long d = uniform_int(rng, 0, md);
    std::vector<Rat> cs(static_cast<std::size_t>(d + 1));
    for (auto& v : cs) v = uniform_int(rng, -cb, cb);
    return UniPoly(std::move(cs));
  };
  UniPoly s = draw();
  UniPoly t = draw();
  return {s, t};
}

namespace {

SweepRecord sweep_one(const SweepOptions& opts, long i) {
  SweepRecord r;
  std::tie(r.s, r.t) = sweep_pair(opts.seed, i, opts);
  if (r.s.is_constant() && r.t.is_constant()) return r;
  r.yes = generates_Kz(r.s, r.t, opts.bound).yes;
  if (r.yes) {
    const long ds = r.s.deg().value_or(0);
    const long dt = r.t.deg().value_or(0);
    if (ds == 0 || dt == 0) {
      r.consistent = std::max(ds, dt) == 1;
    } else {
      r.consistent = am_divisibility(ds, dt);
    }
  }
  return r;
}

}  // namespace

std::vector<SweepRecord> am_sweep(const SweepOptions& opts) {
  std::vector<SweepRecord> out(static_cast<std::size_t>(opts.pairs));
  if (opts.execution == Execution::Serial) {
    for (long i = 0; i < opts.pairs; ++i) out[static_cast<std::size_t>(i)] = sweep_one(opts, i);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < opts.pairs; ++i) out[static_cast<std::size_t>(i)] = sweep_one(opts, i);
  }
  return out;
}

}  // namespace retractlab
