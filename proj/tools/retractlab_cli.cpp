// retractlab command-line front end. Every command prints one JSON document
// (or key: value lines with --text) terminated by a newline.
//
// Exit codes: 0 success / yes, 1 no / stuck, 2 usage or input error,
// 3 internal invariant violation.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "retractlab/endo.hpp"
#include "retractlab/free_algebra.hpp"
#include "retractlab/parse.hpp"
#include "retractlab/retracts.hpp"
#include "retractlab/serialize.hpp"
#include "retractlab/theorem_lab.hpp"

using namespace retractlab;

namespace {

enum Exit { kOk = 0, kNo = 1, kUsage = 2, kInternal = 3 };

struct Globals {
  bool text = false;
  bool serial = false;
};

void render_text(const Json& j, const std::string& prefix, std::ostream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      render_text(*it, key, os);
    } else if (it->is_string()) {
      os << key << ": " << it->get<std::string>() << "\n";
    } else {
      os << key << ": " << it->dump() << "\n";
    }
  }
}

void emit(const Globals& g, const Json& j) {
  if (g.text) {
    render_text(j, "", std::cout);
  } else {
    std::cout << j.dump() << "\n";
  }
}

Execution execution(const Globals& g) { return g.serial ? Execution::Serial : Execution::Parallel; }

Endo endo_from(const std::string& f, const std::string& g) { return Endo{parse_poly2(f), parse_poly2(g)}; }

TameAuto tame_from_text(const std::string& text) { return tame_from_json(Json::parse(text)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experiments on endomorphisms of K[x,y] that preserve retracts", "retractlab"};
  app.require_subcommand(1);
  Globals glob;
  app.add_flag("--text", glob.text, "Human-readable key: value output");
  app.add_flag("--json", [&](std::int64_t) { glob.text = false; }, "JSON output (default)");
  app.add_flag("--serial", glob.serial, "Use the serial reference kernels");

  std::string f, g, p, s, t, h, sigma = "[]", field = "q", h1 = "0", h2;
  unsigned max_deg = 4;
  long bound = 12, max_steps = 10000, trials = 50, m = 0, n = 4;
  std::uint64_t seed = 7;

  std::function<int()> run;

  auto* is_auto = app.add_subcommand("is-auto", "Decide whether (f, g) is an automorphism");
  is_auto->add_option("f", f)->required();
  is_auto->add_option("g", g)->required();
  is_auto->callback([&] {
    run = [&] {
      const auto d = is_automorphism(endo_from(f, g));
      Json out{{"verdict", d.yes ? "yes" : "no"}};
      if (d.yes) out["moves"] = tame_to_json(d.factorization);
      else out["reason"] = d.reason;
      emit(glob, out);
      return d.yes ? kOk : kNo;
    };
  });

  auto* decompose = app.add_subcommand("decompose", "Tame factorization with its degree trace");
  decompose->add_option("f", f)->required();
  decompose->add_option("g", g)->required();
  decompose->callback([&] {
    run = [&] {
      const Endo phi = endo_from(f, g);
      const auto d = is_automorphism(phi);
      Json trace = Json::array();
      for (const auto& tr : d.trace) trace.push_back(Json{{"deg_f", tr.deg_f}, {"deg_g", tr.deg_g}});
      Json out{{"verdict", d.yes ? "yes" : "no"}};
      if (d.yes) {
        if (!(to_endo(d.factorization) == phi)) throw std::logic_error("factorization does not recompose");
        out["moves"] = tame_to_json(d.factorization);
        out["recomposes"] = true;
      } else {
        out["reason"] = d.reason;
      }
      out["trace"] = trace;
      emit(glob, out);
      return d.yes ? kOk : kNo;
    };
  });

  auto* jac = app.add_subcommand("jacobian", "Jacobian determinant of (f, g)");
  jac->add_option("f", f)->required();
  jac->add_option("g", g)->required();
  jac->callback([&] {
    run = [&] {
      emit(glob, Json{{"jacobian", jacobian(endo_from(f, g)).to_string()}});
      return kOk;
    };
  });

  auto* icw = app.add_subcommand("is-coordinate-witness", "Check y + (x + y^M)^2 against its mate x + y^M");
  icw->add_option("M", m)->required()->check(CLI::PositiveNumber);
  icw->callback([&] {
    run = [&] {
      const TameAuto fac = witness_factorization(m);
      const Endo pair = to_endo(fac);
      const Poly2 w = witness_coordinate(m);
      const auto d = is_automorphism(pair);
      const bool ok = pair.g == w && d.yes;
      emit(glob, Json{{"M", m},
                      {"coordinate", w.to_string()},
                      {"mate", pair.f.to_string()},
                      {"factorization", tame_to_json(fac)},
                      {"verdict", ok ? "yes" : "no"}});
      return ok ? kOk : kNo;
    };
  });

  auto* verify = app.add_subcommand("verify-retract", "Check p(s(z), t(z)) == z and the retraction it induces");
  verify->add_option("p", p)->required();
  verify->add_option("s", s)->required();
  verify->add_option("t", t)->required();
  verify->callback([&] {
    run = [&] {
      const Poly2 pp = parse_poly2(p);
      const UniPoly ss = parse_unipoly(s);
      const UniPoly tt = parse_unipoly(t);
      const bool yes = verify_retract_generator(pp, ss, tt);
      Json out{{"verdict", yes ? "yes" : "no"}};
      out.update(certificate_to_json(pp, ss, tt));
      if (yes) {
        const RetractionEndo re = retraction_endo(Retraction::make(pp, ss, tt));
        out["pi"] = endo_to_json(re.pi);
        out["idempotent"] = re.pi_squared == re.pi;
      } else {
        out["value"] = substitute1(pp, ss, tt).to_string();
      }
      emit(glob, out);
      return yes ? kOk : kNo;
    };
  });

  auto* find = app.add_subcommand("find-retract", "Bounded search for s, t with p(s, t) = z");
  find->add_option("p", p)->required();
  find->add_option("--max-deg", max_deg, "Largest degree tried for s and t")->capture_default_str();
  find->callback([&] {
    run = [&] {
      const Poly2 pp = parse_poly2(p);
      SearchOptions so;
      so.max_deg = max_deg;
      so.execution = execution(glob);
      const auto d = is_retract_generator_bounded(pp, so);
      Json out;
      if (d.yes) {
        out = Json{{"verdict", "yes"}};
        out.update(certificate_to_json(pp, d.s, d.t));
      } else {
        out = Json{{"verdict", "no_up_to"}, {"p", pp.to_string()}, {"max_deg", d.max_deg}, {"reason", d.reason}};
      }
      emit(glob, out);
      return d.yes ? kOk : kNo;
    };
  });

  auto* make = app.add_subcommand("make-retract", "Generator p with sigma(p) = x + y*h and its certificate");
  make->add_option("H", h, "h in sigma(p) = x + y*h")->required();
  make->add_option("--sigma", sigma, "Tame automorphism as a JSON move list")->capture_default_str();
  make->callback([&] {
    run = [&] {
      const auto c = make_retract_generator(tame_from_text(sigma), parse_poly2(h));
      Json out = certificate_to_json(c.p, c.s, c.t);
      out["sigma"] = tame_to_json(c.sigma);
      out["h"] = c.h.to_string();
      emit(glob, out);
      return kOk;
    };
  });

  auto* gkz = app.add_subcommand("generates-kz", "Is z in the span of s^i t^j up to the bound?");
  gkz->add_option("s", s)->required();
  gkz->add_option("t", t)->required();
  gkz->add_option("--bound", bound, "Weighted degree bound")->capture_default_str()->check(CLI::PositiveNumber);
  gkz->callback([&] {
    run = [&] {
      const auto d = generates_Kz(parse_unipoly(s), parse_unipoly(t), bound);
      Json out{{"verdict", d.yes ? "yes" : "no_up_to"}, {"bound", d.bound}};
      if (d.yes) {
        Json comb = Json::array();
        for (const auto& term : d.combination) comb.push_back(Json{{"i", term.i}, {"j", term.j}, {"c", rat_to_json(term.c)}});
        out["combination"] = comb;
      }
      emit(glob, out);
      return d.yes ? kOk : kNo;
    };
  });

  auto* norm = app.add_subcommand("normalize", "Bring (f, g) to (x + y*h1, y*h2) given sigma(f) = x + y*h");
  norm->add_option("f", f)->required();
  norm->add_option("g", g)->required();
  norm->add_option("--h1", h, "h1 with sigma(f) = x + y*h1")->required();
  norm->add_option("--sigma", sigma, "sigma as a JSON move list")->capture_default_str();
  norm->callback([&] {
    run = [&] {
      const Endo phi = endo_from(f, g);
      const TameAuto sg = tame_from_text(sigma);
      RetractCertificate cert = RetractCertificate::normal_form(parse_poly2(h));
      if (!sg.moves.empty()) {
        cert.kind = RetractCertificate::Kind::Conjugated;
        cert.sigma = sg;
        cert.p = phi.f;
      }
      try {
        const NormalizedEndo ne = normalize(phi, cert);
        emit(glob, Json{{"verdict", "yes"},
                        {"sigma", tame_to_json(ne.sigma)},
                        {"sigma_prime", tame_to_json(ne.sigma_prime)},
                        {"h1", ne.h1.to_string()},
                        {"h2", ne.h2.to_string()},
                        {"normalized", endo_to_json(ne.endo())}});
        return kOk;
      } catch (const std::domain_error& e) {
        emit(glob, Json{{"verdict", "no"}, {"reason", e.what()}});
        return kNo;
      }
    };
  });

  auto* wit = app.add_subcommand("witness", "Witness exponent M and the coordinate y + (x + y^M)^2");
  wit->add_option("--h1", h1, "h1 of the normalized endomorphism")->capture_default_str();
  wit->add_option("--h2", h2, "h2; when given, also print the image of the witness");
  wit->add_option("--n", n, "Ratio bound N")->capture_default_str()->check(CLI::PositiveNumber);
  wit->add_option("--m", m, "Use this M instead of the smallest admissible one");
  wit->callback([&] {
    run = [&] {
      const Poly2 ph1 = parse_poly2(h1);
      const long mm = m > 0 ? m : witness_M(ph1, n);
      Json out{{"N", n}, {"M", mm}, {"admissible", mm >= witness_M(ph1, n)}, {"coordinate", witness_coordinate(mm).to_string()}};
      if (!h2.empty()) {
        NormalizedEndo ne;
        ne.h1 = ph1;
        ne.h2 = parse_poly2(h2);
        if (ne.h2.is_zero()) throw std::invalid_argument("h2 must be nonzero");
        out["image"] = image_of_witness(ne, mm).to_string();
      }
      emit(glob, out);
      return kOk;
    };
  });

  auto* reduce = app.add_subcommand("reduce", "Trace the leading-monomial reduction of (f, g)");
  reduce->add_option("f", f)->required();
  reduce->add_option("g", g)->required();
  reduce->add_option("--max-steps", max_steps, "Step budget")->capture_default_str();
  reduce->callback([&] {
    run = [&] {
      const auto o = run_reduction(endo_from(f, g), max_steps);
      emit(glob, reduction_to_json(o));
      return o.kind == ReductionOutcome::Kind::Automorphism ? kOk : kNo;
    };
  });

  auto* exp = app.add_subcommand("experiment", "Seeded reduction trials plus sampled refutations");
  exp->add_option("--seed", seed, "Base seed; trial i uses seed + i")->capture_default_str();
  exp->add_option("--trials", trials, "Number of trials")->capture_default_str()->check(CLI::PositiveNumber);
  exp->add_option("--max-deg", max_deg, "Bound for the generator search")->capture_default_str();
  exp->add_option("--max-steps", max_steps, "Step budget per reduction")->capture_default_str();
  exp->callback([&] {
    run = [&] {
      ExperimentOptions eo;
      eo.seed = seed;
      eo.trials = trials;
      eo.max_deg = max_deg;
      eo.max_steps = max_steps;
      eo.execution = execution(glob);
      const auto rep = main_theorem_experiment(eo);
      emit(glob, experiment_to_json(rep));
      std::cout << "ok: " << rep.ok_count() << "/" << rep.trials << "\n";
      return rep.ok_count() == rep.trials ? kOk : kInternal;
    };
  });

  auto* nc = app.add_subcommand("nc-verify", "Free-algebra check for (x, y + xy - yx) on a certified r");
  nc->add_option("r", p)->required();
  nc->add_option("s", s)->required();
  nc->add_option("t", t)->required();
  nc->add_option("--field", field, "q or fp:<p>")->capture_default_str();
  nc->callback([&] {
    run = [&] {
      const Field fl = Field::parse(field);
      const auto rep = example1_verify(parse_ncpoly(p, fl), parse_unipoly(s), parse_unipoly(t));
      emit(glob, example1_to_json(rep));
      return rep.passed() ? kOk : kNo;
    };
  });

  // Every real option is long, so "-x^2 + y" is an expression, not a flag.
  // A leading space keeps CLI11 from reading it as one; the parser skips it.
  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) {
    std::string a = argv[i];
    if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h") a.insert(0, " ");
    args.push_back(std::move(a));
  }

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad JSON argument: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
