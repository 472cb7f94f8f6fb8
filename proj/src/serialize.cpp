#include "retractlab/serialize.hpp"

#include <stdexcept>

#include "retractlab/parse.hpp"

namespace retractlab {

Json rat_to_json(const Rat& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(to_string(r));
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw std::invalid_argument("rational must be an integer or a \"num/den\" string");
}

namespace {

// Univariate polynomial written in one named variable.
UniPoly univariate_from(const Poly2& p, bool in_y) {
  std::vector<Rat> c;
  for (const auto& [m, v] : p.terms()) {
    if ((in_y ? m.j : m.i) != 0) throw std::invalid_argument(std::string("move polynomial must be in ") + (in_y ? "y" : "x") + " only");
    const std::uint32_t e = in_y ? m.i : m.j;
    if (c.size() <= e) c.resize(e + 1);
    c[e] = v;
  }
  return UniPoly(std::move(c));
}

}  // namespace

Json move_to_json(const ElementaryMove& m) {
  if (const auto* e = std::get_if<ElemX>(&m)) return Json{{"elemX", Poly2::in_y(e->u).to_string()}};
  if (const auto* e = std::get_if<ElemY>(&m)) return Json{{"elemY", Poly2::in_x(e->u).to_string()}};
  const auto& a = std::get<Affine>(m);
  Json mat = Json::array();
  for (const auto& row : a.m) mat.push_back(Json::array({rat_to_json(row[0]), rat_to_json(row[1])}));
  return Json{{"affine", Json{{"m", mat}, {"b", Json::array({rat_to_json(a.b[0]), rat_to_json(a.b[1])})}}}};
}

ElementaryMove move_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw std::invalid_argument("move must be an object with one key");
  if (j.contains("elemX")) return ElemX{univariate_from(parse_poly2(j.at("elemX").get<std::string>()), true)};
  if (j.contains("elemY")) return ElemY{univariate_from(parse_poly2(j.at("elemY").get<std::string>()), false)};
  if (j.contains("affine")) {
    const Json& a = j.at("affine");
    std::array<std::array<Rat, 2>, 2> m;
    std::array<Rat, 2> b;
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) m[r][c] = rat_from_json(a.at("m").at(r).at(c));
      b[r] = rat_from_json(a.at("b").at(r));
    }
    return Affine::make(m, b);
  }
  throw std::invalid_argument("unknown move kind");
}

Json tame_to_json(const TameAuto& t) {
  Json out = Json::array();
  for (const auto& m : t.moves) out.push_back(move_to_json(m));
  return out;
}

TameAuto tame_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("tame automorphism must be a JSON array");
  TameAuto t;
  for (const auto& m : j) t.moves.push_back(move_from_json(m));
  return t;
}

Json endo_to_json(const Endo& e) { return Json{{"f", e.f.to_string()}, {"g", e.g.to_string()}}; }

Json certificate_to_json(const Poly2& p, const UniPoly& s, const UniPoly& t) {
  return Json{{"p", p.to_string()}, {"s", s.to_string()}, {"t", t.to_string()}};
}

Json degree_to_json(const Degree& d) {
  if (d.is_neg_inf()) return Json("-inf");
  return Json(d.value());
}

Json case_report_to_json(const CaseReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"lhs", degree_to_json(c.lhs)},
                          {"relation", c.relation},
                          {"rhs", degree_to_json(c.rhs)},
                          {"holds", c.holds}});
  }
  return Json{{"branch", to_string(r.branch)},
              {"sub_branch", r.sub_branch},
              {"case_hypotheses_hold", r.case_hypotheses_hold},
              {"checks", checks},
              {"image_degree", degree_to_json(r.image_degree)},
              {"image_equals_z", r.image_equals_z}};
}

Json reduction_to_json(const ReductionOutcome& o) {
  Json out{{"verdict", to_string(o.kind)}, {"steps", o.steps}};
  if (o.kind == ReductionOutcome::Kind::Automorphism) out["moves"] = tame_to_json(o.trail);
  if (o.kind == ReductionOutcome::Kind::Stuck) {
    Json st{{"reason", o.stuck.reason}};
    if (o.stuck.lead_f) st["lead_f"] = Poly2::term(Rat(1), *o.stuck.lead_f).to_string();
    if (o.stuck.lead_g) st["lead_g"] = Poly2::term(Rat(1), *o.stuck.lead_g).to_string();
    out["stuck"] = st;
  }
  out["trace"] = o.log;
  return out;
}

Json experiment_to_json(const ExperimentReport& r) {
  Json trials = Json::array();
  for (const auto& t : r.records) {
    trials.push_back(Json{{"trial", t.trial}, {"seed", t.seed}, {"verdict", t.verdict}, {"steps", t.steps}, {"ok", t.ok}});
  }
  Json negatives = Json::array();
  for (const auto& n : r.negatives) {
    Json rec{{"phi", Json{{"f", n.phi_f}, {"g", n.phi_g}}}, {"sampled", n.sampled}, {"reason", n.reason}};
    if (n.coordinate) rec["witness"] = Json{{"coordinate", *n.coordinate}, {"image", *n.image}};
    negatives.push_back(rec);
  }
  return Json{{"evidence", "sampled hypothesis, not a proof"},
              {"seed", r.seed},
              {"trials", r.trials},
              {"max_deg", r.max_deg},
              {"ok", r.ok_count()},
              {"records", trials},
              {"negatives", negatives}};
}

Json example1_to_json(const Example1Report& r) {
  return Json{{"field", r.r.field().tag()},
              {"r", r.r.to_string()},
              {"r_image", r.r_image.to_string()},
              {"difference", r.difference.to_string()},
              {"s_image", r.s_image.to_string()},
              {"t_image", r.t_image.to_string()},
              {"retracted", r.retracted.to_string()},
              {"pi_pi_x", r.pi_pi_x.to_string()},
              {"pi_pi_y", r.pi_pi_y.to_string()},
              {"difference_abelianizes_to_zero", r.difference_abelianizes_to_zero},
              {"retraction_fixes_image", r.retraction_fixes_image},
              {"retraction_idempotent", r.retraction_idempotent},
              {"components_commute", r.components_commute},
              {"lead_f", r.lead_f.to_string()},
              {"lead_g", r.lead_g.to_string()},
              {"leading_forms_commute", r.leading_forms_commute},
              {"passed", r.passed()}};
}

}  // namespace retractlab
