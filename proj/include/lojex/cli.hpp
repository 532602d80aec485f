#pragma once

// Command dispatch, JSON/human rendering and the worked-example corpus.

#include <lojex/lojasiewicz.hpp>

#include <json.hpp>

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace lojex::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, input_error = 1, hypothesis_warning = 2, resource_cap = 3 };

struct Request {
  std::string subcommand;  // exponent | ideal | sigma | matching | transform | corpus
  std::string op;          // ideal: l0 | colength | multiplicity | newton | order | relative
  std::optional<std::string> weights, function, gens, ideals, relative_ideal;
  std::optional<std::int64_t> degree, smax;
  std::uint64_t seed = 1;
  bool assume_isolated = false;
  bool json = false;
  unsigned jobs = 1;
};

struct Report {
  int exit_code = ok;
  Json json;
  std::string human;
};

// ---------------------------------------------------------------------------
// Rendering helpers.

inline Json rational_json(const Rational& q) {
  return Json{{"num", boost::multiprecision::numerator(q).str()},
              {"den", boost::multiprecision::denominator(q).str()}};
}

inline Json value_json(const ExtRational& v) { return v.is_infinite() ? Json("infinity") : rational_json(v.value()); }

inline Json count_json(const Count& c) { return c ? rational_json(Rational(*c)) : Json("infinity"); }

inline Json witness_json(const std::optional<MatchingWitness>& w) {
  if (!w) return nullptr;
  Json tau = Json::array();
  for (auto t : w->tau) tau.push_back(t + 1);
  return Json{{"tau", tau}, {"i0", w->i0 + 1}};
}

inline Json trace_json(const std::vector<TraceEntry>& trace) {
  Json out = Json::array();
  for (const auto& e : trace) out.push_back(Json{{"s", e.s}, {"r", e.r}, {"ratio", rational_json(e.ratio)}});
  return out;
}

inline std::string witness_text(const MatchingWitness& w) {
  std::string s = "tau = (";
  for (std::size_t i = 0; i < w.tau.size(); ++i) s += (i ? ", " : "") + std::to_string(w.tau[i] + 1);
  return s + "), i0 = " + std::to_string(w.i0 + 1);
}

inline Json ideal_json(const MonomialIdeal& I) {
  Json g = Json::array();
  for (const auto& k : I.generators()) g.push_back(monomial_string(k));
  return g;
}

inline Json points_json(const std::vector<geometry::Point>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(p);
  return out;
}

// A report skeleton with every stable key present.
inline Json skeleton(const std::string& command, Json inputs) {
  return Json{{"command", command}, {"inputs", std::move(inputs)}, {"value", nullptr},
              {"certificate", nullptr}, {"witness", nullptr},          {"trace", Json::array()},
              {"warnings", Json::array()}, {"determinacy", nullptr},   {"details", Json::object()}};
}

inline void put_exponent(Json& j, const ExponentResult& r) {
  j["value"] = value_json(r.value);
  j["certificate"] = to_string(r.certificate);
  j["witness"] = witness_json(r.witness);
  j["trace"] = trace_json(r.trace);
  for (const auto& w : r.warnings) j["warnings"].push_back(w);
  j["determinacy"] = r.determinacy ? Json(*r.determinacy) : Json(nullptr);
  j["details"]["justification"] = r.justification;
  if (r.lower_bound) j["details"]["lower_bound"] = rational_json(*r.lower_bound);
}

inline std::string json_value_text(const Json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("num")) {
    auto num = v["num"].get<std::string>(), den = v["den"].get<std::string>();
    return den == "1" ? num : num + "/" + den;
  }
  return v.dump();
}

// Human form derived from the JSON report so both views agree.
inline std::string render_human(const Json& j) {
  std::ostringstream os;
  os << "command: " << j["command"].get<std::string>() << "\n";
  if (!j["value"].is_null()) os << "value: " << json_value_text(j["value"]) << "\n";
  if (!j["certificate"].is_null()) os << "certificate: " << j["certificate"].get<std::string>() << "\n";
  if (!j["determinacy"].is_null()) os << "determinacy s0: " << j["determinacy"].get<std::int64_t>() << "\n";
  if (!j["witness"].is_null()) {
    os << "witness: tau = (";
    const auto& tau = j["witness"]["tau"];
    for (std::size_t i = 0; i < tau.size(); ++i) os << (i ? ", " : "") << tau[i].get<int>();
    os << "), i0 = " << j["witness"]["i0"].get<int>() << "\n";
  }
  if (!j["trace"].empty()) {
    os << "trace:";
    for (const auto& e : j["trace"])
      os << " s=" << e["s"].get<std::int64_t>() << " r=" << e["r"].get<std::int64_t>() << " ("
         << json_value_text(e["ratio"]) << ")";
    os << "\n";
  }
  for (const auto& w : j["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
  if (j["details"].contains("message")) os << j["details"]["message"].get<std::string>() << "\n";
  if (j["details"].contains("items")) {
    for (const auto& it : j["details"]["items"])
      os << (it["passed"].get<bool>() ? "[pass] " : "[FAIL] ") << it["id"].get<std::string>() << " "
         << it["name"].get<std::string>() << ": " << it["detail"].get<std::string>() << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Input parsing.

inline Weights parse_weights(const std::string& text) {
  std::vector<std::int64_t> w;
  for (auto part : lojex::detail::split(text, ',')) {
    std::string s(part);
    s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw InputError("bad weight '" + s + "'");
    }
    if (used != s.size()) throw InputError("bad weight '" + s + "'");
    w.push_back(v);
  }
  return Weights(std::move(w));
}

inline const std::string& require(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw InputError(std::string("missing required flag ") + flag);
  return *v;
}

inline std::vector<std::int64_t> schedule_from(const Request& req) {
  std::vector<std::int64_t> s;
  if (!req.smax) return s;
  if (*req.smax < 1) throw InputError("--smax must be >= 1");
  for (std::int64_t i = 1; i <= *req.smax; ++i) s.push_back(i);
  return s;
}

inline Json inputs_json(const Request& req) {
  Json in = Json::object();
  if (!req.op.empty()) in["op"] = req.op;
  if (req.weights) in["weights"] = *req.weights;
  if (req.degree) in["degree"] = *req.degree;
  if (req.function) in["function"] = *req.function;
  if (req.gens) in["gens"] = *req.gens;
  if (req.ideals) in["ideals"] = *req.ideals;
  if (req.relative_ideal) in["relative_ideal"] = *req.relative_ideal;
  if (req.smax) in["smax"] = *req.smax;
  in["seed"] = req.seed;
  if (req.assume_isolated) in["assume_isolated"] = true;
  return in;
}

// ---------------------------------------------------------------------------
// Worked examples.

struct CorpusItem {
  std::string id, name, detail;
  bool passed = false;
};

namespace detail {

inline IdealTuple tuple_of(const char* text, std::size_t n) { return IdealTuple(parse_ideal_list(text, n)); }

inline CorpusItem sigma_infinite() {
  CorpusItem it{"1a", "sigma-infinite (3,1)", "", false};
  Weights w{3, 1};
  auto A4 = filtration_pieces(w, 4).A, A5 = filtration_pieces(w, 5).A;
  bool pieces = A4 == parse_monomial_ideal("x*y,y^4", 2) && A5 == parse_monomial_ideal("x*y^2,y^5", 2);
  auto s = sigma(IdealTuple({A4, A5}));
  it.passed = pieces && !s.value;
  it.detail = "A4 = " + A4.str() + ", A5 = " + A5.str() + ", sigma = " + s.str();
  return it;
}

inline CorpusItem pieces_sigma(std::uint64_t seed) {
  CorpusItem it{"1b", "sigma of A- and B-tuples", "", true};
  std::mt19937_64 rng(seed);
  int done = 0, skipped = 0;
  while (done < 20) {
    std::size_t n = 2 + rng() % 2;
    std::vector<std::int64_t> wv(n), r(n);
    for (auto& v : wv) v = 1 + static_cast<std::int64_t>(rng() % 3);
    for (std::size_t i = 0; i < n; ++i) r[i] = wv[i] * (1 + static_cast<std::int64_t>(rng() % 3));
    Weights w(wv);
    auto t = filtration_tuples(w, r);
    auto sA = sigma(t.A);
    if (!sA.value) {  // the statement assumes sigma(A) finite
      ++skipped;
      continue;
    }
    ++done;
    Integer num = 1, den = 1;
    for (std::size_t i = 0; i < n; ++i) num *= r[i], den *= wv[i];
    Rational expect = ratio(num, den);
    auto sB = sigma(t.B);
    if (Rational(*sA.value) != expect || !sB.value || Rational(*sB.value) != expect) {
      it.passed = false;
      it.detail = "mismatch at w = " + std::to_string(wv[0]) + ",..., expected " + to_string(expect);
      return it;
    }
  }
  it.detail = "20 instances agree with r1...rn / w1...wn (" + std::to_string(skipped) + " draws had infinite sigma(A))";
  return it;
}

inline CorpusItem unattained_bound() {
  CorpusItem it{"1c", "w=(1,4) bound is not attained", "", false};
  auto T = tuple_of("x^4|y^2", 2);
  auto bc = bound_chain(T, Weights{1, 4});
  auto l = loj_set(T);
  it.passed = l.value == ExtRational(4) && l.is_exact() && bc.bound == 8 && !bc.witness;
  it.detail = "L0 = " + l.value.str() + " (" + to_string(l.certificate) + "), bound = " + to_string(bc.bound) +
              ", matching: " + (bc.witness ? "yes" : "none");
  return it;
}

inline CorpusItem five_variable(std::uint64_t seed) {
  CorpusItem it{"1d", "five-variable transform", "", false};
  auto f = parse_polynomial("x1^12+x2^4*x4+x4^3+x3^2*x5+x5^2");
  Weights w{1, 2, 3, 4, 6};
  auto J = gradient_ideals(f);
  auto stated = IdealTuple(parse_ideal_list("x1^11 | x2^3*x4 | x3*x5 | x2^4,x4^2 | x3^2,x5", 5));
  bool same = J.entries() == stated.entries();
  bool no_match = !check_w_matching(J, w);
  auto tr = matching_coordinate_change(f, w, seed);
  bool shape = tr.change.a.size() == 2 && tr.change.a.count({3, 1}) && tr.change.a.count({4, 2}) &&
               tr.change.h[3].support() == std::vector<ExponentVector>{ExponentVector{0, 2, 0, 0, 0}} &&
               tr.change.h[4].support() == std::vector<ExponentVector>{ExponentVector{0, 0, 2, 0, 0}};
  auto cls = weighted_classification(tr.g, w);
  bool conv = cls.is_convenient && cls.is_weighted_homogeneous && cls.degree == 12;
  bool match_after = check_w_matching(gradient_ideals(tr.g), w).has_value();
  it.passed = same && no_match && shape && conv && match_after;
  it.detail = std::string("ideals ") + (same ? "reproduced" : "differ") + ", matching before: " +
              (no_match ? "none" : "found") + ", x4 = y4 + c*y2^2 and x5 = y5 + c*y3^2: " + (shape ? "yes" : "no") +
              ", image convenient: " + (conv ? "yes" : "no") + ", matching after: " + (match_after ? "yes" : "no");
  return it;
}

inline CorpusItem gradient_item(const char* id, const char* name, const char* f, Weights w, Rational expect,
                                std::optional<Certificate> cert, std::function<bool(std::string&)> extra,
                                std::uint64_t seed, std::vector<ExponentResult>* keep) {
  CorpusItem it{id, name, "", false};
  GradientOptions o;
  o.seed = seed;
  auto r = loj_gradient(parse_polynomial(f), w, o);
  std::string more;
  bool ok_extra = extra ? extra(more) : true;
  it.passed = r.value == ExtRational(expect) && r.is_exact() && (!cert || r.certificate == *cert) && ok_extra;
  it.detail = "L0 = " + r.value.str() + " (" + to_string(r.certificate) + ")" + more;
  if (keep) keep->push_back(r);
  return it;
}

inline CorpusItem r_formula() {
  CorpusItem it{"1h", "r_J of B-powers", "", true};
  Weights w{1, 2};
  auto t = filtration_tuples(w, {2, 3});
  auto J = parse_monomial_ideal("x^2,y", 2);
  std::string values;
  for (int s = 1; s <= 6; ++s) {
    auto r = r_number(t.B.power(s), J);
    auto expect = (3 * s + 1) / 2;
    values += (s > 1 ? "," : "") + std::to_string(r);
    if (r != expect) it.passed = false;
  }
  it.detail = "r_J for s = 1..6: " + values + " (expected 2,3,5,6,8,9)";
  return it;
}

}  // namespace detail

inline std::vector<CorpusItem> paper_corpus(std::uint64_t seed = 1) {
  std::vector<CorpusItem> items;
  auto guarded = [&](const char* id, const char* name, std::function<CorpusItem()> run) {
    try {
      items.push_back(run());
    } catch (const std::exception& e) {
      items.push_back({id, name, std::string("error: ") + e.what(), false});
    }
  };
  guarded("1a", "sigma-infinite (3,1)", [] { return detail::sigma_infinite(); });
  guarded("1b", "sigma of A- and B-tuples", [&] { return detail::pieces_sigma(seed); });
  guarded("1c", "w=(1,4) bound is not attained", [] { return detail::unattained_bound(); });
  guarded("1d", "five-variable transform", [&] { return detail::five_variable(seed); });

  std::vector<ExponentResult> exact;
  guarded("1e", "Jacobian equals m", [&] {
    return detail::gradient_item(
        "1e", "Jacobian equals m", "x1*x3+x2^2+x1^2*x2", Weights{1, 2, 3}, 1, std::nullopt,
        [](std::string& more) {
          bool inapplicable = !kop_reference_formula(Weights{1, 2, 3}, 4);
          more = std::string(", reference formula at d = 4: ") + (inapplicable ? "inapplicable" : "applied");
          return inapplicable;
        },
        seed, &exact);
  });
  guarded("1f", "divisible weights", [&] {
    return detail::gradient_item("1f", "divisible weights", "x^12+y^6+z^4", Weights{1, 2, 3}, 11, std::nullopt,
                                 nullptr, seed, &exact);
  });
  guarded("1g", "KOP-16", [&] {
    return detail::gradient_item(
        "1g", "KOP-16", "x^16+y^8+x*z^5", Weights{1, 2, 3}, 15, Certificate::ExactByKOP,
        [](std::string& more) {
          bool none = !check_w_matching(gradient_ideals(parse_polynomial("x^16+y^8+x*z^5")), Weights{1, 2, 3});
          more = std::string(", matching: ") + (none ? "none" : "found");
          return none;
        },
        seed, &exact);
  });
  guarded("1h", "r_J of B-powers", [] { return detail::r_formula(); });

  CorpusItem det{"1i", "determinacy degree", "", exact.size() == 3};
  for (const auto& r : exact) {
    bool good = r.determinacy && *r.determinacy == static_cast<std::int64_t>(floor_of(r.value.value())) + 1;
    det.passed = det.passed && good;
    det.detail += (det.detail.empty() ? "s0 = " : ", ") + (r.determinacy ? std::to_string(*r.determinacy) : "?");
  }
  if (exact.size() != 3) det.detail = "gradient items did not all complete";
  items.push_back(det);
  return items;
}

// ---------------------------------------------------------------------------
// Dispatch.

namespace detail {

inline void run_exponent(const Request& req, Json& j, int& code) {
  if (req.function) {
    auto w = parse_weights(require(req.weights, "--weights"));
    auto f = parse_polynomial(*req.function, w.size());
    GradientOptions o;
    o.assume_isolated = req.assume_isolated;
    o.degree = req.degree;
    o.schedule = schedule_from(req);
    o.seed = req.seed;
    o.jobs = req.jobs;
    auto r = loj_gradient(f, w, o);
    put_exponent(j, r);
    j["details"]["bound"] = rational_json(ratio(*weighted_degree(f, w) - w.min(), w.min()));
    return;
  }
  std::optional<Weights> w;
  if (req.weights) w = parse_weights(*req.weights);
  std::optional<std::size_t> n;
  if (w) n = w->size();
  auto T = IdealTuple(parse_ideal_list(require(req.ideals, "--ideals or --function"), n));
  std::optional<MonomialIdeal> J;
  if (req.relative_ideal) J = parse_monomial_ideal(*req.relative_ideal, T.dimension());
  LojSetOptions o;
  o.weights = w;
  o.schedule = schedule_from(req);
  o.seed = req.seed;
  o.jobs = req.jobs;
  auto r = loj_set(T, J, o);
  put_exponent(j, r);
  if (w) {
    auto bc = bound_chain(T, *w, false, o);
    Json chain{{"degrees", bc.degrees},
               {"bound", rational_json(bc.bound)},
               {"sigma_A", count_json(bc.sigma_A)},
               {"sigma_T", count_json(bc.sigma_T)},
               {"hypotheses_hold", bc.hypotheses_hold()},
               {"exact", bc.exact}};
    j["details"]["bound_chain"] = chain;
    if (!bc.hypotheses_hold()) {
      for (const auto& m : bc.warnings) j["warnings"].push_back("bound chain: " + m);
      code = hypothesis_warning;
    }
  }
}

inline void run_ideal(const Request& req, Json& j) {
  auto I = parse_monomial_ideal(require(req.gens, "--gens"));
  const auto n = I.dimension();
  j["details"]["generators"] = ideal_json(I);
  if (req.op == "l0") {
    put_exponent(j, loj_monomial_ideal(I));
  } else if (req.op == "colength") {
    auto c = colength(I);
    j["value"] = count_json(c);
  } else if (req.op == "multiplicity") {
    auto e = samuel_multiplicity(I);
    j["value"] = count_json(e.value);
    j["certificate"] = to_string(e.method);
    j["details"]["oracle"] = oracle_colength_limit(I).str();
  } else if (req.op == "newton") {
    auto P = NewtonPolyhedron::of(I);
    j["details"]["vertices"] = points_json(P.vertices());
    Json facets = Json::array();
    for (const auto& f : P.facets()) facets.push_back(Json{{"normal", f.normal}, {"offset", f.offset}});
    j["details"]["facets"] = facets;
    if (auto c = P.covolume()) {
      j["value"] = rational_json(*c);
      j["details"]["message"] = "value is the covolume";
    } else {
      j["value"] = "infinity";
    }
  } else if (req.op == "order") {
    OrderArgument h = MonomialIdeal::maximal(n);
    if (req.function) h = parse_polynomial(*req.function, n);
    j["value"] = value_json(asymptotic_order(I, h));
  } else if (req.op == "relative") {
    auto J = parse_monomial_ideal(require(req.relative_ideal, "--relative-ideal"), n);
    j["value"] = rational_json(loj_relative_ideal(I, J));
  } else {
    throw InputError("unknown ideal operation '" + req.op + "' (l0, colength, multiplicity, newton, order, relative)");
  }
}

inline void run_sigma(const Request& req, Json& j) {
  std::optional<std::size_t> n;
  if (req.weights) n = parse_weights(*req.weights).size();
  auto T = IdealTuple(parse_ideal_list(require(req.ideals, "--ideals"), n));
  SigmaOptions o;
  o.seed = req.seed;
  o.jobs = req.jobs;
  o.cross_check = true;
  std::optional<MonomialIdeal> J;
  if (req.relative_ideal) J = parse_monomial_ideal(*req.relative_ideal, T.dimension());
  auto s = sigma(T, o, J);
  j["value"] = count_json(s.value);
  j["certificate"] = to_string(s.method);
  j["details"]["evidence"] = s.evidence;
  for (const auto& e : s.evidence)
    if (e.find("did not confirm") != std::string::npos) j["warnings"].push_back(e);
  if (s.value) j["details"]["r_number"] = r_number(T, J, o);
}

inline void run_matching(const Request& req, Json& j) {
  auto w = parse_weights(require(req.weights, "--weights"));
  auto T = IdealTuple(parse_ideal_list(require(req.ideals, "--ideals"), w.size()));
  auto wit = check_w_matching(T, w);
  j["witness"] = witness_json(wit);
  auto r = weighted_degrees(T, w);
  j["details"]["degrees"] = r;
  j["details"]["bound"] = rational_json(degree_weight_bound(r, w));
  j["details"]["message"] = wit ? "w-matching: " + witness_text(*wit) : "no w-matching";
}

inline void run_transform(const Request& req, Json& j) {
  auto w = parse_weights(require(req.weights, "--weights"));
  auto f = parse_polynomial(require(req.function, "--function"), w.size());
  auto t = matching_coordinate_change(f, w, req.seed);
  Json images = Json::array();
  std::string msg = "g = " + t.g.str();
  for (std::size_t i = 0; i < t.change.images.size(); ++i) {
    images.push_back(t.change.images[i].str());
    msg += "\nx" + std::to_string(i + 1) + " -> " + t.change.images[i].str();
  }
  j["details"]["images"] = images;
  j["details"]["g"] = t.g.str();
  j["details"]["attempts"] = t.change.attempts;
  auto wit = check_w_matching(gradient_ideals(t.g), w);
  j["witness"] = witness_json(wit);
  j["details"]["message"] = msg;
}

inline void run_corpus(const Request& req, Json& j, int& code) {
  auto items = paper_corpus(req.seed);
  Json arr = Json::array();
  bool all = true;
  for (const auto& it : items) {
    arr.push_back(Json{{"id", it.id}, {"name", it.name}, {"passed", it.passed}, {"detail", it.detail}});
    all = all && it.passed;
  }
  j["details"]["items"] = arr;
  if (!all) {
    code = input_error;
    for (const auto& it : items)
      if (!it.passed) j["warnings"].push_back("corpus item " + it.id + " failed");
  }
}

}  // namespace detail

inline Report run_command(const Request& req) {
  Report rep;
  rep.json = skeleton(req.subcommand, inputs_json(req));
  int code = ok;
  try {
    if (req.jobs < 1) throw InputError("--jobs must be >= 1");
    if (req.subcommand == "exponent") detail::run_exponent(req, rep.json, code);
    else if (req.subcommand == "ideal") detail::run_ideal(req, rep.json);
    else if (req.subcommand == "sigma") detail::run_sigma(req, rep.json);
    else if (req.subcommand == "matching") detail::run_matching(req, rep.json);
    else if (req.subcommand == "transform") detail::run_transform(req, rep.json);
    else if (req.subcommand == "corpus") detail::run_corpus(req, rep.json, code);
    else throw InputError("unknown subcommand '" + req.subcommand + "'");
  } catch (const InputError& e) {
    code = input_error;
    rep.json["details"]["error"] = e.what();
  } catch (const HypothesisError& e) {
    code = hypothesis_warning;
    rep.json["warnings"].push_back(e.what());
  } catch (const ResourceError& e) {
    code = resource_cap;
    rep.json["details"]["error"] = e.what();
  }
  rep.exit_code = code;
  rep.human = render_human(rep.json);
  if (rep.json["details"].contains("error"))
    rep.human += "error: " + rep.json["details"]["error"].get<std::string>() + "\n";
  return rep;
}

}  // namespace lojex::cli
