#include "chatelet/report.hpp"

namespace chatelet {

namespace {

Json header(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  return j;
}

Json config_json(const RunConfig& c) {
  Json j;
  j["seed"] = std::to_string(c.seed);
  j["height"] = std::to_string(c.height);
  j["samples"] = std::to_string(c.samples);
  j["bound"] = c.bound.get_str();
  j["fibers"] = std::to_string(c.fibers);
  j["witness_bound"] = std::to_string(c.witness_bound);
  if (c.d) j["d"] = c.d->get_str();
  return j;
}

Json quartic_json(const BinaryQuartic& q) {
  Json arr = Json::array();
  for (const auto& c : q.a) arr.push_back(to_string(c));
  return arr;
}

Json witness_json(const CertifiedLocalX& pt) {
  Json j;
  j["x"] = pt.x.to_string();
  j["certificate"] = pt.certificate == CertifiedLocalX::Certificate::kSymbol ? "symbol" : "degenerate";
  return j;
}

Json params_json(const ChateletParams& p) {
  Json j;
  j["a"] = p.a.get_str();
  j["b"] = p.b.get_str();
  j["c"] = p.c.get_str();
  return j;
}

Json surface_checks(const ChateletSurface& s) {
  Json j;
  j["disc"] = to_string(quartic_disc(s.Ptilde()));
  j["smooth"] = s.is_smooth();
  Json places = Json::array();
  if (s.is_smooth()) {
    for (const auto& v : bad_places(s)) places.push_back(v.to_string());
  }
  j["bad_places"] = places;
  return j;
}

Rational parse_rational_field(const Json& j) {
  if (!j.is_string()) throw InvalidArgument("numbers must be decimal strings");
  return parse_rational(j.get<std::string>());
}

BinaryQuartic parse_quartic(const Json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_array() || j[name].size() != 5) {
    throw InvalidArgument(std::string(name) + " must be an array of 5 decimal strings");
  }
  BinaryQuartic q;
  for (int i = 0; i <= 4; ++i) q.a[i] = parse_rational_field(j[name][i]);
  return q;
}

// Runs fn, converting library exceptions into a StageError for stage.
template <typename F>
auto stage(const std::string& name, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

CommandResult error_result(Json report, const StageError& e) {
  Json err;
  err["stage"] = e.stage();
  err["message"] = e.what();
  report["error"] = err;
  report["status"] = "failed";
  return {report, kExitStageFailure};
}

Json class_json(const BrauerClass& A) {
  Json j;
  j["alpha"] = to_string(A.alpha);
  Json reps = Json::array();
  for (auto rep : kAllReps) reps.push_back(BrauerClass::describe(rep));
  j["representations"] = reps;
  j["a"] = A.a.get_str();
  j["c"] = A.c.get_str();
  return j;
}

std::vector<ShrinkMap> gadgets() {
  // g(t) = 1 + t (t - 1) / (t^3 + 1) sends 0, 1 and infinity to 1.
  Polynomial den{Rational(1), Rational(0), Rational(0), Rational(1)};
  Polynomial num = den + Polynomial{Rational(0), Rational(-1), Rational(1)};
  return {ShrinkMap::real(Integer(4)), ShrinkMap::nonarch(Integer(3), 1, num, den, ProjectivePoint::make(1, 1))};
}

}  // namespace

Json to_json(const ChateletSurface& s) {
  Json j;
  j["alpha"] = to_string(s.alpha());
  Json p = Json::array();
  for (const auto& c : s.P().c) p.push_back(to_string(c));
  j["P"] = p;
  j["provenance"] = to_string(s.provenance());
  return j;
}

ChateletSurface surface_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("surface must be a JSON object");
  if (!j.contains("alpha")) throw InvalidArgument("surface: missing alpha");
  Rational alpha = parse_rational_field(j["alpha"]);
  BinaryQuartic q = parse_quartic(j, "P");
  Provenance prov = Provenance::kUser;
  if (j.contains("provenance")) {
    if (!j["provenance"].is_string()) throw InvalidArgument("surface: provenance must be a string");
    prov = parse_provenance(j["provenance"].get<std::string>());
  }
  Poly4 p{q.a};
  if (prov != Provenance::kConstructed) return ChateletSurface(alpha, p, prov);
  // Recover (a, b, c) from P = a x^4 + (2ac + 1) x^2 + c (ac + 1) and
  // alpha = ab, then require an exact rebuild.
  const Rational& a = p.c[4];
  if (a.get_den() != 1 || a == 0) throw InvalidArgument("constructed surface: leading coefficient is not an integer");
  Rational c = (p.c[2] - 1) / (2 * a);
  Rational b = alpha / a;
  if (c.get_den() != 1 || b.get_den() != 1) throw InvalidArgument("constructed surface: coefficients do not match");
  ChateletParams prm{a.get_num(), b.get_num(), c.get_num()};
  ChateletSurface built = build_surface(prm);
  if (!(built.P() == p) || built.alpha() != alpha) {
    throw InvalidArgument("constructed surface: P differs from the surface built from its parameters");
  }
  return built;
}

Json to_json(const LocalReport& r) {
  Json j;
  Json places = Json::array();
  for (const auto& row : r.places) {
    Json e;
    e["place"] = row.place.to_string();
    e["solvable"] = row.solvable;
    if (row.witness) e["witness"] = witness_json(*row.witness);
    places.push_back(e);
  }
  j["places"] = places;
  j["good_places"] = r.good_places;
  j["all_solvable"] = r.all_solvable;
  return j;
}

Json to_json(const ObstructionReport& r, const BrauerClass& A) {
  Json j;
  j["class"] = class_json(A);
  Json places = Json::array();
  for (const auto& row : r.places) {
    Json e;
    e["place"] = row.place.to_string();
    e["solvable"] = row.solvable;
    e["points"] = row.points;
    e["invariant"] = row.invariant ? Json(row.invariant->to_string()) : Json(nullptr);
    places.push_back(e);
  }
  j["places"] = places;
  j["good_places"] = r.good_places;
  j["sum"] = r.sum.to_string();
  j["conclusion"] = r.conclusion();
  return j;
}

Json to_json(const PointSearchResult& r) {
  Json j;
  j["height"] = std::to_string(r.height);
  j["fibers_checked"] = std::to_string(r.fibers_checked);
  j["status"] = r.status_string();
  if (r.fiber) j["fiber"] = r.fiber->to_string();
  if (r.point) {
    Json p;
    p["x"] = to_string(r.point->x);
    p["y"] = to_string(r.point->y);
    p["z"] = to_string(r.point->z);
    j["point"] = p;
  }
  return j;
}

Json to_json(const BadFiberSet& F) {
  Json j;
  Json pts = Json::array();
  for (const auto& p : F.points) pts.push_back(p.to_string());
  j["points"] = pts;
  Json pencil = Json::array();
  for (const auto& c : F.pencil) pencil.push_back(to_string(c));
  j["pencil"] = pencil;
  return j;
}

Json to_json(const BundleReport& r) {
  Json fibers = Json::array();
  for (const auto& f : r.fibers) {
    Json e;
    e["t"] = f.t.to_string();
    e["param"] = f.param.to_string();
    e["quartic"] = quartic_json(f.quartic);
    e["smooth"] = f.smooth;
    e["irreducible"] = f.irreducible;
    e["in_bad_set"] = f.in_bad_set;
    if (f.smooth) e["local"] = to_json(f.local);
    if (f.obstruction) {
      Json o;
      o["sum"] = f.obstruction->sum.to_string();
      o["conclusion"] = f.obstruction->conclusion();
      e["obstruction"] = o;
    }
    if (f.search) e["search"] = to_json(*f.search);
    fibers.push_back(e);
  }
  Json j;
  j["d"] = r.d.get_str();
  j["fibers"] = fibers;
  Json hits = Json::array();
  for (const auto& t : r.thin_set_hits) hits.push_back(t.to_string());
  j["thin_set_hits"] = hits;
  Json failures = Json::array();
  for (const auto& s : r.failures) failures.push_back(s);
  j["failures"] = failures;
  return j;
}

CommandResult cmd_counterexample(const RunConfig& config) {
  Json report = header("counterexample");
  report["config"] = config_json(config);
  try {
    ChateletParams prm = stage("params", [&] { return find_params(config.bound); });
    report["params"] = params_json(prm);
    ChateletSurface s = stage("surface", [&] { return build_surface(prm); });
    report["surface"] = to_json(s);
    report["surface_checks"] = surface_checks(s);
    LocalReport local = stage("local", [&] { return verify_local_everywhere(s); });
    report["local"] = to_json(local);
    BrauerClass A = brauer_class(s);
    ObstructionReport obs = stage("obstruction", [&] { return obstruction_report(s, config.samples, config.seed); });
    report["obstruction"] = to_json(obs, A);
    PointSearchResult search =
        stage("search", [&] { return rational_point_search(s, {config.height, config.witness_bound}); });
    report["search"] = to_json(search);
    if (search.status != PointSearchResult::Status::kNone) {
      throw StageError("search", "solvable fiber at x = " + search.fiber->to_string() + " on the certified surface");
    }
    const bool ok = local.all_solvable && obs.certified_empty;
    report["status"] = ok ? "certified" : "inconclusive";
    return {report, ok ? kExitOk : kExitInconclusive};
  } catch (const StageError& e) {
    return error_result(report, e);
  }
}

CommandResult cmd_bundle(const RunConfig& config) {
  Json report = header("bundle");
  report["config"] = config_json(config);
  try {
    ChateletParams prm = stage("params", [&] { return find_params(config.bound); });
    report["params"] = params_json(prm);
    ChateletSurface s = stage("surface", [&] { return build_surface(prm); });
    SurfaceBundle B = stage("bundle", [&] { return make_bundle(s, default_pinf()); });
    Json bj;
    bj["alpha"] = to_string(B.alpha());
    bj["P0"] = quartic_json(B.P0());
    bj["Pinf"] = quartic_json(B.Pinf());
    report["bundle"] = bj;
    BadFiberSet F = stage("bad_fibers", [&] { return bad_fibers(B); });
    report["bad_fibers"] = to_json(F);
    std::vector<Integer> candidates = good_d_candidates(F, 5);
    Json cj = Json::array();
    for (const auto& d : candidates) cj.push_back(d.get_str());
    report["d_candidates"] = cj;
    Integer d = config.d ? *config.d : candidates.front();
    PulledBackBundle W = stage("pullback", [&] { return pullback(B, d); });
    report["bundle"]["d"] = d.get_str();

    Json gj = Json::array();
    for (const auto& g : gadgets()) {
      Json e;
      e["map"] = g.describe();
      e["certified"] = g.verify_certificate();
      gj.push_back(e);
    }
    report["shrink_maps"] = gj;

    std::vector<ProjectivePoint> ts{ProjectivePoint::infinity(), ProjectivePoint::make(0, 1)};
    for (long n = 1; n <= static_cast<long>(config.fibers); ++n) {
      ts.push_back(ProjectivePoint::make(n, 1));
      ts.push_back(ProjectivePoint::make(-n, 1));
    }
    VerifyOptions vo{config.height, config.witness_bound, config.samples, config.seed};
    BundleReport br = stage("verify", [&] { return verify_pullback(W, ts, vo); });
    report["pullback"] = to_json(br);
    if (!br.ok()) throw StageError("verify", br.failures.front());
    report["status"] = "certified";
    return {report, kExitOk};
  } catch (const StageError& e) {
    return error_result(report, e);
  }
}

CommandResult cmd_hilbert(const std::string& a_text, const std::string& b_text,
                          const std::optional<std::string>& place) {
  Json report = header("hilbert");
  Rational a, b;
  try {
    a = parse_rational(a_text);
    b = parse_rational(b_text);
    if (a == 0 || b == 0) throw InvalidArgument("a and b must be nonzero");
  } catch (const std::exception& e) {
    Json err;
    err["stage"] = "usage";
    err["message"] = e.what();
    report["error"] = err;
    report["status"] = "failed";
    return {report, kExitUsage};
  }
  report["a"] = to_string(a);
  report["b"] = to_string(b);
  if (place) {
    Place v = Place::real();
    try {
      v = Place::parse(*place);
    } catch (const std::exception& e) {
      Json err;
      err["stage"] = "usage";
      err["message"] = e.what();
      report["error"] = err;
      report["status"] = "failed";
      return {report, kExitUsage};
    }
    report["place"] = v.to_string();
    report["symbol"] = to_int(hilbert_symbol(a, b, v));
  } else {
    Json table = Json::array();
    Symbol product = Symbol::kPlusOne;
    for (const auto& v : support_places({a, b})) {
      Symbol s = hilbert_symbol(a, b, v);
      product = product * s;
      Json e;
      e["place"] = v.to_string();
      e["symbol"] = to_int(s);
      table.push_back(e);
    }
    report["table"] = table;
    report["product"] = to_int(product);
    report["product_formula"] = product == Symbol::kPlusOne;
  }
  report["status"] = "ok";
  return {report, kExitOk};
}

CommandResult cmd_iskovskikh(const RunConfig& config) {
  Json report = header("iskovskikh");
  report["config"] = config_json(config);
  try {
    ChateletSurface s = iskovskikh();
    report["surface"] = to_json(s);
    report["surface_checks"] = surface_checks(s);
    LocalReport local = stage("local", [&] { return verify_local_everywhere(s); });
    report["local"] = to_json(local);
    PointSearchResult search =
        stage("search", [&] { return rational_point_search(s, {config.height, config.witness_bound}); });
    report["search"] = to_json(search);
    report["obstruction"] = "not-provided";
    if (!local.all_solvable) throw StageError("local", "not everywhere locally solvable");
    if (search.status != PointSearchResult::Status::kNone) {
      throw StageError("search", "solvable fiber at x = " + search.fiber->to_string());
    }
    report["status"] = "locally-solvable-no-point-up-to-height";
    return {report, kExitOk};
  } catch (const StageError& e) {
    return error_result(report, e);
  }
}

CommandResult cmd_surface(const RunConfig& config, const std::string& json_text) {
  Json report = header("surface");
  report["config"] = config_json(config);
  std::optional<ChateletSurface> parsed;
  try {
    parsed = surface_from_json(Json::parse(json_text));
  } catch (const std::exception& e) {
    Json err;
    err["stage"] = "input";
    err["message"] = e.what();
    report["error"] = err;
    report["status"] = "failed";
    return {report, kExitUsage};
  }
  const ChateletSurface& s = *parsed;
  try {
    report["surface"] = to_json(s);
    report["surface_checks"] = surface_checks(s);
    if (!s.is_smooth()) throw StageError("surface", "surface is singular");
    LocalReport local = stage("local", [&] { return verify_local_everywhere(s); });
    report["local"] = to_json(local);
    if (!local.all_solvable) {
      report["status"] = "no-point-local-obstruction";
      return {report, kExitOk};
    }
    std::optional<ObstructionReport> obs;
    if (s.params()) {
      BrauerClass A = brauer_class(s);
      obs = stage("obstruction", [&] { return obstruction_report(s, config.samples, config.seed); });
      report["obstruction"] = to_json(*obs, A);
    } else {
      report["obstruction"] = "not-provided";
    }
    PointSearchResult search =
        stage("search", [&] { return rational_point_search(s, {config.height, config.witness_bound}); });
    report["search"] = to_json(search);
    if (search.status != PointSearchResult::Status::kNone) {
      if (obs && obs->certified_empty) throw StageError("search", "solvable fiber on a certified surface");
      report["status"] = "rational-point-found";
      return {report, kExitOk};
    }
    if (obs && obs->certified_empty) {
      report["status"] = "certified";
      return {report, kExitOk};
    }
    report["status"] = "inconclusive";
    return {report, kExitInconclusive};
  } catch (const StageError& e) {
    return error_result(report, e);
  }
}

}  // namespace chatelet
