#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hilb/closedform.hpp"
#include "hilb/macdonald.hpp"
#include "hilb/parallel.hpp"
#include "hilb/partfun.hpp"
#include "hilb/partition.hpp"
#include "hilb/ring/json.hpp"
#include "hilb/toric.hpp"
#include "hilb/universal.hpp"

using namespace hilb;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  std::string format = "json";
  int jobs = 1;
  bool timing = false;
  bool quick = false;
  // compute
  int k = 3, m = 0, wOrder = 4, zOrder = -1, which = 0, r = 2, order = 6, maxWeightFlag = -1;
  std::string surface = "P2", bundle = "O", method;
  std::vector<std::string> methods;
};

json coefficients(const Series& s) {
  json a = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) a.push_back(s.at(i).toString());
  return a;
}

json seriesJson(const Series& s) {
  json j = toJson(s);
  if (s.nvars() == 1) j["coefficients"] = coefficients(s);
  return j;
}

// ---- verification suites ----

std::vector<Report> macdonaldSuite(int weight) {
  std::vector<Report> out;
  Report cauchy("cauchy", {{"max_n", std::min(4, weight)}});
  for (int n = 1; n <= std::min(4, weight); ++n) cauchy.merge(verifyCauchy(n));
  out.push_back(cauchy);
  Report gt("garsia-tesler", {{"max_size", std::min(3, weight)}, {"degree", 3}});
  for (const auto& mu : partitionsUpTo(std::min(3, weight))) gt.merge(verifyGarsiaTesler(mu, 3));
  out.push_back(gt);
  Report kw("koornwinder", {{"max_size", std::min(3, weight)}});
  auto ps = partitionsUpTo(std::min(3, weight));
  for (const auto& mu : ps)
    for (const auto& nu : ps) kw.merge(verifyKoornwinder(mu, nu));
  out.push_back(kw);
  Report prod("product-specialization", {{"max_size", std::min(5, weight)}});
  for (const auto& mu : partitionsUpTo(std::min(5, weight))) {
    if (mu.empty()) continue;
    prod.merge(verifyProductSpecialization(mu));
  }
  out.push_back(prod);
  return out;
}

std::vector<Report> omegaSuite(const std::vector<int>& ks, int w, int z) {
  std::vector<Report> out;
  for (int k : ks) {
    out.push_back(verifyFunctionalEquation(k, w, k == 0 ? 0 : z));
    out.push_back(verifyPalindromic(k, w, k == 0 ? 0 : z));
  }
  return out;
}

std::vector<Report> symmetrySuite(const std::vector<int>& ks, int w, int z) {
  std::vector<Report> out;
  for (int k : ks) {
    HExpansion h(HRequest{k, w, z, 1, 0, 0});
    for (int d1 = -1; d1 <= 1; ++d1)
      for (int d2 = -1; d2 <= 1; ++d2)
        if (d1 + d2 <= 1) {
          auto rep = verifySymmetryTheorem(h, d1, d2);
          rep.params["k"] = k;
          out.push_back(rep);
        }
  }
  return out;
}

std::vector<Report> localizationSuite(int w) {
  std::vector<Report> out;
  for (const auto& name : builtinSurfaceNames()) {
    auto s = builtinSurface(name);
    Report rep("localization", {{"surface", name}});
    std::vector<int> d(s.rays.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<int>(i % 3) - 1;
    rep.merge(verifyVanishing(s, directSum(equivariantLineBundle(s, d), trivialBundle(s, 1))));
    auto n = chernNumbers(s, trivialBundle(s, 1));
    rep.expectEqual(n.chiO, Rational(1), "chi(O_S)");
    rep.expectEqual(n.euler, Rational(static_cast<long>(s.rays.size())), "Euler characteristic");
    rep.expectEqual(n.K2, Rational(12 - static_cast<long>(s.rays.size())), "K^2");
    auto v = verlindeSeries(s, trivialBundle(s, 0), w);
    for (int i = 0; i <= w; ++i) rep.expectEqual(v.at(static_cast<std::size_t>(i)), Rational(1), "Verlinde w^" + std::to_string(i));
    out.push_back(rep);
  }
  return out;
}

std::vector<Report> bconjSuite(int r, int order, bool localization) {
  std::vector<Report> out{verifyBConjecture(r, order)};
  if (localization && r >= 2) {
    Report rep("b-localization", {{"r", r}, {"order", order}});
    Series b3 = b3Product(r, order), b4 = b4Binomial(r, order);
    rep.expectEqual(b3Localization(r, order), b3, "B3 product vs localization");
    rep.expectEqual(g3OfY(r + 1, order), b3, "B3 product vs exp formula");
    rep.expectEqual(b4Localization(r, order), b4, "B4 binomial vs localization");
    out.push_back(rep);
  }
  return out;
}

std::vector<Report> allSuite(bool quick) {
  std::vector<Report> out;
  auto add = [&](std::vector<Report> v) { out.insert(out.end(), v.begin(), v.end()); };
  if (quick) {
    add(macdonaldSuite(3));
    add(omegaSuite({0, 1, 2}, 2, 2));
    add(symmetrySuite({1}, 2, 2));
    add(localizationSuite(6));
    out.push_back(verifyMainTheorem(3, 2, 4));
    out.push_back(verifySegreVerlinde(3, 3));
    add(bconjSuite(2, 6, true));
    add(bconjSuite(3, 5, false));
  } else {
    add(macdonaldSuite(maxWeight(5)));
    add(omegaSuite({0, 1, 2}, 3, 3));
    add(symmetrySuite({1, 2, 3}, 4, 4));
    add(localizationSuite(6));
    for (int k : {3, 4}) out.push_back(verifyMainTheorem(k, 4, 8));
    for (int k : {3, 4}) out.push_back(verifySegreVerlinde(k, 4));
    add(bconjSuite(2, 8, true));
    add(bconjSuite(3, 8, true));
    add(bconjSuite(4, 12, false));
  }
  return out;
}

// ---- rendering ----

std::string paramsText(const json& j) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, v] : j.items()) {
    if (key == "identity" || key == "pass" || key == "checked" || key == "firstDiscrepancy") continue;
    os << (first ? "" : " ") << key << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    first = false;
  }
  return os.str();
}

void renderTable(const json& out, std::ostream& os) {
  os << out["command"].get<std::string>() << "\n";
  std::vector<std::vector<std::string>> rows;
  if (out.contains("results")) {
    rows.push_back({"identity", "params", "pass", "checked", "first discrepancy"});
    for (const auto& r : out["results"])
      rows.push_back({r["identity"].get<std::string>(), paramsText(r), r["pass"].get<bool>() ? "yes" : "NO", std::to_string(r["checked"].get<std::size_t>()),
                      r["firstDiscrepancy"].is_null() ? "" : r["firstDiscrepancy"].get<std::string>()});
  } else {
    rows.push_back({"series", "exponent", "coefficient"});
    for (const auto& [name, s] : out["series"].items())
      for (const auto& t : s["terms"]) {
        std::string e;
        for (std::size_t i = 0; i < t["exp"].size(); ++i) e += (i ? "," : "") + std::to_string(t["exp"][i].get<int>());
        std::string c = t["num"].get<std::string>();
        if (t["den"].get<std::string>() != "1") c = "(" + c + ")/(" + t["den"].get<std::string>() + ")";
        rows.push_back({name, e, c});
      }
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  if (out.contains("pass")) os << (out["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

int emit(json out, const Options& o, std::chrono::steady_clock::time_point start) {
  out["version"] = kVersion;
  if (o.timing) out["elapsedSeconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.format == "table") renderTable(out, std::cout);
  else std::cout << out.dump(2) << "\n";
  return out.value("pass", true) ? 0 : 1;
}

json verifyOutput(const std::string& cmd, const json& params, const std::vector<Report>& reps) {
  json out{{"command", cmd}, {"parameters", params}};
  json rs = json::array();
  bool pass = true;
  for (const auto& r : reps) {
    rs.push_back(r.toJson());
    pass = pass && r.pass;
  }
  out["results"] = rs;
  out["pass"] = pass;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generating series on Hilbert schemes of points"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--timing", o.timing, "include elapsed time in the output");

  auto* compute = app.add_subcommand("compute", "compute a series")->require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "check an identity")->require_subcommand(1);

  auto* cOmega = compute->add_subcommand("omega", "master partition function");
  cOmega->add_option("--k", o.k, "numerator variables")->check(CLI::NonNegativeNumber);
  cOmega->add_option("--m", o.m, "denominator variables")->check(CLI::NonNegativeNumber);
  cOmega->add_option("--worder", o.wOrder)->check(CLI::NonNegativeNumber);
  cOmega->add_option("--zorder", o.zOrder)->check(CLI::NonNegativeNumber);

  auto* cVer = compute->add_subcommand("verlinde", "Verlinde series of (S, alpha)");
  auto* cHilb = compute->add_subcommand("hilbk", "generating series I_{S,alpha}(w, z)");
  for (auto* c : {cVer, cHilb}) {
    c->add_option("--surface", o.surface, "toric surface");
    c->add_option("--bundle", o.bundle, "class alpha, e.g. O(1)+O(1)");
    c->add_option("--worder", o.wOrder)->check(CLI::NonNegativeNumber);
  }
  cHilb->add_option("--zorder", o.zOrder)->check(CLI::NonNegativeNumber);

  auto* cG = compute->add_subcommand("g-series", "universal series G_i");
  cG->add_option("--which", o.which, "index 0..4")->check(CLI::Range(0, 4));
  cG->add_option("--k", o.k, "rank")->check(CLI::PositiveNumber);
  cG->add_option("--worder", o.wOrder)->check(CLI::NonNegativeNumber);
  cG->add_option("--zorder", o.zOrder)->check(CLI::NonNegativeNumber);
  cG->add_option("--method", o.method, "closed, localization or h")->check(CLI::IsMember({"closed", "localization", "h"}));

  auto* cB4 = compute->add_subcommand("b4", "B_4 as a series in y");
  cB4->add_option("--r", o.r)->check(CLI::NonNegativeNumber);
  cB4->add_option("--order", o.order)->check(CLI::PositiveNumber);
  cB4->add_option("--method", o.methods, "binomial, conjecture, localization (repeatable)")
      ->check(CLI::IsMember({"binomial", "conjecture", "localization"}));

  auto* vMac = verify->add_subcommand("macdonald", "Macdonald identity suite");
  vMac->add_option("--max-weight", o.maxWeightFlag, "largest partition size")->check(CLI::PositiveNumber);
  auto* vOmega = verify->add_subcommand("omega-identity", "functional equation of Omega");
  std::vector<int> ks;
  vOmega->add_option("--k", ks, "ranks (repeatable)")->check(CLI::NonNegativeNumber);
  vOmega->add_option("--worder", o.wOrder)->check(CLI::NonNegativeNumber);
  vOmega->add_option("--zorder", o.zOrder)->check(CLI::NonNegativeNumber);
  auto* vSym = verify->add_subcommand("symmetry", "symmetry of the H components");
  vSym->add_option("--k", ks, "ranks (repeatable)")->check(CLI::PositiveNumber);
  vSym->add_option("--worder", o.wOrder)->check(CLI::PositiveNumber);
  vSym->add_option("--zorder", o.zOrder)->check(CLI::PositiveNumber);
  auto* vMain = verify->add_subcommand("main-theorem", "extraction against the closed forms");
  vMain->add_option("--k", o.k)->check(CLI::PositiveNumber);
  vMain->add_option("--worder", o.wOrder)->check(CLI::PositiveNumber);
  vMain->add_option("--zorder", o.zOrder)->check(CLI::PositiveNumber);
  auto* vSV = verify->add_subcommand("segre-verlinde", "Chern and Verlinde limits");
  vSV->add_option("--k", o.k)->check(CLI::Range(3, 64));
  vSV->add_option("--order", o.order)->check(CLI::PositiveNumber);
  auto* vB = verify->add_subcommand("bconj", "B_4 binomial formula against the branch product");
  vB->add_option("--r", o.r)->check(CLI::NonNegativeNumber);
  vB->add_option("--order", o.order)->check(CLI::PositiveNumber);
  bool withLocalization = false;
  vB->add_flag("--localization", withLocalization, "also compare with the Verlinde extraction");
  auto* vAll = verify->add_subcommand("all", "every verification");
  vAll->add_flag("--quick", o.quick, "reduced orders");

  // global flags are accepted after the subcommand too
  for (auto* group : {compute, verify}) {
    group->fallthrough();
    for (auto* sub : group->get_subcommands({})) sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  setJobs(o.jobs);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (*cOmega) {
      if (o.zOrder < 0) o.zOrder = o.k > 0 ? 2 : 0;
      auto s = omegaMaster({o.k, o.m, o.wOrder, o.zOrder});
      json out{{"command", "compute omega"}, {"parameters", {{"k", o.k}, {"m", o.m}, {"worder", o.wOrder}, {"zorder", o.zOrder}}}};
      out["series"]["omega"] = toJson(s);
      return emit(out, o, start);
    }
    if (*cVer || *cHilb) {
      auto s = builtinSurface(o.surface);
      auto a = parseBundle(s, o.bundle);
      json params{{"surface", s.name}, {"bundle", o.bundle}, {"worder", o.wOrder}};
      json out;
      if (*cVer) {
        out = {{"command", "compute verlinde"}, {"parameters", params}};
        out["series"]["verlinde"] = seriesJson(verlindeInvariant(s, a, o.wOrder));
      } else {
        if (o.zOrder < 0) o.zOrder = 2 * o.wOrder;
        params["zorder"] = o.zOrder;
        out = {{"command", "compute hilbk"}, {"parameters", params}};
        out["series"]["hilbk"] = seriesJson(hilbK(s, a, o.wOrder, o.zOrder));
      }
      return emit(out, o, start);
    }
    if (*cG) {
      if (o.zOrder < 0) o.zOrder = 2 * o.wOrder;
      std::string method = o.method.empty() ? (o.which == 4 ? "localization" : "closed") : o.method;
      if (method == "closed" && o.which == 4) throw Error(ErrorCode::InvalidArgument, "G_4 has no closed form; use --method localization or h");
      Series g;
      if (method == "closed") g = closedFormG(o.which, o.k, o.wOrder, o.zOrder);
      else if (method == "h") g = exp(logGFromH(buildCDEF(o.k, o.wOrder, o.zOrder))[static_cast<std::size_t>(o.which)]);
      else g = exp(extractUniversal(Flavor::Full, o.k, o.wOrder, o.zOrder).logG[static_cast<std::size_t>(o.which)]);
      json out{{"command", "compute g-series"},
               {"parameters", {{"which", o.which}, {"k", o.k}, {"worder", o.wOrder}, {"zorder", o.zOrder}, {"method", method}}}};
      out["series"]["G" + std::to_string(o.which)] = toJson(g);
      return emit(out, o, start);
    }
    if (*cB4) {
      if (o.methods.empty()) o.methods = {"binomial"};
      std::vector<std::string> methods = o.methods;
      std::sort(methods.begin(), methods.end());
      methods.erase(std::unique(methods.begin(), methods.end()), methods.end());
      json out{{"command", "compute b4"}, {"parameters", {{"r", o.r}, {"order", o.order}, {"methods", methods}}}};
      std::vector<Series> got;
      for (const auto& m : methods) {
        Series s = m == "binomial" ? b4Binomial(o.r, o.order) : m == "conjecture" ? b4Conjecture(o.r, o.order) : b4Localization(o.r, o.order);
        out["series"][m] = seriesJson(s);
        got.push_back(s);
      }
      bool agree = std::all_of(got.begin(), got.end(), [&](const Series& s) { return s == got.front(); });
      out["pass"] = agree;
      return emit(out, o, start);
    }
    if (*vMac) {
      int w = o.maxWeightFlag > 0 ? o.maxWeightFlag : maxWeight(5);
      return emit(verifyOutput("verify macdonald", {{"max_weight", w}}, macdonaldSuite(w)), o, start);
    }
    if (*vOmega) {
      if (ks.empty()) ks = {0, 1, 2};
      if (o.zOrder < 0) o.zOrder = 3;
      if (o.wOrder == 4 && !vOmega->count("--worder")) o.wOrder = 3;
      return emit(verifyOutput("verify omega-identity", {{"k", ks}, {"worder", o.wOrder}, {"zorder", o.zOrder}}, omegaSuite(ks, o.wOrder, o.zOrder)), o,
                  start);
    }
    if (*vSym) {
      if (ks.empty()) ks = {1, 2, 3};
      if (o.zOrder < 0) o.zOrder = o.wOrder;
      return emit(verifyOutput("verify symmetry", {{"k", ks}, {"worder", o.wOrder}, {"zorder", o.zOrder}}, symmetrySuite(ks, o.wOrder, o.zOrder)), o, start);
    }
    if (*vMain) {
      if (o.zOrder < 0) o.zOrder = 2 * o.wOrder;
      return emit(verifyOutput("verify main-theorem", {{"k", o.k}, {"worder", o.wOrder}, {"zorder", o.zOrder}}, {verifyMainTheorem(o.k, o.wOrder, o.zOrder)}),
                  o, start);
    }
    if (*vSV) {
      if (!vSV->count("--order")) o.order = 4;
      return emit(verifyOutput("verify segre-verlinde", {{"k", o.k}, {"order", o.order}}, {verifySegreVerlinde(o.k, o.order)}), o, start);
    }
    if (*vB) {
      return emit(verifyOutput("verify bconj", {{"r", o.r}, {"order", o.order}, {"localization", withLocalization}}, bconjSuite(o.r, o.order, withLocalization)),
                  o, start);
    }
    if (*vAll) return emit(verifyOutput("verify all", {{"quick", o.quick}}, allSuite(o.quick)), o, start);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::WeightTooLarge) std::cerr << "raise HILBSERIES_MAX_WEIGHT to allow larger partition sums\n";
    switch (e.code()) {
      case ErrorCode::InvalidArgument:
      case ErrorCode::UnknownSurface:
      case ErrorCode::ParseError:
      case ErrorCode::BadDivisorData:
      case ErrorCode::WeightTooLarge:
        return 2;
      default:
        return 1;
    }
  }
  return 0;
}
