#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "gwa/cli.hpp"

namespace gwa::cli {

namespace {

std::string interval_text(const DegreeInterval& d) {
  std::string s = d.lo ? "[" + std::to_string(*d.lo) : "(-inf";
  s += ", ";
  s += d.hi ? std::to_string(*d.hi) + "]" : "+inf)";
  return s;
}

std::string label_text(const SimpleLabel& l) {
  return "S^(h-(" + l.point.to_string() + "))[" + std::to_string(l.shift) + "]";
}

std::string series_text(const CompositionSeries& series) {
  std::ostringstream os;
  for (const auto& f : series)
    os << "  " << label_text(f.label) << "  degrees " << interval_text(f.delta)
       << (f.in_o_plus ? "  O+" : "") << "\n";
  return os.str();
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + "}";
}

Json header(const char* command, Json inputs) {
  Json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  return j;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw parse_error("expected an integer in \"" + std::string(text) + "\"",
                      static_cast<std::size_t>(ptr - text.data()));
  return value;
}

// "point,shift"; the point itself never contains a comma.
SimpleLabel parse_label(const std::string& text) {
  const auto comma = text.rfind(',');
  if (comma == std::string::npos) throw parse_error("label must be written point,shift", 0);
  return {parse_scalar(std::string_view(text).substr(0, comma)),
          parse_int(std::string_view(text).substr(comma + 1))};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(path + ": " + e.what(), e.byte);
  }
}

std::string witness_text(const MoritaWitness& w) {
  std::ostringstream os;
  os << "witness: shift v1 by " << w.pre_shift.to_string() << ", v2 by " << w.n_shift << ", "
     << w.steps.size() << " move" << (w.steps.size() == 1 ? "" : "s") << "\n";
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const auto& s = w.steps[i];
    os << "  " << i + 1 << ". " << to_string(s.direction) << " " << s.before.to_string() << " -> "
       << s.after.to_string() << "  (u = " << s.u.to_string() << ", w = " << s.w.to_string()
       << ")\n";
  }
  return os.str();
}

}  // namespace

Report type_report(const std::string& text) {
  const FactoredPoly v = parse_poly(text);
  const TypeSignature sig = z_classes(v);
  Report r;
  r.json = header("type", {{"v", v.to_string()}});
  r.json["result"] = {{"degree", v.degree()}, {"classes", to_json(sig)}};
  std::ostringstream os;
  os << "type of " << v.to_string() << " (degree " << v.degree() << ")\n";
  if (sig.classes.empty()) os << "  no roots\n";
  for (const auto& cls : sig.classes) {
    os << "  class of " << cls.anchor.to_string() << ":";
    for (const auto& e : cls.entries) os << " +" << e.offset << "^" << e.multiplicity;
    os << "\n";
  }
  r.text = os.str();
  return r;
}

Report equiv_report(const std::string& t1, const std::string& t2, bool with_witness) {
  const FactoredPoly v1 = parse_poly(t1);
  const FactoredPoly v2 = parse_poly(t2);
  const auto b = morita_equivalent(v1, v2);
  Report r;
  r.json = header("equiv", {{"v1", v1.to_string()}, {"v2", v2.to_string()}});
  Json result = {{"equivalent", b.has_value()},
                 {"b", b ? Json(b->to_string()) : Json(nullptr)}};
  std::ostringstream os;
  os << "T(" << v1.to_string() << ") and T(" << v2.to_string() << ") are "
     << (b ? "strongly graded Morita equivalent" : "not strongly graded Morita equivalent")
     << "\n";
  if (b) os << "b = " << b->to_string() << "\n";
  if (with_witness && b) {
    const auto w = witness_chain(v1, v2);
    result["witness"] = to_json(*w);
    os << witness_text(*w);
  }
  r.json["result"] = std::move(result);
  r.text = os.str();
  return r;
}

Report iso_report(const std::string& t1, const std::string& t2) {
  const FactoredPoly v1 = parse_poly(t1);
  const FactoredPoly v2 = parse_poly(t2);
  const auto iso = isomorphic(v1, v2);
  const auto all = isomorphisms(v1, v2);
  Report r;
  r.json = header("iso", {{"v1", v1.to_string()}, {"v2", v2.to_string()}});
  r.json["result"] = {
      {"isomorphic", iso.has_value()},
      {"nu", iso ? Json(iso->nu.to_string()) : Json(nullptr)},
      {"sign", iso ? Json(std::string(to_string(iso->sign))) : Json(nullptr)},
      {"plus", all.plus ? Json(all.plus->to_string()) : Json(nullptr)},
      {"minus", all.minus ? Json(all.minus->to_string()) : Json(nullptr)}};
  std::ostringstream os;
  os << "T(" << v1.to_string() << ") and T(" << v2.to_string() << ") are "
     << (iso ? "isomorphic" : "not isomorphic") << "\n";
  if (all.plus) os << "  v2(h) = v1(" << all.plus->to_string() << " + h)\n";
  if (all.minus) os << "  v2(h) = v1(" << all.minus->to_string() << " - h) up to sign\n";
  r.text = os.str();
  return r;
}

Report module_report(const std::string& tv, const std::string& tp) {
  const FactoredPoly v = parse_poly(tv);
  const Scalar a = parse_scalar(tp);
  const auto ks = chi(v, a);
  const auto subs = submodules(v, a);
  const auto series = composition_series(v, a);
  Report r;
  r.json = header("module", {{"v", v.to_string()}, {"point", a.to_string()}});
  Json sub_json = Json::array();
  for (const auto& s : subs) sub_json.push_back(to_json(s));
  r.json["result"] = {{"chi", ks},
                      {"simple", ks.empty()},
                      {"submodules", sub_json},
                      {"composition_series", to_json(series)}};
  std::ostringstream os;
  os << "A^lambda for v = " << v.to_string() << ", lambda = (h-(" << a.to_string() << "))\n";
  os << "chi = " << join(ks) << (ks.empty() ? ", simple" : "") << "\n";
  os << subs.size() << " proper nonzero graded submodule" << (subs.size() == 1 ? "" : "s")
     << "\n";
  os << "composition factors:\n" << series_text(series);
  r.text = os.str();
  return r;
}

Report verma_report(const std::string& tv, const std::string& tn) {
  const FactoredPoly v = parse_poly(tv);
  const Scalar nu = parse_scalar(tn);
  const auto series = verma_series(v, nu);
  Report r;
  r.json = header("verma", {{"v", v.to_string()}, {"nu", nu.to_string()}});
  r.json["result"] = {{"composition_series", to_json(series)}};
  r.text = "Verma module V^" + nu.to_string() + " for v = " + v.to_string() + "\n" +
           "composition factors:\n" + series_text(series);
  return r;
}

Report blocks_report(const std::string& tv, const std::vector<std::string>& labels,
                     const std::string& tt) {
  const FactoredPoly v = parse_poly(tv);
  const Scalar t = parse_scalar(tt);
  std::vector<SimpleLabel> parsed;
  for (const auto& l : labels) parsed.push_back(parse_label(l));
  const auto blocks = oplus_blocks(v);
  Report r;
  Json label_inputs = Json::array();
  for (const auto& l : parsed) label_inputs.push_back(to_json(l));
  r.json = header("blocks",
                  {{"v", v.to_string()}, {"labels", label_inputs}, {"translation", t.to_string()}});
  Json block_json = Json::array();
  for (const auto& b : blocks) block_json.push_back(to_json(b));
  Json keys = Json::array();
  std::ostringstream os;
  const bool star = check_star(t, v);
  os << "condition (*) for translation by " << t.to_string() << ": "
     << (star ? "holds" : "fails") << "\n";
  os << "O+ blocks:\n";
  for (const auto& b : blocks) os << "  anchor " << b.anchor.to_string() << ", chi " << join(b.chi_w) << "\n";
  if (!parsed.empty()) os << "Artinian block keys:\n";
  for (const auto& l : parsed) {
    const Scalar key = artinian_block_key(v, l);
    Json j = to_json(l);
    j["block_key"] = key.to_string();
    keys.push_back(std::move(j));
    os << "  " << label_text(l) << " -> " << key.to_string() << "\n";
  }
  r.json["result"] = {{"condition_star", star}, {"oplus_blocks", block_json}, {"labels", keys}};
  r.text = os.str();
  return r;
}

Report proj_report(const std::string& tv, const std::string& tn) {
  const FactoredPoly v = parse_poly(tv);
  const Scalar nu = parse_scalar(tn);
  const ProjectiveData p = projective_data(v, nu);
  Report r;
  r.json = header("proj", {{"v", v.to_string()}, {"nu", nu.to_string()}});
  Json table = Json::array();
  std::ostringstream os;
  os << "P_" << nu.to_string() << " = A(" << p.cutoff << ")_" << nu.to_string()
     << ", degree-zero part C[h]/(h-(" << nu.to_string() << "))^" << p.power << "\n";
  os << "length of M_" << nu.to_string() << ": " << m_nu_length(v, nu) << "\n";
  os << "hom degrees:\n";
  for (const auto& b1 : v.blocks()) {
    for (const auto& b2 : v.blocks()) {
      const auto d = hom_degree(v, b1.root, b2.root);
      table.push_back({{"nu1", b1.root.to_string()},
                       {"nu2", b2.root.to_string()},
                       {"degree", d ? Json(*d) : Json(nullptr)}});
      os << "  Hom(P_" << b1.root.to_string() << ", P_" << b2.root.to_string()
         << "[n]): " << (d ? "n = " + std::to_string(*d) : std::string("zero for all n")) << "\n";
    }
  }
  r.json["result"] = {
      {"projective", to_json(p)}, {"m_nu_length", m_nu_length(v, nu)}, {"hom_degrees", table}};
  r.text = os.str();
  return r;
}

Report ann_report(const std::string& tv, std::int64_t n) {
  const FactoredPoly v = parse_poly(tv);
  const FactoredPoly a = annihilator_An(v, n);
  Report r;
  r.json = header("ann", {{"v", v.to_string()}, {"n", n}});
  r.json["result"] = {{"annihilator", a.to_string()}, {"degree", a.degree()}};
  r.text = "ann A(" + std::to_string(n) + ") = (" + a.to_string() + ")\n";
  return r;
}

Report ext_report(const std::string& tv, const std::string& t1, const std::string& t2) {
  const FactoredPoly v = parse_poly(tv);
  const SimpleLabel s1 = parse_label(t1);
  const SimpleLabel s2 = parse_label(t2);
  const ExtStatus status = ext1(v, s1, s2);
  Report r;
  r.json = header("ext", {{"v", v.to_string()}, {"s1", to_json(s1)}, {"s2", to_json(s2)}});
  r.json["result"] = {{"status", std::string(to_string(status))}};
  r.text = "Ext^1(" + label_text(s1) + ", " + label_text(s2) + "): " +
           std::string(to_string(status)) + "\n";
  return r;
}

Report quiver_report(const std::string& path, bool check, std::optional<std::size_t> vertex,
                     const std::vector<std::size_t>& pair) {
  const Json doc = read_json_file(path);
  const CycleData c = cycle_from_json(doc);
  const auto claimed = claimed_v_from_json(doc);
  Report r;
  Json translations = Json::array();
  Json rs = Json::array();
  for (const auto& t : c.translations) translations.push_back(t.to_string());
  for (const auto& p : c.r) rs.push_back(p.to_string());
  r.json = header("quiver", {{"n", c.n}, {"translations", translations}, {"r", rs}});
  std::ostringstream os;
  Json result;
  result["theta_shift"] = vertex_data(c, 0).theta_shift.to_string();
  os << "cycle of length " << c.n << ", theta = translation by "
     << vertex_data(c, 0).theta_shift.to_string() << "\n";
  if (vertex && *vertex >= c.n)
    throw index_error("vertex " + std::to_string(*vertex) + " out of range for a cycle of length " +
                      std::to_string(c.n));
  Json vertices = Json::array();
  for (std::size_t i = 0; i < c.n; ++i) {
    if (vertex && *vertex != i) continue;
    const VertexGWA g = vertex_data(c, i);
    vertices.push_back({{"index", i}, {"v", g.v.to_string()}});
    os << "  vertex " << i << ": v = " << g.v.to_string() << "\n";
  }
  result["vertices"] = std::move(vertices);
  if (check) {
    const bool holds = verify_identities(c, claimed);
    result["identities"] = {{"hold", holds}, {"claimed_v", claimed.has_value()}};
    os << "defining identities " << (holds ? "hold" : "FAIL") << "\n";
  }
  if (!pair.empty()) {
    const std::size_t i = pair[0];
    const std::size_t j = pair[1];
    const ArcElements ij = arc_elements(c, i, j);
    const ArcElements ji = arc_elements(c, j, i);
    const bool coprime_arcs = vertex_morita_check(c, i, j);
    std::string conclusion = "undetermined";
    if (coprime_arcs) conclusion = c.n == 2 ? "morita_equivalent" : "morita_equivalent_per_n2_pattern";
    result["pair"] = {{"i", i},
                      {"j", j},
                      {"alpha_ij", ij.alpha.to_string()},
                      {"beta_ij", ij.beta.to_string()},
                      {"alpha_ji", ji.alpha.to_string()},
                      {"beta_ji", ji.beta.to_string()},
                      {"coprime", coprime_arcs},
                      {"conclusion", conclusion}};
    os << "  alpha_" << i << j << " = " << ij.alpha.to_string() << ", beta_" << i << j << " = "
       << ij.beta.to_string() << "\n";
    os << "  alpha_" << j << i << " = " << ji.alpha.to_string() << ", beta_" << j << i << " = "
       << ji.beta.to_string() << "\n";
    if (!coprime_arcs)
      os << "arc elements not coprime: no conclusion\n";
    else if (c.n == 2)
      os << "vertices " << i << " and " << j << " are strongly graded Morita equivalent\n";
    else
      os << "vertices " << i << " and " << j
         << " are strongly graded Morita equivalent (per n=2 pattern)\n";
  }
  r.json["result"] = std::move(result);
  r.text = os.str();
  return r;
}

Report verify_report(const std::string& t1, const std::string& t2, const std::string& path) {
  const FactoredPoly v1 = parse_poly(t1);
  const FactoredPoly v2 = parse_poly(t2);
  Json doc = read_json_file(path);
  // Accept a bare witness or a full `equiv --witness` report.
  if (doc.is_object() && doc.contains("result")) doc = doc["result"];
  if (doc.is_object() && doc.contains("witness")) doc = doc["witness"];
  const MoritaWitness w = witness_from_json(doc);
  const VerifyResult res = verify_witness(v1, v2, w);
  Report r;
  r.json = header("verify", {{"v1", v1.to_string()},
                             {"v2", v2.to_string()},
                             {"witness_steps", w.steps.size()}});
  r.json["result"] = {{"valid", res.ok}, {"reason", res.reason}};
  r.text = res.ok ? "witness valid (" + std::to_string(w.steps.size()) + " moves)\n"
                  : "witness INVALID: " + res.reason + "\n";
  return r;
}

Report selftest_report(std::uint64_t seed, int rounds) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int witness_ok = 0;
  int cycle_ok = 0;
  for (int round = 0; round < rounds; ++round) {
    // Same multiplicity sequence on two random integer supports.
    const int k = pick(1, 4);
    std::vector<int> mults;
    for (int i = 0; i < k; ++i) mults.push_back(pick(1, 3));
    auto place = [&] {
      std::vector<RootBlock> blocks;
      int pos = pick(-5, 0);
      for (int m : mults) {
        blocks.push_back({Scalar(pos), m});
        pos += pick(1, 3);
      }
      return FactoredPoly::from_roots(blocks);
    };
    const FactoredPoly v1 = place();
    const FactoredPoly v2 = place();
    const auto w = witness_chain(v1, v2);
    if (w && verify_witness(v1, v2, *w)) ++witness_ok;

    CycleData c;
    c.n = static_cast<std::size_t>(pick(1, 4));
    for (std::size_t i = 0; i < c.n; ++i) {
      c.translations.push_back(Scalar(Rational(pick(-4, 4), pick(1, 2))));
      std::vector<RootBlock> blocks;
      for (int d = pick(0, 2); d > 0; --d) blocks.push_back({Scalar(pick(-3, 3)), 1});
      c.r.push_back(FactoredPoly::from_roots(blocks));
    }
    if (verify_identities(c)) ++cycle_ok;
  }
  Report r;
  r.json = header("selftest", {{"seed", seed}, {"rounds", rounds}});
  r.json["result"] = {{"witness_round_trips", witness_ok},
                      {"cycle_identities", cycle_ok},
                      {"passed", witness_ok == rounds && cycle_ok == rounds}};
  std::ostringstream os;
  os << "seed " << seed << ": witness round trips " << witness_ok << "/" << rounds
     << ", cycle identities " << cycle_ok << "/" << rounds << "\n";
  r.text = os.str();
  return r;
}

}  // namespace gwa::cli
