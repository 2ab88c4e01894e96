#include "gwa/json_io.hpp"

namespace gwa {

namespace {

Json optional_int(const std::optional<std::int64_t>& x) { return x ? Json(*x) : Json(nullptr); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw parse_error(std::string("missing field \"") + key + "\"", 0);
  return j.at(key);
}

std::string text_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_string()) throw parse_error(std::string("field \"") + key + "\" must be a string", 0);
  return f.get<std::string>();
}

std::int64_t int_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_number_integer())
    throw parse_error(std::string("field \"") + key + "\" must be an integer", 0);
  return f.get<std::int64_t>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_array()) throw parse_error(std::string("field \"") + key + "\" must be an array", 0);
  return f;
}

std::vector<FactoredPoly> poly_list(const Json& arr) {
  std::vector<FactoredPoly> out;
  for (const auto& x : arr) {
    if (!x.is_string()) throw parse_error("polynomial entries must be strings", 0);
    out.push_back(parse_poly(x.get<std::string>()));
  }
  return out;
}

}  // namespace

Json to_json(const TypeSignature& sig) {
  Json classes = Json::array();
  for (const auto& cls : sig.classes) {
    Json entries = Json::array();
    for (const auto& e : cls.entries)
      entries.push_back({{"offset", e.offset}, {"multiplicity", e.multiplicity}});
    classes.push_back({{"anchor", cls.anchor.to_string()},
                       {"entries", entries},
                       {"multiplicity_sequence", cls.multiplicity_sequence()}});
  }
  return classes;
}

Json to_json(const DegreeInterval& d) {
  return {{"lo", optional_int(d.lo)}, {"hi", optional_int(d.hi)}};
}

Json to_json(const SimpleLabel& label) {
  return {{"point", label.point.to_string()}, {"shift", label.shift}};
}

Json to_json(const CompositionSeries& series) {
  Json out = Json::array();
  for (const auto& f : series) {
    Json j = to_json(f.label);
    j["interval"] = to_json(f.delta);
    j["in_o_plus"] = f.in_o_plus;
    out.push_back(std::move(j));
  }
  return out;
}

Json to_json(const SubmoduleDescriptor& s) {
  Json j;
  if (s.kind == SubmoduleDescriptor::Kind::single) {
    j = {{"kind", "single"}, {"k", s.k}};
  } else {
    j = {{"kind", "pair"}, {"k", s.k}, {"k2", s.k2}};
  }
  Json support = Json::array();
  for (const auto& d : s.support()) support.push_back(to_json(d));
  j["support"] = std::move(support);
  return j;
}

Json to_json(const ProjectiveData& p) {
  return {{"root", p.root.to_string()}, {"cutoff", p.cutoff}, {"power", p.power}};
}

Json to_json(const OPlusBlock& b) {
  return {{"anchor", b.anchor.to_string()}, {"chi_w", b.chi_w}};
}

Json to_json(const MoveStep& step) {
  return {{"before", step.before.to_string()},
          {"block_root", step.block_root.to_string()},
          {"direction", std::string(to_string(step.direction))},
          {"u", step.u.to_string()},
          {"w", step.w.to_string()},
          {"after", step.after.to_string()}};
}

Json to_json(const MoritaWitness& w) {
  Json steps = Json::array();
  for (const auto& s : w.steps) steps.push_back(to_json(s));
  return {{"pre_shift", w.pre_shift.to_string()}, {"n_shift", w.n_shift}, {"steps", steps}};
}

MoritaWitness witness_from_json(const Json& j) {
  MoritaWitness w;
  w.pre_shift = parse_scalar(text_field(j, "pre_shift"));
  w.n_shift = int_field(j, "n_shift");
  for (const auto& s : array_field(j, "steps")) {
    MoveStep step;
    step.before = parse_poly(text_field(s, "before"));
    step.block_root = parse_scalar(text_field(s, "block_root"));
    const std::string dir = text_field(s, "direction");
    if (dir == "up") {
      step.direction = MoveDirection::up;
    } else if (dir == "down") {
      step.direction = MoveDirection::down;
    } else {
      throw parse_error("direction must be \"up\" or \"down\"", 0);
    }
    step.u = parse_poly(text_field(s, "u"));
    step.w = parse_poly(text_field(s, "w"));
    step.after = parse_poly(text_field(s, "after"));
    w.steps.push_back(std::move(step));
  }
  return w;
}

CycleData cycle_from_json(const Json& j) {
  CycleData c;
  const auto n = int_field(j, "n");
  if (n < 1) throw parse_error("cycle length must be at least 1", 0);
  c.n = static_cast<std::size_t>(n);
  for (const auto& t : array_field(j, "translations")) {
    if (!t.is_string()) throw parse_error("translations must be strings", 0);
    c.translations.push_back(parse_scalar(t.get<std::string>()));
  }
  c.r = poly_list(array_field(j, "r"));
  if (c.translations.size() != c.n || c.r.size() != c.n)
    throw parse_error("cycle data needs exactly n translations and n polynomials", 0);
  return c;
}

std::optional<std::vector<FactoredPoly>> claimed_v_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("v")) return std::nullopt;
  return poly_list(array_field(j, "v"));
}

}  // namespace gwa
