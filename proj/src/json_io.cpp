#include "hypants/json_io.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace hypants {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ComplexValue& z) {
  if (z.is_infinite()) return Json{{"inf", true}};
  return to_json(z.value());
}

Json to_json(const Mobius& m) {
  return Json{{"m", Json::array({Json::array({to_json(m.a11()), to_json(m.a12())}),
                                 Json::array({to_json(m.a21()), to_json(m.a22())})})}};
}

Json to_json(const Horoball& b) {
  Json j;
  j["center"] = to_json(b.center());
  j[b.at_infinity() ? "height" : "diameter"] = b.size();
  return j;
}

Json to_json(const ClaimReport& r) {
  Json computed = Json::object();
  for (const auto& v : r.computed) {
    if (const double* d = std::get_if<double>(&v.value)) {
      computed[v.name] = *d;
    } else {
      computed[v.name] = to_json(std::get<Complex>(v.value));
    }
  }
  Json j{{"id", r.claim_id},
         {"anchor", r.anchor},
         {"computed", computed},
         {"tolerance", r.tolerance},
         {"verdict", std::string(to_string(r.verdict))}};
  if (!r.constants.empty()) {
    Json cs = Json::array();
    for (const auto& c : r.constants) {
      cs.push_back({{"name", c.name}, {"value", c.value}, {"provenance", c.provenance}});
    }
    j["constants"] = cs;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("expected a complex number [re, im], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexValue complex_value_from_json(const Json& j) {
  if (j.is_object()) {
    if (j.value("inf", false)) return ComplexValue::infinity();
    throw std::invalid_argument("expected {\"inf\": true}, got " + j.dump());
  }
  return {complex_from_json(j)};
}

Mobius mobius_from_json(const Json& j) {
  const Json& m = j.is_object() && j.contains("m") ? j.at("m") : j;
  if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
      !m[1].is_array() || m[1].size() != 2) {
    throw std::invalid_argument("expected {\"m\": [[z11, z12], [z21, z22]]}");
  }
  return {complex_from_json(m[0][0]), complex_from_json(m[0][1]), complex_from_json(m[1][0]),
          complex_from_json(m[1][1])};
}

PantsRepresentation pants_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("C1") || !j.contains("C2")) {
    throw std::invalid_argument("representation needs \"C1\" and \"C2\"");
  }
  return {mobius_from_json(j.at("C1")), mobius_from_json(j.at("C2"))};
}

GroupGenerators group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.at("generators").is_array()) {
    throw std::invalid_argument("group needs a \"generators\" array");
  }
  if (!j.contains("lattice")) throw std::invalid_argument("group needs a \"lattice\"");
  std::vector<NamedTransform> gens;
  std::size_t index = 0;
  for (const auto& g : j.at("generators")) {
    std::string name = g.contains("name") ? g.at("name").get<std::string>()
                                          : "g" + std::to_string(index);
    gens.push_back({std::move(name), mobius_from_json(g)});
    ++index;
  }
  const Json& l = j.at("lattice");
  return GroupGenerators(std::move(gens),
                         CuspLattice(complex_from_json(l.at("t1")), complex_from_json(l.at("t2"))));
}

Json to_json(const GroupGenerators& g) {
  Json gens = Json::array();
  for (const auto& t : g.generators()) {
    Json e{{"name", t.name}};
    e["m"] = to_json(t.transform)["m"];
    gens.push_back(e);
  }
  return Json{{"generators", gens},
              {"lattice", {{"t1", to_json(g.lattice().t1())}, {"t2", to_json(g.lattice().t2())}}}};
}

namespace {
double parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  }
  return v;
}
}  // namespace

Complex parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_double(text), 0.0};
  return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

Json report_json(const std::vector<ClaimReport>& reports) {
  Json claims = Json::array();
  int pass = 0, fail = 0, assumed = 0;
  for (const auto& r : reports) {
    claims.push_back(to_json(r));
    switch (r.verdict) {
      case Verdict::pass: ++pass; break;
      case Verdict::fail: ++fail; break;
      case Verdict::assumed_constant: ++assumed; break;
    }
  }
  return Json{{"claims", claims}, {"summary", {{"pass", pass}, {"fail", fail}, {"assumed", assumed}}}};
}

}  // namespace hypants
