#include "glmp/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace glmp {

using nlohmann::json;

namespace {

json require_field(const json& j, const char* field) {
  if (!j.contains(field))
    throw std::runtime_error(std::string("instance JSON: missing field \"") + field + "\"");
  return j.at(field);
}

}  // namespace

GlmpInstance instance_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("instance JSON: parse error: ") + e.what());
  }

  GlmpInstance inst;
  inst.name = j.value("name", "unnamed");
  inst.n = require_field(j, "n").get<int>();
  inst.m = require_field(j, "m").get<int>();
  inst.A = require_field(j, "A").get<Mat>();
  inst.b = require_field(j, "b").get<Vec>();
  for (const auto& tj : require_field(j, "terms")) {
    Term term;
    term.c = require_field(tj, "c").get<Vec>();
    term.d = require_field(tj, "d").get<double>();
    term.alpha = require_field(tj, "alpha").get<double>();
    inst.terms.push_back(std::move(term));
  }
  check_dimensions(inst);
  return inst;
}

GlmpInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json_text(buf.str());
}

std::string instance_to_json_text(const GlmpInstance& instance) {
  json j;
  j["name"] = instance.name;
  j["n"] = instance.n;
  j["m"] = instance.m;
  j["A"] = instance.A;
  j["b"] = instance.b;
  j["terms"] = json::array();
  for (const Term& term : instance.terms)
    j["terms"].push_back({{"c", term.c}, {"d", term.d}, {"alpha", term.alpha}});
  return j.dump(2) + "\n";
}

void save_instance(const GlmpInstance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << instance_to_json_text(instance);
}

}  // namespace glmp
