#include "motbun/curve_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "motbun/error.hpp"

namespace motbun {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::FileFormat, what); }

void only_fields(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) bad("unknown field '" + key + "' in " + where);
}

std::int64_t integer(const json& v, const std::string& name) {
  if (!v.is_number_integer()) bad("field '" + name + "' must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> integer_list(const json& v, const std::string& name) {
  if (!v.is_array()) bad("field '" + name + "' must be a list of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(integer(x, name));
  return out;
}

}  // namespace

CurveSpec parse_curve_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed curve spec: ") + e.what());
  }
  if (!doc.is_object()) bad("curve spec must be an object");
  only_fields(doc, {"genus", "q", "weil", "model"}, "curve spec");
  if (!doc.contains("genus") || !doc.contains("q")) bad("curve spec needs 'genus' and 'q'");
  if (doc.contains("weil") == doc.contains("model")) bad("curve spec needs exactly one of 'weil' and 'model'");

  CurveSpec spec;
  const auto genus = integer(doc["genus"], "genus");
  const auto q = integer(doc["q"], "q");
  if (genus < 0) bad("genus must be non-negative");
  if (q < 2) bad("q must be at least 2");
  spec.genus = static_cast<int>(genus);
  spec.q = static_cast<std::uint64_t>(q);
  if (doc.contains("weil")) {
    std::vector<Rat> c;
    for (auto v : integer_list(doc["weil"], "weil")) c.emplace_back(static_cast<long>(v));
    spec.source = Poly(std::move(c));
    return spec;
  }
  const json& m = doc["model"];
  if (!m.is_object()) bad("'model' must be an object");
  only_fields(m, {"kind", "h", "f"}, "model");
  if (!m.contains("kind") || !m["kind"].is_string()) bad("model needs a string 'kind'");
  ExplicitModel model;
  model.kind = parse_model_kind(m["kind"].get<std::string>());
  if (m.contains("h")) model.h = integer_list(m["h"], "h");
  if (m.contains("f")) model.f = integer_list(m["f"], "f");
  spec.source = std::move(model);
  return spec;
}

CurveSpec load_curve_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FileFormat, "cannot open curve spec '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_curve_spec(buf.str());
}

std::string dump_curve_spec(const CurveSpec& spec) {
  json doc;
  doc["genus"] = spec.genus;
  doc["q"] = spec.q;
  if (const auto* weil = std::get_if<Poly>(&spec.source)) {
    json c = json::array();
    for (const auto& x : weil->coeffs()) c.push_back(to_int64(x));
    doc["weil"] = c;
  } else {
    const auto& m = std::get<ExplicitModel>(spec.source);
    doc["model"] = {{"kind", to_string(m.kind)}, {"h", m.h}, {"f", m.f}};
  }
  return doc.dump();
}

}  // namespace motbun
