#include "fano4/tensor_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fano {

using nlohmann::json;

namespace {

Rational rational_entry(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw TensorFileError("entries must be rational strings");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw TensorFileError("bad rational '" + j.get<std::string>() + "'");
  }
}

Scalar entry(const json& j, Field f) {
  if (f.kind == FieldKind::Q) return Scalar(rational_entry(j));
  if (j.is_array()) {
    if (j.size() != 4) throw TensorFileError("cyclotomic entries need four coordinates");
    return Scalar(Cyclo12(rational_entry(j[0]), rational_entry(j[1]), rational_entry(j[2]), rational_entry(j[3])));
  }
  return Scalar(Cyclo12(rational_entry(j)));
}

}  // namespace

ThetaTensor parse_theta(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw TensorFileError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("field") || !doc.contains("theta"))
    throw TensorFileError("expected an object with 'field' and 'theta'");
  std::string tag = doc["field"].get<std::string>();
  Field f;
  if (tag == "Q") f = Field::rationals();
  else if (tag == "Q(zeta12)") f = Field::cyclo12();
  else throw TensorFileError("unknown field '" + tag + "'");
  const json& th = doc["theta"];
  if (!th.is_array() || th.size() != 4) throw TensorFileError("theta must have 4 components");
  std::array<Matrix, 4> comp;
  for (int i = 0; i < 4; ++i) {
    if (!th[i].is_array() || th[i].size() != 5) throw TensorFileError("each component must be 5x5");
    comp[i] = Matrix(5, 5, f);
    for (int a = 0; a < 5; ++a) {
      if (!th[i][a].is_array() || th[i][a].size() != 5) throw TensorFileError("each component must be 5x5");
      for (int b = 0; b < 5; ++b) comp[i](a, b) = entry(th[i][a][b], f);
    }
    if (!is_alternating(comp[i])) throw TensorFileError("component " + std::to_string(i + 1) + " is not alternating");
  }
  return ThetaTensor(f, comp);
}

ThetaTensor read_theta_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TensorFileError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_theta(ss.str());
}

std::string format_theta(const ThetaTensor& t) {
  json doc;
  if (t.field.kind == FieldKind::Fp) throw TensorFileError("only Q and Q(zeta12) tensors can be written");
  doc["field"] = t.field.kind == FieldKind::Q ? "Q" : "Q(zeta12)";
  json th = json::array();
  for (int i = 0; i < 4; ++i) {
    json m = json::array();
    for (int a = 0; a < 5; ++a) {
      json row = json::array();
      for (int b = 0; b < 5; ++b) {
        const Scalar& x = t.comp[i](a, b);
        if (t.field.kind == FieldKind::Q) {
          row.push_back(to_string(x.rational()));
        } else {
          json c = json::array();
          for (const auto& r : x.cyclo().c) c.push_back(to_string(r));
          row.push_back(c);
        }
      }
      m.push_back(row);
    }
    th.push_back(m);
  }
  // one matrix row per line
  std::string out = "{\n  \"field\": " + json(doc["field"]).dump() + ",\n  \"theta\": [\n";
  for (int i = 0; i < 4; ++i) {
    out += "    [\n";
    for (int a = 0; a < 5; ++a) out += "      " + th[i][a].dump() + (a < 4 ? ",\n" : "\n");
    out += i < 3 ? "    ],\n" : "    ]\n";
  }
  return out + "  ]\n}\n";
}

}  // namespace fano
