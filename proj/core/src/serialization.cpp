#include "stp/serialization.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace stp {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

Json parse_document(const std::string& text, const char* what) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(what, "malformed JSON");
  if (!doc.is_object()) fail(what, "expected a JSON object");
  return doc;
}

const Json& require_field(const Json& doc, const char* name, const std::string& where) {
  const auto it = doc.find(name);
  if (it == doc.end()) fail(where, std::string("missing field \"") + name + "\"");
  return *it;
}

long long integer_field(const Json& doc, const char* name, const std::string& where) {
  const Json& node = require_field(doc, name, where);
  if (!node.is_number_integer()) fail(where + "." + name, "expected an integer");
  return node.get<long long>();
}

Rational rational_token(const Json& node, const std::string& where) {
  if (!node.is_string()) fail(where, "expected a rational string token");
  const auto token = node.get<std::string>();
  if (auto value = parse_rational(token)) return *value;
  fail(where, "malformed rational token \"" + token + "\"");
}

Int int_token(const Json& node, const std::string& where) {
  const Rational value = rational_token(node, where);
  if (denominator(value) != 1) fail(where, "expected an integer token");
  return numerator(value);
}

int order_field(const Json& doc, const std::string& where) {
  const long long n = integer_field(doc, "n", where);
  if (n < 1 || n > 1000) fail(where + ".n", "order out of range");
  return static_cast<int>(n);
}

Json tensor_to_json(const StochasticTensor& t) {
  Json planes = Json::array();
  for (int i = 0; i < t.n; ++i) {
    Json plane = Json::array();
    for (int j = 0; j < t.n; ++j) {
      Json line = Json::array();
      for (int k = 0; k < t.n; ++k) line.push_back(to_string(t.at(i, j, k)));
      plane.push_back(std::move(line));
    }
    planes.push_back(std::move(plane));
  }
  Json doc;
  doc["n"] = t.n;
  doc["entries"] = std::move(planes);
  return doc;
}

StochasticTensor tensor_from_json(const Json& doc, const std::string& where) {
  const int n = order_field(doc, where);
  const Json& planes = require_field(doc, "entries", where);
  if (!planes.is_array() || planes.size() != static_cast<std::size_t>(n))
    fail(where + ".entries", "expected n index-i planes");
  StochasticTensor t(n);
  for (int i = 0; i < n; ++i) {
    const Json& plane = planes[static_cast<std::size_t>(i)];
    std::ostringstream at_i;
    at_i << where << ".entries[" << i << "]";
    if (!plane.is_array() || plane.size() != static_cast<std::size_t>(n)) fail(at_i.str(), "expected n lines");
    for (int j = 0; j < n; ++j) {
      const Json& line = plane[static_cast<std::size_t>(j)];
      std::ostringstream at_ij;
      at_ij << at_i.str() << "[" << j << "]";
      if (!line.is_array() || line.size() != static_cast<std::size_t>(n)) fail(at_ij.str(), "expected n entries");
      for (int k = 0; k < n; ++k) {
        std::ostringstream at_ijk;
        at_ijk << at_ij.str() << "[" << k << "]";
        t.at(i, j, k) = rational_token(line[static_cast<std::size_t>(k)], at_ijk.str());
      }
    }
  }
  return t;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string write_tensor(const StochasticTensor& t) { return dump(tensor_to_json(t)); }

StochasticTensor read_tensor(const std::string& text) {
  return tensor_from_json(parse_document(text, "tensor"), "tensor");
}

std::string write_vertex_set(const VertexSet& set) {
  Json doc;
  doc["n"] = set.n;
  doc["total"] = set.vertices.size();
  doc["integral"] = set.integral_count;
  doc["nonintegral"] = set.nonintegral_count;
  Json vertices = Json::array();
  for (const StochasticTensor& v : set.vertices) vertices.push_back(tensor_to_json(v));
  doc["vertices"] = std::move(vertices);
  return dump(doc);
}

VertexSet read_vertex_set(const std::string& text) {
  const Json doc = parse_document(text, "vertex_set");
  const std::string where = "vertex_set";
  VertexSet set;
  set.n = order_field(doc, where);
  const long long total = integer_field(doc, "total", where);
  const long long integral = integer_field(doc, "integral", where);
  const long long nonintegral = integer_field(doc, "nonintegral", where);
  if (total < 0 || integral < 0 || nonintegral < 0) fail(where, "counts must be nonnegative");
  const Json& vertices = require_field(doc, "vertices", where);
  if (!vertices.is_array()) fail(where + ".vertices", "expected an array");
  if (static_cast<long long>(vertices.size()) != total) fail(where, "total disagrees with the vertex list length");
  set.vertices.reserve(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    std::ostringstream at_v;
    at_v << where << ".vertices[" << v << "]";
    if (!vertices[v].is_object()) fail(at_v.str(), "expected a tensor object");
    set.vertices.push_back(tensor_from_json(vertices[v], at_v.str()));
    if (set.vertices.back().n != set.n) fail(at_v.str(), "vertex order differs from the set order");
  }
  for (const StochasticTensor& v : set.vertices) {
    if (is_integral(v)) ++set.integral_count;
    else ++set.nonintegral_count;
  }
  if (static_cast<long long>(set.integral_count) != integral ||
      static_cast<long long>(set.nonintegral_count) != nonintegral)
    fail(where, "stored counts disagree with the vertex entries");
  return set;
}

namespace {

Json rational_block(const Rational& value) {
  Json block;
  block["exact"] = to_string(value);
  block["approx"] = decimal_string(value);
  return block;
}

Json int_block(const Int& value) {
  Json block;
  block["exact"] = value.str();
  block["approx"] = decimal_string(Rational(value));
  return block;
}

}  // namespace

std::string write_bound_report(const BoundReport& report) {
  Json doc;
  doc["n"] = report.n;
  doc["lower_latin_ratio"] = rational_block(report.lower_latin_ratio);
  if (report.latin_count) doc["latin_count"] = report.latin_count->str();
  if (report.lbt_lower) doc["lbt_lower"] = *report.lbt_lower;
  Json new_upper = int_block(report.new_upper);
  new_upper["factored"] = new_upper_factored(report.n);
  doc["new_upper"] = std::move(new_upper);
  Json old_upper = rational_block(report.old_upper);
  old_upper["factored"] = old_upper_factored(report.n);
  doc["old_upper"] = std::move(old_upper);
  doc["linial_luria_upper"] = int_block(report.linial_luria_upper);
  if (report.barnette_simplicial_max) doc["barnette_simplicial_max"] = report.barnette_simplicial_max->str();
  Json verdicts;
  verdicts["new_upper_below_old"] = report.verdicts.new_upper_below_old;
  verdicts["new_upper_below_linial_luria"] = report.verdicts.new_upper_below_linial_luria;
  if (report.verdicts.lbt_matches_closed_form)
    verdicts["lbt_matches_closed_form"] = *report.verdicts.lbt_matches_closed_form;
  if (report.verdicts.lbt_vs_latin_ratio_as_expected)
    verdicts["lbt_vs_latin_ratio_as_expected"] = *report.verdicts.lbt_vs_latin_ratio_as_expected;
  if (report.verdicts.lbt_below_new_upper) verdicts["lbt_below_new_upper"] = *report.verdicts.lbt_below_new_upper;
  doc["verdicts"] = std::move(verdicts);
  return dump(doc);
}

namespace {

bool bool_field(const Json& doc, const char* name, const std::string& where) {
  const Json& node = require_field(doc, name, where);
  if (!node.is_boolean()) fail(where + "." + name, "expected a boolean");
  return node.get<bool>();
}

std::optional<bool> optional_bool_field(const Json& doc, const char* name, const std::string& where) {
  if (doc.find(name) == doc.end()) return std::nullopt;
  return bool_field(doc, name, where);
}

}  // namespace

BoundReport read_bound_report(const std::string& text) {
  const Json doc = parse_document(text, "bound_report");
  const std::string where = "bound_report";
  BoundReport report;
  const long long n = integer_field(doc, "n", where);
  if (n < 2 || n > 1000) fail(where + ".n", "order out of range");
  report.n = static_cast<int>(n);

  const Json& ratio = require_field(doc, "lower_latin_ratio", where);
  if (!ratio.is_object()) fail(where + ".lower_latin_ratio", "expected an object");
  report.lower_latin_ratio = rational_token(require_field(ratio, "exact", where + ".lower_latin_ratio"),
                                            where + ".lower_latin_ratio.exact");

  if (doc.find("latin_count") != doc.end())
    report.latin_count = int_token(doc["latin_count"], where + ".latin_count");
  if (doc.find("lbt_lower") != doc.end()) report.lbt_lower = integer_field(doc, "lbt_lower", where);

  const Json& nu = require_field(doc, "new_upper", where);
  if (!nu.is_object()) fail(where + ".new_upper", "expected an object");
  report.new_upper = int_token(require_field(nu, "exact", where + ".new_upper"), where + ".new_upper.exact");

  const Json& ou = require_field(doc, "old_upper", where);
  if (!ou.is_object()) fail(where + ".old_upper", "expected an object");
  report.old_upper = rational_token(require_field(ou, "exact", where + ".old_upper"), where + ".old_upper.exact");

  const Json& ll = require_field(doc, "linial_luria_upper", where);
  if (!ll.is_object()) fail(where + ".linial_luria_upper", "expected an object");
  report.linial_luria_upper =
      int_token(require_field(ll, "exact", where + ".linial_luria_upper"), where + ".linial_luria_upper.exact");

  if (doc.find("barnette_simplicial_max") != doc.end())
    report.barnette_simplicial_max = int_token(doc["barnette_simplicial_max"], where + ".barnette_simplicial_max");

  const Json& verdicts = require_field(doc, "verdicts", where);
  if (!verdicts.is_object()) fail(where + ".verdicts", "expected an object");
  const std::string vw = where + ".verdicts";
  report.verdicts.new_upper_below_old = bool_field(verdicts, "new_upper_below_old", vw);
  report.verdicts.new_upper_below_linial_luria = bool_field(verdicts, "new_upper_below_linial_luria", vw);
  report.verdicts.lbt_matches_closed_form = optional_bool_field(verdicts, "lbt_matches_closed_form", vw);
  report.verdicts.lbt_vs_latin_ratio_as_expected =
      optional_bool_field(verdicts, "lbt_vs_latin_ratio_as_expected", vw);
  report.verdicts.lbt_below_new_upper = optional_bool_field(verdicts, "lbt_below_new_upper", vw);
  return report;
}

StochasticTensor load_tensor_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("tensor file: cannot open \"" + path + "\"");
  std::ostringstream content;
  content << in.rdbuf();
  return read_tensor(content.str());
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing \"" + path + "\"");
}

}  // namespace stp
