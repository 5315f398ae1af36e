// JSON round-trips for tensors, vertex sets, and bound reports, plus the
// rejection diagnostics for malformed documents.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stp/bounds.hpp"
#include "stp/enumeration.hpp"
#include "stp/polytope.hpp"
#include "stp/serialization.hpp"
#include "stp/tensor.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

using stp::Rational;
using stp::StochasticTensor;

std::string what_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const stp::ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("tensors round-trip through their documents byte-for-byte") {
  StochasticTensor t(2);
  t.at(0, 0, 0) = Rational(1, 3);
  t.at(0, 1, 1) = Rational(-1, 2);  // serialization carries non-members too
  t.at(1, 1, 0) = Rational(7);

  const std::string doc = stp::write_tensor(t);
  CHECK(doc == stp::write_tensor(t));  // deterministic
  CHECK(doc.back() == '\n');
  const StochasticTensor back = stp::read_tensor(doc);
  CHECK(back == t);
  CHECK(stp::write_tensor(back) == doc);
}

TEST_CASE("tensor documents hold exact tokens in a nested entry grid") {
  StochasticTensor t(2);
  t.at(0, 0, 0) = Rational(2, 4);
  const auto doc = nlohmann::json::parse(stp::write_tensor(t));
  CHECK(doc["n"] == 2);
  CHECK(doc["entries"][0][0][0] == "1/2");
  CHECK(doc["entries"][1][1][1] == "0");
}

TEST_CASE("vertex sets round-trip with their counts") {
  const auto set = stp::enumerate_vertices(stp::build_omega_h(2));
  const std::string doc = stp::write_vertex_set(set);
  const auto back = stp::read_vertex_set(doc);
  CHECK(back.n == set.n);
  CHECK(back.integral_count == set.integral_count);
  CHECK(back.nonintegral_count == set.nonintegral_count);
  REQUIRE(back.vertices.size() == set.vertices.size());
  for (std::size_t i = 0; i < set.vertices.size(); ++i) CHECK(back.vertices[i] == set.vertices[i]);
}

TEST_CASE("bound reports round-trip at every optional-field shape") {
  for (int n : {2, 3, 10}) {
    CAPTURE(n);
    const auto report = stp::make_bound_report(n);
    const std::string doc = stp::write_bound_report(report);
    CHECK(doc == stp::write_bound_report(report));
    const auto back = stp::read_bound_report(doc);
    CHECK(back == report);
  }
}

TEST_CASE("bound report documents expose factored and approximate renderings") {
  const std::string doc = stp::write_bound_report(stp::make_bound_report(3));
  const auto parsed = nlohmann::json::parse(doc);
  CHECK(parsed["new_upper"]["exact"] == "10395");
  CHECK(parsed["new_upper"]["factored"] == "C(23,19) + C(22,19)");
  CHECK(parsed["new_upper"]["approx"] == "10395.0");
  CHECK(parsed["old_upper"]["exact"] == "111399602430962720/3");
  CHECK(parsed["old_upper"]["approx"] == "3.71332e+16");
  CHECK(parsed["lower_latin_ratio"]["exact"] == "64/27");
  CHECK(parsed["latin_count"] == "12");
  CHECK(parsed["lbt_lower"] == 11);
  CHECK(parsed["verdicts"]["new_upper_below_old"] == true);

  const std::string doc2 = stp::write_bound_report(stp::make_bound_report(2));
  const auto parsed2 = nlohmann::json::parse(doc2);
  CHECK_FALSE(parsed2.contains("lbt_lower"));
  CHECK_FALSE(parsed2["verdicts"].contains("lbt_below_new_upper"));
}

TEST_CASE("malformed tensor documents are rejected with a located ParseError") {
  CHECK_THROWS_AS((void)stp::read_tensor("this is not json"), stp::ParseError);
  CHECK_THROWS_AS((void)stp::read_tensor("[]"), stp::ParseError);
  CHECK_THROWS_AS((void)stp::read_tensor("{\"entries\": []}"), stp::ParseError);
  CHECK_THROWS_AS((void)stp::read_tensor("{\"n\": 0, \"entries\": []}"), stp::ParseError);

  // ragged grid: the outer list is short
  CHECK_THROWS_AS((void)stp::read_tensor("{\"n\": 2, \"entries\": [[[\"1\",\"0\"],[\"0\",\"1\"]]]}"),
                  stp::ParseError);

  // non-rational tokens, wherever they hide
  const std::string decimal_token =
      "{\"n\": 1, \"entries\": [[[\"1.5\"]]]}";
  CHECK_THROWS_AS((void)stp::read_tensor(decimal_token), stp::ParseError);
  const std::string number_not_string = "{\"n\": 1, \"entries\": [[[1]]]}";
  CHECK_THROWS_AS((void)stp::read_tensor(number_not_string), stp::ParseError);

  const std::string where = what_of([&] { (void)stp::read_tensor(decimal_token); });
  CHECK(where.find("entries[0][0][0]") != std::string::npos);
}

TEST_CASE("negative entries parse fine; validation is a separate concern") {
  const StochasticTensor t = stp::read_tensor("{\"n\": 1, \"entries\": [[[\"-1/2\"]]]}");
  CHECK(t.entries[0] == Rational(-1, 2));
  CHECK(stp::validate(t).has_value());
}

TEST_CASE("vertex-set documents with inconsistent counts are rejected") {
  const auto set = stp::enumerate_vertices(stp::build_omega_h(2));
  auto doc = nlohmann::ordered_json::parse(stp::write_vertex_set(set));

  auto broken_total = doc;
  broken_total["total"] = 3;
  CHECK_THROWS_AS((void)stp::read_vertex_set(broken_total.dump(2)), stp::ParseError);

  auto broken_integral = doc;
  broken_integral["integral"] = 1;
  broken_integral["nonintegral"] = 1;
  const std::string why =
      what_of([&] { (void)stp::read_vertex_set(broken_integral.dump(2)); });
  CHECK(why.find("stored counts disagree") != std::string::npos);

  auto broken_order = doc;
  broken_order["vertices"][0]["n"] = 3;
  CHECK_THROWS_AS((void)stp::read_vertex_set(broken_order.dump(2)), stp::ParseError);
}

TEST_CASE("bound-report documents reject missing or mistyped fields") {
  auto doc = nlohmann::ordered_json::parse(stp::write_bound_report(stp::make_bound_report(3)));
  auto missing = doc;
  missing.erase("new_upper");
  CHECK_THROWS_AS((void)stp::read_bound_report(missing.dump(2)), stp::ParseError);

  auto mistyped = doc;
  mistyped["lbt_lower"] = "eleven";
  CHECK_THROWS_AS((void)stp::read_bound_report(mistyped.dump(2)), stp::ParseError);
}

TEST_CASE("tensor files load through the same parser") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "stp_serialization_test_tensor.json";
  StochasticTensor t(2);
  t.at(0, 0, 0) = Rational(1);
  t.at(0, 1, 1) = Rational(1);
  t.at(1, 0, 1) = Rational(1);
  t.at(1, 1, 0) = Rational(1);
  stp::save_text_file(path.string(), stp::write_tensor(t));
  CHECK(stp::load_tensor_file(path.string()) == t);
  std::filesystem::remove(path);

  CHECK_THROWS_AS((void)stp::load_tensor_file((dir / "stp_no_such_file.json").string()),
                  stp::ParseError);
}
