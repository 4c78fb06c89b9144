#include <filesystem>

#include "catloc/io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace catloc;
using namespace catloc::testing;
using nlohmann::json;

namespace {

/// k x k presented with basis e = 1 and u = (3/2) e1, so u u = (3/2) u.
CategoryPresentation rational_constants() {
  const Field Q = Field::rationals();
  CategoryPresentation P(Q, {"x"});
  P.set_hom_dim(0, 0, 2);
  const Scalar one = Scalar::one(Q), three_halves = Scalar::parse(Q, "3/2");
  P.set_constant(0, 0, 0, 0, 0, 0, one);
  P.set_constant(0, 0, 0, 0, 1, 1, one);
  P.set_constant(0, 0, 0, 1, 0, 1, one);
  P.set_constant(0, 0, 0, 1, 1, 1, three_halves);
  P.set_identity(0, {one, Scalar::zero(Q)});
  return P;
}

std::filesystem::path tmp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("generated categories round-trip exactly") {
    for (std::size_t n : {1u, 2u, 3u}) {
      for (const Field& F : {Field::rationals(), Field::prime(101)}) {
        const auto& P = cluster(n, F);
        const json j = to_json(P);
        const auto R = from_json(j);
        CHECK(R == P);
        CHECK(R.metadata() == P.metadata());
        CHECK(to_json(R) == j);
      }
    }
  }

  TEST_CASE("files round-trip and rationals are p/q strings") {
    const auto P = rational_constants();
    const auto path = tmp("catloc_io_rational.json");
    save_category(P, path);
    const auto R = load_category(path, true, false);
    CHECK(R == P);
    bool saw = false;
    const json j = to_json(P);
    for (const auto& e : j["comp"]) saw = saw || e["coeff"] == "3/2";
    CHECK(saw);
    std::filesystem::remove(path);
  }

  TEST_CASE("strict mode rejects unknown keys") {
    json j = to_json(cluster(2));
    j["extra"] = 1;
    CHECK_THROWS_AS(from_json(j), DataError);
    CHECK_NOTHROW(from_json(j, false));
    json k = to_json(cluster(2));
    k["hom"][0]["weight"] = 3;
    CHECK_THROWS_AS(from_json(k), DataError);
  }

  TEST_CASE("malformed data") {
    const json good = to_json(cluster(2));
    auto broken = [&](auto edit) {
      json j = good;
      edit(j);
      return j;
    };
    CHECK_THROWS_AS(from_json(broken([](json& j) { j["format_version"] = 99; })), DataError);
    CHECK_THROWS_AS(from_json(broken([](json& j) { j["field"] = "R"; })), DataError);
    CHECK_THROWS_AS(from_json(broken([](json& j) { j["field"] = json{{"Fp", 12}}; })), DataError);
    CHECK_THROWS_AS(from_json(broken([](json& j) { j["hom"][0]["src"] = 77; })), DataError);
    CHECK_THROWS_AS(from_json(broken([](json& j) { j["comp"][0]["coeff"] = "x"; })), DataError);
    CHECK_THROWS_AS(from_json(broken([](json& j) { j.erase("identities"); })), DataError);
    CHECK_THROWS_AS(from_json(broken([](json& j) { j["sigma"] = json::array({0, 0, 1, 2, 3}); })), DataError);
    CHECK_THROWS_AS(from_json(broken([](json& j) { j["indecomposables"][1] = "P1"; })), DataError);
    // An edited constant is caught by validation.
    CHECK_THROWS_AS(from_json(broken([](json& j) { j["comp"][0]["coeff"] = "2"; })), DataError);
    CHECK_THROWS_AS(load_category(tmp("catloc_does_not_exist.json")), DataError);
  }

  TEST_CASE("object specs") {
    const auto& P = cluster(3);
    const Obj X = parse_object(P, "P1 + 2*P2");
    CHECK(X.mult[idx(P, "P1")] == 1);
    CHECK(X.mult[idx(P, "P2")] == 2);
    CHECK(parse_object(P, "SigmaP3") == obj(P, {"ΣP3"}));
    CHECK(parse_index_set(P, "P2,P3,SigmaP3") == IndexSet{idx(P, "P2"), idx(P, "P3"), idx(P, "ΣP3")});
    CHECK_THROWS_AS(parse_object(P, "P7"), DataError);
    CHECK_THROWS_AS(parse_object(P, "P1+"), DataError);
    CHECK(parse_field("Q").is_rational());
    CHECK(parse_field("Fp:101").modulus() == 101);
    CHECK_THROWS_AS(parse_field("Fp:100"), DataError);
  }
}
