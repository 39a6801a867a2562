#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "cyclotopo/io.hpp"

using namespace cyclotopo;

TEST_CASE("polynomial json round trip", "[io]") {
  for (int64_t n : {1, 2, 15, 105, 210}) {
    CAPTURE(n);
    IntPoly f = cyclotomic(n);
    REQUIRE(poly_from_json(poly_to_json(f)) == f);
  }

  nlohmann::json j = poly_to_json(cyclotomic(15));
  REQUIRE(j.dump() == R"(["1","-1","0","1","-1","1","0","-1","1"])");
}

TEST_CASE("polynomial json accepts integers and strings", "[io]") {
  IntPoly f = poly_from_json(nlohmann::json::parse(R"([1,"2",-3])"));
  REQUIRE(f.coeff(0) == 1);
  REQUIRE(f.coeff(1) == 2);
  REQUIRE(f.coeff(2) == -3);

  Int big("123456789012345678901234567890");
  IntPoly g({big, -big});
  REQUIRE(poly_from_json(poly_to_json(g)) == g);
}

TEST_CASE("polynomial json rejects malformed input", "[io]") {
  REQUIRE_THROWS_AS(poly_from_json(nlohmann::json::object()), std::invalid_argument);
  REQUIRE_THROWS_AS(poly_from_json(nlohmann::json::parse(R"(["12a"])")), std::invalid_argument);
  REQUIRE_THROWS_AS(poly_from_json(nlohmann::json::parse(R"([""])")), std::invalid_argument);
  REQUIRE_THROWS_AS(poly_from_json(nlohmann::json::parse(R"(["-"])")), std::invalid_argument);
  REQUIRE_THROWS_AS(poly_from_json(nlohmann::json::parse(R"(["+5"])")), std::invalid_argument);
  REQUIRE_THROWS_AS(poly_from_json(nlohmann::json::parse("[1.5]")), std::invalid_argument);
  REQUIRE_THROWS_AS(poly_from_json(nlohmann::json::parse("[true]")), std::invalid_argument);
}

TEST_CASE("matrix text round trip", "[io]") {
  for (int64_t n : {7, 15, 105}) {
    CAPTURE(n);
    IntMatrix m = top_boundary_by_residue(n);
    std::stringstream ss;
    write_matrix(ss, m);
    REQUIRE(read_matrix(ss) == m);
  }

  IntMatrix empty(0, 3);
  std::stringstream ss;
  write_matrix(ss, empty);
  REQUIRE(ss.str() == "0 3 0\n");
  REQUIRE(read_matrix(ss) == empty);
}

TEST_CASE("matrix text format", "[io]") {
  IntMatrix m(2, 2);
  m(0, 1) = -7;
  m(1, 0) = 3;
  std::stringstream ss;
  write_matrix(ss, m);
  REQUIRE(ss.str() == "2 2 2\n0 1 -7\n1 0 3\n");

  std::stringstream in("2 3 1\n1 2 -9\n");
  IntMatrix back = read_matrix(in);
  REQUIRE(back.rows() == 2);
  REQUIRE(back.cols() == 3);
  REQUIRE(back(1, 2) == -9);
}

TEST_CASE("matrix text rejects malformed input", "[io]") {
  auto parse = [](const std::string& s) {
    std::stringstream ss(s);
    return read_matrix(ss);
  };
  REQUIRE_THROWS_AS(parse(""), std::invalid_argument);
  REQUIRE_THROWS_AS(parse("a b c"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse("-1 2 0"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse("2 2 1"), std::invalid_argument);           // truncated
  REQUIRE_THROWS_AS(parse("2 2 1\n0 0 x"), std::invalid_argument);    // bad value
  REQUIRE_THROWS_AS(parse("2 2 1\n0 5 1"), std::invalid_argument);    // out of range
  REQUIRE_THROWS_AS(parse("2 2 2\n0 0 1\n0 0 2"), std::invalid_argument);  // duplicate
}

TEST_CASE("complex json round trip", "[io]") {
  std::vector<SimplicialComplex> samples;
  samples.push_back(complete_dpartite({3, 5}));
  samples.push_back(subcomplex_KA(15, {6}));
  samples.push_back(subcomplex_KT(15, {7, 9, 10, 11, 12, 13, 14}));
  samples.push_back(SimplicialComplex({2}, {{}}));  // the void-spanning facet

  for (const SimplicialComplex& X : samples) {
    SimplicialComplex Y = complex_from_json(complex_to_json(X));
    REQUIRE(Y.parts() == X.parts());
    REQUIRE(Y.facets() == X.facets());
    REQUIRE(Y.full_skeleton() == X.full_skeleton());
    REQUIRE(Y.dim() == X.dim());
    for (int k = -1; k <= X.dim(); ++k) REQUIRE(Y.faces_of_dim(k) == X.faces_of_dim(k));
  }
}

TEST_CASE("complex json shape", "[io]") {
  nlohmann::json j = complex_to_json(complete_dpartite({2, 2}));
  REQUIRE(j["parts"] == nlohmann::json::parse("[2,2]"));
  REQUIRE(j["full_skeleton"] == false);
  REQUIRE(j["facets"] == nlohmann::json::parse("[[0,0],[0,1],[1,0],[1,1]]"));

  nlohmann::json partial = complex_to_json(subcomplex_KA(15, {}));
  REQUIRE(partial["parts"] == nlohmann::json::parse("[3,5]"));
  // K_emptyset on 15 keeps the six window edges, each hitting both parts
  REQUIRE(partial["facets"].size() == 6);
  for (const auto& row : partial["facets"]) {
    REQUIRE(row.size() == 2);
    REQUIRE_FALSE(row[0].is_null());
    REQUIRE_FALSE(row[1].is_null());
  }
}

TEST_CASE("complex json with missing parts in a facet", "[io]") {
  nlohmann::json j = nlohmann::json::parse(R"({
    "parts": [2, 3],
    "facets": [[0, null], [null, 2], [1, 0]],
    "full_skeleton": false
  })");
  SimplicialComplex X = complex_from_json(j);
  REQUIRE(X.dim() == 1);
  REQUIRE(X.facets().size() == 3);
  REQUIRE(X.faces_of_dim(0).size() == 4);  // vertices (0,0), (0,1), (1,0), (1,2)

  // flag defaults to false when absent
  nlohmann::json no_flag = nlohmann::json::parse(R"({"parts":[2],"facets":[[0]]})");
  REQUIRE_FALSE(complex_from_json(no_flag).full_skeleton());
}

TEST_CASE("complex json rejects malformed input", "[io]") {
  auto parse = [](const char* s) { return complex_from_json(nlohmann::json::parse(s)); };
  REQUIRE_THROWS_AS(parse("[]"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse(R"({"parts":[2,3]})"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse(R"({"parts":[],"facets":[]})"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse(R"({"parts":[2,"x"],"facets":[]})"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse(R"({"parts":[2,3],"facets":[[0]]})"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse(R"({"parts":[2,3],"facets":[[0,1.5]]})"), std::invalid_argument);
  // residue outside its part is caught by complex construction
  REQUIRE_THROWS_AS(parse(R"({"parts":[2,3],"facets":[[0,5]]})"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse(R"({"parts":[0],"facets":[]})"), std::invalid_argument);
}
