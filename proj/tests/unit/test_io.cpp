#include <doctest.h>

#include "kustab/error.hpp"
#include "kustab/io.hpp"
#include "kustab/reproduction.hpp"

using namespace kustab;

TEST_CASE("lattice documents round-trip") {
  const std::string doc = R"({"name": "U", "gram": [[0, 1], [1, 0]]})";
  const std::string out = io_roundtrip(doc);
  CHECK(io_roundtrip(out) == out);
  CHECK(Json::parse(out) == Json::parse(doc));
}

TEST_CASE("Chern documents keep exact rationals") {
  const std::string doc = R"({"basis": "Y", "ch0": "8", "ch1": "2", "ch2": "13/6", "ch3": null})";
  const Json out = Json::parse(io_roundtrip(doc));
  CHECK(out["ch2"] == "13/6");
  CHECK(out["ch3"].is_null());
  CHECK(out == Json::parse(doc));
  const std::string s = R"({"basis": "Sigma", "rk": "4", "b1": "-4", "b2": "-4", "c": "5"})";
  CHECK(Json::parse(io_roundtrip(s)) == Json::parse(s));
  CHECK(chern_y_from_json(Json::parse(doc)).ch2 == Rat(13, 6));
}

TEST_CASE("Euler contexts round-trip") {
  const std::string doc = R"({"basis": ["A", "B"], "euler": [[1, "1/2"], [0, 1]]})";
  CHECK(Json::parse(io_roundtrip(doc)) == Json::parse(doc));
  const EulerContext q3 = builtin_q3_context();
  CHECK(context_from_json(to_json(q3)) == q3);
}

TEST_CASE("malformed documents") {
  try {
    io_roundtrip(R"({"gram": [[1, 2], [3, 1]]})");
    FAIL("accepted a non-symmetric Gram matrix");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }
  try {
    io_roundtrip("{\"gram\": [[1,\n 2]");
    FAIL("accepted truncated JSON");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(io_roundtrip(R"({"gram": [[1, 2], [2]]})"), InputError);
  CHECK_THROWS_AS(io_roundtrip(R"({"ch0": "1/0", "ch1": "0", "ch2": "0"})"), InputError);
  CHECK_THROWS_AS(io_roundtrip(R"({"what": 1})"), InputError);
  CHECK_THROWS_AS(io_roundtrip("[1, 2]"), InputError);
  CHECK_THROWS_AS(read_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("serialized reports are stable") {
  const Json a = to_json(verify_heart_window(TiltParams(Rat(1, 32), Rat(-5, 4))));
  const Json b = to_json(verify_heart_window(TiltParams(Rat(1, 32), Rat(-5, 4))));
  CHECK(a.dump(2) == b.dump(2));
  CHECK(a["passed"] == true);
}

TEST_CASE("reproduction suite") {
  const auto all = verify_paper();
  CHECK(all.size() >= 25);
  for (const auto& it : all) {
    INFO(it.id << ": " << it.details);
    CHECK(it.status == ItemStatus::pass);
  }
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].id < all[i].id);
  const auto gram = verify_paper("gram");
  REQUIRE(gram.size() == 1);
  CHECK(gram[0].id == "sigma.matrix.determinant");
  CHECK(verify_paper("nonexistent-tag").empty());
}
