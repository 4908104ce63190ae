#include <doctest.h>

#include "seifert/notation.hpp"
#include "support/generators.hpp"

using namespace seifert;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidData;
}

}  // namespace

TEST_CASE("parse fibrations") {
  const std::vector<std::int64_t> a{2, 3, 7};
  CHECK(notation::parse_fibration("Sigma(2,3,7)") == brieskorn_fibration(a));
  const auto y = notation::parse_fibration("M(0;-1;(2,1),(5,2),(11,1))");
  CHECK(y.bundle() == BundleData(OrbifoldBase(0, {2, 5, 11}), Integer(-1), {1, 2, 1}));
  const auto s = notation::parse_fibration("M(1;3;)");
  CHECK(s.base().genus() == 1);
  CHECK(s.base().marked_points() == 0);
  CHECK(s.bundle().background() == 3);
  CHECK(notation::parse_fibration(" M( 0 ; -1 ; ( 2 , 1 ) , (3,1),(7,1) ) ") == brieskorn_fibration(a));
  // Out-of-range invariants are normalized with carry.
  CHECK(notation::parse_fibration("M(0;0;(2,-1),(3,1),(7,1))") == brieskorn_fibration(a));
}

TEST_CASE("parse bases and bundles") {
  const auto b = notation::parse_base("O(0;2,3,7)");
  CHECK(b == OrbifoldBase(0, {2, 3, 7}));
  CHECK(notation::parse_base("O(2;)") == OrbifoldBase(2, {}));
  CHECK(notation::parse_bundle("(0;0,0,1)", b) == BundleData(b, Integer(0), {0, 0, 1}));
  CHECK(notation::parse_bundle("(0;2,0,0)", b) == BundleData(b, Integer(1), {0, 0, 0}));
  CHECK(notation::parse_bundle("(1;)", OrbifoldBase(0, {})) == BundleData(OrbifoldBase(0, {}), Integer(1), {}));
  CHECK(std::holds_alternative<OrbifoldBase>(notation::parse_manifold("O(0;3,3,3)")));
  CHECK(std::holds_alternative<SeifertFibration>(notation::parse_manifold("Sigma(2,3,5)")));
}

TEST_CASE("parse errors carry a column") {
  for (const char* bad : {"M(0;-1;(2,1)", "Sigma()", "N(0;1;)", "M(0;1;(2,1))x", "M(x;1;)", "Sigma(2,3,7"}) {
    try {
      notation::parse_fibration(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      CHECK(std::string(e.what()).find("column ") != std::string::npos);
    }
  }
  CHECK(code_of([] { notation::parse_fibration("M(0;-1;(1,0))"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { notation::parse_fibration("M(0;-1;(4,2))"); }) == ErrorCode::NonCoprime);
  CHECK(code_of([] { notation::parse_bundle("(0;1)", OrbifoldBase(0, {2, 3})); }) == ErrorCode::ParseError);
}

TEST_CASE("format is canonical and round-trips") {
  const auto y = notation::parse_fibration("Sigma(2,3,7)");
  CHECK(notation::format(y) == "M(0;-1;(2,1),(3,1),(7,1))");
  CHECK(notation::format(y.base()) == "O(0;2,3,7)");
  CHECK(notation::format(BundleData(y.base(), Integer(0), {0, 0, 1})) == "(0;0,0,1)");
  CHECK(notation::format(notation::parse_fibration("M(1;3;)")) == "M(1;3;)");

  auto rng = testing::make_rng(40);
  for (int t = 0; t < 300; ++t) {
    const auto yy = testing::random_fibration(rng);
    const auto text = notation::format(yy);
    CHECK(notation::parse_fibration(text) == yy);
    CHECK(notation::format(notation::parse_fibration(text)) == text);
    const auto e = testing::random_bundle(rng, yy.base());
    CHECK(notation::parse_bundle(notation::format(e), yy.base()) == e);
    CHECK(notation::parse_base(notation::format(yy.base())) == yy.base());
  }
}

TEST_CASE("family patterns") {
  const auto f = notation::parse_family("2,3,6k-1");
  CHECK(f.str() == "2,3,6k-1");
  CHECK(f.instantiate(2) == std::vector<std::int64_t>{2, 3, 11});
  CHECK_FALSE(notation::parse_family("2,5,10k+5").instantiate(1).has_value());
  CHECK_FALSE(f.instantiate(0).has_value());
  CHECK(notation::parse_family("3, k+1 ,5").instantiate(1) == std::vector<std::int64_t>{3, 2, 5});
  CHECK(code_of([] { notation::parse_family("2,3,5"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { notation::parse_family("k,k"); }) == ErrorCode::ParseError);
  CHECK(notation::parse_range("1..8") == std::pair<std::int64_t, std::int64_t>{1, 8});
  CHECK(code_of([] { notation::parse_range("8..1"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { notation::parse_range("1-8"); }) == ErrorCode::ParseError);
}
