#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "rsl/io.hpp"

using namespace rsl;
using nlohmann::json;

TEST_CASE("instances round trip") {
  const RandomSet x(FiniteProbSpace({0.5, 0.5}),
                    {Body({Point{0.0, 1.0}}, {Ball{Point{1.0, 0.0}, 2.0}}), Body::segment(Point{0, 0}, Point{1, 1})});
  const json j = io::instance_to_json(x);
  CHECK(j["schema"] == "rsl/1");
  const auto back = std::get<RandomSet>(io::instance_from_json(j));
  CHECK(back.space() == x.space());
  CHECK(back[0].vertices() == x[0].vertices());
  CHECK(back[0].balls().size() == 1);
  CHECK(back[0].balls()[0].radius == 2.0);

  const RandomCloud c(uniform_space(2), {PointCloud({Point{0.0}, Point{1.0}}), PointCloud({Point{3.0}})});
  const auto cb = std::get<RandomCloud>(io::instance_from_json(io::instance_to_json(c)));
  CHECK(cb[0].points() == c[0].points());
  CHECK(cb[1].points() == c[1].points());
}

TEST_CASE("schema violations are InvalidArgument") {
  auto code = [](const char* text) {
    return test::thrown_code([&] { (void)io::instance_from_json(json::parse(text)); });
  };
  CHECK(code(R"({"values":[{"points":[[0]]}]})") == ErrorCode::InvalidArgument);
  CHECK(code(R"({"weights":[1]})") == ErrorCode::InvalidArgument);
  CHECK(code(R"({"weights":[1],"values":[]})") == ErrorCode::InvalidArgument);
  CHECK(code(R"({"weights":[1],"values":[{"points":[["a"]]}]})") == ErrorCode::InvalidArgument);
  CHECK(code(R"({"weights":[1],"values":[{"balls":[]}]})") == ErrorCode::InvalidArgument);
  CHECK(code(R"({"schema":"rsl/0","weights":[1],"values":[{"points":[[0]]}]})") == ErrorCode::InvalidArgument);
  CHECK(code(R"([1,2])") == ErrorCode::InvalidArgument);
  // library validation passes through
  CHECK(code(R"({"weights":[0.5,0.6],"values":[{"points":[[0]]},{"points":[[0]]}]})") == ErrorCode::NotAProbability);
  CHECK(code(R"({"weights":[1],"values":[{"vertices":[[0]],"balls":[{"center":[0],"radius":-1}]}]})") ==
        ErrorCode::InvalidArgument);
  CHECK(code(R"({"weights":[0.5,0.5],"values":[{"points":[[0]]},{"points":[[0,1]]}]})") ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("kernels and reports") {
  const auto s = uniform_space(2);
  const json jk = json::parse(R"({"rows":[[{"w":1,"x":[0,1]}],[{"w":0.5,"x":[1,1]},{"w":0.5,"x":[3,1]}]]})");
  const Kernel k = io::kernel_from_json(jk, s);
  CHECK(k[1].size() == 2);
  CHECK_FALSE(k.dirac_flag());
  CHECK(io::to_json(k) == jk);
  CHECK(test::thrown_code([&] { (void)io::kernel_from_json(jk, uniform_space(3)); }) == ErrorCode::SpaceMismatch);

  IdentityReport r;
  r.checks.push_back({"chd(chd A) = chd A", true, 0.0});
  const json jr = io::to_json(r);
  REQUIRE(jr.is_array());
  CHECK(jr[0]["identity"] == "chd(chd A) = chd A");
  CHECK(jr[0]["pass"] == true);
  CHECK(jr[0]["max_dev"] == 0.0);
  CHECK(io::to_json(s) == json::parse(R"({"weights":[0.5,0.5]})"));
}
