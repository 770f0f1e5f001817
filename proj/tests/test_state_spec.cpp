#include <doctest.h>

#include <cmath>
#include <numbers>

#include "entbound/error.hpp"
#include "entbound/state_spec.hpp"

using namespace entbound;

namespace {

ErrorCode code_of(std::string_view spec) {
  try {
    parse_state_spec(spec);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for " << spec);
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("expressions") {
  CHECK(parse_real_expression("0.5") == 0.5);
  CHECK(parse_real_expression(" sqrt(6)/6 ") == std::sqrt(6.0) / 6.0);
  CHECK(parse_real_expression("pi/4") == std::numbers::pi / 4);
  CHECK(parse_real_expression("-(1+2)*3") == -9.0);
  CHECK(parse_real_expression("1e-3") == 0.001);
  CHECK(parse_real_expression("2*-1") == -2.0);
  CHECK_THROWS_AS(parse_real_expression(""), Error);
  CHECK_THROWS_AS(parse_real_expression("1+"), Error);
  CHECK_THROWS_AS(parse_real_expression("(1"), Error);
  CHECK_THROWS_AS(parse_real_expression("abc"), Error);
  CHECK_THROWS_AS(parse_real_expression("1 2"), Error);
}

TEST_CASE("state specs") {
  const PureState s = parse_state_spec("schmidt3: 0.5, sqrt(6)/6, sqrt(6)/6, 0.5, sqrt(6)/6");
  CHECK(s.dims() == Dims{2, 2, 2});
  const PureState s_phi = parse_state_spec("schmidt3:0.5,0.40824829,0.40824829,0.5,0.40824829,pi/3");
  CHECK(std::arg(s_phi.amplitudes()[4]) == doctest::Approx(std::numbers::pi / 3));

  const PureState w = parse_state_spec("wclass:0.5,0.5,0.70710678");
  CHECK(w.amplitudes()[4].real() == doctest::Approx(0.5).epsilon(1e-8));

  const PureState h = parse_state_spec("haar:2x2x2:7");
  const PureState h2 = parse_state_spec(" haar : 2 x 2 x 2 : 7 ");
  CHECK(h.dims() == Dims{2, 2, 2});
  CHECK(std::equal(h.amplitudes().begin(), h.amplitudes().end(), h2.amplitudes().begin()));
  CHECK(parse_state_spec("haar:3x4:1").dimension() == 12);
}

TEST_CASE("malformed specs are parse errors") {
  CHECK(code_of("schmidt3:0.5,0.5") == ErrorCode::Parse);
  CHECK(code_of("schmidt3:1,0,0,0,0,0,0") == ErrorCode::Parse);
  CHECK(code_of("wclass:1,0") == ErrorCode::Parse);
  CHECK(code_of("ghz:1") == ErrorCode::Parse);
  CHECK(code_of("") == ErrorCode::Parse);
  CHECK(code_of("haar:2x2") == ErrorCode::Parse);
  CHECK(code_of("haar:2xx2:1") == ErrorCode::Parse);
  CHECK(code_of("haar:2x2:-1") == ErrorCode::Parse);
  CHECK(code_of("haar:2x2:seed") == ErrorCode::Parse);
  CHECK(code_of("wclass:a,b,c") == ErrorCode::Parse);
  CHECK(code_of("haar:0x2:1") == ErrorCode::Parse);
}

TEST_CASE("well-formed but invalid specs are domain errors") {
  CHECK(code_of("wclass:1,1,1") == ErrorCode::Domain);
  CHECK(code_of("schmidt3:-1,0,0,0,0") == ErrorCode::Domain);
  CHECK(code_of("haar:100x100:1") == ErrorCode::Domain);
}
