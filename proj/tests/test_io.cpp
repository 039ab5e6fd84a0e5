#include <doctest.h>

#include <sstream>

#include "sbnet/io.hpp"

using namespace sbnet;

namespace {

template <typename T, typename W, typename R>
void roundtrip(const T& value, W writer, R reader) {
  std::ostringstream o;
  writer(o, value);
  std::istringstream i(o.str());
  const T back = reader(i);
  CHECK(back == value);
  std::ostringstream o2;
  writer(o2, back);
  CHECK(o.str() == o2.str());  // canonical writers are byte-stable
}

}  // namespace

TEST_CASE("sign file round trip") {
  for (unsigned seed = 0; seed < 5; ++seed)
    roundtrip(SignAssignment::random(4, seed), write_signs, read_signs);
}

TEST_CASE("coefficient file round trip") {
  for (unsigned seed = 0; seed < 5; ++seed)
    roundtrip(CoefficientAssignment::random(4, seed), write_coeffs, read_coeffs);
}

TEST_CASE("net file round trip and reordering tolerance") {
  roundtrip(van_der_corput(5), write_net, read_net);
  std::istringstream in("sbnet-net v1 b=2 m=1 d=2\n1 1\n0 0\n");
  const auto P = read_net(in);
  CHECK(P == van_der_corput(1));  // canonicalized on read
}

TEST_CASE("perm file round trip") {
  for (unsigned seed = 0; seed < 5; ++seed)
    roundtrip(PermAssignment::random(3, 3, seed), write_perms, read_perms);
}

TEST_CASE("extended 1-D file round trip") {
  for (unsigned seed = 0; seed < 5; ++seed)
    roundtrip(IntervalSigns::random(6, seed), write_ext1d, read_ext1d);
}

TEST_CASE("parser rejects malformed input") {
  auto parse_signs = [](const std::string& text) {
    std::istringstream in(text);
    return read_signs(in);
  };
  CHECK_THROWS_AS(parse_signs(""), InputError);
  CHECK_THROWS_AS(parse_signs("sbnet-net v1 b=2 m=1 d=2\n"), InputError);
  CHECK_THROWS_AS(parse_signs("sbnet-signs v2 n=0\n0 0 0 1\n"), InputError);
  CHECK_THROWS_AS(parse_signs("sbnet-signs v1 n=0\n"), InputError);           // omission
  CHECK_THROWS_AS(parse_signs("sbnet-signs v1 n=0\n0 0 0 1\n0 0 0 1\n"), InputError);  // dup
  CHECK_THROWS_AS(parse_signs("sbnet-signs v1 n=0\n0 0 0 2\n"), InputError);  // bad sign
  CHECK_THROWS_AS(parse_signs("sbnet-signs v1 n=0\n0 1 0 1\n"), InputError);  // range
  CHECK_THROWS_AS(parse_signs("sbnet-signs v1 n=0\n0 0 0 1 9\n"), InputError);  // trailing

  auto parse_net = [](const std::string& text) {
    std::istringstream in(text);
    return read_net(in);
  };
  CHECK_THROWS_AS(parse_net("sbnet-net v1 b=2 m=1 d=3\n"), InputError);
  CHECK_THROWS_AS(parse_net("sbnet-net v1 b=2 m=1 d=2\n0 0\n0 0\n"), InputError);
  CHECK_THROWS_AS(parse_net("sbnet-net v1 b=2 m=1 d=2\n0 0\n2 1\n"), InputError);
  CHECK_THROWS_AS(parse_net("sbnet-net v1 b=2 m=1 d=2\n0 0\n"), InputError);

  auto parse_perms = [](const std::string& text) {
    std::istringstream in(text);
    return read_perms(in);
  };
  CHECK_THROWS_AS(parse_perms("sbnet-perms v1 b=3 m=1\n0 0 0 0 0 2\n"), InputError);
  CHECK_THROWS_AS(parse_perms("sbnet-perms v1 b=3 m=1\n0 0 0 0 1\n"), InputError);

  std::istringstream missing("sbnet-coeffs v1\n");
  CHECK_THROWS_AS(read_coeffs(missing), InputError);
}

TEST_CASE("rational parsing in coefficient files") {
  std::istringstream in("sbnet-coeffs v1 n=0\n0 0 0 -22/7\n");
  const auto C = read_coeffs(in);
  CHECK(C.coeff(0, 0, 0) == Rational(-22, 7));
  std::istringstream bad("sbnet-coeffs v1 n=0\n0 0 0 1/0\n");
  CHECK_THROWS_AS(read_coeffs(bad), InputError);
}

TEST_CASE("missing file raises an input error") {
  CHECK_THROWS_AS(read_signs_file("/nonexistent/path.txt"), InputError);
}
