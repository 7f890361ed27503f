#include "doctest.h"
#include "liaison/fp.hpp"
#include "liaison/rng.hpp"

using namespace liaison;

TEST_CASE("field arithmetic over F_7") {
  Fp fp(7);
  CHECK(fp.mul(3, 5) == 1);
  CHECK(fp.inv(3) == 5);
  CHECK(fp.add(6, 6) == 5);
  CHECK(fp.sub(2, 5) == 4);
  CHECK(fp.div(1, 3) == 5);
}

TEST_CASE("Fermat little theorem at the default prime") {
  Fp fp(10007);
  CHECK(fp.pow(2, 10006) == 1);
  CHECK(fp.pow(12345 % 10007, 10006) == 1);
}

TEST_CASE("inverse times element is one, random sample") {
  Fp fp(31991);
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    Fe a = rng.fe_nonzero(fp);
    CHECK(fp.mul(fp.inv(a), a) == 1);
    CHECK(fp.pow(a, fp.modulus() - 1) == 1);
  }
}

TEST_CASE("division by zero is rejected") {
  Fp fp(7);
  CHECK_THROWS_AS(fp.inv(0), std::domain_error);
  CHECK_THROWS_AS(fp.div(3, 0), std::domain_error);
}

TEST_CASE("composite moduli are rejected") {
  CHECK_THROWS_AS(Fp(4), std::invalid_argument);
  CHECK_THROWS_AS(Fp(1), std::invalid_argument);
  CHECK_THROWS_AS(Fp(10006), std::invalid_argument);
  CHECK(is_prime(10007));
  CHECK(is_prime(31991));
  CHECK_FALSE(is_prime(31989));
}

TEST_CASE("barrett reduction agrees with plain remainder") {
  Fp fp(10007);
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    std::uint64_t x = rng.next_u64() >> 1;
    CHECK(fp.reduce(x) == x % 10007);
  }
}

TEST_CASE("rng streams are stable and disjoint") {
  Rng a(5);
  Rng b(5);
  CHECK(a.next_u64() == b.next_u64());
  Rng c1 = Rng(5).child("stage-one");
  Rng c2 = Rng(5).child("stage-two");
  CHECK(c1.next_u64() != c2.next_u64());
  // identical labels reproduce the stream
  CHECK(Rng(5).child("x").next_u64() == Rng(5).child("x").next_u64());
}
