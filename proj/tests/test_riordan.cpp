#include <catch2/catch_amalgamated.hpp>

#include "hexpath/riordan.hpp"

using namespace hexpath;

TEST_CASE("printed rows") {
  RiordanMatrix se2 = RiordanMatrix::from_counts(CountArray::Se2, 7);
  long long row3[] = {58, 38, 10, 1};
  for (int k = 0; k < 4; ++k) CHECK(se2.at(3, k) == row3[k]);

  RiordanMatrix so2 = RiordanMatrix::from_counts(CountArray::So2, 7);
  long long row6b[] = {116, 138, 108, 34, 20, 2, 1};
  for (int k = 0; k < 7; ++k) CHECK(so2.at(6, k) == row6b[k]);

  RiordanMatrix se3 = RiordanMatrix::from_counts(CountArray::Se3, 7);
  long long row6c[] = {3, 6, 6, 7, 4, 0, 1};
  for (int k = 0; k < 7; ++k) CHECK(se3.at(6, k) == row6c[k]);

  RiordanMatrix so3 = RiordanMatrix::from_counts(CountArray::So3, 7);
  long long row6d[] = {15, 22, 18, 12, 6, 1, 1};
  for (int k = 0; k < 7; ++k) CHECK(so3.at(6, k) == row6d[k]);
}

TEST_CASE("pair equals counts") {
  for (CountArray which :
       {CountArray::Se2, CountArray::So2, CountArray::Se3, CountArray::So3})
    CHECK(RiordanMatrix::from_counts(which, 9) == pair_matrix(which, 9));
}

TEST_CASE("a and z sequences") {
  RiordanMatrix se2 = pair_matrix(CountArray::Se2, 10);
  auto a = a_sequence(se2, 5);
  auto z = z_sequence(se2, 5);
  CHECK(a == std::vector<Rat>{1, 4, 4, 4, 4});
  CHECK(z == std::vector<Rat>{2, 6, 2, 6, 2});
}

TEST_CASE("inverse identity") {
  RiordanMatrix se2 = pair_matrix(CountArray::Se2, 9);
  RiordanMatrix prod = multiply(se2, se2.inverse());
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) CHECK(prod.at(i, j) == (i == j ? 1 : 0));
  // inverting twice returns the original
  RiordanMatrix back = se2.inverse().inverse();
  CHECK(back == se2);
}

TEST_CASE("invalid pair rejected") {
  IntSeries g = IntSeries::monomial(1, 8);  // g(0) = 0
  IntSeries f = IntSeries::monomial(1, 8);
  CHECK_THROWS_AS(RiordanMatrix::from_pair(g, f, 6), InvalidPair);
  CHECK_THROWS_AS(RiordanMatrix::from_counts(CountArray::Se2, 20), BoundExceeded);
}
