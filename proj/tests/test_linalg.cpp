#include "doctest.h"
#include "fockalg/linalg.hpp"
#include "support.hpp"

using namespace fockalg;
using fockalg::testing::rat;

namespace {

ScalarMatrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
  ScalarMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

}  // namespace

TEST_CASE("Bareiss rank over Q and Q[i]") {
  CHECK(bareiss_rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(bareiss_rank(from_rows({{rat(1, 2), rat(1, 3)}, {rat(1, 3), rat(1, 4)}})) == 2);
  CHECK(bareiss_rank(from_rows({{0, 0}, {0, 0}})) == 0);
  Scalar i = Scalar::complex(0, 1);
  CHECK(bareiss_rank(from_rows({{1, i}, {-i, 1}})) == 1);
  CHECK(bareiss_rank(from_rows({{1, i}, {i, 1}})) == 2);
}

TEST_CASE("row reduction, kernel and particular solutions") {
  ScalarMatrix a = from_rows({{1, 1, 2}, {1, 1, 2}, {0, 1, 1}});
  RowEchelon e = row_reduce(a);
  CHECK(e.rank() == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.free == std::vector<std::size_t>{2});
  auto ker = kernel_basis(e);
  REQUIRE(ker.size() == 1);
  ScalarVector img = multiply(a, ker[0]);
  for (const auto& s : img) CHECK(s == rat(0));

  ScalarMatrix b = from_rows({{3}, {3}, {1}});
  SolveResult ok = solve_particular(a, b);
  REQUIRE(ok.solution);
  CHECK(ok.free_dimension == 1);
  CHECK(multiply(a, *ok.solution) == b);

  SolveResult bad = solve_particular(a, from_rows({{3}, {4}, {1}}));
  CHECK_FALSE(bad.solution);
  REQUIRE(bad.inconsistent_row);
  CHECK(*bad.inconsistent_row == 1);
}

TEST_CASE("inverse and minors") {
  ScalarMatrix a = from_rows({{2, 1}, {1, 1}});
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(multiply(a, *inv) == ScalarMatrix::identity(2, rat(1), rat(0)));
  CHECK_FALSE(inverse(from_rows({{1, 2}, {2, 4}})));
  auto minors = leading_principal_minors(from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}));
  REQUIRE(minors.size() == 3);
  CHECK(minors[0] == rat(2));
  CHECK(minors[1] == rat(3));
  CHECK(minors[2] == rat(4));
}

TEST_CASE("float routes") {
  ScalarMatrix a = from_rows({{1, rat(1, 2)}, {rat(1, 2), 1}});
  auto ev = hermitian_eigenvalues(a);
  CHECK(ev[0] == doctest::Approx(0.5));
  CHECK(ev[1] == doctest::Approx(1.5));
  CHECK(float_rank(from_rows({{1, 1}, {1, 1}})) == 1);
  CHECK(condition_number(a) == doctest::Approx(3.0));
  CHECK(is_hermitian(a));
  CHECK_FALSE(is_hermitian(from_rows({{1, 2}, {3, 1}})));
}
