#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "rampw/linear_code.hpp"
#include "rampw/errors.hpp"

using namespace rampw;

namespace {

LinearCode rs_code(unsigned q, size_t n, size_t k, const std::vector<uint8_t>& points) {
    auto f = FieldSpec::get(q);
    Matrix g(f, k, n);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) {
            uint8_t v = 1;
            for (size_t t = 0; t < i; ++t) v = f->mul(v, points[j]);
            g.at(i, j) = v;
        }
    return LinearCode::from_spanning_rows(g);
}

}  // namespace

TEST_CASE("rref canonical forms") {
    auto f2 = FieldSpec::get(2);
    auto r = rref(Matrix::from_rows(f2, {{1, 1}, {0, 1}}));
    CHECK(r.rank == 2);
    CHECK(r.matrix == Matrix::identity(f2, 2));

    auto z = rref(Matrix(f2, 2, 3));
    CHECK(z.rank == 0);

    // row 2 = 2 * row 1 over GF(7)
    auto f7 = FieldSpec::get(7);
    auto d = rref(Matrix::from_rows(f7, {{1, 2, 3}, {2, 4, 6}}));
    CHECK(d.rank == 1);
    CHECK(d.pivots == std::vector<size_t>{0});

    // idempotent and canonical under row operations
    auto a = Matrix::from_rows(f7, {{1, 2, 3}, {4, 5, 6}});
    auto b = Matrix::from_rows(f7, {{5, 0, 2}, {4, 5, 6}});  // row1 + 2*row2 replaces row1... any row-equivalent set
    auto ra = rref(a);
    CHECK(rref(ra.matrix).matrix == ra.matrix);
}

TEST_CASE("rref is canonical across row-equivalent spanning sets") {
    auto f5 = FieldSpec::get(5);
    auto a = Matrix::from_rows(f5, {{1, 2, 3, 4}, {0, 1, 4, 2}});
    // mix rows: r1' = 2 r1 + r2, r2' = 3 r2
    auto mixed = Matrix::from_rows(f5, {{2, 0, 0, 0}, {0, 3, 0, 0}});
    auto combos = Matrix::from_rows(f5, {{2, 1}, {0, 3}}) * a;
    CHECK(rref(a).matrix == rref(combos).matrix);
    (void)mixed;
}

TEST_CASE("dual codes") {
    auto f2 = FieldSpec::get(2);
    LinearCode rep = LinearCode::from_spanning_rows(Matrix::from_rows(f2, {{1, 1, 1}}));
    LinearCode even = dual(rep);
    CHECK(even.k() == 2);
    for (size_t i = 0; i < even.k(); ++i) {
        int weight = 0;
        for (size_t j = 0; j < 3; ++j) weight += even.generator().at(i, j);
        CHECK(weight % 2 == 0);
    }
    CHECK(dual(even) == rep);

    LinearCode full = LinearCode::full(f2, 3);
    CHECK(dual(full).k() == 0);
    CHECK(dual(dual(full)) == full);

    // generalized RS duality via the orthogonality postcondition
    LinearCode rs = rs_code(5, 4, 2, {1, 2, 3, 4});
    LinearCode rs_dual = dual(rs);
    CHECK(rs_dual.k() == 2);
    Matrix product = rs.generator() * rs_dual.generator().transpose();
    CHECK(product.is_zero());
    CHECK(dual(rs_dual) == rs);
}

TEST_CASE("coordinate subspace intersection") {
    auto f2 = FieldSpec::get(2);
    LinearCode full = LinearCode::full(f2, 3);
    CHECK(intersect_coordinate_subspace(full, {0, 1}).k() == 2);

    LinearCode rep = LinearCode::from_spanning_rows(Matrix::from_rows(f2, {{1, 1, 1}}));
    CHECK(intersect_coordinate_subspace(rep, {0, 1}).k() == 0);

    // MDS: no nonzero word of weight <= 2 in a [4,2] RS code
    LinearCode rs = rs_code(5, 4, 2, {1, 2, 3, 4});
    CHECK(intersect_coordinate_subspace(rs, {0, 1}).k() == 0);

    // rank-nullity floor: dim(C ∩ V_I) >= k - (n - |I|)
    CHECK(intersect_coordinate_subspace(rs, {0, 1, 2}).k() >= 2 - (4 - 3));
}

TEST_CASE("make_pair validates containment and strictness") {
    auto f5 = FieldSpec::get(5);
    LinearCode rs2 = rs_code(5, 4, 2, {1, 2, 3, 4});
    LinearCode rs1 = rs_code(5, 4, 1, {1, 2, 3, 4});
    auto pair = make_pair(rs2, rs1);
    CHECK(pair.ell() == 1);

    CHECK_THROWS_WITH_AS(make_pair(rs2, rs2), doctest::Contains("NotStrict"), std::invalid_argument);

    auto f2 = FieldSpec::get(2);
    LinearCode rep = LinearCode::from_spanning_rows(Matrix::from_rows(f2, {{1, 1, 1}}));
    LinearCode parity = dual(rep);
    CHECK_THROWS_WITH_AS(make_pair(rep, parity), doctest::Contains("NotNested"),
                         std::invalid_argument);
    (void)f5;
}

TEST_CASE("code file round trip") {
    LinearCode rs = rs_code(5, 4, 2, {1, 2, 3, 4});
    std::stringstream ss;
    write_code(ss, rs);
    LinearCode back = read_code(ss);
    CHECK(back == rs);

    std::stringstream bad("4 3 2\n0 1 2\n1 1 9\n");
    CHECK_THROWS_AS(read_code(bad), IoError);
    std::stringstream nonfield("6 3 1\n1 1 1\n");
    CHECK_THROWS_AS(read_code(nonfield), IoError);
}
