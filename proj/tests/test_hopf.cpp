#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hopfgal/rep_structures.hpp"
#include "hopfgal/zoo.hpp"
#include "oracle.hpp"

using namespace hopfgal;

namespace {

std::vector<HopfData> zoo_entries() {
    return {zoo::cyclic_group_algebra(1), zoo::cyclic_group_algebra(2),
            zoo::cyclic_group_algebra(4), zoo::symmetric_group_algebra_s3(),
            zoo::sweedler_h4()};
}

Mat random_map(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    Mat m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) {
            Rational v = rat(num(rng), den(rng));
            if (v != 0) m.col[j][i] = v;
        }
    return m;
}

}  // namespace

TEST_CASE("every zoo entry passes the full Hopf axiom sweep") {
    for (const auto& h : zoo_entries()) {
        auto rep = validate_hopf(h);
        for (const auto& row : rep.rows) {
            INFO(row.name << " " << row.witness);
            CHECK(row.pass);
        }
    }
}

TEST_CASE("kC2 has identity antipode") {
    auto h = zoo::cyclic_group_algebra(2);
    CHECK(h.antipode == Mat::identity(2));
    CHECK(antipode_inverse(h) == Mat::identity(2));
}

TEST_CASE("kC4 antipode sends g to g^3") {
    auto h = zoo::cyclic_group_algebra(4);
    CHECK(h.antipode.at(3, 1) == 1);
    CHECK(h.antipode.at(2, 2) == 1);
}

TEST_CASE("Sweedler H4 with flipped antipode sign fails with witness x") {
    auto h = zoo::sweedler_h4();
    h.antipode.set(3, 2, rat(1));  // S(x) = +gx instead of -gx
    auto rep = validate_hopf(h);
    CHECK(!rep.ok());
    const CheckRow* row = rep.find("antipode.left");
    REQUIRE(row != nullptr);
    CHECK(!row->pass);
    CHECK(row->witness.find("column 2") != std::string::npos);  // basis index of x
}

TEST_CASE("iterated coproduct") {
    auto c2 = zoo::cyclic_group_algebra(2);
    CHECK(iterated_coproduct(c2.coalgebra, 0) == Mat::identity(2));

    // group-like: n=2 sends g to g⊗g⊗g
    Mat d2 = iterated_coproduct(c2.coalgebra, 2);
    Mat expect(8, 1);
    expect.col[0][7] = 1;  // (1,1,1) flat = 7
    Mat col(8, 1);
    col.col[0] = d2.col[1];
    CHECK(col == expect);

    // Sweedler: Δ(x) = x⊗1 + g⊗x
    auto h4 = zoo::sweedler_h4();
    Mat d1 = iterated_coproduct(h4.coalgebra, 1);
    CHECK(d1.at(2 * 4 + 0, 2) == 1);
    CHECK(d1.at(1 * 4 + 2, 2) == 1);
    CHECK(d1.col[2].size() == 2);
}

TEST_CASE("iterated coproduct collapses under a counit on any slot") {
    for (const auto& h : {zoo::cyclic_group_algebra(2), zoo::sweedler_h4()}) {
        for (std::size_t n = 1; n <= 5; ++n) {
            Mat dn = iterated_coproduct(h.coalgebra, n);
            Mat dprev = iterated_coproduct(h.coalgebra, n - 1);
            for (std::size_t slot = 0; slot <= n; ++slot) {
                std::size_t before = 1, after = 1;
                for (std::size_t k = 0; k < slot; ++k) before *= h.dim();
                for (std::size_t k = slot + 1; k <= n; ++k) after *= h.dim();
                Mat contract = kron(Mat::identity(before),
                                    kron(h.counit(), Mat::identity(after)));
                CHECK(contract * dn == dprev);
            }
        }
    }
}

TEST_CASE("iterated coproduct is expansion-slot independent") {
    auto h4 = zoo::sweedler_h4();
    const Mat d = h4.comult();
    const Mat id = Mat::identity(4);
    // rightmost expansion equals the leftmost-expansion convention
    Mat right2 = kron(id, d) * d;
    CHECK(right2 == iterated_coproduct(h4.coalgebra, 2));
}

TEST_CASE("iterated product on kC2") {
    auto c2 = zoo::cyclic_group_algebra(2);
    CHECK(iterated_product(c2.algebra, 1) == Mat::identity(2));
    Mat p2 = iterated_product(c2.algebra, 2);
    CHECK(p2.at(0, 3) == 1);  // g*g = 1
    Mat p3 = iterated_product(c2.algebra, 3);
    CHECK(p3.at(1, 7) == 1);  // g*g*g = g
}

TEST_CASE("convolution algebra") {
    auto c2 = zoo::cyclic_group_algebra(2);
    auto h4 = zoo::sweedler_h4();

    SECTION("unit is idempotent") {
        for (const auto& h : {c2, h4}) {
            Mat ue = convolution_unit(h.coalgebra, h.algebra);
            CHECK(convolution(ue, ue, h.coalgebra, h.algebra) == ue);
        }
    }
    SECTION("id * S = u∘ε on kC2") {
        Mat lhs = convolution(Mat::identity(2), c2.antipode, c2.coalgebra, c2.algebra);
        CHECK(lhs == convolution_unit(c2.coalgebra, c2.algebra));
    }
    SECTION("S * id = u∘ε on Sweedler H4") {
        Mat lhs = convolution(h4.antipode, Mat::identity(4), h4.coalgebra, h4.algebra);
        CHECK(lhs == convolution_unit(h4.coalgebra, h4.algebra));
    }
    SECTION("associativity and unit on random maps") {
        std::mt19937_64 rng(31337);
        for (const auto& h : {c2, h4}) {
            Mat ue = convolution_unit(h.coalgebra, h.algebra);
            for (int trial = 0; trial < 5; ++trial) {
                Mat f = random_map(rng, h.dim(), h.dim());
                Mat g = random_map(rng, h.dim(), h.dim());
                Mat k = random_map(rng, h.dim(), h.dim());
                auto conv = [&](const Mat& x, const Mat& y) {
                    return convolution(x, y, h.coalgebra, h.algebra);
                };
                CHECK(conv(conv(f, g), k) == conv(f, conv(g, k)));
                CHECK(conv(f, ue) == f);
                CHECK(conv(ue, f) == f);
            }
        }
    }
}

TEST_CASE("antipode inverse on Sweedler H4: S^2 != id, S^4 = id") {
    auto h4 = zoo::sweedler_h4();
    Mat s = h4.antipode;
    Mat s2 = s * s;
    CHECK(s2 != Mat::identity(4));
    CHECK(s2 * s2 == Mat::identity(4));
    Mat sinv = antipode_inverse(h4);
    CHECK(sinv * s == Mat::identity(4));
    // S^{-1}(x) = gx
    CHECK(sinv.at(3, 2) == 1);
    // S^2 restricted to span{x, gx} is -id
    CHECK(s2.at(2, 2) == rat(-1));
    CHECK(s2.at(3, 3) == rat(-1));
}

TEST_CASE("antipode inverse of the trivial Hopf algebra") {
    CHECK(antipode_inverse(zoo::cyclic_group_algebra(1)) == Mat::identity(1));
}

TEST_CASE("group algebra from table") {
    SECTION("C2 table equals cyclic_group_algebra(2)") {
        zoo::MultTable t = {{0, 1}, {1, 0}};
        auto h = zoo::group_algebra_from_table(t);
        auto c2 = zoo::cyclic_group_algebra(2);
        CHECK(h.algebra.mult == c2.algebra.mult);
        CHECK(h.coalgebra.comult == c2.coalgebra.comult);
        CHECK(h.antipode == c2.antipode);
    }
    SECTION("S3 is a 6-dimensional noncommutative Hopf algebra") {
        auto h = zoo::symmetric_group_algebra_s3();
        CHECK(h.dim() == 6);
        CHECK(validate_hopf(h).ok());
        Mat twisted = h.mult() * tw(6, 6);
        CHECK(twisted != h.mult());
    }
    SECTION("broken table is rejected") {
        zoo::MultTable bad = {{0, 1}, {1, 1}};  // not associative / no inverse structure
        CHECK_THROWS_AS(zoo::group_algebra_from_table(bad), NotAGroup);
    }
}

TEST_CASE("cyclic group algebras are commutative and cocommutative up to n=6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto h = zoo::cyclic_group_algebra(n);
        CHECK(h.mult() * tw(n, n) == h.mult());
        CHECK(tw(n, n) * h.comult() == h.comult());
    }
}

TEST_CASE("antipode is an algebra and coalgebra antihomomorphism on the zoo") {
    for (const auto& h : zoo_entries()) {
        const std::size_t n = h.dim();
        CHECK(h.antipode * h.mult() == h.mult() * kron(h.antipode, h.antipode) * tw(n, n));
        CHECK(h.comult() * h.antipode == tw(n, n) * kron(h.antipode, h.antipode) * h.comult());
        CHECK(h.antipode * h.unit() == h.unit());
        CHECK(h.counit() * h.antipode == h.counit());
    }
}
