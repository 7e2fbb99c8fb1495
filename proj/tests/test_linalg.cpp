#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jdiag/linalg.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace jdiag;

namespace {

RatVec from_dense(const std::vector<int>& d) {
    RatVec v;
    for (int i = 0; i < (int)d.size(); ++i)
        if (d[i]) v.set(i, d[i]);
    return v;
}

// independent dense elimination, used as a rank oracle
int dense_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    int rows = (int)m.size(), cols = (int)m[0].size(), rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows && piv < 0; ++r)
            if (m[r][c] != 0) piv = r;
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rat f = m[r][c] / m[rank][c];
            for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("rational strings") {
    CHECK(rat_to_string(Rat(-3, 7)) == "-3/7");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK(rat_from_string("-3/7") == Rat(-3, 7));
    CHECK(rat_from_string("5") == Rat(5));
    CHECK(rat_from_string("4/6") == Rat(2, 3));
    CHECK(rat_factorial(0) == 1);
    CHECK(rat_factorial(5) == 120);
}

TEST_CASE("sparse vector arithmetic") {
    RatVec v = from_dense({1, 0, -2});
    CHECK(v.lead() == 0);
    CHECK(v.get(1) == 0);
    CHECK(v.get(2) == -2);
    v.axpy(Rat(1, 2), from_dense({0, 4, 4}));
    CHECK(v == from_dense({1, 2, 0}));
    v.set(0, 0);
    CHECK(v.lead() == 1);
    CHECK((unit_vec(3) - unit_vec(3)).zero());
    RatVec w = from_dense({0, 0, 6});
    w.normalize();
    CHECK(w.get(2) == 1);
    CHECK((Rat(2) * unit_vec(1)).get(1) == 2);
}

TEST_CASE("echelon insertion and canonical residuals") {
    QuotientSpace q;
    CHECK(q.add_relation(from_dense({1, 1, 0})));
    CHECK(q.add_relation(from_dense({0, 1, 1})));
    CHECK_FALSE(q.add_relation(from_dense({1, 0, -1})));
    CHECK(q.rank() == 2);
    CHECK(q.in_span(from_dense({2, 1, -1})));
    CHECK_FALSE(q.in_span(from_dense({0, 0, 1})));

    RatVec r = q.reduce(from_dense({1, 0, 0}));
    CHECK(r == from_dense({0, 0, 1})); // coset rep on the free column
    CHECK(q.reduce(r) == r);

    q.finalize();
    REQUIRE(q.rows().size() == 2);
    CHECK(q.rows().at(0) == from_dense({1, 0, -1}));
    CHECK(q.rows().at(1) == from_dense({0, 1, 1}));
}

TEST_CASE("serialization round trip") {
    QuotientSpace q;
    q.add_relation(from_dense({2, 1, 0}));
    q.add_relation(from_dense({0, 0, 3}));
    q.finalize();
    QuotientSpace back = QuotientSpace::from_json(q.to_json());
    CHECK(back.rank() == q.rank());
    CHECK(back.to_json() == q.to_json());
    CHECK(back.reduce(from_dense({4, 2, 3})).zero());
}

TEST_CASE("left kernel of a known family") {
    std::vector<RatVec> vecs{unit_vec(0), unit_vec(1), unit_vec(0) + unit_vec(1)};
    auto ker = left_kernel(vecs);
    REQUIRE(ker.size() == 1);
    RatVec expect;
    expect.set(0, 1);
    expect.set(1, 1);
    expect.set(2, -1);
    CHECK(ker[0] == expect);
}

TEST_CASE("randomized agreement with dense elimination") {
    std::mt19937 rng(20260816);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> dim_r(1, 8), dim_c(1, 12);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = dim_r(rng), cols = dim_c(rng);
        std::vector<std::vector<Rat>> dense(rows, std::vector<Rat>(cols));
        std::vector<RatVec> sparse(rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                int e = entry(rng);
                dense[r][c] = e;
                if (e) sparse[r].set(c, e);
            }
        int want = dense_rank(dense);

        QuotientSpace q;
        for (auto& v : sparse) q.add_relation(v);
        CHECK(q.rank() == want);

        // insertion order must not change rank or residuals
        auto shuffled = sparse;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        QuotientSpace q2;
        for (auto& v : shuffled) q2.add_relation(v);
        CHECK(q2.rank() == want);
        for (int probe = 0; probe < 4; ++probe) {
            RatVec p;
            for (int c = 0; c < cols; ++c) {
                int e = entry(rng);
                if (e) p.set(c, e);
            }
            CHECK(q.reduce(p) == q2.reduce(p));
        }

        // kernel combos really vanish and count matches rank-nullity
        auto ker = left_kernel(sparse);
        CHECK((int)ker.size() == rows - want);
        for (auto& combo : ker) {
            RatVec sum;
            for (auto& [i, c] : combo.entries) sum.axpy(c, sparse[i]);
            CHECK(sum.zero());
        }

        CHECK(same_row_space(sparse, shuffled));
        if (want > 0) {
            QuotientSpace probe_space;
            std::vector<RatVec> indep;
            for (auto& v : sparse)
                if (probe_space.add_relation(v)) indep.push_back(v);
            indep.pop_back();
            CHECK_FALSE(same_row_space(sparse, indep));
        }
    }
}
