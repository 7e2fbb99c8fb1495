#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "jdiag/hopf.hpp"
#include "jdiag/relations.hpp"
#include "jdiag/spaces.hpp"

using namespace jdiag;

namespace {

Diagram chord1() { return decode("m=1;l=2;c=0-1;n="); }
Diagram tripod() { return decode("m=1;l=3;c=;n=(0,1,2)"); }

// Components of pairwise distinct degrees 1, 2, 3, so no comultiplication
// terms merge.
DiagId distinct_forest() {
    Diagram top = tree_ambient(1, 3).front().canon;
    return intern(stack(top, stack(tripod(), chord1())));
}

// Three equal chords: the maximally merging case.
DiagId equal_forest() {
    return intern(stack(chord1(), stack(chord1(), chord1())));
}

TensorVector swap_factors(const TensorVector& t) {
    TensorVector out;
    for (auto& [k, c] : t.terms) out.axpy(c, tensor_unit({k[1], k[0]}));
    return out;
}

bool coassociative(DiagId x) {
    TensorVector d = comult(x), left, right;
    for (auto& [k, c] : d.terms) {
        for (auto& [k2, c2] : comult(k[0]).terms)
            left.axpy(c * c2, tensor_unit({k2[0], k2[1], k[1]}));
        for (auto& [k2, c2] : comult(k[1]).terms)
            right.axpy(c * c2, tensor_unit({k[0], k2[0], k2[1]}));
    }
    return left == right;
}

} // namespace

TEST_CASE("comultiplication splits along components") {
    DiagId f = distinct_forest();
    RatVec v = unit_vec(f);
    CHECK(comult(f).terms.size() == 8); // one per component subset
    CHECK(reduced_comult(v).terms.size() == 6);
    // ordered partitions of three distinct components into three blocks
    TensorVector d2 = reduced_comult_power(v, 2);
    CHECK(d2.terms.size() == 6);
    for (auto& [k, c] : d2.terms) CHECK(c == Rat(1));
    CHECK(reduced_comult_power(v, 3).zero()); // size 3 <= power 3

    // equal components merge term keys, binomial coefficients appear
    DiagId e = equal_forest();
    TensorVector de = comult(e);
    CHECK(de.terms.size() == 4);
    std::vector<Rat> coeffs;
    for (auto& [k, c] : de.terms) coeffs.push_back(c);
    std::sort(coeffs.begin(), coeffs.end());
    CHECK(coeffs == std::vector<Rat>{Rat(1), Rat(1), Rat(3), Rat(3)});
    CHECK(reduced_comult(unit_vec(e)).terms.size() == 2);
    TensorVector de2 = reduced_comult_power(unit_vec(e), 2);
    REQUIRE(de2.terms.size() == 1);
    CHECK(de2.terms.begin()->second == Rat(6));
}

TEST_CASE("size-one classes are primitive on the nose") {
    DiagId t = intern(tripod());
    DiagId one = intern(empty_diagram(1));
    TensorVector expect = tensor_unit({t, one});
    expect.axpy(Rat(1), tensor_unit({one, t}));
    CHECK(comult(t) == expect);
    CHECK(reduced_comult(unit_vec(t)).zero());
}

TEST_CASE("comultiplication is coassociative and cocommutative") {
    for (auto& dc : forest_ambient(1, 3)) {
        DiagId id = intern_class(dc);
        CHECK(coassociative(id));
        TensorVector d = comult(id);
        CHECK(d == swap_factors(d));
    }
    for (auto& dc : forest_ambient(2, 2)) {
        DiagId id = intern_class(dc);
        CHECK(coassociative(id));
        TensorVector d = comult(id);
        CHECK(d == swap_factors(d));
    }
}

TEST_CASE("product stacks the left factor's legs first") {
    DiagId c = intern(chord1()), t = intern(tripod());
    DiagId ct = mul_id(c, t);
    // chord legs at positions 0,1, tripod legs after
    CHECK(diag_info(ct).encoding == canonicalize(stack(tripod(), chord1())).encoding);
    CHECK(diag_info(ct).size == 2);
    CHECK(diag_info(ct).degree == 3);

    RatVec x = unit_vec(c) + unit_vec(t);
    CHECK(mul_vec(x, unit_vec(c)) ==
          mul_vec(unit_vec(c), unit_vec(c)) + mul_vec(unit_vec(t), unit_vec(c)));
}

TEST_CASE("comultiplication is multiplicative") {
    for (auto& a : forest_ambient(2, 1))
        for (auto& b : forest_ambient(2, 2)) {
            DiagId x = intern_class(a), y = intern_class(b);
            CHECK(comult_vec(mul_vec(unit_vec(x), unit_vec(y))) ==
                  tensor_mul(comult(x), comult(y)));
        }
}

TEST_CASE("reduced coproduct of a product") {
    DiagId one = intern(empty_diagram(1));
    auto wrap = [&](const RatVec& v, bool left) {
        TensorVector t;
        for (auto& [id, c] : v.entries)
            t.axpy(c, tensor_unit(left ? std::vector<DiagId>{one, id}
                                       : std::vector<DiagId>{id, one}));
        return t;
    };
    for (auto& a : forest_ambient(1, 2))
        for (auto& b : forest_ambient(1, 2)) {
            RatVec ux = unit_vec(intern_class(a)), uy = unit_vec(intern_class(b));
            TensorVector lhs = reduced_comult(mul_vec(ux, uy));
            TensorVector dx = reduced_comult(ux), dy = reduced_comult(uy);
            TensorVector rhs = tensor_mul(dx, dy);
            rhs.axpy(Rat(1), tensor_mul(dx, wrap(uy, true)));
            rhs.axpy(Rat(1), tensor_mul(dx, wrap(uy, false)));
            rhs.axpy(Rat(1), tensor_mul(wrap(ux, true), dy));
            rhs.axpy(Rat(1), tensor_mul(wrap(ux, false), dy));
            rhs.axpy(Rat(1), tensor_unit({intern_class(a), intern_class(b)}));
            rhs.axpy(Rat(1), tensor_unit({intern_class(b), intern_class(a)}));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("the two section forms agree term by term") {
    DiagId f2 = intern(stack(tripod(), chord1()));
    Diagram d2 = diag_info(f2).canon;
    // size 2, power 1: F - (1/2)(C.T + T.C) = (1/2)(C.T - T.C)
    RatVec s = section_s(d2, 1);
    DiagId c = intern(chord1()), t = intern(tripod());
    RatVec expect = Rat(1, 2) * unit_vec(mul_id(c, t));
    expect.axpy(Rat(-1, 2), unit_vec(mul_id(t, c)));
    CHECK(s == expect);
    CHECK(section_s_stacked(d2, 1) == s);

    for (auto& dc : forest_ambient(1, 4, 3)) {
        CHECK(section_s(dc.canon, 2) == section_s_stacked(dc.canon, 2));
        // power at or above the size fixes the forest
        CHECK(section_s(dc.canon, 3) == unit_vec(intern_class(dc)));
    }

    // the section lands in the span of images of smaller-size forests
    const QuotientSpace& alg = algebra_space(1, 3);
    QuotientSpace small;
    for (int s1 = 1; s1 <= 2; ++s1)
        for (auto& dc : forest_ambient(1, 3, s1))
            small.add_relation(alg.reduce(unit_vec(intern_class(dc))));
    for (auto& dc : forest_ambient(1, 3, 3))
        CHECK(small.in_span(alg.reduce(section_s(dc.canon, 2))));
}

TEST_CASE("comultiplication descends to the quotient") {
    for (int m = 1; m <= 2; ++m) {
        int n = m == 1 ? 3 : 2;
        auto ambient = forest_ambient(m, n);
        for (auto& r : gen_STU(ambient)) {
            CHECK(reduce_tensor(comult_vec(r.vec), m).zero());
            CHECK(reduce_tensor(reduced_comult(r.vec), m).zero());
        }
        for (auto& r : gen_1T(ambient))
            CHECK(reduce_tensor(comult_vec(r.vec), m).zero());
    }
}

TEST_CASE("primitive basis spans the tree image in a small degree") {
    auto prim = primitive_basis(1, 2);
    REQUIRE(prim.size() == 1);
    const QuotientSpace& alg = algebra_space(1, 2);
    RatVec tree = alg.reduce(unit_vec(intern(tripod())));
    CHECK(same_row_space(prim, {tree}));
}

TEST_CASE("filtration pipelines agree") {
    FiltrationReport r = compare_filtrations(2, 3);
    CHECK(r.dim_size == std::vector<int>{4, 7, 8});
    CHECK(r.dim_product == std::vector<int>{4, 7, 8});
    CHECK(r.dim_graded == std::vector<int>{4, 7, 8});
    CHECK(r.size_eq_product);
    CHECK(r.graded_matches);
    CHECK(r.ladder_commutes);
    CHECK(r.top_full);

    FiltrationReport r1 = compare_filtrations(1, 4);
    CHECK(r1.dim_size == std::vector<int>{2, 3, 3, 3});
    CHECK(r1.size_eq_product);
    CHECK(r1.graded_matches);
    CHECK(r1.ladder_commutes);
    CHECK(r1.top_full);
}

TEST_CASE("echelon rows survive a cache round trip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() /
                   ("jdiag-cache-test-" + std::to_string(getpid()));
    setenv("JDIAG_CACHE_DIR", dir.string().c_str(), 1);
    reset_space_memo();
    std::string first = graded_space(1, 4, 2).to_json();
    REQUIRE(fs::exists(dir));
    CHECK(!fs::is_empty(dir));
    reset_space_memo(); // next access loads from disk
    std::string second = graded_space(1, 4, 2).to_json();
    CHECK(first == second);
    unsetenv("JDIAG_CACHE_DIR");
    reset_space_memo();
    fs::remove_all(dir);
}
