#include "jdiag/lie.hpp"

#include <json.hpp>

#include "jdiag/forest_graph.hpp"
#include "jdiag/rational.hpp"
#include "jdiag/spaces.hpp"

namespace jdiag {

std::vector<DiagId> lie_basis(int strands, int degree) {
    return quotient_basis(tree_ambient(strands, degree),
                          graded_space(strands, degree, 1));
}

std::vector<int> lie_graded_dims(int strands, int max_degree) {
    std::vector<int> dims;
    for (int n = 1; n <= max_degree; ++n)
        dims.push_back(space_dim(tree_ambient(strands, n),
                                 graded_space(strands, n, 1)));
    return dims;
}

RatVec tree_bracket(const Diagram& a, const Diagram& b) {
    DiagramClass ca = canonicalize(a), cb = canonicalize(b);
    if (!ca.tree || !cb.tree)
        throw StructError("tree_bracket: arguments must be trees");
    if (ca.canon.strands != cb.canon.strands)
        throw StructError("tree_bracket: strand counts differ");
    // x.y stacks x's legs first, so b.a = stack(a, b) and a.b = stack(b, a)
    Diagram ba = stack(ca.canon, cb.canon);
    Diagram ab = stack(cb.canon, ca.canon);
    int n = ca.degree + cb.degree;
    return graded_space(ca.canon.strands, n, 1).reduce(vector_between(ba, ab));
}

RatVec bracket(const RatVec& x, const RatVec& y, int strands) {
    if (x.zero() || y.zero()) return {};
    auto deg_of = [](const RatVec& v) {
        int d = -1;
        for (auto& [id, c] : v.entries) {
            const DiagramClass& dc = diag_info(id);
            if (!dc.tree) throw StructError("bracket: support must be trees");
            if (d < 0) d = dc.degree;
            else if (d != dc.degree) throw StructError("bracket: inhomogeneous vector");
        }
        return d;
    };
    int total = deg_of(x) + deg_of(y);
    RatVec out;
    for (auto& [a, wa] : x.entries)
        for (auto& [b, wb] : y.entries) {
            Diagram da = diag_info(a).canon; // copies: the bracket interns
            Diagram db = diag_info(b).canon;
            out.axpy(wa * wb, tree_bracket(da, db));
        }
    return graded_space(strands, total, 1).reduce(out);
}

JacobiReport jacobi_check(int strands, int max_degree) {
    JacobiReport rep;
    rep.strands = strands;
    rep.max_degree = max_degree;
    std::vector<std::vector<DiagId>> basis(max_degree + 1);
    for (int d = 1; d <= max_degree; ++d) basis[d] = lie_basis(strands, d);

    for (int p = 1; p <= max_degree - 2; ++p)
        for (int q = 1; p + q < max_degree; ++q)
            for (int r = 1; p + q + r <= max_degree; ++r)
                for (DiagId x : basis[p])
                    for (DiagId y : basis[q])
                        for (DiagId z : basis[r]) {
                            RatVec ux = unit_vec(x), uy = unit_vec(y), uz = unit_vec(z);
                            RatVec j = bracket(ux, bracket(uy, uz, strands), strands);
                            j.axpy(Rat(1), bracket(uy, bracket(uz, ux, strands), strands));
                            j.axpy(Rat(1), bracket(uz, bracket(ux, uy, strands), strands));
                            ++rep.triples;
                            if (!j.zero())
                                rep.failures.push_back(diag_info(x).encoding + " | " +
                                                       diag_info(y).encoding + " | " +
                                                       diag_info(z).encoding);
                        }
    return rep;
}

std::string bracket_table_json(int strands, int max_degree) {
    nlohmann::ordered_json out;
    out["strands"] = strands;
    out["max_degree"] = max_degree;
    auto table = nlohmann::ordered_json::array();
    for (int p = 1; p < max_degree; ++p)
        for (int q = 1; p + q <= max_degree; ++q)
            for (DiagId a : lie_basis(strands, p))
                for (DiagId b : lie_basis(strands, q)) {
                    Diagram da = diag_info(a).canon;
                    Diagram db = diag_info(b).canon;
                    RatVec v = tree_bracket(da, db);
                    auto val = nlohmann::ordered_json::array();
                    std::map<std::string, std::string> by_enc;
                    for (auto& [id, c] : v.entries)
                        by_enc[diag_info(id).encoding] = rat_to_string(c);
                    for (auto& [enc, c] : by_enc)
                        val.push_back(nlohmann::ordered_json::array({c, enc}));
                    nlohmann::ordered_json row;
                    row["left"] = diag_info(a).encoding;
                    row["right"] = diag_info(b).encoding;
                    row["degree"] = p + q;
                    row["value"] = std::move(val);
                    table.push_back(std::move(row));
                }
    out["brackets"] = std::move(table);
    return out.dump(2);
}

} // namespace jdiag
