#include "jdiag/hopf.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "jdiag/forest_graph.hpp"
#include "jdiag/spaces.hpp"

namespace jdiag {

TensorVector& TensorVector::axpy(const Rat& c, const TensorVector& other) {
    if (c == 0) return *this;
    for (auto& [key, val] : other.terms) {
        Rat& slot = terms[key];
        slot += c * val;
        if (slot == 0) terms.erase(key);
    }
    return *this;
}

TensorVector tensor_unit(std::vector<DiagId> factors, const Rat& c) {
    TensorVector t;
    if (c != 0) t.terms[std::move(factors)] = c;
    return t;
}

DiagId mul_id(DiagId x, DiagId y) {
    return intern(stack(diag_info(y).canon, diag_info(x).canon));
}

RatVec mul_vec(const RatVec& x, const RatVec& y) {
    RatVec out;
    for (auto& [a, ca] : x.entries)
        for (auto& [b, cb] : y.entries) {
            int col = mul_id(a, b);
            Rat v = out.get(col) + ca * cb;
            out.set(col, v);
        }
    return out;
}

TensorVector tensor_mul(const TensorVector& x, const TensorVector& y) {
    TensorVector out;
    for (auto& [xk, cx] : x.terms)
        for (auto& [yk, cy] : y.terms) {
            if (xk.size() != yk.size())
                throw StructError("tensor_mul: factor counts differ");
            std::vector<DiagId> key(xk.size());
            for (size_t i = 0; i < xk.size(); ++i) key[i] = mul_id(xk[i], yk[i]);
            out.axpy(cx * cy, tensor_unit(std::move(key)));
        }
    return out;
}

TensorVector comult(DiagId d) {
    Diagram D = diag_info(d).canon; // interning below may grow the table
    int s = component_count(D);
    TensorVector out;
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        std::vector<int> left, right;
        for (int i = 0; i < s; ++i)
            (mask >> i & 1 ? left : right).push_back(i);
        out.axpy(Rat(1), tensor_unit({intern(subdiagram(D, left)),
                                      intern(subdiagram(D, right))}));
    }
    return out;
}

TensorVector comult_vec(const RatVec& v) {
    TensorVector out;
    for (auto& [id, c] : v.entries) out.axpy(c, comult(id));
    return out;
}

TensorVector reduced_comult(const RatVec& v) {
    TensorVector out;
    for (auto& [id, c] : v.entries) {
        if (diag_info(id).degree == 0)
            throw StructError("reduced_comult: degree-0 input");
        Diagram D = diag_info(id).canon;
        int s = component_count(D);
        for (unsigned mask = 1; mask + 1 < (1u << s); ++mask) {
            std::vector<int> left, right;
            for (int i = 0; i < s; ++i)
                (mask >> i & 1 ? left : right).push_back(i);
            out.axpy(c, tensor_unit({intern(subdiagram(D, left)),
                                     intern(subdiagram(D, right))}));
        }
    }
    return out;
}

TensorVector reduced_comult_power(const RatVec& v, int k) {
    if (k < 0) throw StructError("reduced_comult_power: negative power");
    TensorVector out;
    for (auto& [id, c] : v.entries) {
        if (k == 0) {
            out.axpy(c, tensor_unit({id}));
            continue;
        }
        if (diag_info(id).degree == 0)
            throw StructError("reduced_comult_power: degree-0 input");
        Diagram D = diag_info(id).canon;
        int s = component_count(D);
        if (s <= k) continue;
        // assignment of each component to one of k+1 blocks, none empty
        std::vector<int> assign(s, 0);
        for (;;) {
            unsigned hit = 0;
            for (int a : assign) hit |= 1u << a;
            if (hit + 1 == (1u << (k + 1))) {
                std::vector<DiagId> key(k + 1);
                for (int b = 0; b <= k; ++b) {
                    std::vector<int> block;
                    for (int i = 0; i < s; ++i)
                        if (assign[i] == b) block.push_back(i);
                    key[b] = intern(subdiagram(D, block));
                }
                out.axpy(c, tensor_unit(std::move(key)));
            }
            int i = s - 1;
            while (i >= 0 && assign[i] == k) assign[i--] = 0;
            if (i < 0) break;
            ++assign[i];
        }
    }
    return out;
}

RatVec mu(const TensorVector& t) {
    RatVec out;
    for (auto& [key, c] : t.terms) {
        DiagId acc = key.front();
        for (size_t i = 1; i < key.size(); ++i) acc = mul_id(acc, key[i]);
        out.set(acc, out.get(acc) + c);
    }
    return out;
}

TensorVector reduce_tensor(const TensorVector& t, int strands, bool fi) {
    TensorVector out;
    for (auto& [key, c] : t.terms) {
        // expand factor by factor into reduced coordinates
        std::map<std::vector<DiagId>, Rat> acc{{{}, c}};
        for (DiagId id : key) {
            int deg = diag_info(id).degree;
            RatVec red = deg == 0 ? unit_vec(id)
                                  : algebra_space(strands, deg, fi).reduce(unit_vec(id));
            std::map<std::vector<DiagId>, Rat> next;
            for (auto& [pref, cp] : acc)
                for (auto& [col, cv] : red.entries) {
                    std::vector<DiagId> k2 = pref;
                    k2.push_back(col);
                    next[std::move(k2)] += cp * cv;
                }
            acc = std::move(next);
        }
        for (auto& [k2, cv] : acc)
            if (cv != 0) out.axpy(cv, tensor_unit(k2));
    }
    return out;
}

RatVec section_s(const Diagram& forest, int k) {
    DiagramClass dc = canonicalize(forest);
    if (!dc.forest || dc.size > k + 1)
        throw StructError("section_s: needs a forest of size <= k+1");
    RatVec v = unit_vec(intern_class(dc));
    RatVec out = v;
    out.axpy(Rat(-1) / rat_factorial(k + 1), mu(reduced_comult_power(v, k)));
    return out;
}

RatVec section_s_stacked(const Diagram& forest, int k) {
    DiagramClass dc = canonicalize(forest);
    if (!dc.forest || dc.size > k + 1)
        throw StructError("section_s_stacked: needs a forest of size <= k+1");
    RatVec out = unit_vec(intern_class(dc));
    if (dc.size < k + 1) return out;
    LabelledForest lab = canonical_labelling(dc.canon);
    std::vector<int> sigma(dc.size);
    std::iota(sigma.begin(), sigma.end(), 1);
    Rat w = Rat(-1) / rat_factorial(k + 1);
    do {
        out.axpy(w, unit_vec(intern(stacked(lab, sigma))));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::vector<RatVec> primitive_basis(int strands, int degree, bool fi) {
    auto amb = forest_ambient(strands, degree);
    const QuotientSpace& q = algebra_space(strands, degree, fi);
    std::vector<DiagId> basis = quotient_basis(amb, q);

    // matrix of the reduced comultiplication in tensor coordinates
    std::map<std::vector<DiagId>, int> col_of;
    std::vector<RatVec> rows;
    for (DiagId b : basis) {
        TensorVector t = reduce_tensor(reduced_comult(unit_vec(b)), strands, fi);
        RatVec row;
        for (auto& [key, c] : t.terms) {
            auto [it, fresh] = col_of.emplace(key, (int)col_of.size());
            row.set(it->second, c);
        }
        rows.push_back(std::move(row));
    }

    std::vector<RatVec> out;
    for (const RatVec& ker : left_kernel(rows)) {
        RatVec v;
        for (auto& [i, c] : ker.entries) v.axpy(c, unit_vec(basis[i]));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<RatVec> size_filtration_basis(int strands, int degree, int k, bool fi) {
    const QuotientSpace& q = algebra_space(strands, degree, fi);
    QuotientSpace span;
    for (int s = 1; s <= std::min(k, degree); ++s)
        for (auto& dc : forest_ambient(strands, degree, s))
            span.add_relation(q.reduce(unit_vec(intern_class(dc))));
    span.finalize();
    std::vector<RatVec> out;
    for (auto& [pivot, row] : span.rows()) out.push_back(row);
    return out;
}

std::vector<RatVec> product_filtration_basis(int strands, int degree, int k, bool fi) {
    const QuotientSpace& q = algebra_space(strands, degree, fi);
    std::vector<std::vector<RatVec>> prim(degree + 1);
    for (int d = 1; d <= degree; ++d) prim[d] = primitive_basis(strands, d, fi);

    QuotientSpace span;
    // compositions of `degree` into at most k parts, one primitive per part
    std::vector<int> parts;
    std::vector<const RatVec*> pick;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            RatVec prod = *pick.front();
            for (size_t i = 1; i < pick.size(); ++i) prod = mul_vec(prod, *pick[i]);
            span.add_relation(q.reduce(prod));
            return;
        }
        if ((int)parts.size() == k) return;
        for (int d = 1; d <= rest; ++d)
            for (const RatVec& p : prim[d]) {
                parts.push_back(d);
                pick.push_back(&p);
                self(self, rest - d);
                pick.pop_back();
                parts.pop_back();
            }
    };
    rec(rec, degree);
    span.finalize();
    std::vector<RatVec> out;
    for (auto& [pivot, row] : span.rows()) out.push_back(row);
    return out;
}

FiltrationReport compare_filtrations(int strands, int degree, bool fi) {
    FiltrationReport r;
    r.strands = strands;
    r.degree = degree;
    r.fi = fi;
    const QuotientSpace& q = algebra_space(strands, degree, fi);
    auto amb = forest_ambient(strands, degree);

    r.size_eq_product = true;
    r.graded_matches = true;
    for (int k = 1; k <= degree; ++k) {
        auto fk = size_filtration_basis(strands, degree, k, fi);
        auto pk = product_filtration_basis(strands, degree, k, fi);
        r.dim_size.push_back((int)fk.size());
        r.dim_product.push_back((int)pk.size());
        r.dim_graded.push_back(space_dim(forest_ambient(strands, degree, k),
                                         graded_space(strands, degree, k, fi)));
        r.size_eq_product = r.size_eq_product && same_row_space(fk, pk);
        r.graded_matches = r.graded_matches && r.dim_graded.back() == r.dim_size.back();
    }
    r.top_full = r.dim_size.back() == space_dim(amb, q);

    // splitting a node of F may change the representative but not the class
    r.ladder_commutes = true;
    for (int s = 1; s < degree && r.ladder_commutes; ++s)
        for (auto& dc : forest_ambient(strands, degree, s)) {
            RatVec diff = unit_vec(intern_class(dc)) - iota(dc.canon);
            if (!q.in_span(diff)) { r.ladder_commutes = false; break; }
        }
    return r;
}

std::string filtration_report_json(const FiltrationReport& r) {
    nlohmann::ordered_json j;
    j["strands"] = r.strands;
    j["degree"] = r.degree;
    j["mode"] = r.fi ? "fi" : "framed";
    j["dim_size_filtration"] = r.dim_size;
    j["dim_product_filtration"] = r.dim_product;
    j["dim_graded_presentation"] = r.dim_graded;
    j["size_eq_product"] = r.size_eq_product;
    j["graded_matches"] = r.graded_matches;
    j["ladder_commutes"] = r.ladder_commutes;
    j["top_full"] = r.top_full;
    return j.dump(2);
}

} // namespace jdiag
