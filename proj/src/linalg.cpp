#include "jdiag/linalg.hpp"

#include <stdexcept>

#include <json.hpp>

namespace jdiag {

int RatVec::lead() const {
    if (entries.empty()) throw std::logic_error("lead of zero vector");
    return entries.begin()->first;
}

Rat RatVec::get(int col) const {
    auto it = entries.find(col);
    return it == entries.end() ? Rat(0) : it->second;
}

void RatVec::set(int col, const Rat& v) {
    if (v == 0) entries.erase(col);
    else entries[col] = v;
}

RatVec& RatVec::axpy(const Rat& c, const RatVec& other) {
    if (c == 0) return *this;
    for (auto& [col, val] : other.entries) {
        auto it = entries.find(col);
        if (it == entries.end()) {
            entries.emplace(col, c * val);
        } else {
            it->second += c * val;
            if (it->second == 0) entries.erase(it);
        }
    }
    return *this;
}

RatVec& RatVec::scale(const Rat& c) {
    if (c == 0) {
        entries.clear();
        return *this;
    }
    for (auto& [col, val] : entries) val *= c;
    return *this;
}

RatVec& RatVec::normalize() {
    if (!zero()) scale(Rat(1) / entries.begin()->second);
    return *this;
}

RatVec operator+(RatVec a, const RatVec& b) { return a.axpy(1, b); }
RatVec operator-(RatVec a, const RatVec& b) { return a.axpy(-1, b); }
RatVec operator*(const Rat& c, RatVec v) { return v.scale(c); }

RatVec unit_vec(int col) {
    RatVec v;
    v.set(col, 1);
    return v;
}

RatVec QuotientSpace::reduce(RatVec v) const {
    // forward sweep; eliminating a pivot column only touches columns to its
    // right, so one pass suffices
    auto it = v.entries.begin();
    while (it != v.entries.end()) {
        auto r = rows_.find(it->first);
        if (r == rows_.end()) {
            ++it;
            continue;
        }
        Rat c = it->second;
        v.axpy(-c, r->second);
        it = v.entries.upper_bound(r->first);
    }
    return v;
}

bool QuotientSpace::add_relation(RatVec v) {
    v = reduce(std::move(v));
    if (v.zero()) return false;
    v.normalize();
    int p = v.lead();
    rows_.emplace(p, std::move(v));
    return true;
}

void QuotientSpace::finalize() {
    // descending pivot order: every row used for cleaning is already clean
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        RatVec& row = it->second;
        auto jt = row.entries.upper_bound(it->first);
        while (jt != row.entries.end()) {
            auto r = rows_.find(jt->first);
            if (r == rows_.end()) {
                ++jt;
                continue;
            }
            Rat c = jt->second;
            row.axpy(-c, r->second);
            jt = row.entries.upper_bound(r->first);
        }
    }
}

std::string QuotientSpace::to_json() const {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (auto& [p, row] : rows_) {
        auto r = nlohmann::ordered_json::array();
        for (auto& [col, val] : row.entries)
            r.push_back(nlohmann::ordered_json::array({col, rat_to_string(val)}));
        rows.push_back(r);
    }
    nlohmann::ordered_json j;
    j["rows"] = rows;
    return j.dump();
}

QuotientSpace QuotientSpace::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    QuotientSpace q;
    for (auto& r : j.at("rows")) {
        RatVec v;
        for (auto& e : r) v.set(e[0].get<int>(), rat_from_string(e[1].get<std::string>()));
        q.rows_.emplace(v.lead(), std::move(v));
    }
    return q;
}

std::vector<RatVec> left_kernel(const std::vector<RatVec>& vecs) {
    const int base = 1 << 30;
    QuotientSpace aug;
    for (int i = 0; i < (int)vecs.size(); ++i) {
        RatVec v = vecs[i];
        if (!v.entries.empty() && v.entries.rbegin()->first >= base)
            throw std::logic_error("left_kernel: column index too large");
        v.set(base + i, 1);
        aug.add_relation(std::move(v));
    }
    aug.finalize();
    std::vector<RatVec> out;
    for (auto& [p, row] : aug.rows()) {
        if (p < base) continue;
        RatVec combo;
        for (auto& [col, val] : row.entries) combo.set(col - base, val);
        out.push_back(std::move(combo));
    }
    return out;
}

bool same_row_space(const std::vector<RatVec>& a, const std::vector<RatVec>& b) {
    QuotientSpace qa, qb;
    for (auto& v : a) qa.add_relation(v);
    for (auto& v : b) qb.add_relation(v);
    if (qa.rank() != qb.rank()) return false;
    for (auto& v : b)
        if (!qa.in_span(v)) return false;
    return true;
}

} // namespace jdiag
