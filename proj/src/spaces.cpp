#include "jdiag/spaces.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "jdiag/enumerate.hpp"
#include "jdiag/rational.hpp"
#include "jdiag/relations.hpp"

namespace jdiag {

namespace {

// Bump when the row format or any relation family changes; stale files are
// never read because the version is part of the file name.
constexpr int kCacheVersion = 1;

std::map<std::string, std::unique_ptr<QuotientSpace>>& memo() {
    static std::map<std::string, std::unique_ptr<QuotientSpace>> m;
    return m;
}

// Rows with columns re-keyed to ambient positions, rows ordered by pivot
// position, so the bytes depend only on the parameters.
std::string rows_to_cache(const QuotientSpace& q,
                          const std::vector<DiagramClass>& amb) {
    std::map<int, int> pos_of;
    for (int i = 0; i < (int)amb.size(); ++i) pos_of[intern_class(amb[i])] = i;
    std::map<int, const RatVec*> by_pos;
    for (auto& [pivot, row] : q.rows()) by_pos[pos_of.at(pivot)] = &row;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (auto& [pos, row] : by_pos) {
        std::map<int, std::string> ents;
        for (auto& [col, val] : row->entries) ents[pos_of.at(col)] = rat_to_string(val);
        auto r = nlohmann::ordered_json::array();
        for (auto& [c, s] : ents) r.push_back(nlohmann::ordered_json::array({c, s}));
        rows.push_back(std::move(r));
    }
    nlohmann::ordered_json j;
    j["ambient"] = (int)amb.size();
    j["rows"] = std::move(rows);
    return j.dump();
}

QuotientSpace rows_from_cache(const std::string& text,
                              const std::vector<DiagramClass>& amb,
                              const std::string& file) {
    auto j = nlohmann::json::parse(text);
    if (j.at("ambient").get<int>() != (int)amb.size())
        throw StructError("space cache " + file + ": ambient size mismatch, delete the file");
    QuotientSpace q;
    for (auto& r : j.at("rows")) {
        RatVec v;
        for (auto& e : r)
            v.set(intern_class(amb.at(e[0].get<int>())),
                  rat_from_string(e[1].get<std::string>()));
        q.add_relation(v);
    }
    q.finalize();
    return q;
}

const QuotientSpace& memoized(const std::string& key,
                              const std::vector<DiagramClass>& amb,
                              const std::function<QuotientSpace()>& build) {
    auto it = memo().find(key);
    if (it != memo().end()) return *it->second;

    std::filesystem::path file;
    std::string dir = cache_dir();
    if (!dir.empty()) {
        file = std::filesystem::path(dir) / (key + ".json");
        std::ifstream in(file);
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            auto q = std::make_unique<QuotientSpace>(rows_from_cache(ss.str(), amb, file.string()));
            return *memo().emplace(key, std::move(q)).first->second;
        }
    }

    auto q = std::make_unique<QuotientSpace>(build());
    if (!dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (!ec) {
            std::filesystem::path tmp = file;
            tmp += ".tmp." + std::to_string(::getpid());
            std::ofstream out(tmp);
            out << rows_to_cache(*q, amb);
            out.close();
            if (out) std::filesystem::rename(tmp, file, ec);
            if (ec) std::filesystem::remove(tmp, ec);
        }
    }
    return *memo().emplace(key, std::move(q)).first->second;
}

void feed(QuotientSpace& q, const std::vector<Relation>& rels) {
    for (auto& r : rels) q.add_relation(r.vec);
}

std::string mode_tag(bool fi) { return fi ? "fi" : "framed"; }

void require_degree(int strands, int degree) {
    if (strands < 1 || degree < 1)
        throw StructError("space: strands and degree must be positive");
}

} // namespace

std::vector<DiagramClass> forest_ambient(int strands, int degree, int size) {
    EnumSpec spec;
    spec.strands = strands;
    spec.degree = degree;
    spec.filter = DiagramFilter::Forests;
    spec.size = size;
    return enumerate_diagrams(spec);
}

std::vector<DiagramClass> forest_ambient(int strands, int degree) {
    EnumSpec spec;
    spec.strands = strands;
    spec.degree = degree;
    spec.filter = DiagramFilter::Forests;
    return enumerate_diagrams(spec);
}

std::vector<DiagramClass> chord_ambient(int strands, int degree) {
    EnumSpec spec;
    spec.strands = strands;
    spec.degree = degree;
    spec.filter = DiagramFilter::Chords;
    return enumerate_diagrams(spec);
}

std::vector<DiagramClass> tree_ambient(int strands, int degree) {
    EnumSpec spec;
    spec.strands = strands;
    spec.degree = degree;
    spec.filter = DiagramFilter::Trees;
    return enumerate_diagrams(spec);
}

const QuotientSpace& graded_space(int strands, int degree, int size, bool fi) {
    require_degree(strands, degree);
    if (size < 1 || size > degree)
        throw StructError("graded_space: size out of range");
    std::string key = "graded-m" + std::to_string(strands) + "-n" + std::to_string(degree) +
                      "-s" + std::to_string(size) + "-" + mode_tag(fi) +
                      "-v" + std::to_string(kCacheVersion);
    auto amb = forest_ambient(strands, degree, size);
    return memoized(key, amb, [&] {
        QuotientSpace q;
        feed(q, gen_AS(amb));
        feed(q, gen_IHX(amb));
        feed(q, gen_STU2(strands, degree, size));
        feed(q, gen_HEX(strands, degree, size));
        if (fi) feed(q, gen_1T(amb));
        q.finalize();
        return q;
    });
}

const QuotientSpace& algebra_space(int strands, int degree, bool fi) {
    require_degree(strands, degree);
    std::string key = "algebra-m" + std::to_string(strands) + "-n" + std::to_string(degree) +
                      "-" + mode_tag(fi) + "-v" + std::to_string(kCacheVersion);
    auto amb = forest_ambient(strands, degree);
    return memoized(key, amb, [&] {
        QuotientSpace q;
        feed(q, gen_STU(amb));
        if (fi) feed(q, gen_1T(amb));
        q.finalize();
        return q;
    });
}

const QuotientSpace& chord_space(int strands, int degree, bool fi) {
    require_degree(strands, degree);
    std::string key = "chord-m" + std::to_string(strands) + "-n" + std::to_string(degree) +
                      "-" + mode_tag(fi) + "-v" + std::to_string(kCacheVersion);
    auto amb = chord_ambient(strands, degree);
    return memoized(key, amb, [&] {
        QuotientSpace q;
        feed(q, gen_4T(strands, degree));
        if (fi) feed(q, gen_1T(amb));
        q.finalize();
        return q;
    });
}

std::vector<DiagId> quotient_basis(const std::vector<DiagramClass>& ambient,
                                   const QuotientSpace& q) {
    std::vector<DiagId> out;
    for (auto& dc : ambient) {
        DiagId id = intern_class(dc);
        if (!q.is_pivot(id)) out.push_back(id);
    }
    return out;
}

int space_dim(const std::vector<DiagramClass>& ambient, const QuotientSpace& q) {
    return (int)ambient.size() - q.rank();
}

std::string cache_dir() {
    const char* dir = std::getenv("JDIAG_CACHE_DIR");
    return dir ? std::string(dir) : std::string();
}

void reset_space_memo() { memo().clear(); }

} // namespace jdiag
