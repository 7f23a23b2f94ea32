#include "ramcycle/class_algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "ramcycle/error.hpp"
#include "ramcycle/oracle.hpp"
#include "ramcycle/permutation.hpp"

#include <nlohmann/json.hpp>

namespace ramcycle {

namespace {

constexpr const char* kTableVersion = "1";

// Reverse-lexicographic order on partitions written with nonincreasing parts:
// [d] first, [1^d] last.
bool revlex_greater(const std::vector<int>& a, const std::vector<int>& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return a.size() < b.size();
}

}  // namespace

int ClassAlgebraTable::index_of(const std::vector<int>& partition) const {
    std::vector<int> p = partition;
    std::sort(p.begin(), p.end(), std::greater<int>());
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == p) return static_cast<int>(i);
    fail(ErrorKind::PreconditionViolation, "partition not in basis");
}

ClassAlgebraTable build_table(int d) {
    check(d >= 1 && d <= kClassAlgebraMaxDegree, ErrorKind::DegreeTooLarge,
          "class algebra capped at d <= " + std::to_string(kClassAlgebraMaxDegree));
    ClassAlgebraTable t;
    t.degree = d;
    t.basis = partitions_of(d);
    std::sort(t.basis.begin(), t.basis.end(), revlex_greater);
    size_t nc = t.basis.size();
    for (const auto& p : t.basis) t.class_sizes.push_back(conjugacy_class_size(Profile(p), d));

    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < nc; ++i) index[t.basis[i]] = static_cast<int>(i);

    t.cutjoin.assign(nc, std::vector<BigInt>(nc, BigInt(0)));
    auto transpositions = all_transpositions(d);
    for (size_t mu = 0; mu < nc; ++mu) {
        Perm rep = class_representative(t.basis[mu]);
        for (const Perm& tr : transpositions) {
            Perm g = tr * rep;  // t*g = rep  with  g = t^-1*rep = t*rep
            t.cutjoin[mu][index[g.cycle_type()]] += 1;
        }
    }
    return t;
}

std::vector<std::vector<BigInt>> cutjoin_split_merge(const ClassAlgebraTable& t) {
    size_t nc = t.basis.size();
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < nc; ++i) index[t.basis[i]] = static_cast<int>(i);

    std::vector<std::vector<BigInt>> m(nc, std::vector<BigInt>(nc, BigInt(0)));
    for (size_t mu = 0; mu < nc; ++mu) {
        const auto& parts = t.basis[mu];
        size_t np = parts.size();
        // Merging two distinct cycles of lengths a, b: a*b transpositions.
        for (size_t i = 0; i < np; ++i) {
            for (size_t j = i + 1; j < np; ++j) {
                std::vector<int> merged;
                for (size_t l = 0; l < np; ++l)
                    if (l != i && l != j) merged.push_back(parts[l]);
                merged.push_back(parts[i] + parts[j]);
                std::sort(merged.begin(), merged.end(), std::greater<int>());
                m[mu][index[merged]] += BigInt(parts[i]) * parts[j];
            }
        }
        // Splitting a cycle of length c into (a, c-a): c pairs per unordered
        // split, halved when a == c-a.
        for (size_t i = 0; i < np; ++i) {
            int c = parts[i];
            for (int a = 1; 2 * a <= c; ++a) {
                int b = c - a;
                if (b < 1) continue;
                std::vector<int> split;
                for (size_t l = 0; l < np; ++l)
                    if (l != i) split.push_back(parts[l]);
                split.push_back(a);
                split.push_back(b);
                std::sort(split.begin(), split.end(), std::greater<int>());
                m[mu][index[split]] += (a == b) ? BigInt(c) / 2 : BigInt(c);
            }
        }
    }
    return m;
}

std::string ClassAlgebraTable::serialize() const {
    nlohmann::ordered_json j;
    j["version"] = kTableVersion;
    j["degree"] = degree;
    nlohmann::ordered_json basis_j = nlohmann::ordered_json::array();
    for (const auto& p : basis) basis_j.push_back(p);
    j["basis"] = basis_j;
    nlohmann::ordered_json sizes = nlohmann::ordered_json::array();
    for (const auto& s : class_sizes) sizes.push_back(s.str());
    j["class_sizes"] = sizes;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : cutjoin) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& e : row) r.push_back(rational_str(Rational(e)));
        rows.push_back(r);
    }
    j["cutjoin"] = rows;
    return j.dump(2);
}

ClassAlgebraTable ClassAlgebraTable::deserialize(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    check(j.at("version").get<std::string>() == kTableVersion, ErrorKind::ParseError,
          "table version mismatch");
    ClassAlgebraTable t;
    t.degree = j.at("degree").get<int>();
    for (const auto& p : j.at("basis")) t.basis.push_back(p.get<std::vector<int>>());
    for (const auto& s : j.at("class_sizes")) t.class_sizes.push_back(BigInt(s.get<std::string>()));
    for (const auto& row : j.at("cutjoin")) {
        std::vector<BigInt> r;
        for (const auto& e : row) {
            Rational q = parse_rational(e.get<std::string>());
            check(boost::multiprecision::denominator(q) == 1, ErrorKind::ParseError,
                  "non-integer cutjoin entry");
            r.push_back(boost::multiprecision::numerator(q));
        }
        t.cutjoin.push_back(std::move(r));
    }
    return t;
}

const ClassAlgebraTable& table_for(int d) {
    static std::mutex mu;
    static std::map<int, ClassAlgebraTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    const char* dir = std::getenv("RAMCYCLE_CACHE_DIR");
    std::filesystem::path file;
    if (dir && *dir) {
        file = std::filesystem::path(dir) /
               ("class_algebra_d" + std::to_string(d) + ".json");
        std::ifstream in(file);
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            try {
                auto t = ClassAlgebraTable::deserialize(ss.str());
                if (t.degree == d) return cache.emplace(d, std::move(t)).first->second;
            } catch (const std::exception&) {
                // stale or corrupt cache entry; rebuild
            }
        }
    }
    auto t = build_table(d);
    if (dir && *dir) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        std::ofstream out(file);
        if (out) out << t.serialize();
    }
    return cache.emplace(d, std::move(t)).first->second;
}

Rational disconnected_double_hurwitz(int d, const Profile& I1, const Profile& I2, int r) {
    check(I1.degree() == d && I2.degree() == d, ErrorKind::DegreeMismatch,
          "profile degrees must equal d");
    check(r >= 0, ErrorKind::PreconditionViolation, "r >= 0 required");
    int parity = (d - I1.length()) + (d - I2.length()) + r;
    if (parity % 2 != 0) return Rational(0);

    const ClassAlgebraTable& t = table_for(d);
    size_t nc = t.basis.size();
    std::vector<BigInt> v(nc, BigInt(0));
    v[t.index_of(I2.canonical())] = 1;
    for (int step = 0; step < r; ++step) {
        std::vector<BigInt> w(nc, BigInt(0));
        for (size_t mu = 0; mu < nc; ++mu)
            for (size_t la = 0; la < nc; ++la)
                if (t.cutjoin[mu][la] != 0 && v[la] != 0) w[mu] += t.cutjoin[mu][la] * v[la];
        v = std::move(w);
    }
    BigInt ident_coeff = conjugacy_class_size(I1, d) * v[t.index_of(I1.canonical())];
    return Rational(ident_coeff, factorial(d));
}

}  // namespace ramcycle
