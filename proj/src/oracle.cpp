#include "ramcycle/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ramcycle/error.hpp"
#include "ramcycle/permutation.hpp"

namespace ramcycle {

std::vector<Perm> conjugacy_class_elements(const std::vector<int>& type, int n) {
    std::vector<Perm> out;
    std::vector<uint8_t> img(n);
    for (int i = 0; i < n; ++i) img[i] = static_cast<uint8_t>(i);
    std::vector<int> sorted_type = type;
    std::sort(sorted_type.begin(), sorted_type.end(), std::greater<int>());
    do {
        Perm p;
        p.n = n;
        for (int i = 0; i < n; ++i) p.img[i] = img[i];
        if (p.cycle_type() == sorted_type) out.push_back(p);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

BigInt conjugacy_class_size(const Profile& I, int d) {
    check(I.degree() == d, ErrorKind::DegreeMismatch,
          "profile degree " + std::to_string(I.degree()) + " != d=" + std::to_string(d));
    // d! / prod(v^{m_v} m_v!)
    BigInt z = 1;
    for (auto [v, m] : value_multiplicities(I.parts)) {
        for (int i = 0; i < m; ++i) z *= v;
        z *= factorial(m);
    }
    return factorial(d) / z;
}

namespace {

struct UnionFind {
    std::array<int, kMaxPermDegree> parent;
    void init(int n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool transitive(const std::vector<const Perm*>& tuple, int d) {
    if (d == 1) return true;
    UnionFind uf;
    uf.init(d);
    for (const Perm* p : tuple)
        for (int i = 0; i < d; ++i) uf.unite(i, (*p)(i));
    int root = uf.find(0);
    for (int i = 1; i < d; ++i)
        if (uf.find(i) != root) return false;
    return true;
}

struct Enumerator {
    int d;
    std::vector<std::vector<Perm>> middle_classes;  // full classes for entries 2..size-1
    std::vector<int> last_type;                     // class required of the solved last entry
    uint64_t accepted = 0;
    uint64_t accepted_connected = 0;
    std::vector<const Perm*> tuple;  // tuple[0] fixed; filled during DFS

    void dfs(size_t level, const Perm& prefix) {
        if (level == middle_classes.size()) {
            Perm last = prefix.inverse();
            if (last.cycle_type() != last_type) return;
            ++accepted;
            tuple.push_back(&last);
            if (transitive(tuple, d)) ++accepted_connected;
            tuple.pop_back();
            return;
        }
        for (const Perm& g : middle_classes[level]) {
            tuple.push_back(&g);
            dfs(level + 1, prefix * g);
            tuple.pop_back();
        }
    }
};

// Tuple entry classes for a spec: the k constraint profiles then r
// transposition types.
std::vector<std::vector<int>> tuple_classes(int d, const std::vector<Profile>& constraints,
                                            int r) {
    std::vector<std::vector<int>> classes;
    for (const auto& I : constraints) classes.push_back(I.canonical());
    std::vector<int> transp;
    transp.push_back(2);
    for (int i = 0; i < d - 2; ++i) transp.push_back(1);
    for (int i = 0; i < r; ++i) classes.push_back(transp);
    return classes;
}

FactorizationCount count_impl(int d, const std::vector<Profile>& constraints, int r) {
    check(d >= 1 && d <= kOracleMaxDegree, ErrorKind::DegreeTooLarge,
          "brute-force engine capped at d <= " + std::to_string(kOracleMaxDegree));
    check(r >= 0, ErrorKind::NegativeBranchCount, "r < 0");
    for (const auto& I : constraints)
        check(I.degree() == d, ErrorKind::DegreeMismatch, "constraint degree mismatch");

    FactorizationCount out;
    BigInt dfact = factorial(d);

    // Parity of the product's sign.
    int sign = r;
    for (const auto& I : constraints) sign += d - I.length();
    if (sign % 2 != 0) return out;

    auto classes = tuple_classes(d, constraints, r);

    std::vector<int> ident(d, 1);
    if (classes.empty() || (classes.size() == 1 && classes[0] == ident)) {
        out.raw_tuples = 1;
        out.weighted = Rational(1, dfact);
        if (d == 1) {
            out.connected_raw = 1;
            out.connected_weighted = out.weighted;
        }
        return out;
    }
    if (classes.size() == 1) return out;  // single non-identity entry cannot multiply to id

    // Fix the first entry to a class representative; multiply by |C_1|.
    Enumerator en;
    en.d = d;
    double cost = 1.0;
    for (size_t i = 1; i + 1 < classes.size(); ++i) {
        en.middle_classes.push_back(conjugacy_class_elements(classes[i], d));
        cost *= static_cast<double>(en.middle_classes.back().size());
        check(cost <= kOracleCostBound, ErrorKind::CostBoundExceeded,
              "enumeration cost exceeds bound; use the class-algebra engine");
    }
    en.last_type = classes.back();
    Perm first = class_representative(classes[0]);
    en.tuple.push_back(&first);
    en.dfs(0, first);

    BigInt c1 = conjugacy_class_size(Profile(classes[0]), d);
    BigInt raw = c1 * en.accepted;
    BigInt craw = c1 * en.accepted_connected;
    out.raw_tuples = static_cast<uint64_t>(raw);
    out.connected_raw = static_cast<uint64_t>(craw);
    out.weighted = Rational(raw, dfact);
    out.connected_weighted = Rational(craw, dfact);
    return out;
}

// --- splitting into connected pieces -------------------------------------

using ValueCount = std::map<int, int>;

struct SplitEnumerator {
    int k = 0;
    std::vector<ValueCount> remaining;  // per constraint
    Rational total{0};

    // Ordered splittings with labeled simple points; 1/m! makes them unordered.
    void recurse(int rem_d, int rem_r, int m, const Rational& acc) {
        if (rem_d == 0) {
            if (rem_r == 0 && m > 0) total += acc / factorial(m);
            return;
        }
        for (int dp = 1; dp <= rem_d; ++dp) pick_constraint(0, dp, rem_d, rem_r, m, acc, {});
    }

    void pick_constraint(int ci, int dp, int rem_d, int rem_r, int m, const Rational& acc,
                         std::vector<std::vector<int>> picked) {
        if (ci == k) {
            for (int rp = 0; rp <= rem_r; ++rp) {
                std::vector<Profile> profs;
                for (const auto& parts : picked) profs.push_back(Profile(parts));
                Rational conn;
                try {
                    conn = connected_weighted_count(dp, profs, rp);
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::NegativeBranchCount) continue;
                    throw;
                }
                if (conn == 0) continue;
                recurse(rem_d - dp, rem_r - rp, m + 1,
                        acc * conn * Rational(binomial(rem_r, rp)));
            }
            return;
        }
        // All sub-multisets of constraint ci with total value dp.
        std::vector<int> pick;
        std::function<void(ValueCount::iterator, int)> go = [&](ValueCount::iterator it,
                                                                int target) {
            if (target == 0) {
                picked.push_back(pick);
                pick_constraint(ci + 1, dp, rem_d, rem_r, m, acc, picked);
                picked.pop_back();
                return;
            }
            if (it == remaining[ci].end()) return;
            auto next = std::next(it);
            int v = it->first;
            int avail = it->second;
            for (int c = 0; c <= avail && c * v <= target; ++c) {
                if (c > 0) {
                    it->second -= c;
                    for (int i = 0; i < c; ++i) pick.push_back(v);
                }
                go(next, target - c * v);
                if (c > 0) {
                    it->second += c;
                    for (int i = 0; i < c; ++i) pick.pop_back();
                }
            }
        };
        go(remaining[ci].begin(), dp);
    }
};

}  // namespace

FactorizationCount count_factorizations(const CoverSpec& spec) {
    std::vector<Profile> profiles;
    for (const auto& c : spec.constraints) profiles.push_back(c.profile());
    return count_impl(spec.degree, profiles, spec.simple_count);
}

Rational connected_weighted_count(int degree, const std::vector<Profile>& constraints, int r) {
    return count_impl(degree, constraints, r).connected_weighted;
}

Rational decompose_disconnected(const CoverSpec& spec) {
    SplitEnumerator en;
    en.k = spec.k();
    for (const auto& c : spec.constraints)
        en.remaining.push_back(value_multiplicities(c.profile().parts));
    if (en.k == 0) {
        // Track piece degrees through a synthetic unramified constraint.
        en.k = 1;
        ValueCount ones;
        ones[1] = spec.degree;
        en.remaining.push_back(ones);
    }
    en.recurse(spec.degree, spec.simple_count, 0, Rational(1));
    return en.total;
}

}  // namespace ramcycle
