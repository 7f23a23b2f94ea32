#include "ramcycle/profile.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ramcycle {

Profile::Profile(std::vector<int> p) : parts(std::move(p)) {
    check(!parts.empty(), ErrorKind::PreconditionViolation, "profile must be nonempty");
    for (int s : parts)
        check(s >= 1, ErrorKind::PreconditionViolation, "profile parts must be positive");
}

int Profile::degree() const {
    int d = 0;
    for (int s : parts) d += s;
    return d;
}

BigInt Profile::weight() const {
    BigInt w = 1;
    for (int s : parts) w *= s;
    return w;
}

std::vector<int> Profile::canonical() const {
    std::vector<int> c = parts;
    std::sort(c.begin(), c.end(), std::greater<int>());
    return c;
}

std::string Profile::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    return os.str();
}

ProfileStats profile_stats(const Profile& I) { return {I.degree(), I.length(), I.weight()}; }

BranchConstraint::BranchConstraint(const Profile& I, const std::vector<std::string>& marks) {
    check(marks.size() <= I.parts.size(), ErrorKind::PreconditionViolation,
          "more marks than profile parts");
    for (size_t i = 0; i < I.parts.size(); ++i) {
        MarkedPart p;
        p.value = I.parts[i];
        if (i < marks.size()) p.mark = marks[i];
        parts.push_back(p);
    }
    check(!parts.empty(), ErrorKind::PreconditionViolation, "constraint must be nonempty");
}

int BranchConstraint::degree() const {
    int d = 0;
    for (const auto& p : parts) d += p.value;
    return d;
}

int BranchConstraint::mark_count() const {
    int c = 0;
    for (const auto& p : parts)
        if (!p.mark.empty()) ++c;
    return c;
}

std::vector<std::string> BranchConstraint::marks() const {
    std::vector<std::string> m;
    for (const auto& p : parts)
        if (!p.mark.empty()) m.push_back(p.mark);
    return m;
}

Profile BranchConstraint::profile() const {
    std::vector<int> v;
    for (const auto& p : parts) v.push_back(p.value);
    return Profile(v);
}

bool BranchConstraint::is_anonymous_simple() const {
    if (mark_count() != 0) return false;
    auto c = profile().canonical();
    if (c.empty() || c[0] != 2) return false;
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 1) return false;
    return true;
}

BranchConstraint BranchConstraint::sorted() const {
    BranchConstraint c = *this;
    std::sort(c.parts.begin(), c.parts.end());
    return c;
}

std::string BranchConstraint::str() const {
    BranchConstraint c = sorted();
    std::ostringstream os;
    for (size_t i = 0; i < c.parts.size(); ++i) {
        if (i) os << ",";
        os << c.parts[i].value;
    }
    auto m = c.marks();
    if (!m.empty()) {
        os << "@";
        for (size_t i = 0; i < m.size(); ++i) {
            if (i) os << ",";
            os << m[i];
        }
    }
    return os.str();
}

namespace {

void validate_spec(const CoverSpec& spec) {
    check(spec.degree >= 1, ErrorKind::PreconditionViolation, "degree must be >= 1");
    std::set<std::string> seen;
    for (const auto& c : spec.constraints) {
        check(c.degree() == spec.degree, ErrorKind::DegreeMismatch,
              "constraint degree " + std::to_string(c.degree()) + " != cover degree " +
                  std::to_string(spec.degree));
        for (const auto& m : c.marks()) {
            check(seen.insert(m).second, ErrorKind::PreconditionViolation,
                  "duplicate mark '" + m + "'");
        }
    }
}

}  // namespace

CoverSpec::CoverSpec(int d, int chi, bool conn, std::vector<BranchConstraint> cons)
    : degree(d), euler(chi), connected(conn), constraints(std::move(cons)) {
    validate_spec(*this);
    simple_count = riemann_hurwitz_r(*this);
}

CoverSpec CoverSpec::with_simple_count(int d, bool conn, std::vector<BranchConstraint> cons,
                                       int r) {
    check(r >= 0, ErrorKind::NegativeBranchCount, "r must be >= 0");
    int branching = 0;
    for (const auto& c : cons) branching += c.degree() - c.length();
    int chi = 2 * d - branching - r;
    return CoverSpec(d, chi, conn, std::move(cons));
}

int CoverSpec::n() const {
    int c = 0;
    for (const auto& b : constraints) c += b.mark_count();
    return c;
}

int CoverSpec::genus() const {
    check(connected, ErrorKind::PreconditionViolation, "genus defined for connected covers");
    check((2 - euler) % 2 == 0, ErrorKind::PreconditionViolation, "odd Euler characteristic");
    int g = (2 - euler) / 2;
    check(g >= 0, ErrorKind::PreconditionViolation, "negative genus");
    return g;
}

std::vector<std::string> CoverSpec::all_marks() const {
    std::vector<std::string> m;
    for (const auto& c : constraints)
        for (const auto& x : c.marks()) m.push_back(x);
    return m;
}

std::string CoverSpec::str() const {
    std::ostringstream os;
    os << "Z(d=" << degree << ",chi=" << euler << (connected ? ",conn" : ",disc");
    for (const auto& c : constraints) os << ";" << c.str();
    os << ";r=" << simple_count << ")";
    return os.str();
}

int riemann_hurwitz_r(const CoverSpec& spec) {
    int branching = 0;
    for (const auto& c : spec.constraints) branching += c.degree() - c.length();
    int r = 2 * spec.degree - spec.euler - branching;
    check(r >= 0, ErrorKind::NegativeBranchCount,
          "r = " + std::to_string(r) + " < 0 (empty cover space)");
    return r;
}

int dimension(const CoverSpec& spec) {
    int r = spec.simple_count;
    int k = spec.k();
    if (k + r <= 2) return 0;
    return r + k - 3;
}

int two_point_codim(const CoverSpec& spec) {
    check(spec.k() == 2, ErrorKind::PreconditionViolation, "two_point_codim needs k=2");
    check(spec.connected, ErrorKind::PreconditionViolation, "two_point_codim needs connected");
    int g = spec.genus();
    int n = spec.n();
    check(2 * g + n >= 3, ErrorKind::PreconditionViolation, "two_point_codim needs 2g+n>=3");
    int codim = g + n - spec.constraints[0].length() - spec.constraints[1].length();
    assert_internal(codim <= std::min(g, g + n - 2), "codim bound (codim.2pt.2) violated");
    return codim;
}

TrivialInfo classify_trivial_info(const CoverSpec& spec) {
    check(spec.connected, ErrorKind::PreconditionViolation, "classify_trivial needs connected");
    TrivialInfo info;
    info.trivial = spec.k() + spec.simple_count <= 2;
    if (info.trivial) {
        info.genus = spec.genus();
        assert_internal(info.genus == 0, "trivial cover must have genus 0");
        info.totally_ramified_two_points = true;
        for (const auto& c : spec.constraints)
            if (c.length() != 1) info.totally_ramified_two_points = false;
    }
    return info;
}

bool classify_trivial(const CoverSpec& spec) { return classify_trivial_info(spec).trivial; }

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Profile parse_profile(const std::string& s) {
    std::vector<int> parts;
    for (const auto& tok : split_on(s, ',')) {
        check(!tok.empty(), ErrorKind::ParseError, "empty profile part in '" + s + "'");
        try {
            parts.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError, "bad profile part '" + tok + "'");
        }
    }
    check(!parts.empty(), ErrorKind::ParseError, "empty profile");
    for (int p : parts) check(p >= 1, ErrorKind::ParseError, "profile parts must be positive");
    return Profile(parts);
}

BranchConstraint parse_constraint(const std::string& s) {
    auto at = s.find('@');
    if (at == std::string::npos) return BranchConstraint(parse_profile(s), {});
    Profile I = parse_profile(s.substr(0, at));
    std::vector<std::string> marks;
    for (const auto& tok : split_on(s.substr(at + 1), ',')) {
        check(!tok.empty(), ErrorKind::ParseError, "empty mark in '" + s + "'");
        marks.push_back(tok);
    }
    return BranchConstraint(I, marks);
}

namespace {
void gen_partitions(int n, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::map<int, int> value_multiplicities(const std::vector<int>& parts) {
    std::map<int, int> m;
    for (int v : parts) ++m[v];
    return m;
}

}  // namespace ramcycle
