#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ramcycle/error.hpp"
#include "ramcycle/rational.hpp"

namespace ramcycle {

// Ordered sequence of positive ramification multiplicities.
struct Profile {
    std::vector<int> parts;

    Profile() = default;
    explicit Profile(std::vector<int> p);

    int degree() const;
    int length() const { return static_cast<int>(parts.size()); }
    BigInt weight() const;

    // Parts sorted nonincreasing; used for hashing/equality of unordered data.
    std::vector<int> canonical() const;
    bool same_class(const Profile& o) const { return canonical() == o.canonical(); }

    std::string str() const;
};

struct ProfileStats {
    int degree;
    int length;
    BigInt weight;
};
ProfileStats profile_stats(const Profile& I);

// A ramification pattern over one target point: each part optionally carries
// a marked-point label (empty = unmarked). The textual form "2,1,1@x1,x2"
// attaches marks to the leading parts.
struct MarkedPart {
    int value = 1;
    std::string mark;  // empty = unmarked

    bool operator==(const MarkedPart& o) const { return value == o.value && mark == o.mark; }
    bool operator<(const MarkedPart& o) const {
        return std::tie(value, mark) > std::tie(o.value, o.mark);  // canonical: value desc
    }
};

struct BranchConstraint {
    std::vector<MarkedPart> parts;

    BranchConstraint() = default;
    BranchConstraint(const Profile& I, const std::vector<std::string>& marks);
    explicit BranchConstraint(std::vector<MarkedPart> p) : parts(std::move(p)) {}

    int degree() const;
    int length() const { return static_cast<int>(parts.size()); }
    int mark_count() const;
    std::vector<std::string> marks() const;
    Profile profile() const;

    // deg I − ℓ(I): the branching multiplicity of the point.
    int branching() const { return degree() - length(); }
    // deg I − ℓ(I) + ℓ(N) = 0: the constraint imposes no condition.
    bool is_vacuous() const { return branching() == 0 && mark_count() == 0; }
    // (2,1,...,1) with no marks: an anonymous simple branch point.
    bool is_anonymous_simple() const;

    BranchConstraint sorted() const;
    std::string str() const;
    bool operator==(const BranchConstraint& o) const { return sorted().parts == o.sorted().parts; }
};

// A space of covers: degree, Euler characteristic of the (possibly
// disconnected) domain, connectedness, branch constraints over the k special
// points, plus the derived count r of further simple branch points.
struct CoverSpec {
    int degree = 1;
    int euler = 2;
    bool connected = true;
    std::vector<BranchConstraint> constraints;
    int simple_count = 0;  // derived, cached

    CoverSpec() = default;
    CoverSpec(int d, int chi, bool conn, std::vector<BranchConstraint> cons);
    static CoverSpec with_simple_count(int d, bool conn, std::vector<BranchConstraint> cons,
                                       int r);

    int k() const { return static_cast<int>(constraints.size()); }
    int n() const;
    // Connected domain genus; requires even Euler characteristic.
    int genus() const;
    std::vector<std::string> all_marks() const;
    std::string str() const;
};

int riemann_hurwitz_r(const CoverSpec& spec);
int dimension(const CoverSpec& spec);
int two_point_codim(const CoverSpec& spec);

struct TrivialInfo {
    bool trivial = false;
    int genus = -1;
    bool totally_ramified_two_points = false;
};
TrivialInfo classify_trivial_info(const CoverSpec& spec);
bool classify_trivial(const CoverSpec& spec);

// Text grammar shared with the CLI: "2,1,1" and "2,1,1@x1,x2".
Profile parse_profile(const std::string& s);
BranchConstraint parse_constraint(const std::string& s);

std::vector<std::vector<int>> partitions_of(int n);          // nonincreasing parts
std::map<int, int> value_multiplicities(const std::vector<int>& parts);

}  // namespace ramcycle
