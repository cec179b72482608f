#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace paramcont {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (files, ids, shapes).
struct InputError : Error {
    using Error::Error;
};

/// Extended real: -inf < every finite value < +inf.
struct ExtReal {
    enum class Tag { NegInf, Finite, PosInf };

    Tag tag = Tag::Finite;
    double value = 0.0;

    static ExtReal neg_inf() { return {Tag::NegInf, 0.0}; }
    static ExtReal pos_inf() { return {Tag::PosInf, 0.0}; }
    static ExtReal finite(double v) { return {Tag::Finite, v}; }

    bool is_finite() const { return tag == Tag::Finite; }

    friend bool operator<(const ExtReal& a, const ExtReal& b) {
        if (a.tag == Tag::NegInf) return b.tag != Tag::NegInf;
        if (a.tag == Tag::PosInf) return false;
        if (b.tag == Tag::PosInf) return true;
        if (b.tag == Tag::NegInf) return false;
        return a.value < b.value;
    }
    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        if (a.tag != b.tag) return false;
        return a.tag != Tag::Finite || a.value == b.value;
    }
    friend bool operator<=(const ExtReal& a, const ExtReal& b) { return a < b || a == b; }
};

/// Finite truncation of the countable alternative set. Labels are distinct;
/// the optional embedding places each alternative as a nonnegative integer
/// bundle in Z^{n-1}_+.
struct AlternativeSet {
    std::vector<std::string> labels;
    std::optional<std::vector<std::vector<long long>>> embedding;

    int count() const { return static_cast<int>(labels.size()); }
};

struct SpaceNode {
    int id = 0;
    std::vector<double> coords;
    /// Nested basic neighborhoods, outermost first. Each entry is a set of
    /// node ids and contains this node's own id.
    std::vector<std::vector<int>> neighborhoods;
};

/// Finite node set with nested basic-neighborhood families standing in for a
/// topology at fixed resolution. Node ids are contiguous and equal to the
/// node's index in `nodes`.
struct SampledSpace {
    std::vector<SpaceNode> nodes;
    std::optional<std::vector<std::vector<double>>> metric;
    bool metrizable = false;
    bool perfectly_normal = false;

    int node_count() const { return static_cast<int>(nodes.size()); }
    int depth() const {
        return nodes.empty() ? 0 : static_cast<int>(nodes.front().neighborhoods.size());
    }
    const std::vector<int>& innermost(int node) const {
        return nodes[node].neighborhoods.back();
    }
    double dist(int a, int b) const { return (*metric)[a][b]; }
};

/// Per-node strict relation on the alternative set: strict(x, a, b) means
/// "b strictly preferred to a at node x" (a prec_x b).
struct PreferenceField {
    int alt_count = 0;
    /// [node][a * alt_count + b] nonzero iff a prec_x b.
    std::vector<std::vector<std::uint8_t>> strict;

    int node_count() const { return static_cast<int>(strict.size()); }

    bool strict_at(int node, int a, int b) const {
        return strict[node][static_cast<std::size_t>(a) * alt_count + b] != 0;
    }
    void set_strict(int node, int a, int b, bool v = true) {
        strict[node][static_cast<std::size_t>(a) * alt_count + b] = v ? 1 : 0;
    }
    bool indiff_at(int node, int a, int b) const {
        return !strict_at(node, a, b) && !strict_at(node, b, a);
    }
    bool weak_at(int node, int a, int b) const {
        return strict_at(node, a, b) || indiff_at(node, a, b);
    }

    static PreferenceField empty(int nodes, int alts) {
        PreferenceField f;
        f.alt_count = alts;
        f.strict.assign(nodes, std::vector<std::uint8_t>(
                                   static_cast<std::size_t>(alts) * alts, 0));
        return f;
    }
};

enum class Provenance { Urysohn, Inductive, External };

/// U[a][x]; the representation under construction or verification.
struct UtilityField {
    std::vector<std::vector<double>> values;  // [alternative][node]
    Provenance provenance = Provenance::External;

    int alt_count() const { return static_cast<int>(values.size()); }
    int node_count() const {
        return values.empty() ? 0 : static_cast<int>(values.front().size());
    }
};

/// Lower/upper envelopes (g, h) for one inductive insertion step.
struct EnvelopePair {
    std::vector<ExtReal> g;
    std::vector<ExtReal> h;
    std::vector<std::uint8_t> strict_mask;  // nonzero iff g < h at the node
};

/// Per-node nonempty finite subset of alternatives.
struct Correspondence {
    std::vector<std::vector<int>> sets;  // sorted ascending per node

    int node_count() const { return static_cast<int>(sets.size()); }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

/// Checks every SampledSpace invariant; the report lists each violation with
/// the node ids involved.
ValidationReport validate_space(const SampledSpace& space);

struct DerivedRelations {
    std::vector<std::pair<int, int>> strict;
    std::vector<std::pair<int, int>> indiff;  // includes reflexive pairs
    std::vector<std::pair<int, int>> weak;    // strict plus indiff
};

DerivedRelations derived_relations(const PreferenceField& field, int node);

/// Node-by-node decision of the representation property: U(a,x) < U(b,x) iff
/// a prec_x b, equality iff indifference. `tolerance` widens the tie band for
/// externally loaded fields.
bool represents_at(const UtilityField& u, const PreferenceField& field, int node,
                   double tolerance = 0.0);

}  // namespace paramcont
