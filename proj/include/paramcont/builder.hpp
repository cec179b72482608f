#pragma once

#include "paramcont/core.hpp"

namespace paramcont {

struct BuildConfig {
    std::vector<int> enumeration_order;  // empty -> input order
    int smoothing_rounds = 10;
    double strict_gap_fraction = 0.25;  // gamma in (0, 0.5)
    int urysohn_terms = 32;
};

/// Envelope inconsistency: g > h at some node signals an (NT) violation or a
/// corrupted partial representation.
struct EnvelopeError : Error {
    int node;
    explicit EnvelopeError(int node_id)
        : Error("envelope inconsistency g > h at node " + std::to_string(node_id)),
          node(node_id) {}
};

/// Per-step diagnostics collected during build_representation.
struct BuildTrace {
    long long envelope_nodes = 0;       // (step, node) pairs examined
    long long sandwich_violations = 0;  // g > h occurrences (always fatal)
    long long collapse_mismatches = 0;  // g == h disagreeing with indifference
    double min_strict_gap = 0.0;        // min finite h - g over strict nodes
    bool min_strict_gap_set = false;
};

/// Two-alternative distance-based construction on a metric space: U(a,.) = 0
/// and U(b,.) a truncated series of distance-ratio terms, positive exactly on
/// the strict region.
UtilityField build_urysohn_pair(const PreferenceField& field, const SampledSpace& space,
                                const BuildConfig& cfg = {});

/// Envelopes of the partial representation relative to alternative j:
/// g = max utility over weakly-worse prior alternatives (or -inf),
/// h = min over weakly-better ones (or +inf). `prior` lists the already
/// assigned alternatives; `partial` must represent the field on them.
EnvelopePair compute_envelopes(int j, const std::vector<int>& prior,
                               const UtilityField& partial, const PreferenceField& field,
                               const SampledSpace& space);

/// Constructive insertion between envelopes: clamped midpoint followed by
/// projected neighborhood averaging. The result lies strictly between g and h
/// wherever strict_mask holds and equals the collapsed value elsewhere.
std::vector<double> insert_between(const EnvelopePair& env, const SampledSpace& space,
                                   const BuildConfig& cfg = {});

/// Inductive construction over the enumeration: first alternative at 0, each
/// later one inserted between its envelopes.
UtilityField build_representation(const PreferenceField& field, const SampledSpace& space,
                                  const BuildConfig& cfg = {},
                                  BuildTrace* trace = nullptr);

}  // namespace paramcont
