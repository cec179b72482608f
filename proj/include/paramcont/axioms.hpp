#pragma once

#include "paramcont/core.hpp"

namespace paramcont {

enum class Axiom { Asy, NT, CD, JC, LHC, UHC, Representation, ValueContinuity, CdNecessity };

const char* axiom_name(Axiom a);

struct Witness {
    int node = -1;
    int a = -1;
    int b = -1;
    int c = -1;         // third alternative (NT) where relevant
    int neighbor = -1;  // failing node from the innermost neighborhood
    std::string detail;

    friend bool operator==(const Witness& x, const Witness& y) {
        return x.node == y.node && x.a == y.a && x.b == y.b && x.c == y.c &&
               x.neighbor == y.neighbor;
    }
};

struct AxiomReport {
    Axiom axiom = Axiom::Asy;
    bool passed = true;
    std::vector<Witness> witnesses;
    std::string note;
};

AxiomReport check_asymmetry(const PreferenceField& field);
AxiomReport check_negative_transitivity(const PreferenceField& field);

/// (CD) at sampled resolution: every strict comparison at x is preserved
/// throughout some declared neighborhood of x.
AxiomReport check_cd(const PreferenceField& field, const SampledSpace& space);

/// Finite-A closedness proxy; coincides with check_cd and says so in the note.
AxiomReport check_jc(const PreferenceField& field, const SampledSpace& space);

/// Lower hemicontinuity of x -> prec_x; identical witness set to check_cd for
/// discrete alternatives.
AxiomReport preference_correspondence_lhc(const PreferenceField& field,
                                          const SampledSpace& space);

}  // namespace paramcont
