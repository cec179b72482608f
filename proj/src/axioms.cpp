#include "paramcont/axioms.hpp"

namespace paramcont {

const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::Asy: return "Asy";
        case Axiom::NT: return "NT";
        case Axiom::CD: return "CD";
        case Axiom::JC: return "JC";
        case Axiom::LHC: return "LHC";
        case Axiom::UHC: return "UHC";
        case Axiom::Representation: return "Representation";
        case Axiom::ValueContinuity: return "ValueContinuity";
        case Axiom::CdNecessity: return "CdNecessity";
    }
    return "?";
}

AxiomReport check_asymmetry(const PreferenceField& field) {
    AxiomReport report;
    report.axiom = Axiom::Asy;
    const int J = field.alt_count;
    for (int x = 0; x < field.node_count(); ++x) {
        for (int a = 0; a < J; ++a) {
            if (field.strict_at(x, a, a)) {
                report.witnesses.push_back({x, a, a, -1, -1, "irreflexivity"});
            }
            for (int b = a + 1; b < J; ++b) {
                if (field.strict_at(x, a, b) && field.strict_at(x, b, a)) {
                    report.witnesses.push_back({x, a, b, -1, -1, "symmetric strict pair"});
                }
            }
        }
    }
    report.passed = report.witnesses.empty();
    return report;
}

AxiomReport check_negative_transitivity(const PreferenceField& field) {
    AxiomReport report;
    report.axiom = Axiom::NT;
    const int J = field.alt_count;
    for (int x = 0; x < field.node_count(); ++x) {
        for (int a = 0; a < J; ++a) {
            for (int b = 0; b < J; ++b) {
                if (a == b || !field.strict_at(x, a, b)) continue;
                for (int c = 0; c < J; ++c) {
                    if (!field.strict_at(x, c, b) && !field.strict_at(x, a, c)) {
                        report.witnesses.push_back(
                            {x, a, b, c, -1, "a<b but neither c<b nor a<c"});
                    }
                }
            }
        }
    }
    report.passed = report.witnesses.empty();
    return report;
}

namespace {

// Shared quantifier: for every node x and pair (a,b) in prec_x, some declared
// neighborhood preserves the pair throughout.
AxiomReport neighborhood_preservation(const PreferenceField& field,
                                      const SampledSpace& space, Axiom tag) {
    AxiomReport report;
    report.axiom = tag;
    if (field.node_count() != space.node_count()) {
        throw InputError("preference field and space node counts differ");
    }
    const int J = field.alt_count;
    for (int x = 0; x < space.node_count(); ++x) {
        for (int a = 0; a < J; ++a) {
            for (int b = 0; b < J; ++b) {
                if (a == b || !field.strict_at(x, a, b)) continue;
                bool preserved = false;
                for (const auto& nb : space.nodes[x].neighborhoods) {
                    bool all = true;
                    for (int y : nb) {
                        if (!field.strict_at(y, a, b)) {
                            all = false;
                            break;
                        }
                    }
                    if (all) {
                        preserved = true;
                        break;
                    }
                }
                if (!preserved) {
                    int failing = -1;
                    for (int y : space.innermost(x)) {
                        if (!field.strict_at(y, a, b)) {
                            failing = y;
                            break;
                        }
                    }
                    report.witnesses.push_back(
                        {x, a, b, -1, failing, "no neighborhood preserves the pair"});
                }
            }
        }
    }
    report.passed = report.witnesses.empty();
    return report;
}

}  // namespace

AxiomReport check_cd(const PreferenceField& field, const SampledSpace& space) {
    return neighborhood_preservation(field, space, Axiom::CD);
}

AxiomReport check_jc(const PreferenceField& field, const SampledSpace& space) {
    AxiomReport report = neighborhood_preservation(field, space, Axiom::JC);
    report.note =
        "finite alternative set: joint-closedness check coincides with CD; the "
        "gap between the two requires infinitely many alternatives";
    return report;
}

AxiomReport preference_correspondence_lhc(const PreferenceField& field,
                                          const SampledSpace& space) {
    // Lower hemicontinuity of x -> prec_x against singleton open sets
    // {(a,b)}: the same quantifier as CD, coded over the correspondence view.
    AxiomReport report;
    report.axiom = Axiom::LHC;
    if (field.node_count() != space.node_count()) {
        throw InputError("preference field and space node counts differ");
    }
    for (int x = 0; x < space.node_count(); ++x) {
        DerivedRelations rel = derived_relations(field, x);
        for (const auto& [a, b] : rel.strict) {
            bool persists = false;
            for (const auto& nb : space.nodes[x].neighborhoods) {
                bool all = true;
                for (int y : nb) {
                    if (!field.strict_at(y, a, b)) {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    persists = true;
                    break;
                }
            }
            if (!persists) {
                int failing = -1;
                for (int y : space.innermost(x)) {
                    if (!field.strict_at(y, a, b)) {
                        failing = y;
                        break;
                    }
                }
                report.witnesses.push_back(
                    {x, a, b, -1, failing, "pair leaves the correspondence nearby"});
            }
        }
    }
    report.passed = report.witnesses.empty();
    return report;
}

}  // namespace paramcont
