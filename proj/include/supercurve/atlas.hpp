#pragma once

#include <map>

#include "supercurve/curves.hpp"
#include "supercurve/parser.hpp"

namespace supercurve {

enum class AtlasKind { Cover, Quotient };

/// Charts with transitions (cover presentation, transition i->j with
/// cocycle phi_jk o phi_ij = phi_ik) or a commuting set of deck generators
/// (quotient presentation).
struct Atlas {
    AlgebraSignature sig;
    AtlasKind kind = AtlasKind::Cover;
    std::vector<std::string> charts;
    std::map<std::pair<int, int>, SuperMap> transitions;
    std::vector<std::pair<std::string, SuperMap>> generators;

    int chart_index(const std::string& name) const;
};

enum class S2Verdict { S2, S12NotS2, Neither };

struct TorsorClass {
    /// One constant per overlap or generator, in declaration order.
    std::vector<std::pair<std::string, SuperElement>> lambda;
};

struct AtlasReport {
    bool cocycle_ok = false;
    std::vector<std::string> cocycle_failures;
    std::vector<std::pair<std::string, bool>> per_transition_aut_delta;
    TorsorClass torsor;
    S2Verdict verdict = S2Verdict::Neither;
    /// Coboundary witness mu per chart (cover) or zero section (quotient)
    /// when the verdict is S2.
    std::optional<std::vector<std::pair<std::string, SuperElement>>> witness;
};

/// Exact cocycle (cover) or commutation (quotient) check.
AtlasReport verify_atlas(const Atlas& atlas);

/// verify_atlas, then Aut^delta per transition, lambda extraction and the
/// torsor triviality test: coboundary solve over the cover, or lambda = 0
/// on every generator for translation-quotient presentations.
AtlasReport classify_atlas(const Atlas& atlas);

/// Two-chart atlas of the split curve.
Atlas split_curve_atlas(const SplitCurveData& data, const AlgebraSignature& sig);

/// Text format:
///   signature <even-name> <N> <M>
///   window <e_min> <e_max>        (or: exact-poly)
///   kind cover|quotient
///   charts <name> <name> ...
///   transition <ci> <cj> : F | phi1 , phi2
///   generator <name> : F | phi1 , phi2
Atlas parse_atlas(const std::string& text);
Atlas load_atlas_file(const std::string& path);

std::string verdict_name(S2Verdict v);

} // namespace supercurve
