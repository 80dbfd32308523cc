#include "supercurve/atlas.hpp"

#include <fstream>
#include <queue>
#include <sstream>

namespace supercurve {

int Atlas::chart_index(const std::string& name) const {
    for (size_t i = 0; i < charts.size(); ++i)
        if (charts[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown chart " + name);
}

AtlasReport verify_atlas(const Atlas& atlas) {
    AtlasReport rep;
    rep.cocycle_ok = true;
    if (atlas.kind == AtlasKind::Quotient) {
        for (size_t i = 0; i < atlas.generators.size(); ++i)
            for (size_t j = i + 1; j < atlas.generators.size(); ++j) {
                const auto& [na, ga] = atlas.generators[i];
                const auto& [nb, gb] = atlas.generators[j];
                if (compose(ga, gb) != compose(gb, ga)) {
                    rep.cocycle_ok = false;
                    rep.cocycle_failures.push_back("generators " + na + ", " + nb +
                                                   " do not commute");
                }
            }
        return rep;
    }
    for (const auto& [ij, t_ij] : atlas.transitions) {
        if (ij.first == ij.second && t_ij != SuperMap::identity(atlas.sig)) {
            rep.cocycle_ok = false;
            rep.cocycle_failures.push_back("self transition of " + atlas.charts[ij.first] +
                                           " is not the identity");
        }
        for (const auto& [jk, t_jk] : atlas.transitions) {
            if (jk.first != ij.second) continue;
            auto ik = atlas.transitions.find({ij.first, jk.second});
            if (ik == atlas.transitions.end()) continue;
            if (compose(t_jk, t_ij) != ik->second) {
                rep.cocycle_ok = false;
                rep.cocycle_failures.push_back(
                    "cocycle fails on (" + atlas.charts[ij.first] + "," +
                    atlas.charts[ij.second] + "," + atlas.charts[jk.second] + ")");
            }
        }
    }
    return rep;
}

AtlasReport classify_atlas(const Atlas& atlas) {
    AtlasReport rep = verify_atlas(atlas);
    if (!rep.cocycle_ok) {
        rep.verdict = S2Verdict::Neither;
        return rep;
    }
    bool all_delta = true;
    auto handle = [&](const std::string& name, const SuperMap& t) {
        bool d = is_aut_delta(t);
        rep.per_transition_aut_delta.emplace_back(name, d);
        all_delta = all_delta && d;
        if (d) rep.torsor.lambda.emplace_back(name, extract_lambda(t));
    };
    if (atlas.kind == AtlasKind::Quotient) {
        for (const auto& [name, g] : atlas.generators) handle(name, g);
    } else {
        for (const auto& [ij, t] : atlas.transitions)
            handle(atlas.charts[ij.first] + "->" + atlas.charts[ij.second], t);
    }
    if (!all_delta) {
        rep.verdict = S2Verdict::Neither;
        return rep;
    }

    if (atlas.kind == AtlasKind::Quotient) {
        // A trivializing section over a translation quotient must be
        // translation invariant, hence constant: every lambda must vanish.
        bool ok = true;
        for (const auto& [name, l] : rep.torsor.lambda) {
            (void)name;
            ok = ok && l.is_zero();
        }
        rep.verdict = ok ? S2Verdict::S2 : S2Verdict::S12NotS2;
        if (ok) {
            std::vector<std::pair<std::string, SuperElement>> w;
            for (const auto& [name, g] : atlas.generators) {
                (void)g;
                w.emplace_back(name, SuperElement::zero(atlas.sig));
            }
            rep.witness = std::move(w);
        }
        return rep;
    }

    // Solve lambda_ij = mu_j - mu_i over the chart graph.
    int n = static_cast<int>(atlas.charts.size());
    std::vector<std::optional<SuperElement>> mu(n);
    std::map<std::pair<int, int>, SuperElement> lam;
    size_t idx = 0;
    for (const auto& [ij, t] : atlas.transitions) {
        (void)t;
        lam.emplace(ij, rep.torsor.lambda[idx++].second);
    }
    bool consistent = true;
    for (int root = 0; root < n; ++root) {
        if (mu[root]) continue;
        mu[root] = SuperElement::zero(atlas.sig);
        std::queue<int> work;
        work.push(root);
        while (!work.empty()) {
            int i = work.front();
            work.pop();
            for (const auto& [ij, l] : lam) {
                int from = ij.first, to = ij.second;
                if (from == i && !mu[to]) {
                    mu[to] = *mu[i] + l;
                    work.push(to);
                } else if (to == i && !mu[from]) {
                    mu[from] = *mu[i] - l;
                    work.push(from);
                }
            }
        }
    }
    for (const auto& [ij, l] : lam)
        consistent = consistent && (*mu[ij.second] - *mu[ij.first] == l);
    rep.verdict = consistent ? S2Verdict::S2 : S2Verdict::S12NotS2;
    if (consistent) {
        std::vector<std::pair<std::string, SuperElement>> w;
        for (int i = 0; i < n; ++i) w.emplace_back(atlas.charts[i], *mu[i]);
        rep.witness = std::move(w);
    }
    return rep;
}

Atlas split_curve_atlas(const SplitCurveData& data, const AlgebraSignature& sig) {
    Atlas a;
    a.sig = sig;
    a.kind = AtlasKind::Cover;
    a.charts = {"u0", "u1"};
    a.transitions.emplace(std::make_pair(0, 1), split_transition(data, sig));
    return a;
}

std::string verdict_name(S2Verdict v) {
    switch (v) {
        case S2Verdict::S2: return "S(2)";
        case S2Verdict::S12NotS2: return "S(1|2)-not-S(2)";
        default: return "neither";
    }
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

SuperMap parse_map_spec(const std::string& text, const AlgebraSignature& sig, int lineno) {
    // F | phi1 , phi2 , ...
    auto bar = text.find('|');
    if (bar == std::string::npos)
        throw ParseError("transition needs 'F | phi...'", lineno, 1);
    SuperElement F = parse_expression(text.substr(0, bar), sig);
    std::vector<SuperElement> phi;
    std::string rest = text.substr(bar + 1);
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= rest.size(); ++i) {
        if (i < rest.size() && rest[i] == '(') ++depth;
        if (i < rest.size() && rest[i] == ')') --depth;
        if (i == rest.size() || (rest[i] == ',' && depth == 0)) {
            phi.push_back(parse_expression(rest.substr(start, i - start), sig));
            start = i + 1;
        }
    }
    return SuperMap(sig, std::move(F), std::move(phi));
}

} // namespace

Atlas parse_atlas(const std::string& text) {
    Atlas atlas;
    std::optional<AlgebraSignature> sig;
    std::string even_name = "z";
    int N = -1, M = -1, e_min = 0, e_max = 0;
    bool exact = false, windowed = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto ensure_sig = [&](int ln) -> const AlgebraSignature& {
        if (!sig) {
            if (N < 0) throw ParseError("signature line must come first", ln, 1);
            if (!windowed && !exact) throw ParseError("window or exact-poly required", ln, 1);
            sig = AlgebraSignature(even_name, N, M, e_min, e_max, exact);
            atlas.sig = *sig;
        }
        return *sig;
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto colon = line.find(':');
        std::string head = colon == std::string::npos ? line : line.substr(0, colon);
        auto words = split_ws(head);
        if (words.empty()) continue;
        const std::string& key = words[0];
        if (key == "signature") {
            if (words.size() != 4) throw ParseError("signature <name> <N> <M>", lineno, 1);
            even_name = words[1];
            N = std::stoi(words[2]);
            M = std::stoi(words[3]);
        } else if (key == "window") {
            if (words.size() != 3) throw ParseError("window <e_min> <e_max>", lineno, 1);
            e_min = std::stoi(words[1]);
            e_max = std::stoi(words[2]);
            windowed = true;
        } else if (key == "exact-poly") {
            exact = true;
        } else if (key == "kind") {
            if (words.size() != 2 || (words[1] != "cover" && words[1] != "quotient"))
                throw ParseError("kind cover|quotient", lineno, 1);
            atlas.kind = words[1] == "cover" ? AtlasKind::Cover : AtlasKind::Quotient;
        } else if (key == "charts") {
            for (size_t i = 1; i < words.size(); ++i) atlas.charts.push_back(words[i]);
        } else if (key == "transition") {
            if (words.size() != 3 || colon == std::string::npos)
                throw ParseError("transition <ci> <cj> : F | phi...", lineno, 1);
            const AlgebraSignature& s = ensure_sig(lineno);
            int i = atlas.chart_index(words[1]);
            int j = atlas.chart_index(words[2]);
            atlas.transitions.emplace(std::make_pair(i, j),
                                      parse_map_spec(line.substr(colon + 1), s, lineno));
        } else if (key == "generator") {
            if (words.size() != 2 || colon == std::string::npos)
                throw ParseError("generator <name> : F | phi...", lineno, 1);
            const AlgebraSignature& s = ensure_sig(lineno);
            atlas.generators.emplace_back(words[1],
                                          parse_map_spec(line.substr(colon + 1), s, lineno));
        } else {
            throw ParseError("unknown atlas directive " + key, lineno, 1);
        }
    }
    ensure_sig(lineno);
    return atlas;
}

Atlas load_atlas_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open atlas file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_atlas(buf.str());
}

} // namespace supercurve
