#include "onto2cdm/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>

#include "onto2cdm/error.hpp"

namespace onto2cdm {

ConstructCounts count_constructs(const Ontology& ontology, const ConceptualModel& model) {
    ConstructCounts c;
    for (const auto& [_, cls] : ontology.classes) {
        if (is_named_concept(cls)) ++c.classes;
    }
    for (const auto& [sub, super] : ontology.subsumptions) {
        auto s = ontology.classes.find(sub);
        auto p = ontology.classes.find(super);
        if (s != ontology.classes.end() && p != ontology.classes.end() &&
            is_named_concept(s->second) && is_named_concept(p->second)) {
            ++c.subsumptions;
        }
    }
    for (const auto& [_, p] : ontology.properties) {
        ++(p.kind == PropertyKind::Mutual ? c.mutual_properties : c.intrinsic_properties);
    }
    c.model = model_counts(model);
    return c;
}

RegressionResult fit_regression(const std::vector<std::pair<double, double>>& points) {
    const std::size_t n = points.size();
    if (n < 2) {
        throw DegenerateInput("regression needs at least two points, got " + std::to_string(n));
    }
    double mx = 0, my = 0;
    for (const auto& [x, y] : points) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [x, y] : points) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    if (sxx == 0) {
        throw DegenerateInput("all x values are identical");
    }
    RegressionResult r;
    r.n = n;
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    if (syy == 0) {
        r.r_squared = 1.0;  // residuals vanish too: the line is y = my
    } else {
        // SS_res = syy - slope * sxy for the least-squares line
        r.r_squared = std::clamp((sxy * sxy) / (sxx * syy), 0.0, 1.0);
    }
    return r;
}

std::vector<std::string> tokenize_name(const std::string& name) {
    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) tokens.push_back(std::move(cur));
        cur.clear();
    };
    auto cls = [](unsigned char ch) {
        if (std::islower(ch)) return 1;
        if (std::isupper(ch)) return 2;
        if (std::isdigit(ch)) return 3;
        return 0;
    };
    for (std::size_t i = 0; i < name.size(); ++i) {
        const unsigned char ch = static_cast<unsigned char>(name[i]);
        const int k = cls(ch);
        if (k == 0) {
            flush();
            continue;
        }
        if (!cur.empty()) {
            const int prev = cls(static_cast<unsigned char>(name[i - 1]));
            const int next = i + 1 < name.size() ? cls(static_cast<unsigned char>(name[i + 1])) : 0;
            const bool split = (prev == 1 && k == 2) ||                 // aB
                               (prev == 2 && k == 2 && next == 1) ||    // ABc
                               ((prev == 3) != (k == 3));               // a1, 1a
            if (split) flush();
        }
        cur.push_back(static_cast<char>(std::tolower(ch)));
    }
    flush();
    return tokens;
}

std::string normalize_name(const std::string& name) {
    std::string out;
    for (const auto& t : tokenize_name(name)) {
        if (!out.empty()) out.push_back(' ');
        out += t;
    }
    return out;
}

namespace {

void finish(KindAccuracy& k, std::size_t matched, std::size_t missing, std::size_t extra) {
    k.recall = matched + missing ? static_cast<double>(matched) / static_cast<double>(matched + missing) : 1.0;
    k.precision = matched + extra ? static_cast<double>(matched) / static_cast<double>(matched + extra) : 1.0;
}

KindAccuracy compare_sets(const std::set<std::string>& generated, const std::set<std::string>& gold) {
    KindAccuracy k;
    for (const auto& g : gold) {
        (generated.count(g) ? k.matched : k.missing).insert(g);
    }
    for (const auto& g : generated) {
        if (!gold.count(g)) k.extra.insert(g);
    }
    finish(k, k.matched.size(), k.missing.size(), k.extra.size());
    return k;
}

std::set<std::string> entity_names(const ConceptualModel& m) {
    std::set<std::string> out;
    for (const auto& [name, _] : m.entity_types) out.insert(normalize_name(name));
    return out;
}

std::set<std::string> generalization_names(const ConceptualModel& m) {
    std::set<std::string> out;
    for (const auto& [sub, super] : m.generalizations) {
        out.insert(normalize_name(sub) + " -> " + normalize_name(super));
    }
    return out;
}

std::set<std::string> attribute_names(const ConceptualModel& m) {
    std::set<std::string> out;
    for (const auto& [name, e] : m.entity_types) {
        for (const auto& a : e.attributes) {
            out.insert(normalize_name(name) + "." + normalize_name(a.name));
        }
    }
    return out;
}

}  // namespace

AccuracyReport compare_models(const ConceptualModel& generated, const ConceptualModel& gold) {
    AccuracyReport report;
    report.entity_types = compare_sets(entity_names(generated), entity_names(gold));
    report.generalizations = compare_sets(generalization_names(generated), generalization_names(gold));
    report.attributes = compare_sets(attribute_names(generated), attribute_names(gold));

    // Relationships: multiset match per endpoint pair, same names first.
    using Ends = std::pair<std::string, std::string>;
    std::map<Ends, std::pair<std::vector<std::string>, std::vector<std::string>>> by_ends;
    for (const auto& r : generated.relationships) {
        by_ends[{normalize_name(r.source), normalize_name(r.target)}].first.push_back(normalize_name(r.name));
    }
    for (const auto& r : gold.relationships) {
        by_ends[{normalize_name(r.source), normalize_name(r.target)}].second.push_back(normalize_name(r.name));
    }
    std::size_t matched = 0, missing = 0, extra = 0;
    KindAccuracy& k = report.relationships;
    for (auto& [ends, lists] : by_ends) {
        auto& [gen, gold_names] = lists;
        std::sort(gen.begin(), gen.end());
        std::sort(gold_names.begin(), gold_names.end());
        const std::string tail = " (" + ends.first + " -> " + ends.second + ")";
        std::vector<std::string> gen_left, gold_left;
        std::set_difference(gen.begin(), gen.end(), gold_names.begin(), gold_names.end(),
                            std::back_inserter(gen_left));
        std::set_difference(gold_names.begin(), gold_names.end(), gen.begin(), gen.end(),
                            std::back_inserter(gold_left));
        std::vector<std::string> same;
        std::set_intersection(gold_names.begin(), gold_names.end(), gen.begin(), gen.end(),
                              std::back_inserter(same));
        for (const auto& n : same) k.matched.insert(n + tail);
        matched += same.size();
        const std::size_t paired = std::min(gen_left.size(), gold_left.size());
        for (std::size_t i = 0; i < paired; ++i) {
            k.matched.insert(gold_left[i] + tail);
            report.relationship_name_mismatches.push_back(gen_left[i] + " ~ " + gold_left[i] + tail);
        }
        matched += paired;
        for (std::size_t i = paired; i < gold_left.size(); ++i) k.missing.insert(gold_left[i] + tail);
        for (std::size_t i = paired; i < gen_left.size(); ++i) k.extra.insert(gen_left[i] + tail);
        missing += gold_left.size() - paired;
        extra += gen_left.size() - paired;
    }
    finish(k, matched, missing, extra);
    return report;
}

Lexicon read_lexicon(std::istream& in) {
    Lexicon out;
    std::string line;
    while (std::getline(in, line)) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        std::string w = line.substr(b, e - b + 1);
        std::transform(w.begin(), w.end(), w.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
        out.insert(std::move(w));
    }
    return out;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw LexiconUnavailable(path.string());
    }
    return read_lexicon(in);
}

LexicalReport lexical_check(const std::vector<std::string>& names, const Lexicon& lexicon) {
    LexicalReport report;
    for (const auto& name : names) {
        LexicalEntry e;
        e.name = name;
        e.tokens = tokenize_name(name);
        for (const auto& t : e.tokens) {
            if (!lexicon.count(t)) e.unknown_tokens.push_back(t);
        }
        e.all_known = !e.tokens.empty() && e.unknown_tokens.empty();
        report.correct += e.all_known;
        report.entries.push_back(std::move(e));
    }
    if (!names.empty()) {
        report.percent_correct = 100.0 * static_cast<double>(report.correct) / static_cast<double>(names.size());
    }
    return report;
}

}  // namespace onto2cdm
