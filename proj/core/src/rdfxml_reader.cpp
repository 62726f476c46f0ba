#include <algorithm>
#include <cctype>
#include <memory>

#include <expat.h>

#include "onto2cdm/error.hpp"
#include "onto2cdm/owl_reader.hpp"

namespace onto2cdm {

namespace {

constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
constexpr std::string_view kXml = "http://www.w3.org/XML/1998/namespace";

// ---------------------------------------------------------------------------
// Minimal DOM built from expat events. Names arrive as "<ns-uri> <local>"
// because the parser is created in namespace mode with ' ' as separator.

struct XmlName {
    std::string ns;
    std::string local;

    bool is(std::string_view n, std::string_view l) const { return ns == n && local == l; }
};

struct XmlNode {
    XmlName name;
    std::vector<std::pair<XmlName, std::string>> attrs;
    std::string text;
    std::vector<std::unique_ptr<XmlNode>> children;
    std::size_t line = 0;
    std::size_t column = 0;

    const std::string* attr(std::string_view ns, std::string_view local) const {
        for (const auto& [n, v] : attrs) {
            if (n.is(ns, local)) {
                return &v;
            }
        }
        return nullptr;
    }
};

XmlName split_name(const char* raw) {
    std::string_view s(raw);
    auto space = s.find(' ');
    if (space == std::string_view::npos) {
        return {"", std::string(s)};
    }
    return {std::string(s.substr(0, space)), std::string(s.substr(space + 1))};
}

struct DomBuilder {
    XML_Parser parser = nullptr;
    std::unique_ptr<XmlNode> root;
    std::vector<XmlNode*> open;

    static void on_start(void* ud, const XML_Char* name, const XML_Char** atts) {
        auto* self = static_cast<DomBuilder*>(ud);
        auto node = std::make_unique<XmlNode>();
        node->name = split_name(name);
        node->line = XML_GetCurrentLineNumber(self->parser);
        node->column = XML_GetCurrentColumnNumber(self->parser) + 1;
        for (int i = 0; atts[i]; i += 2) {
            node->attrs.emplace_back(split_name(atts[i]), atts[i + 1]);
        }
        XmlNode* raw = node.get();
        if (self->open.empty()) {
            self->root = std::move(node);
        } else {
            self->open.back()->children.push_back(std::move(node));
        }
        self->open.push_back(raw);
    }

    static void on_end(void* ud, const XML_Char*) {
        static_cast<DomBuilder*>(ud)->open.pop_back();
    }

    static void on_text(void* ud, const XML_Char* s, int len) {
        auto* self = static_cast<DomBuilder*>(ud);
        if (!self->open.empty()) {
            self->open.back()->text.append(s, static_cast<std::size_t>(len));
        }
    }
};

std::unique_ptr<XmlNode> parse_xml(std::istream& in) {
    std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(
        XML_ParserCreateNS(nullptr, ' '), &XML_ParserFree);
    if (!parser) {
        throw Error("cannot allocate XML parser");
    }
    DomBuilder builder;
    builder.parser = parser.get();
    XML_SetUserData(parser.get(), &builder);
    XML_SetElementHandler(parser.get(), &DomBuilder::on_start, &DomBuilder::on_end);
    XML_SetCharacterDataHandler(parser.get(), &DomBuilder::on_text);

    char buf[16384];
    bool done = false;
    while (!done) {
        in.read(buf, sizeof buf);
        const auto got = in.gcount();
        done = got < static_cast<std::streamsize>(sizeof buf);
        if (XML_Parse(parser.get(), buf, static_cast<int>(got), done) == XML_STATUS_ERROR) {
            throw MalformedInput(XML_GetCurrentLineNumber(parser.get()),
                                 XML_GetCurrentColumnNumber(parser.get()) + 1,
                                 XML_ErrorString(XML_GetErrorCode(parser.get())));
        }
    }
    if (!builder.root) {
        throw MalformedInput(1, 1, "empty document");
    }
    return std::move(builder.root);
}

// ---------------------------------------------------------------------------

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

/// Short name for an IRI: well-known vocabularies keep a prefix, everything
/// else is reduced to its fragment or last path segment.
std::string iri_to_name(std::string_view iri) {
    auto strip = [&](std::string_view ns, std::string_view prefix) -> std::optional<std::string> {
        if (iri.substr(0, ns.size()) == ns) {
            return std::string(prefix) + std::string(iri.substr(ns.size()));
        }
        return std::nullopt;
    };
    if (auto s = strip(kOwl, "owl:")) return *s;
    if (auto s = strip(kXsd, "xsd:")) return *s;
    if (auto s = strip(kRdfs, "rdfs:")) return *s;
    if (auto s = strip(kRdf, "rdf:")) return *s;
    auto cut = iri.rfind('#');
    if (cut == std::string_view::npos) {
        cut = iri.rfind('/');
    }
    return std::string(cut == std::string_view::npos ? iri : iri.substr(cut + 1));
}

std::string qualified(const XmlName& n) {
    if (n.ns == kOwl) return "owl:" + n.local;
    if (n.ns == kRdfs) return "rdfs:" + n.local;
    if (n.ns == kRdf) return "rdf:" + n.local;
    if (n.ns == kXsd) return "xsd:" + n.local;
    if (n.ns.empty()) return n.local;
    return "{" + n.ns + "}" + n.local;
}

enum class DeclaredKind { Unknown, Object, Datatype };

struct PendingProperty {
    OntoProperty property;
    DeclaredKind declared = DeclaredKind::Unknown;
    bool has_range = false;
};

class RdfXmlReader {
public:
    explicit RdfXmlReader(const ReaderConfig& config) : config_(config) {}

    ReadReport run(std::istream& source) {
        auto root = parse_xml(source);
        if (!root->name.is(kRdf, "RDF")) {
            throw MalformedInput(root->line, root->column,
                                 "root element must be rdf:RDF, got " + qualified(root->name));
        }
        if (const auto* base = root->attr(kXml, "base")) {
            report_.ontology.iri = *base;
        }
        for (const auto& child : root->children) {
            top_level(*child);
        }
        finish();
        return std::move(report_);
    }

private:
    void skip(const XmlNode& node, const std::string& construct) {
        if (config_.strict) {
            throw UnsupportedConstruct(construct);
        }
        ++report_.skipped_constructs[construct];
        report_.warnings.emplace_back(
            DiagnosticCode::ReaderSkipped, std::vector<std::string>{construct},
            "skipped unsupported construct " + construct + " at line " + std::to_string(node.line));
    }

    [[noreturn]] void malformed(const XmlNode& node, const std::string& detail) {
        throw MalformedInput(node.line, node.column, detail);
    }

    std::optional<std::string> about(const XmlNode& node) {
        if (const auto* a = node.attr(kRdf, "about")) {
            return iri_to_name(*a);
        }
        if (const auto* id = node.attr(kRdf, "ID")) {
            return *id;
        }
        return std::nullopt;
    }

    std::optional<std::string> resource(const XmlNode& node) {
        if (const auto* r = node.attr(kRdf, "resource")) {
            return iri_to_name(*r);
        }
        return std::nullopt;
    }

    std::string next_anon() { return std::string(kAnonPrefix) + std::to_string(++anon_counter_); }

    void note_annotation(std::map<std::string, std::string>& annotations, const XmlNode& node) {
        std::string key = qualified(node.name);
        std::string value = trim(node.text);
        if (!annotations.count(key)) {
            annotations.emplace(std::move(key), std::move(value));
            return;
        }
        for (int n = 2;; ++n) {
            std::string k = key + "#" + std::to_string(n);
            if (!annotations.count(k)) {
                annotations.emplace(std::move(k), std::move(value));
                return;
            }
        }
    }

    void top_level(const XmlNode& node) {
        if (node.name.is(kOwl, "Ontology")) {
            ontology_header(node);
        } else if (node.name.is(kOwl, "Class")) {
            class_description(node);
        } else if (node.name.is(kOwl, "Restriction")) {
            restriction(node);
        } else if (node.name.is(kOwl, "ObjectProperty")) {
            property_description(node, DeclaredKind::Object, false);
        } else if (node.name.is(kOwl, "DatatypeProperty")) {
            property_description(node, DeclaredKind::Datatype, false);
        } else if (node.name.is(kOwl, "FunctionalProperty")) {
            property_description(node, DeclaredKind::Unknown, true);
        } else if (node.name.is(kRdf, "Property")) {
            property_description(node, DeclaredKind::Unknown, false);
        } else {
            skip(node, qualified(node.name));
        }
    }

    void ontology_header(const XmlNode& node) {
        if (auto name = node.attr(kRdf, "about"); name && !name->empty()) {
            report_.ontology.iri = *name;
        }
        for (const auto& child : node.children) {
            const auto& n = child->name;
            if (n.is(kRdfs, "label") || n.is(kRdfs, "comment") || n.is(kOwl, "versionInfo")) {
                continue;
            }
            skip(*child, qualified(n));
        }
    }

    OntoClass& declare_class(const std::string& name) {
        auto [it, inserted] = report_.ontology.classes.try_emplace(name);
        if (inserted) {
            it->second.name = name;
        }
        return it->second;
    }

    /// Parses an anonymous or named class expression appearing as the value
    /// of another construct; returns its (possibly synthetic) name, or
    /// nullopt when the expression was skipped.
    std::optional<std::string> class_expression(const XmlNode& node) {
        if (node.name.is(kOwl, "Restriction")) {
            return restriction(node);
        }
        if (node.name.is(kOwl, "Class") || node.name.is(kRdf, "Description")) {
            if (auto name = about(node); name && node.children.empty()) {
                return name;
            }
            if (node.name.is(kRdf, "Description")) {
                skip(node, "rdf:Description");
                return std::nullopt;
            }
            return class_description(node);
        }
        skip(node, qualified(node.name));
        return std::nullopt;
    }

    std::optional<std::string> value_class(const XmlNode& holder) {
        if (auto r = resource(holder)) {
            return r;
        }
        if (holder.children.size() != 1) {
            malformed(holder, qualified(holder.name) + " needs rdf:resource or one class element");
        }
        return class_expression(*holder.children.front());
    }

    std::optional<std::string> class_description(const XmlNode& node) {
        auto declared = about(node);
        const std::string name = declared ? *declared : next_anon();
        if (is_builtin_class(name)) {
            return name;
        }
        declare_class(name);
        for (const auto& child : node.children) {
            const auto& n = child->name;
            if (n.is(kRdfs, "subClassOf")) {
                if (auto super = value_class(*child)) {
                    report_.ontology.subsumptions.emplace(name, *super);
                }
            } else if (n.is(kOwl, "intersectionOf") || n.is(kOwl, "unionOf")) {
                boolean_expression(name, *child);
            } else if (n.is(kOwl, "equivalentClass")) {
                if (child->children.size() == 1 && child->children.front()->name.is(kOwl, "Class") &&
                    !about(*child->children.front())) {
                    for (const auto& inner : child->children.front()->children) {
                        if (inner->name.is(kOwl, "intersectionOf") || inner->name.is(kOwl, "unionOf")) {
                            boolean_expression(name, *inner);
                        } else {
                            skip(*inner, qualified(inner->name));
                        }
                    }
                } else {
                    skip(*child, "owl:equivalentClass");
                }
            } else if (n.is(kRdfs, "label") || n.is(kRdfs, "comment")) {
                note_annotation(declare_class(name).annotations, *child);
            } else {
                skip(*child, qualified(n));
            }
        }
        return name;
    }

    void boolean_expression(const std::string& owner, const XmlNode& node) {
        std::vector<std::string> operands;
        for (const auto& child : node.children) {
            if (auto op = class_expression(*child)) {
                operands.push_back(*op);
            }
        }
        OntoClass& c = declare_class(owner);
        if (c.kind != ClassKind::Named || !c.operands.empty()) {
            malformed(node, owner + " is defined by more than one boolean expression");
        }
        c.kind = node.name.local == "intersectionOf" ? ClassKind::Intersection : ClassKind::Union;
        c.operands = std::move(operands);
    }

    std::optional<std::string> restriction(const XmlNode& node) {
        auto declared = about(node);
        const std::string name = declared ? *declared : next_anon();
        RestrictionSpec spec;
        bool has_property = false;
        bool has_value_constraint = false;
        std::optional<std::uint32_t> min_card;
        std::optional<std::uint32_t> max_card;
        bool unsupported = false;

        auto count = [&](const XmlNode& n) -> std::uint32_t {
            const std::string t = trim(n.text);
            if (t.empty() || !std::all_of(t.begin(), t.end(),
                                          [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
                malformed(n, "cardinality must be a non-negative integer, got '" + t + "'");
            }
            try {
                return static_cast<std::uint32_t>(std::stoul(t));
            } catch (const std::exception&) {
                malformed(n, "cardinality out of range: '" + t + "'");
            }
        };

        for (const auto& child : node.children) {
            const auto& n = child->name;
            if (n.is(kOwl, "onProperty")) {
                auto p = resource(*child);
                if (!p) {
                    malformed(*child, "owl:onProperty needs rdf:resource");
                }
                spec.on_property = *p;
                has_property = true;
            } else if (n.is(kOwl, "someValuesFrom") || n.is(kOwl, "allValuesFrom")) {
                if (has_value_constraint) {
                    malformed(*child, "restriction carries more than one value constraint");
                }
                auto filler = value_class(*child);
                if (!filler) {
                    unsupported = true;
                    continue;
                }
                spec.filler = *filler;
                spec.constraint = n.local == "someValuesFrom" ? ConstraintKind::SomeValuesFrom
                                                               : ConstraintKind::AllValuesFrom;
                has_value_constraint = true;
            } else if (n.is(kOwl, "cardinality")) {
                min_card = max_card = count(*child);
            } else if (n.is(kOwl, "minCardinality")) {
                min_card = count(*child);
            } else if (n.is(kOwl, "maxCardinality")) {
                max_card = count(*child);
            } else if (n.is(kRdfs, "label") || n.is(kRdfs, "comment")) {
                continue;
            } else {
                skip(*child, qualified(n));
                unsupported = true;
            }
        }
        if (unsupported) {
            return std::nullopt;
        }
        if (!has_property) {
            malformed(node, "owl:Restriction without owl:onProperty");
        }
        const bool has_card = min_card || max_card;
        if (has_card == has_value_constraint) {
            malformed(node, has_card ? "restriction mixes value and cardinality constraints"
                                     : "restriction has no constraint");
        }
        if (has_card) {
            spec.constraint = ConstraintKind::Cardinality;
            spec.cardinality = Cardinality{min_card.value_or(0), max_card};
            if (!spec.cardinality.valid()) {
                malformed(node, "minCardinality exceeds maxCardinality");
            }
            cardinality_without_filler_.push_back(name);
        }
        OntoClass& c = declare_class(name);
        c.kind = ClassKind::Restriction;
        c.restriction = std::move(spec);
        return name;
    }

    void property_description(const XmlNode& node, DeclaredKind kind, bool functional) {
        auto name = about(node);
        if (!name) {
            malformed(node, "property declaration without rdf:about or rdf:ID");
        }
        auto [it, inserted] = properties_.try_emplace(*name);
        PendingProperty& pending = it->second;
        if (inserted) {
            pending.property.name = *name;
            first_seen_[*name] = &node;
        }
        if (kind != DeclaredKind::Unknown) {
            pending.declared = kind;
        }
        pending.property.functional |= functional;

        for (const auto& child : node.children) {
            const auto& n = child->name;
            if (n.is(kRdfs, "domain") || n.is(kRdfs, "range") || n.is(kOwl, "inverseOf")) {
                auto target = resource(*child);
                if (!target) {
                    skip(*child, qualified(n) + " (class expression)");
                    continue;
                }
                if (n.local == "domain") {
                    if (pending.property.domain && *pending.property.domain != *target) {
                        skip(*child, "rdfs:domain (multiple)");
                        continue;
                    }
                    pending.property.domain = *target;
                } else if (n.local == "range") {
                    if (pending.has_range && pending.property.range != *target) {
                        skip(*child, "rdfs:range (multiple)");
                        continue;
                    }
                    pending.property.range = *target;
                    pending.has_range = true;
                } else {
                    pending.property.inverse_of = *target;
                }
            } else if (n.is(kRdf, "type")) {
                const auto type = resource(*child).value_or("");
                if (type == "owl:FunctionalProperty") {
                    pending.property.functional = true;
                } else if (type == "owl:ObjectProperty") {
                    pending.declared = DeclaredKind::Object;
                } else if (type == "owl:DatatypeProperty") {
                    pending.declared = DeclaredKind::Datatype;
                } else {
                    skip(*child, type.empty() ? "rdf:type" : type);
                }
            } else if (n.is(kRdfs, "label") || n.is(kRdfs, "comment")) {
                note_annotation(pending.property.annotations, *child);
            } else {
                skip(*child, qualified(n));
            }
        }
    }

    void finish() {
        Ontology& onto = report_.ontology;
        if (onto.iri.empty() && config_.base_iri) {
            onto.iri = *config_.base_iri;
        }
        for (auto& [name, pending] : properties_) {
            OntoProperty p = std::move(pending.property);
            if (!pending.has_range) {
                p.range = pending.declared == DeclaredKind::Datatype ? "rdfs:Literal"
                                                                     : std::string(kOwlThing);
            }
            const bool datatype_range = is_datatype(onto, p.range);
            if (pending.declared == DeclaredKind::Datatype && pending.has_range && !datatype_range) {
                const XmlNode& at = *first_seen_.at(name);
                throw MalformedInput(at.line, at.column,
                                     name + ": datatype property with class range " + p.range);
            }
            p.kind = datatype_range ? PropertyKind::Intrinsic : PropertyKind::Mutual;
            onto.properties.emplace(name, std::move(p));
        }
        // owl:inverseOf stated on one side holds for both.
        for (auto& [name, p] : onto.properties) {
            if (!p.inverse_of) {
                continue;
            }
            if (auto inv = onto.properties.find(*p.inverse_of);
                inv != onto.properties.end() && !inv->second.inverse_of) {
                inv->second.inverse_of = name;
            }
        }
        for (const auto& name : cardinality_without_filler_) {
            auto& r = *onto.classes.at(name).restriction;
            auto p = onto.properties.find(r.on_property);
            if (p == onto.properties.end()) {
                throw UnresolvedReference(r.on_property);
            }
            r.filler = p->second.range;
        }

        for (const auto& d : validate_ontology(onto)) {
            if (d.severity != Severity::Error) {
                continue;
            }
            if (d.code == DiagnosticCode::OntoUnresolved) {
                throw UnresolvedReference(d.subjects.back());
            }
            throw MalformedInput(0, 0, d.message);
        }
    }

    const ReaderConfig& config_;
    ReadReport report_;
    std::map<std::string, PendingProperty> properties_;
    std::map<std::string, const XmlNode*> first_seen_;
    std::vector<std::string> cardinality_without_filler_;
    int anon_counter_ = 0;
};

}  // namespace

ReadReport read_rdfxml(std::istream& source, const ReaderConfig& config) {
    return RdfXmlReader(config).run(source);
}

}  // namespace onto2cdm
