#pragma once

#include "dh/diagrams.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace dh {

struct GroupSpec {
    enum class Kind { Trivial, Cyclic, Symmetric, Perm, Free, Abelian };

    Kind kind = Kind::Trivial;
    std::size_t order = 0;   // cyclic; 0 is infinite cyclic
    std::size_t degree = 0;  // symmetric, perm
    std::vector<Perm> generators;
    std::size_t rank = 0;  // free rank, or abelian generator count
    std::vector<std::vector<long>> relations;  // abelian: one relation vector each

    bool operator==(const GroupSpec&) const = default;
};

const char* to_string(GroupSpec::Kind k);

/// A diagram description as read from a JSON file. Group documents hold
/// permutation and free groups; a document with any group of kind
/// "abelian" describes a diagram of abelian groups.
struct InputDocument {
    struct ArrowSpec {
        std::string name;
        std::string from;
        std::string to;
        bool operator==(const ArrowSpec&) const = default;
    };

    std::vector<std::string> vertices;
    std::vector<ArrowSpec> arrows;
    bool poset = false;
    std::vector<GroupSpec> groups;  // one per vertex
    std::vector<nlohmann::json> homs;  // one per arrow, as written
    nlohmann::json tasks;             // null when absent

    bool operator==(const InputDocument&) const = default;

    bool is_abelian() const;
    Graph graph() const;
    FreeCategory category() const;
    /// Fails for abelian documents.
    GroupDiagram group_diagram() const;
    /// The abelian diagram, or the abelianization of the group diagram.
    AbelianDiagram abelian_diagram() const;
};

InputDocument parse_document(const nlohmann::json& j);
InputDocument parse_document_text(const std::string& text);
InputDocument read_document(const std::string& path);
nlohmann::json serialize(const InputDocument& doc);

}  // namespace dh
