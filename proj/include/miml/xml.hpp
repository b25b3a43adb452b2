#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace miml::xml {

// Minimal XML element tree: enough for the label sidecar and experiment
// configuration files. Supports elements, attributes, text content, comments,
// an optional <?xml?> declaration, and the five standard entities.
struct Element {
    std::string name;
    std::map<std::string, std::string> attributes;
    std::vector<Element> children;
    std::string text; // concatenated character data, trimmed

    const Element* find(const std::string& child_name) const;
    std::vector<const Element*> find_all(const std::string& child_name) const;
    std::string attribute(const std::string& key, const std::string& fallback = "") const;
};

// Parses a document and returns its root element. Throws Error(SyntaxError)
// with line/column on malformed input.
Element parse(const std::string& content);

Element parse_file(const std::string& path);

std::string escape(const std::string& text);

} // namespace miml::xml
