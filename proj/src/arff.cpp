#include "miml/arff.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "miml/xml.hpp"

namespace miml {

namespace {

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(const std::string& s)
{
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void syntax_error(std::size_t line, std::size_t col, const std::string& message)
{
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": "
                    + message);
}

double parse_number(const std::string& token, std::size_t line, std::size_t col)
{
    std::string t = trim(token);
    if (t == "?")
        throw Error(ErrorKind::SchemaError,
                    "missing value '?' at line " + std::to_string(line) + " is not supported");
    double value = 0.0;
    const char* begin = t.data();
    const char* end = begin + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw Error(ErrorKind::SchemaError,
                    "non-numeric feature value '" + t + "' at line " + std::to_string(line)
                        + ", column " + std::to_string(col));
    return value;
}

std::string format_number(double value)
{
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

// One @attribute declaration: name plus its raw type text.
struct AttributeDecl {
    std::string name;
    std::string type; // lowercased for keywords, original for nominal sets
    std::size_t line;
};

// Splits "name rest" where name may be quoted.
AttributeDecl parse_attribute_decl(const std::string& rest, std::size_t line)
{
    std::string t = trim(rest);
    if (t.empty())
        syntax_error(line, 1, "@attribute needs a name and a type");
    AttributeDecl decl;
    decl.line = line;
    std::size_t i = 0;
    if (t[0] == '\'' || t[0] == '"') {
        char quote = t[0];
        auto end = t.find(quote, 1);
        if (end == std::string::npos)
            syntax_error(line, 1, "unterminated quoted attribute name");
        decl.name = t.substr(1, end - 1);
        i = end + 1;
    } else {
        while (i < t.size() && !std::isspace(static_cast<unsigned char>(t[i])))
            ++i;
        decl.name = t.substr(0, i);
    }
    decl.type = trim(t.substr(i));
    if (decl.name.empty() || decl.type.empty())
        syntax_error(line, 1, "@attribute needs a name and a type");
    return decl;
}

bool is_binary_nominal(const std::string& type)
{
    std::string t = trim(type);
    if (t.size() < 2 || t.front() != '{' || t.back() != '}')
        return false;
    std::vector<std::string> items;
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string item;
    while (std::getline(ss, item, ','))
        items.push_back(trim(item));
    std::sort(items.begin(), items.end());
    return items == std::vector<std::string>{"0", "1"};
}

bool is_nominal(const std::string& type)
{
    std::string t = trim(type);
    return t.size() >= 2 && t.front() == '{' && t.back() == '}';
}

// Top-level CSV split of a data row: fields separated by commas, with quoted
// fields kept intact ("" and \" both escape a quote inside them).
std::vector<std::string> split_data_row(const std::string& row, std::size_t line)
{
    std::vector<std::string> fields;
    std::string current;
    bool in_quotes = false;
    for (std::size_t i = 0; i < row.size(); ++i) {
        char c = row[i];
        if (in_quotes) {
            if (c == '\\' && i + 1 < row.size() && row[i + 1] == '"') {
                current += '"';
                ++i;
            } else if (c == '"' && i + 1 < row.size() && row[i + 1] == '"') {
                current += '"';
                ++i;
            } else if (c == '"') {
                in_quotes = false;
            } else {
                current += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (in_quotes)
        syntax_error(line, row.size() + 1, "unterminated quoted field");
    fields.push_back(current);
    return fields;
}

std::vector<std::string> load_label_names(const std::string& labels_xml_path)
{
    xml::Element root = xml::parse_file(labels_xml_path);
    if (root.name != "labels")
        throw Error(ErrorKind::SchemaError,
                    "label sidecar root element is <" + root.name + ">, expected <labels>");
    std::vector<std::string> names;
    for (const auto* label : root.find_all("label")) {
        std::string name = label->attribute("name");
        if (name.empty())
            throw Error(ErrorKind::SchemaError, "<label> element without a name attribute");
        names.push_back(name);
    }
    if (names.size() < 2)
        throw Error(ErrorKind::SchemaError, "label sidecar declares fewer than two labels");
    return names;
}

} // namespace

MIMLDataset parse_dataset(const std::string& arff_path, const std::string& labels_xml_path)
{
    if (!std::filesystem::exists(arff_path))
        throw Error(ErrorKind::FileNotFound, arff_path);
    std::vector<std::string> label_names = load_label_names(labels_xml_path);

    std::ifstream in(arff_path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot open " + arff_path);

    MIMLDataset ds;
    ds.labels.label_names = label_names;

    enum class Section { Relation, BagId, Relational, Labels, Data };
    Section section = Section::Relation;

    // header label order may differ from sidecar order
    std::vector<std::string> header_labels;
    std::string relational_attr_name;

    std::string raw_line;
    std::size_t line_no = 0;
    std::vector<std::vector<int>> label_rows;

    while (std::getline(in, raw_line)) {
        ++line_no;
        std::string line = trim(raw_line);
        if (line.empty() || line[0] == '%')
            continue;

        if (section != Section::Data && lower(line.substr(0, 5)) == "@data") {
            if (section != Section::Labels)
                syntax_error(line_no, 1, "@data before the header is complete");
            for (const auto& name : label_names)
                if (std::find(header_labels.begin(), header_labels.end(), name)
                    == header_labels.end())
                    throw Error(ErrorKind::SchemaError,
                                "label '" + name + "' from the XML sidecar is missing from the "
                                                   "ARFF header");
            section = Section::Data;
            continue;
        }

        switch (section) {
        case Section::Relation: {
            if (lower(line.substr(0, 9)) != "@relation")
                syntax_error(line_no, 1, "expected @relation");
            ds.relation_name = trim(line.substr(9));
            if (ds.relation_name.empty())
                syntax_error(line_no, 10, "@relation needs a name");
            section = Section::BagId;
            break;
        }
        case Section::BagId: {
            if (lower(line.substr(0, 10)) != "@attribute")
                syntax_error(line_no, 1, "expected the bag-id @attribute");
            AttributeDecl decl = parse_attribute_decl(line.substr(10), line_no);
            if (lower(decl.type) != "string" && !is_nominal(decl.type))
                throw Error(ErrorKind::SchemaError,
                            "bag-id attribute '" + decl.name
                                + "' must be nominal or string, got '" + decl.type + "'");
            section = Section::Relational;
            break;
        }
        case Section::Relational: {
            if (lower(line.substr(0, 10)) != "@attribute")
                syntax_error(line_no, 1, "expected the relational @attribute block");
            AttributeDecl decl = parse_attribute_decl(line.substr(10), line_no);
            if (lower(decl.type) != "relational")
                throw Error(ErrorKind::SchemaError,
                            "second attribute must be a relational block, got '" + decl.type
                                + "'");
            relational_attr_name = decl.name;
            // nested feature attributes until @end <name>
            bool closed = false;
            while (std::getline(in, raw_line)) {
                ++line_no;
                std::string inner = trim(raw_line);
                if (inner.empty() || inner[0] == '%')
                    continue;
                if (lower(inner.substr(0, 4)) == "@end") {
                    if (trim(inner.substr(4)) != relational_attr_name)
                        syntax_error(line_no, 1,
                                     "@end must close the relational attribute '"
                                         + relational_attr_name + "'");
                    closed = true;
                    break;
                }
                if (lower(inner.substr(0, 10)) != "@attribute")
                    syntax_error(line_no, 1, "expected a nested @attribute or @end");
                AttributeDecl feature = parse_attribute_decl(inner.substr(10), line_no);
                if (lower(feature.type) != "numeric" && lower(feature.type) != "real")
                    throw Error(ErrorKind::SchemaError,
                                "feature '" + feature.name + "' is not numeric ('" + feature.type
                                    + "'); only numeric features are supported");
                ds.schema.names.push_back(feature.name);
            }
            if (!closed)
                syntax_error(line_no, 1, "relational block never closed with @end");
            if (ds.schema.names.empty())
                throw Error(ErrorKind::SchemaError, "relational block declares no features");
            section = Section::Labels;
            break;
        }
        case Section::Labels: {
            if (lower(line.substr(0, 10)) != "@attribute")
                syntax_error(line_no, 1, "expected a label @attribute or @data");
            AttributeDecl decl = parse_attribute_decl(line.substr(10), line_no);
            if (std::find(label_names.begin(), label_names.end(), decl.name)
                == label_names.end())
                throw Error(ErrorKind::SchemaError,
                            "attribute '" + decl.name
                                + "' is neither a declared label nor part of the bag");
            if (!is_binary_nominal(decl.type))
                throw Error(ErrorKind::SchemaError,
                            "label '" + decl.name + "' must be declared {0,1}, got '" + decl.type
                                + "'");
            header_labels.push_back(decl.name);
            break;
        }
        case Section::Data: {
            std::vector<std::string> fields = split_data_row(line, line_no);
            if (fields.size() != 2 + header_labels.size())
                syntax_error(line_no, 1,
                             "expected " + std::to_string(2 + header_labels.size())
                                 + " fields, got " + std::to_string(fields.size()));

            Bag bag;
            bag.id = trim(fields[0]);
            if (bag.id.empty())
                throw Error(ErrorKind::SchemaError,
                            "empty bag id at line " + std::to_string(line_no));

            // instances separated by the literal two-character escape \n
            std::vector<std::vector<double>> rows;
            const std::string& rel = fields[1];
            if (trim(rel).empty())
                throw Error(ErrorKind::SchemaError,
                            "bag '" + bag.id + "' is empty at line " + std::to_string(line_no));
            std::size_t start = 0;
            for (;;) {
                std::size_t sep = rel.find("\\n", start);
                std::string inst =
                    sep == std::string::npos ? rel.substr(start) : rel.substr(start, sep - start);
                std::vector<double> row;
                std::stringstream ss(inst);
                std::string token;
                while (std::getline(ss, token, ','))
                    row.push_back(parse_number(token, line_no, start + 1));
                if (row.size() != ds.schema.names.size())
                    throw Error(ErrorKind::SchemaError,
                                "instance with " + std::to_string(row.size())
                                    + " values, expected " + std::to_string(ds.schema.names.size())
                                    + " at line " + std::to_string(line_no));
                rows.push_back(std::move(row));
                if (sep == std::string::npos)
                    break;
                start = sep + 2;
            }

            bag.instances.resize(static_cast<Index>(rows.size()),
                                 static_cast<Index>(ds.schema.names.size()));
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < rows[r].size(); ++c)
                    bag.instances(static_cast<Index>(r), static_cast<Index>(c)) = rows[r][c];
            ds.bags.push_back(std::move(bag));

            // reorder label fields from header order into sidecar order
            std::vector<int> label_row(label_names.size(), 0);
            for (std::size_t h = 0; h < header_labels.size(); ++h) {
                std::string value = trim(fields[2 + h]);
                int v;
                if (value == "0")
                    v = 0;
                else if (value == "1")
                    v = 1;
                else
                    throw Error(ErrorKind::SchemaError,
                                "non-binary label value '" + value + "' at line "
                                    + std::to_string(line_no));
                auto pos = std::find(label_names.begin(), label_names.end(), header_labels[h]);
                label_row[static_cast<std::size_t>(pos - label_names.begin())] = v;
            }
            label_rows.push_back(std::move(label_row));
            break;
        }
        }
    }

    if (section != Section::Data)
        syntax_error(line_no, 1, "file ended before @data");
    if (ds.bags.empty())
        throw Error(ErrorKind::SchemaError, "dataset has no bags");

    ds.labels.values.resize(static_cast<Index>(label_rows.size()),
                            static_cast<Index>(label_names.size()));
    for (std::size_t i = 0; i < label_rows.size(); ++i)
        for (std::size_t l = 0; l < label_names.size(); ++l)
            ds.labels.values(static_cast<Index>(i), static_cast<Index>(l)) = label_rows[i][l];

    validate(ds);
    return ds;
}

void write_dataset(const MIMLDataset& ds, const std::string& arff_path,
                   const std::string& labels_xml_path)
{
    validate(ds);

    std::ofstream arff(arff_path, std::ios::binary);
    if (!arff)
        throw Error(ErrorKind::IoError, "cannot write " + arff_path);

    arff << "@relation " << ds.relation_name << "\n\n";
    arff << "@attribute bagId {";
    for (std::size_t i = 0; i < ds.bags.size(); ++i) {
        if (i)
            arff << ",";
        arff << ds.bags[i].id;
    }
    arff << "}\n";
    arff << "@attribute bag relational\n";
    for (const auto& name : ds.schema.names)
        arff << "  @attribute " << name << " numeric\n";
    arff << "@end bag\n";
    for (const auto& label : ds.labels.label_names)
        arff << "@attribute " << label << " {0,1}\n";
    arff << "\n@data\n";

    for (Index i = 0; i < ds.num_bags(); ++i) {
        const Bag& bag = ds.bags[static_cast<std::size_t>(i)];
        arff << bag.id << ",\"";
        for (Index r = 0; r < bag.size(); ++r) {
            if (r)
                arff << "\\n";
            for (Index c = 0; c < bag.dimension(); ++c) {
                if (c)
                    arff << ",";
                arff << format_number(bag.instances(r, c));
            }
        }
        arff << "\"";
        for (Index l = 0; l < ds.num_labels(); ++l)
            arff << "," << ds.labels.values(i, l);
        arff << "\n";
    }
    if (!arff)
        throw Error(ErrorKind::IoError, "failed writing " + arff_path);

    std::ofstream labels_xml(labels_xml_path, std::ios::binary);
    if (!labels_xml)
        throw Error(ErrorKind::IoError, "cannot write " + labels_xml_path);
    labels_xml << "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n<labels>\n";
    for (const auto& label : ds.labels.label_names)
        labels_xml << "  <label name=\"" << xml::escape(label) << "\"></label>\n";
    labels_xml << "</labels>\n";
    if (!labels_xml)
        throw Error(ErrorKind::IoError, "failed writing " + labels_xml_path);
}

} // namespace miml
