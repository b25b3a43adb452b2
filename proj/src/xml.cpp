#include "miml/xml.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "miml/errors.hpp"

namespace miml::xml {

const Element* Element::find(const std::string& child_name) const
{
    for (const auto& child : children)
        if (child.name == child_name)
            return &child;
    return nullptr;
}

std::vector<const Element*> Element::find_all(const std::string& child_name) const
{
    std::vector<const Element*> out;
    for (const auto& child : children)
        if (child.name == child_name)
            out.push_back(&child);
    return out;
}

std::string Element::attribute(const std::string& key, const std::string& fallback) const
{
    auto it = attributes.find(key);
    return it == attributes.end() ? fallback : it->second;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& content) : text_(content) {}

    Element parse_document()
    {
        skip_prolog();
        Element root = parse_element();
        skip_misc();
        if (pos_ != text_.size())
            fail("content after root element");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& message) const
    {
        throw Error(ErrorKind::SyntaxError,
                    "xml line " + std::to_string(line_) + ", column " + std::to_string(col_) + ": "
                        + message);
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }

    char advance()
    {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    bool consume(const std::string& token)
    {
        if (text_.compare(pos_, token.size(), token) != 0)
            return false;
        for (std::size_t i = 0; i < token.size(); ++i)
            advance();
        return true;
    }

    void expect(const std::string& token)
    {
        if (!consume(token))
            fail("expected '" + token + "'");
    }

    void skip_whitespace()
    {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            advance();
    }

    void skip_comment()
    {
        while (!eof() && !consume("-->"))
            advance();
    }

    void skip_misc()
    {
        for (;;) {
            skip_whitespace();
            if (consume("<!--"))
                skip_comment();
            else
                return;
        }
    }

    void skip_prolog()
    {
        skip_whitespace();
        if (consume("<?xml")) {
            while (!eof() && !consume("?>"))
                advance();
        }
        skip_misc();
    }

    std::string parse_name()
    {
        std::string name;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.'
                || c == ':')
                name += advance();
            else
                break;
        }
        if (name.empty())
            fail("expected a name");
        return name;
    }

    std::string decode_entities(const std::string& raw)
    {
        std::string out;
        for (std::size_t i = 0; i < raw.size();) {
            if (raw[i] != '&') {
                out += raw[i++];
                continue;
            }
            auto end = raw.find(';', i);
            if (end == std::string::npos)
                fail("unterminated entity");
            std::string entity = raw.substr(i + 1, end - i - 1);
            if (entity == "lt")
                out += '<';
            else if (entity == "gt")
                out += '>';
            else if (entity == "amp")
                out += '&';
            else if (entity == "quot")
                out += '"';
            else if (entity == "apos")
                out += '\'';
            else
                fail("unknown entity '&" + entity + ";'");
            i = end + 1;
        }
        return out;
    }

    std::string parse_attribute_value()
    {
        char quote = peek();
        if (quote != '"' && quote != '\'')
            fail("expected quoted attribute value");
        advance();
        std::string raw;
        while (!eof() && peek() != quote)
            raw += advance();
        if (eof())
            fail("unterminated attribute value");
        advance();
        return decode_entities(raw);
    }

    Element parse_element()
    {
        expect("<");
        Element element;
        element.name = parse_name();

        for (;;) {
            skip_whitespace();
            if (consume("/>"))
                return element;
            if (consume(">"))
                break;
            std::string key = parse_name();
            skip_whitespace();
            expect("=");
            skip_whitespace();
            if (!element.attributes.emplace(key, parse_attribute_value()).second)
                fail("duplicate attribute '" + key + "'");
        }

        std::string raw_text;
        for (;;) {
            if (eof())
                fail("unterminated element <" + element.name + ">");
            if (consume("<!--")) {
                skip_comment();
            } else if (text_.compare(pos_, 2, "</") == 0) {
                expect("</");
                std::string closing = parse_name();
                if (closing != element.name)
                    fail("mismatched closing tag </" + closing + "> for <" + element.name + ">");
                skip_whitespace();
                expect(">");
                break;
            } else if (peek() == '<') {
                element.children.push_back(parse_element());
            } else {
                raw_text += advance();
            }
        }

        std::string decoded = decode_entities(raw_text);
        auto begin = decoded.find_first_not_of(" \t\r\n");
        if (begin != std::string::npos) {
            auto end = decoded.find_last_not_of(" \t\r\n");
            element.text = decoded.substr(begin, end - begin + 1);
        }
        return element;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

} // namespace

Element parse(const std::string& content)
{
    return Parser(content).parse_document();
}

Element parse_file(const std::string& path)
{
    if (!std::filesystem::exists(path))
        throw Error(ErrorKind::FileNotFound, path);
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

std::string escape(const std::string& text)
{
    std::string out;
    for (char c : text) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace miml::xml
