#include <graphcat/atom.hpp>

#include <algorithm>
#include <functional>

namespace graphcat {

namespace {

constexpr std::string_view kSpecials = "(){}[],:\\";

bool is_special(char c) { return kSpecials.find(c) != std::string_view::npos; }

std::string escape(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        if (is_special(c)) out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

struct Atom::Node {
    Kind kind = Kind::Leaf;
    std::string text;
    std::string leaf_raw;
    std::vector<Atom> parts;
    std::vector<std::pair<Atom, Atom>> entries;
};

const Atom::Node& Atom::node() const {
    if (!node_) throw ValidationError("use of a null atom");
    return *node_;
}

Atom::Kind Atom::kind() const { return node().kind; }
const std::string& Atom::text() const { return node().text; }

const std::string& Atom::leaf_value() const {
    const Node& n = node();
    if (n.kind != Kind::Leaf) throw ValidationError("atom is not a leaf: " + n.text);
    return n.leaf_raw;
}

const std::vector<Atom>& Atom::parts() const {
    const Node& n = node();
    if (n.kind != Kind::Tuple && n.kind != Kind::Subset)
        throw ValidationError("atom has no components: " + n.text);
    return n.parts;
}

const std::vector<std::pair<Atom, Atom>>& Atom::entries() const {
    const Node& n = node();
    if (n.kind != Kind::Mapping) throw ValidationError("atom is not a mapping: " + n.text);
    return n.entries;
}

const Atom& Atom::apply(const Atom& key) const {
    const auto& es = entries();
    auto it = std::lower_bound(es.begin(), es.end(), key,
                               [](const auto& entry, const Atom& k) { return entry.first < k; });
    if (it == es.end() || it->first != key)
        throw ValidationError("mapping " + text() + " has no key " + key.text());
    return it->second;
}

Atom Atom::leaf(std::string_view raw) {
    if (raw.empty()) throw ValidationError("leaf atoms must be nonempty");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Leaf;
    n->leaf_raw = std::string(raw);
    n->text = escape(raw);
    return Atom(std::move(n));
}

Atom Atom::number(std::size_t value) { return leaf(std::to_string(value)); }

Atom Atom::tuple(std::vector<Atom> parts) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Tuple;
    std::string text = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) text.push_back(',');
        text += parts[i].text();
    }
    text.push_back(')');
    n->text = std::move(text);
    n->parts = std::move(parts);
    return Atom(std::move(n));
}

Atom Atom::pair(Atom first, Atom second) {
    std::vector<Atom> parts;
    parts.reserve(2);
    parts.push_back(std::move(first));
    parts.push_back(std::move(second));
    return tuple(std::move(parts));
}

Atom Atom::tag(std::size_t index, Atom value) { return pair(number(index), std::move(value)); }

Atom Atom::subset(std::vector<Atom> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    auto n = std::make_shared<Node>();
    n->kind = Kind::Subset;
    std::string text = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i > 0) text.push_back(',');
        text += elements[i].text();
    }
    text.push_back('}');
    n->text = std::move(text);
    n->parts = std::move(elements);
    return Atom(std::move(n));
}

Atom Atom::mapping(std::vector<std::pair<Atom, Atom>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i - 1].first == entries[i].first)
            throw ValidationError("mapping atom has duplicate key " + entries[i].first.text());
    auto n = std::make_shared<Node>();
    n->kind = Kind::Mapping;
    std::string text = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) text.push_back(',');
        text += entries[i].first.text();
        text.push_back(':');
        text += entries[i].second.text();
    }
    text.push_back(']');
    n->text = std::move(text);
    n->entries = std::move(entries);
    return Atom(std::move(n));
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Atom run() {
        Atom a = atom();
        if (pos_ != text_.size())
            throw ParseError("trailing characters after atom: " + std::string(text_));
        return a;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" +
                         std::string(text_) + "'");
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Atom atom() {
        switch (peek()) {
        case '(': return tuple();
        case '{': return subset();
        case '[': return mapping();
        case ')': case '}': case ']': case ',': case ':': case '\0':
            fail("expected an atom");
        default: return leaf();
        }
    }

    Atom leaf() {
        std::string raw;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\\') {
                if (pos_ + 1 >= text_.size()) fail("dangling escape");
                raw.push_back(text_[pos_ + 1]);
                pos_ += 2;
            } else if (is_special(c)) {
                break;
            } else {
                raw.push_back(c);
                ++pos_;
            }
        }
        if (raw.empty()) fail("empty leaf");
        return Atom::leaf(raw);
    }

    Atom tuple() {
        expect('(');
        std::vector<Atom> parts;
        if (peek() != ')') {
            parts.push_back(atom());
            while (peek() == ',') {
                ++pos_;
                parts.push_back(atom());
            }
        }
        expect(')');
        return Atom::tuple(std::move(parts));
    }

    Atom subset() {
        expect('{');
        std::vector<Atom> elems;
        if (peek() != '}') {
            elems.push_back(atom());
            while (peek() == ',') {
                ++pos_;
                elems.push_back(atom());
            }
        }
        expect('}');
        return Atom::subset(std::move(elems));
    }

    Atom mapping() {
        expect('[');
        std::vector<std::pair<Atom, Atom>> entries;
        if (peek() != ']') {
            for (;;) {
                Atom key = atom();
                expect(':');
                Atom value = atom();
                entries.emplace_back(std::move(key), std::move(value));
                if (peek() != ',') break;
                ++pos_;
            }
        }
        expect(']');
        return Atom::mapping(std::move(entries));
    }
};

} // namespace

Atom Atom::parse(std::string_view text) { return Parser(text).run(); }

std::size_t AtomHash::operator()(const Atom& a) const {
    return std::hash<std::string>{}(a.text());
}

} // namespace graphcat
