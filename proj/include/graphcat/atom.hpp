#pragma once

#include <graphcat/errors.hpp>

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphcat {

/// An atom is the opaque element of every finite carrier in the library:
/// either a plain label (leaf) or a value built by a construction (tuple,
/// subset, mapping).  Every atom has a canonical text form with a fixed
/// grammar, equality is syntactic, and the stable total order used by all
/// carriers is the lexicographic order on that text.
///
/// Grammar of the canonical text:
///
///     atom    := leaf | tuple | subset | mapping
///     tuple   := '(' [atom (',' atom)*] ')'
///     subset  := '{' [atom (',' atom)*] '}'      (elements sorted, distinct)
///     mapping := '[' [atom ':' atom (',' ...)] ']' (keys sorted, distinct)
///     leaf    := one or more characters; backslash escapes ( ) { } [ ] , :
///
/// Atoms are immutable and cheap to copy (shared representation).
class Atom {
public:
    enum class Kind { Leaf, Tuple, Subset, Mapping };

    /// Default-constructed atoms are null placeholders; any access throws.
    Atom() = default;

    static Atom leaf(std::string_view raw);
    static Atom number(std::size_t n);
    static Atom tuple(std::vector<Atom> parts);
    static Atom pair(Atom first, Atom second);
    /// Index-tagged atom (index, value), used by coproducts.
    static Atom tag(std::size_t index, Atom value);
    /// Subset atom; elements are sorted and deduplicated.
    static Atom subset(std::vector<Atom> elements);
    /// Mapping atom; entries are sorted by key.  Duplicate keys are invalid.
    static Atom mapping(std::vector<std::pair<Atom, Atom>> entries);

    /// Inverse of text().  Non-canonical subset/mapping element order is
    /// canonicalized; everything else malformed throws ParseError.
    static Atom parse(std::string_view text);

    bool is_null() const { return node_ == nullptr; }
    Kind kind() const;
    const std::string& text() const;
    /// Unescaped label of a leaf.
    const std::string& leaf_value() const;
    /// Components of a tuple or elements of a subset.
    const std::vector<Atom>& parts() const;
    /// Key/value entries of a mapping.
    const std::vector<std::pair<Atom, Atom>>& entries() const;
    /// Mapping lookup; throws ValidationError when the key is absent.
    const Atom& apply(const Atom& key) const;

    bool operator==(const Atom& other) const { return text() == other.text(); }
    bool operator!=(const Atom& other) const { return !(*this == other); }
    bool operator<(const Atom& other) const { return text() < other.text(); }
    bool operator<=(const Atom& other) const { return text() <= other.text(); }
    bool operator>(const Atom& other) const { return other < *this; }
    bool operator>=(const Atom& other) const { return other <= *this; }

private:
    struct Node;
    explicit Atom(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    const Node& node() const;

    std::shared_ptr<const Node> node_;
};

struct AtomHash {
    std::size_t operator()(const Atom& a) const;
};

} // namespace graphcat
