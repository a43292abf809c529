#pragma once

#include <graphcat/atom.hpp>
#include <graphcat/bounds.hpp>

#include <functional>
#include <initializer_list>
#include <string_view>
#include <vector>

namespace graphcat {

/// A finite set of distinct atoms, iterated in the stable canonical order
/// (lexicographic on atom text).  Immutable after construction.
class FiniteSet {
public:
    FiniteSet() = default;

    /// Sorts the atoms; duplicate atoms throw ValidationError.
    static FiniteSet of(std::vector<Atom> elements);
    static FiniteSet of_leaves(std::initializer_list<std::string_view> labels);
    /// {1, ..., n} as numeric leaves.
    static FiniteSet one_to(std::size_t n);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(const Atom& a) const;
    /// Position in the stable order; throws when absent.
    std::size_t index_of(const Atom& a) const;
    const std::vector<Atom>& elements() const { return elements_; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    bool is_subset_of(const FiniteSet& other) const;
    /// The whole carrier as a subset atom.
    Atom as_subset_atom() const { return Atom::subset(elements_); }

    bool operator==(const FiniteSet& other) const { return elements_ == other.elements_; }
    bool operator!=(const FiniteSet& other) const { return !(*this == other); }

private:
    std::vector<Atom> elements_;
};

/// A total function between finite sets.  Values are stored aligned with
/// the domain's stable order; every image is checked to lie in the codomain.
class FiniteFunction {
public:
    FiniteFunction() = default;

    static FiniteFunction from_map(FiniteSet dom, FiniteSet cod,
                                   const std::function<Atom(const Atom&)>& f);
    static FiniteFunction from_values(FiniteSet dom, FiniteSet cod, std::vector<Atom> values);
    static FiniteFunction identity(FiniteSet carrier);
    static FiniteFunction constant(FiniteSet dom, FiniteSet cod, const Atom& value);
    static FiniteFunction empty_into(FiniteSet cod);
    /// Rebuild from a mapping atom (inverse of as_mapping_atom).
    static FiniteFunction from_mapping_atom(FiniteSet dom, FiniteSet cod, const Atom& mapping);

    const FiniteSet& dom() const { return dom_; }
    const FiniteSet& cod() const { return cod_; }
    const Atom& operator()(const Atom& a) const { return values_[dom_.index_of(a)]; }
    const std::vector<Atom>& values() const { return values_; }

    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const { return is_injective() && is_surjective(); }

    /// Canonical mapping atom "[x:f(x),...]" over the whole domain.
    Atom as_mapping_atom() const;

    /// Same domain, codomain, and values.
    bool operator==(const FiniteFunction& other) const;
    bool operator!=(const FiniteFunction& other) const { return !(*this == other); }

private:
    FiniteSet dom_, cod_;
    std::vector<Atom> values_;
};

/// g after f; throws unless f.cod() == g.dom().
FiniteFunction compose(const FiniteFunction& g, const FiniteFunction& f);

struct ProductSet {
    FiniteSet carrier; ///< tuple atoms, componentwise in factor order
    std::vector<FiniteFunction> projections;
};
/// Cartesian product; the empty product is the one-element set {()}.
ProductSet product_set(const std::vector<FiniteSet>& factors);

struct CoproductSet {
    FiniteSet carrier; ///< index-tagged atoms (i, x)
    std::vector<FiniteFunction> injections;
};
CoproductSet coproduct_set(const std::vector<FiniteSet>& parts);

struct SetCoequalizer {
    FiniteSet classes;        ///< least-atom representatives
    FiniteFunction projection; ///< canonical surjection cod -> classes
};
/// Coequalizer of a parallel pair f,g : X -> Y, computed by union-find over
/// the pairs (f(x), g(x)); each class is named by its least atom.
SetCoequalizer coequalize_set(const FiniteFunction& f, const FiniteFunction& g);

/// All subsets of X as subset atoms; guarded by bounds.powerset_max_elements.
FiniteSet powerset(const FiniteSet& x, const Bounds& bounds = {});

/// Image of a subset atom under f; the subset must live inside dom(f).
Atom image_of(const FiniteFunction& f, const Atom& subset);

/// All total functions X -> Y as mapping atoms; guarded by
/// bounds.function_space_max.
FiniteSet all_functions(const FiniteSet& x, const FiniteSet& y, const Bounds& bounds = {});

/// |y|^|x| if it stays within limit, otherwise nullopt-like sentinel via
/// return of limit+1; helper for bound checks.
std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t limit);

} // namespace graphcat
