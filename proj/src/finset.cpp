#include <graphcat/finset.hpp>

#include <graphcat/errors.hpp>

#include <algorithm>
#include <numeric>

namespace graphcat {

FiniteSet FiniteSet::of(std::vector<Atom> elements) {
    std::sort(elements.begin(), elements.end());
    for (std::size_t i = 1; i < elements.size(); ++i)
        if (elements[i - 1] == elements[i])
            throw ValidationError("duplicate atom in finite set: " + elements[i].text());
    FiniteSet s;
    s.elements_ = std::move(elements);
    return s;
}

FiniteSet FiniteSet::of_leaves(std::initializer_list<std::string_view> labels) {
    std::vector<Atom> elems;
    elems.reserve(labels.size());
    for (auto l : labels) elems.push_back(Atom::leaf(l));
    return of(std::move(elems));
}

FiniteSet FiniteSet::one_to(std::size_t n) {
    std::vector<Atom> elems;
    elems.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) elems.push_back(Atom::number(i));
    return of(std::move(elems));
}

bool FiniteSet::contains(const Atom& a) const {
    return std::binary_search(elements_.begin(), elements_.end(), a);
}

std::size_t FiniteSet::index_of(const Atom& a) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), a);
    if (it == elements_.end() || *it != a)
        throw ValidationError("atom not in carrier: " + a.text());
    return static_cast<std::size_t>(it - elements_.begin());
}

bool FiniteSet::is_subset_of(const FiniteSet& other) const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](const Atom& a) { return other.contains(a); });
}

FiniteFunction FiniteFunction::from_values(FiniteSet dom, FiniteSet cod,
                                           std::vector<Atom> values) {
    if (values.size() != dom.size())
        throw ValidationError("function values do not cover the domain");
    for (const Atom& v : values)
        if (!cod.contains(v))
            throw ValidationError("function value outside codomain: " + v.text());
    FiniteFunction f;
    f.dom_ = std::move(dom);
    f.cod_ = std::move(cod);
    f.values_ = std::move(values);
    return f;
}

FiniteFunction FiniteFunction::from_map(FiniteSet dom, FiniteSet cod,
                                        const std::function<Atom(const Atom&)>& f) {
    std::vector<Atom> values;
    values.reserve(dom.size());
    for (const Atom& a : dom) values.push_back(f(a));
    return from_values(std::move(dom), std::move(cod), std::move(values));
}

FiniteFunction FiniteFunction::identity(FiniteSet carrier) {
    std::vector<Atom> values = carrier.elements();
    FiniteSet dom = carrier;
    return from_values(std::move(dom), std::move(carrier), std::move(values));
}

FiniteFunction FiniteFunction::constant(FiniteSet dom, FiniteSet cod, const Atom& value) {
    std::vector<Atom> values(dom.size(), value);
    return from_values(std::move(dom), std::move(cod), std::move(values));
}

FiniteFunction FiniteFunction::empty_into(FiniteSet cod) {
    return from_values(FiniteSet(), std::move(cod), {});
}

FiniteFunction FiniteFunction::from_mapping_atom(FiniteSet dom, FiniteSet cod,
                                                 const Atom& mapping) {
    std::vector<Atom> values;
    values.reserve(dom.size());
    for (const Atom& a : dom) values.push_back(mapping.apply(a));
    return from_values(std::move(dom), std::move(cod), std::move(values));
}

bool FiniteFunction::is_injective() const {
    std::vector<Atom> seen = values_;
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool FiniteFunction::is_surjective() const {
    std::vector<Atom> seen = values_;
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return seen.size() == cod_.size();
}

Atom FiniteFunction::as_mapping_atom() const {
    std::vector<std::pair<Atom, Atom>> entries;
    entries.reserve(dom_.size());
    for (std::size_t i = 0; i < dom_.size(); ++i)
        entries.emplace_back(dom_.elements()[i], values_[i]);
    return Atom::mapping(std::move(entries));
}

bool FiniteFunction::operator==(const FiniteFunction& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && values_ == other.values_;
}

FiniteFunction compose(const FiniteFunction& g, const FiniteFunction& f) {
    if (f.cod() != g.dom())
        throw ValidationError("composition mismatch: codomain of inner differs from domain of outer");
    std::vector<Atom> values;
    values.reserve(f.dom().size());
    for (const Atom& v : f.values()) values.push_back(g(v));
    return FiniteFunction::from_values(f.dom(), g.cod(), std::move(values));
}

ProductSet product_set(const std::vector<FiniteSet>& factors) {
    std::size_t total = 1;
    for (const FiniteSet& f : factors) total *= f.size();

    std::vector<Atom> tuples;
    tuples.reserve(total);
    std::vector<std::size_t> idx(factors.size(), 0);
    for (std::size_t made = 0; made < total; ++made) {
        std::vector<Atom> parts;
        parts.reserve(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i)
            parts.push_back(factors[i].elements()[idx[i]]);
        tuples.push_back(Atom::tuple(std::move(parts)));
        for (std::size_t k = factors.size(); k > 0; --k) {
            if (++idx[k - 1] < factors[k - 1].size()) break;
            idx[k - 1] = 0;
        }
    }
    ProductSet result;
    result.carrier = FiniteSet::of(std::move(tuples));
    for (std::size_t i = 0; i < factors.size(); ++i)
        result.projections.push_back(FiniteFunction::from_map(
            result.carrier, factors[i], [i](const Atom& t) { return t.parts()[i]; }));
    return result;
}

CoproductSet coproduct_set(const std::vector<FiniteSet>& parts) {
    std::vector<Atom> tagged;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const Atom& a : parts[i]) tagged.push_back(Atom::tag(i, a));
    CoproductSet result;
    result.carrier = FiniteSet::of(std::move(tagged));
    for (std::size_t i = 0; i < parts.size(); ++i)
        result.injections.push_back(FiniteFunction::from_map(
            parts[i], result.carrier, [i](const Atom& a) { return Atom::tag(i, a); }));
    return result;
}

namespace {

// Union-find by atom index with least-index (= least-atom) representatives.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t i) {
        while (parent_[i] != i) {
            parent_[i] = parent_[parent_[i]];
            i = parent_[i];
        }
        return i;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // keep the smaller index as root so representatives are least atoms
        if (a < b) parent_[b] = a; else parent_[a] = b;
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

SetCoequalizer coequalize_set(const FiniteFunction& f, const FiniteFunction& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw ValidationError("coequalizer requires a parallel pair");
    const FiniteSet& cod = f.cod();
    UnionFind uf(cod.size());
    for (const Atom& x : f.dom())
        uf.unite(cod.index_of(f(x)), cod.index_of(g(x)));

    std::vector<Atom> reps;
    std::vector<Atom> values;
    values.reserve(cod.size());
    for (std::size_t i = 0; i < cod.size(); ++i) {
        std::size_t r = uf.find(i);
        if (r == i) reps.push_back(cod.elements()[i]);
        values.push_back(cod.elements()[r]);
    }
    SetCoequalizer result;
    result.classes = FiniteSet::of(std::move(reps));
    result.projection = FiniteFunction::from_values(cod, result.classes, std::move(values));
    return result;
}

FiniteSet powerset(const FiniteSet& x, const Bounds& bounds) {
    if (x.size() > bounds.powerset_max_elements)
        throw BoundError("powerset of " + std::to_string(x.size()) +
                         " elements exceeds the configured bound of " +
                         std::to_string(bounds.powerset_max_elements));
    std::vector<Atom> subsets;
    const std::size_t n = x.size();
    subsets.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Atom> elems;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) elems.push_back(x.elements()[i]);
        subsets.push_back(Atom::subset(std::move(elems)));
    }
    return FiniteSet::of(std::move(subsets));
}

Atom image_of(const FiniteFunction& f, const Atom& subset) {
    std::vector<Atom> image;
    for (const Atom& a : subset.parts()) {
        if (!f.dom().contains(a))
            throw ValidationError("subset element outside the function's domain: " + a.text());
        image.push_back(f(a));
    }
    return Atom::subset(std::move(image));
}

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t limit) {
    std::size_t result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && result > limit / base) return limit + 1;
        result *= base;
        if (result > limit) return limit + 1;
    }
    return result;
}

FiniteSet all_functions(const FiniteSet& x, const FiniteSet& y, const Bounds& bounds) {
    std::size_t count = checked_power(y.size(), x.size(), bounds.function_space_max);
    if (count > bounds.function_space_max)
        throw BoundError("function space of size " + std::to_string(y.size()) + "^" +
                         std::to_string(x.size()) + " exceeds the configured bound of " +
                         std::to_string(bounds.function_space_max));
    if (y.empty() && !x.empty()) return FiniteSet();

    std::vector<Atom> functions;
    functions.reserve(count);
    std::vector<std::size_t> choice(x.size(), 0);
    for (std::size_t made = 0; made < count; ++made) {
        std::vector<std::pair<Atom, Atom>> entries;
        entries.reserve(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            entries.emplace_back(x.elements()[i], y.elements()[choice[i]]);
        functions.push_back(Atom::mapping(std::move(entries)));
        for (std::size_t k = x.size(); k > 0; --k) {
            if (++choice[k - 1] < y.size()) break;
            choice[k - 1] = 0;
        }
    }
    return FiniteSet::of(std::move(functions));
}

} // namespace graphcat
