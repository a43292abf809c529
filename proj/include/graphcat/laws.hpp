#pragma once

#include <graphcat/corpus.hpp>

#include <optional>
#include <string>
#include <vector>

namespace graphcat {

enum class Verdict { Holds, Fails, WitnessFound };
std::string to_string(Verdict v);

/// Structured pass/fail evidence from a universal-property, adjunction, or
/// counterexample check.  Reports are deterministic: same inputs, same
/// bytes.
struct LawReport {
    std::string law_name;
    std::string instance;
    Verdict verdict = Verdict::Fails;
    std::vector<std::string> evidence;

    bool ok() const { return verdict != Verdict::Fails; }
};

enum class Category { Q, H, M, R };
std::string to_string(Category c);
std::optional<Category> category_from_string(const std::string& name);

enum class UniversalProperty {
    Product,
    Coproduct,
    Equalizer,
    Coequalizer,
    Exponential,
    Terminal,
    Classifier,
};
std::optional<UniversalProperty> universal_property_from_string(const std::string& name);

/// Verify the named universal property over the default corpus of the
/// given category by full enumeration of mediating morphisms.
LawReport check_universal_property(UniversalProperty kind, Category cat,
                                   const Bounds& bounds = {});

/// Exponential sweep over every triple of corpus objects (categories Q and
/// R): hom-set bijection through the evaluation morphism, curry/uncurry
/// inverses, and mediator uniqueness by full enumeration.
LawReport check_currying_bijections(Category cat, const Bounds& bounds = {});

/// Names of the ten registered adjoint pairs/triples.
std::vector<std::string> adjunction_names();

/// Hom-count equality, explicit transposition bijection, and naturality
/// squares for the named pair, sampled over the default corpus.
LawReport check_adjunction(const std::string& name, const Bounds& bounds = {});

/// Frobenius comparison morphisms for the evaluation functors and Upsilon.
LawReport frobenius_phi_v(const IncidenceHypergraph& g, const FiniteSet& s);
LawReport frobenius_phi_e(const IncidenceHypergraph& g, const FiniteSet& s);
/// Expected verdict at (I*[2], [2]) is a non-monicity witness.
LawReport frobenius_phi_i(const IncidenceHypergraph& g, const FiniteSet& s);
LawReport frobenius_phi_upsilon(const Quiver& q, const IncidenceHypergraph& g);
/// Dispatch by name {phi_V, phi_E, phi_I, phi_upsilon} on the canonical
/// instances.
LawReport frobenius(const std::string& name, const Bounds& bounds = {});

std::vector<std::string> counterexample_names();
/// Reproduce one of the built-in counterexamples; the verdict is
/// witness_found exactly when the claimed failure is exhibited.
LawReport run_counterexample(const std::string& name, const Bounds& bounds = {});

/// First family member (in order) whose morphisms separate the parallel
/// pair, together with the separating morphism.
std::optional<std::pair<std::size_t, QuiverMorphism>>
find_separator(const std::vector<Quiver>& family, const QuiverMorphism& phi,
               const QuiverMorphism& psi);
std::optional<std::pair<std::size_t, IncidenceMorphism>>
find_separator(const std::vector<IncidenceHypergraph>& family, const IncidenceMorphism& phi,
               const IncidenceMorphism& psi);

/// Exhibits the natural isomorphisms UpsilonDiamond Upsilon(Q) = Q x P1 and
/// UpsilonStar Upsilon(Q) = Q^P1, checking naturality against sampled
/// morphisms out of Q.
LawReport check_updiaup(const Quiver& q, const Bounds& bounds = {});

/// Pullback of eta_G along chi recovers the subobject (H, phi, psi); the
/// returned morphism is the comparison isomorphism when it exists.
std::optional<HyperMorphism> pullback_recovers(const HyperMorphism& chi, const HyperMorphism& eta,
                                               const HyperMorphism& phi, const HyperMorphism& psi,
                                               const Bounds& bounds = {});

} // namespace graphcat
