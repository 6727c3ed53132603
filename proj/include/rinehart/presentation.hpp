#ifndef RINEHART_PRESENTATION_HPP
#define RINEHART_PRESENTATION_HPP

#include <memory>
#include <string>
#include <vector>

#include "rinehart/derivation.hpp"

namespace rinehart {

/// A module relation sum_i g_i * D_i = 0 among presentation generators.
struct Syzygy {
    std::vector<Poly> coefficients;
};

class LRPresentation;
using PresPtr = std::shared_ptr<const LRPresentation>;

/// A presented Lie-Rinehart algebra: base ring, generator derivations
/// D_1..D_m, and a bracket table [D_i, D_j] = sum_k gamma_ijk D_k.
///
/// `checked` validates the table against the generator commutators and
/// throws on failure; rewriting and the bialgebra layer only accept
/// verified presentations. `raw` skips validation (for inspecting broken
/// tables with check_lr_axioms).
class LRPresentation {
public:
    struct BracketEntry {
        size_t i, j;
        std::vector<Poly> coeffs; // gamma_{ij}^k, one per generator
    };

    static PresPtr checked(RingPtr ring, std::vector<std::string> names,
                           std::vector<Derivation> generators,
                           std::vector<BracketEntry> brackets,
                           bool declared_free,
                           std::vector<Syzygy> syzygies = {});
    static PresPtr raw(RingPtr ring, std::vector<std::string> names,
                       std::vector<Derivation> generators,
                       std::vector<BracketEntry> brackets,
                       bool declared_free,
                       std::vector<Syzygy> syzygies = {});

    const RingPtr& ring() const { return ring_; }
    size_t ngens() const { return generators_.size(); }
    const Derivation& generator(size_t i) const { return generators_[i]; }
    const std::vector<Derivation>& generators() const { return generators_; }
    const std::string& gen_name(size_t i) const { return names_[i]; }
    const std::vector<std::string>& gen_names() const { return names_; }
    const std::vector<Syzygy>& syzygies() const { return syzygies_; }

    /// Declared local freeness: PBW words form a module basis only when true.
    bool is_free() const { return declared_free_; }
    bool verified() const { return verified_; }

    /// gamma_{ij}^., with gamma_{ji} = -gamma_{ij} and zero diagonal.
    const std::vector<Poly>& bracket_coeffs(size_t i, size_t j) const;

    /// The table bracket [D_i, D_j] expanded through the anchor.
    Derivation table_bracket(size_t i, size_t j) const;

    bool same_presentation(const LRPresentation& o) const;

private:
    LRPresentation(RingPtr ring, std::vector<std::string> names,
                   std::vector<Derivation> generators,
                   std::vector<BracketEntry> brackets,
                   bool declared_free, std::vector<Syzygy> syzygies);

    RingPtr ring_;
    std::vector<std::string> names_;
    std::vector<Derivation> generators_;
    std::vector<std::vector<std::vector<Poly>>> gamma_; // [i][j] -> m coefficients
    std::vector<Syzygy> syzygies_;
    bool declared_free_ = false;
    bool verified_ = false;
};

struct AxiomCheck {
    std::string axiom;
    bool pass;
    std::string witness; // empty when passing
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_pass() const;
};

/// Verifies, coefficientwise modulo the modulus: generators well defined on
/// the quotient, table antisymmetry, table consistency against commutators,
/// Jacobi of the table bracket, and the Leibniz rule on all monomials of
/// degree <= 3.
AxiomReport check_lr_axioms(const LRPresentation& pres);

/// True iff sum_i g_i * D_i reduces to the zero derivation.
bool verify_syzygy(const Syzygy& s, const LRPresentation& pres);

/// Fiber dimension at a point: ngens - rank of the evaluated syzygy matrix.
/// Every syzygy must verify first.
size_t fiber_rank(const LRPresentation& pres, const std::vector<Syzygy>& syzygies,
                  const std::vector<Rational>& point);

} // namespace rinehart

#endif
