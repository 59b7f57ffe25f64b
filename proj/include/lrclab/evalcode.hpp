#ifndef LRCLAB_EVALCODE_HPP
#define LRCLAB_EVALCODE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrclab/tower.hpp"

namespace lrclab {

/// Exponent bounds (E_0, ..., E_t), inclusive, over coordinates x_0..x_t.
/// A box shorter than the place tuples omits the trailing coordinates.
struct MonomialBox {
    std::vector<uint32_t> bounds;

    uint64_t nominal_dim() const {
        uint64_t d = 1;
        for (uint32_t b : bounds) d *= uint64_t{b} + 1;
        return d;
    }
};

/// Exponent tuples in lexicographic order (rightmost index varies fastest).
std::vector<std::vector<uint32_t>> monomials(const MonomialBox& box);

/// prod_i coords[i]^e_i with the 0^0 = 1 convention.
uint32_t evaluate(const Field& field, const std::vector<uint32_t>& exponents, const Place& place);

struct Matrix {
    size_t rows = 0, cols = 0;
    std::vector<uint32_t> a;
    FieldPtr field;

    uint32_t at(size_t r, size_t c) const { return a[r * cols + c]; }
    uint32_t* row(size_t r) { return a.data() + r * cols; }
    const uint32_t* row(size_t r) const { return a.data() + r * cols; }
};

/// Row per box monomial, column per place, entries by `evaluate`.
Matrix generator_matrix(const Field& field, const PlaceList& places, const MonomialBox& box);

struct RankResult {
    uint32_t rank = 0;
    std::vector<size_t> pivot_rows;     // an independent subset, original row order
    std::vector<uint32_t> prefix_rank;  // prefix_rank[i] = rank of rows 0..i
};

/// Row rank by Gaussian elimination with first-nonzero pivoting.  Rows are
/// processed in order, so prefix ranks of nested boxes come out of one pass.
/// Internally parallel; the result is identical to the sequential order.
RankResult rank_of(const Matrix& m);

enum class RepairMode {
    Interpolation,  // box includes x_j with E_j <= q_loc - 2; degree-E_j fit on the fiber
    PrefixCopy,     // box omits trailing coordinates; symbols repeat on prefix fibers
    ValueCopy,      // fallback: symbols repeat on equal participating-value classes
};

struct RepairPlan {
    RepairMode mode = RepairMode::PrefixCopy;
    bool defined = false;
    uint32_t locality = 0;
    std::vector<std::vector<uint32_t>> fiber_of;  // per coordinate, excluding itself
};

struct EvalCode {
    std::string label;
    PlaceList places;
    MonomialBox box;
    Matrix gen;  // nominal_dim x n
    uint32_t rank_k = 0;
    std::vector<size_t> basis_rows;
    std::vector<uint32_t> prefix_rank;
    RepairPlan plan;

    std::optional<uint64_t> d_lower;  // designed-distance bound, when pole degrees are declared
    bool d_lower_clamped = false;
    std::optional<uint64_t> d_upper;
    std::string d_lower_provenance;
    std::string d_upper_provenance;

    /// Parameters asserted by the source construction, for reporting.
    struct Claims {
        std::optional<uint64_t> n, k, d, r;
        bool d_is_upper_bound = false;
    } claimed;

    size_t n() const { return places.size(); }
    const Field& field() const { return *places.tower->field; }
    uint32_t q_loc() const { return places.tower->q_loc; }
};

EvalCode make_eval_code(PlaceList places, MonomialBox box, std::string label = {});

/// message (length rank_k) times the pivot-row basis.
std::vector<uint32_t> encode(const EvalCode& code, const std::vector<uint32_t>& message);

struct ErasurePattern {
    std::vector<uint32_t> symbols;  // symbols[missing] is ignored
    uint32_t missing = 0;
};

/// Recovers the erased symbol from its recovery fiber: Lagrange interpolation
/// in x_j for interpolation-mode codes, a fiber copy otherwise.  `unavailable`
/// optionally marks further coordinates that must not be read.
uint32_t repair(const EvalCode& code, const ErasurePattern& pattern,
                const std::vector<bool>& unavailable = {});

/// Locality r of the repair plan; throws when the box does not admit one.
uint32_t locality(const EvalCode& code);

}  // namespace lrclab

#endif
