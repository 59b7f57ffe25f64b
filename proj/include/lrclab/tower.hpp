#ifndef LRCLAB_TOWER_HPP
#define LRCLAB_TOWER_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lrclab/galois.hpp"

namespace lrclab {

/// Right-hand side of the recursion x_{i+1}^q_loc + x_{i+1} = rho(x_i).
/// eval returns nullopt at poles of rho.
struct RationalMap {
    std::function<std::optional<uint32_t>(const Field&, uint32_t)> eval;
    std::string description;
};

/// A recursive tower: constant field, the Artin-Schreier degree q_loc of the
/// left side, rho, and the x_0-values of the places that split completely.
/// Pole-divisor degrees deg(x_i) in F_depth are declared per tower (they
/// come from the source construction, not from ramification analysis) and
/// are cross-validated against fiber counts by the test suites.
class TowerSpec {
public:
    std::string name;
    FieldPtr field;
    uint32_t q_loc = 0;
    RationalMap rhs;
    std::vector<uint32_t> split_base;  // order_key-sorted

    std::optional<uint64_t> pole_degree(int var, int depth) const {
        if (pole_degree_fn) return pole_degree_fn(var, depth);
        return std::nullopt;
    }

    /// x_{i+1}^q + x_{i+1} = x_i^q / (x_i^{q-1} + 1) over GF(q^2), q = 2^l >= 8.
    static std::shared_ptr<const TowerSpec> garcia_stichtenoth(uint32_t q);
    /// x_i^2 + x_i = x_{i-1}^2 / (x_{i-1} + 1) over GF(4).
    static std::shared_ptr<const TowerSpec> f4_tower();
    /// x_{i+1}^2 + x_{i+1} = x_i + 1 + 1/x_i over GF(8).
    static std::shared_ptr<const TowerSpec> f8_tower();

    static std::shared_ptr<const TowerSpec> custom(
        std::string name, FieldPtr field, uint32_t q_loc, RationalMap rhs,
        std::vector<uint32_t> split_base,
        std::function<std::optional<uint64_t>(int, int)> pole_degree_fn = nullptr);

    std::function<std::optional<uint64_t>(int, int)> pole_degree_fn;
};

using TowerPtr = std::shared_ptr<const TowerSpec>;

/// A completely-splitting rational place of F_depth, as its coordinate tuple.
struct Place {
    std::vector<uint32_t> coords;  // (x_0(P), ..., x_depth(P))
    uint32_t index = 0;
};

struct PlaceList {
    TowerPtr tower;
    int depth = 0;
    std::vector<Place> places;

    size_t size() const { return places.size(); }
};

inline constexpr uint64_t kDefaultPlaceCap = uint64_t{1} << 20;

/// Declared split base; verifies complete splitting down to verify_depth.
std::vector<uint32_t> split_base(const TowerSpec& tower, int verify_depth = 1);

/// All places of F_depth above the split base, ordered lexicographically by
/// coordinate tuple under the order_key element order.
PlaceList enumerate_places(TowerPtr tower, int depth, uint64_t cap = kDefaultPlaceCap);

/// b = N(beta)/Tr(beta), the color of beta in GF(q)^*.  Requires Tr(beta) != 0.
uint32_t color_of(const Field& field, uint32_t q, uint32_t beta);

/// Indices of the places sharing coords[0..depth-1] with the given place,
/// excluding it (Theorem-1 recovery set A_i).
std::vector<uint32_t> recovery_fiber(const PlaceList& list, uint32_t place_index);

/// Groups place indices by their first prefix_len coordinates, groups in
/// first-occurrence order.
std::vector<std::vector<uint32_t>> prefix_fibers(const PlaceList& list, int prefix_len);

/// The splitting digraph of the F_8 tower: vertices are S_0, one edge
/// (alpha, beta) per solution of beta^2 + beta = alpha + 1 + 1/alpha.
struct SplitGraph {
    TowerPtr tower;
    std::vector<uint32_t> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> out;  // adjacency by vertex index
    std::vector<std::vector<int>> in;

    int vertex_index(uint32_t value) const;
    size_t self_loop_count() const;
    std::vector<uint32_t> self_loop_values() const;
};

SplitGraph split_graph(TowerPtr tower);

/// Number of directed paths of length len ending at target, per start vertex
/// (indexed like graph.vertices).
std::vector<uint64_t> paths_of_length(const SplitGraph& graph, int len, uint32_t target);

/// True when every ordered vertex pair is joined by a path of length <= max_len
/// (length 0 connects a vertex to itself).
bool all_pairs_connected_within(const SplitGraph& graph, int max_len);

}  // namespace lrclab

#endif
