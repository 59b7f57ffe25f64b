#ifndef LRCLAB_GALOIS_HPP
#define LRCLAB_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lrclab/errors.hpp"

namespace lrclab {

/// GF(2^m) in polynomial basis.  Elements are bitmasks of coefficients,
/// addition is XOR.  Immutable once constructed; safe to share across threads.
class Field {
public:
    /// Builds GF(2^m).  When no modulus is given, picks the irreducible
    /// degree-m polynomial with the smallest value as a binary integer, so
    /// the model is the same in every run and every implementation.
    /// A supplied modulus is verified irreducible; the error names a factor.
    static std::shared_ptr<const Field> make(int m, std::optional<uint32_t> modulus = std::nullopt);

    int degree() const { return m_; }
    uint64_t size() const { return uint64_t{1} << m_; }
    uint32_t modulus() const { return modulus_; }
    uint32_t generator() const { return generator_; }
    bool has_tables() const { return !log_.empty(); }

    uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        if (!log_.empty()) return exp_[size_t{log_[a]} + log_[b]];
        return clmul_mod(a, b, modulus_, m_);
    }

    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, uint64_t e) const;

    /// Discrete log base generator(); requires tables and a != 0.
    uint32_t log(uint32_t a) const;
    /// generator() ^ k, any k >= 0.
    uint32_t gpow(uint64_t k) const;

    /// Canonical element order: 0 first, then g^0, g^1, ...  Every
    /// deterministic enumeration in the library sorts by this key.
    uint32_t order_key(uint32_t a) const {
        if (a == 0) return 0;
        return log(a) + 1;
    }

    /// All elements sorted by order_key.
    std::vector<uint32_t> elements_in_order() const;

    /// Reference multiply: carry-less product reduced mod `modulus`.
    static uint32_t clmul_mod(uint32_t a, uint32_t b, uint32_t modulus, int m);

    // Raw table access for inner loops (rank elimination, distance search).
    const uint32_t* exp_data() const { return exp_.data(); }
    const uint32_t* log_data() const { return logu_.data(); }

private:
    Field() = default;

    int m_ = 0;
    uint32_t modulus_ = 0;
    uint32_t generator_ = 0;
    std::vector<uint32_t> exp_;   // size 2*(2^m - 1), doubled to skip the mod
    std::vector<uint32_t> log_;   // log_[0] unused
    std::vector<uint32_t> logu_;  // same as log_, kept separate for raw access
};

using FieldPtr = std::shared_ptr<const Field>;

/// A field element tagged with its owning field.  Mixing fields throws.
struct Elem {
    uint32_t v = 0;
    const Field* field = nullptr;

    Elem() = default;
    Elem(uint32_t value, const Field& f) : v(value), field(&f) {}

    friend Elem operator+(Elem a, Elem b) {
        check_same(a, b);
        return {a.v ^ b.v, *a.field};
    }
    friend Elem operator-(Elem a, Elem b) { return a + b; }
    friend Elem operator*(Elem a, Elem b) {
        check_same(a, b);
        return {a.field->mul(a.v, b.v), *a.field};
    }
    friend Elem operator/(Elem a, Elem b) {
        check_same(a, b);
        return {a.field->div(a.v, b.v), *a.field};
    }
    friend bool operator==(Elem a, Elem b) { return a.v == b.v && a.field == b.field; }
    friend bool operator!=(Elem a, Elem b) { return !(a == b); }

    static void check_same(const Elem& a, const Elem& b) {
        if (a.field == nullptr || a.field != b.field)
            throw FieldMismatchError("elements belong to different fields");
    }
};

inline Elem mul(Elem a, Elem b) { return a * b; }
inline Elem inv(Elem a) { return {a.field->inv(a.v), *a.field}; }
inline Elem pow(Elem a, uint64_t e) { return {a.field->pow(a.v, e), *a.field}; }

/// The copy of GF(q) sitting inside GF(q^2) as the fixed set of x -> x^q.
class SubfieldView {
public:
    SubfieldView(const Field& big, uint32_t q);

    const Field& big() const { return *big_; }
    uint32_t q() const { return q_; }

    bool contains(uint32_t a) const;
    /// The q embedded elements, in order_key order.
    const std::vector<uint32_t>& elements() const { return embedding_; }
    /// S_0 = big \ embedding, in order_key order.
    const std::vector<uint32_t>& s0() const { return s0_; }

private:
    const Field* big_;
    uint32_t q_;
    std::vector<uint32_t> embedding_;
    std::vector<uint32_t> s0_;
};

/// Tr(beta) = beta^q + beta, a map GF(q^2) -> GF(q) (image inside the big field).
uint32_t trace_to(const Field& field, uint32_t q, uint32_t beta);
/// N(beta) = beta^(q+1).
uint32_t norm_to(const Field& field, uint32_t q, uint32_t beta);

inline Elem trace_to(uint32_t q, Elem beta) { return {trace_to(*beta.field, q, beta.v), *beta.field}; }
inline Elem norm_to(uint32_t q, Elem beta) { return {norm_to(*beta.field, q, beta.v), *beta.field}; }

/// All roots in the field of gamma^q_loc + gamma = rhs.  The left side is
/// GF(2)-linear in gamma, so this solves a GF(2) linear system; the result is
/// empty or a coset of the kernel.  Roots come back in order_key order.
std::vector<uint32_t> linearized_roots(const Field& field, uint32_t q_loc, uint32_t rhs);

std::string elem_hex(uint32_t v);
/// "0", "g^0", "g^1", ... power-of-generator notation.
std::string elem_gpow(const Field& field, uint32_t v);
uint32_t parse_elem(const Field& field, const std::string& text);

}  // namespace lrclab

#endif
