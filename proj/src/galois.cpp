#include "lrclab/galois.hpp"

#include <algorithm>
#include <sstream>

namespace lrclab {

namespace {

int poly_degree(uint64_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

uint64_t poly_mod(uint64_t a, uint64_t b) {
    int db = poly_degree(b);
    int da = poly_degree(a);
    while (da >= db) {
        a ^= b << (da - db);
        da = poly_degree(a);
    }
    return a;
}

/// Smallest nontrivial factor by trial division, 0 if irreducible.
uint64_t find_factor(uint64_t p, int m) {
    if ((p & 1) == 0) return 2;  // divisible by x
    for (int d = 1; 2 * d <= m; ++d) {
        for (uint64_t q = uint64_t{1} << d; q < (uint64_t{2} << d); ++q) {
            if (poly_mod(p, q) == 0) return q;
        }
    }
    return 0;
}

std::string poly_str(uint64_t p) {
    std::ostringstream os;
    bool first = true;
    for (int d = poly_degree(p); d >= 0; --d) {
        if (!(p >> d & 1)) continue;
        if (!first) os << "+";
        if (d == 0)
            os << "1";
        else if (d == 1)
            os << "x";
        else
            os << "x^" << d;
        first = false;
    }
    return os.str();
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

uint32_t pow_clmul(uint32_t a, uint64_t e, uint32_t modulus, int m) {
    uint32_t acc = 1;
    while (e) {
        if (e & 1) acc = Field::clmul_mod(acc, a, modulus, m);
        a = Field::clmul_mod(a, a, modulus, m);
        e >>= 1;
    }
    return acc;
}

}  // namespace

uint32_t Field::clmul_mod(uint32_t a, uint32_t b, uint32_t modulus, int m) {
    uint64_t acc = 0;
    uint64_t aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    for (int d = poly_degree(acc); d >= m; d = poly_degree(acc)) {
        acc ^= uint64_t{modulus} << (d - m);
    }
    return static_cast<uint32_t>(acc);
}

std::shared_ptr<const Field> Field::make(int m, std::optional<uint32_t> modulus) {
    if (m < 1 || m > 20) throw FieldError("extension degree must be in [1, 20]");

    uint32_t mod = 0;
    if (modulus) {
        mod = *modulus;
        if (poly_degree(mod) != m)
            throw FieldError("modulus has degree " + std::to_string(poly_degree(mod)) +
                             ", expected " + std::to_string(m));
        if (uint64_t f = find_factor(mod, m))
            throw FieldError("modulus " + poly_str(mod) + " is reducible: divisible by " +
                             poly_str(f));
    } else {
        for (uint32_t cand = (1u << m) + 1; cand < (2u << m); cand += 2) {
            if (find_factor(cand, m) == 0) {
                mod = cand;
                break;
            }
        }
        if (mod == 0) throw FieldError("no irreducible polynomial found");  // unreachable
    }

    auto field = std::shared_ptr<Field>(new Field());
    field->m_ = m;
    field->modulus_ = mod;

    const uint64_t card = uint64_t{1} << m;
    const uint64_t group = card - 1;
    auto primes = prime_factors(group);
    uint32_t gen = 1;
    for (uint32_t g = (m == 1) ? 1u : 2u; g < card; ++g) {
        bool primitive = true;
        for (uint64_t p : primes) {
            if (pow_clmul(g, group / p, mod, m) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = g;
            break;
        }
    }
    field->generator_ = gen;

    if (m <= 16) {
        field->exp_.resize(2 * group);
        field->log_.assign(card, 0);
        uint32_t v = 1;
        for (uint64_t k = 0; k < group; ++k) {
            field->exp_[k] = v;
            field->exp_[k + group] = v;
            field->log_[v] = static_cast<uint32_t>(k);
            v = clmul_mod(v, gen, mod, m);
        }
        if (v != 1) throw FieldError("generator order check failed");  // unreachable
        field->logu_ = field->log_;
    }
    return field;
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero");
    if (!log_.empty()) {
        uint64_t group = size() - 1;
        return exp_[group - log_[a]];
    }
    return pow_clmul(a, size() - 2, modulus_, m_);
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (!log_.empty()) {
        uint64_t group = size() - 1;
        return exp_[(uint64_t{log_[a]} * (e % group)) % group];
    }
    return pow_clmul(a, e, modulus_, m_);
}

uint32_t Field::log(uint32_t a) const {
    if (a == 0) throw DomainError("log of zero");
    if (log_.empty()) throw FieldError("field has no discrete-log tables (m > 16)");
    return log_[a];
}

uint32_t Field::gpow(uint64_t k) const {
    return pow(generator_, k);
}

std::vector<uint32_t> Field::elements_in_order() const {
    std::vector<uint32_t> out;
    out.reserve(size());
    out.push_back(0);
    uint64_t group = size() - 1;
    for (uint64_t k = 0; k < group; ++k) out.push_back(exp_[k]);
    return out;
}

SubfieldView::SubfieldView(const Field& big, uint32_t q) : big_(&big), q_(q) {
    if (q < 2 || (q & (q - 1)) != 0) throw FieldError("subfield size must be a power of 2");
    if (big.size() != uint64_t{q} * q)
        throw FieldError("field has size " + std::to_string(big.size()) + ", expected q^2 = " +
                         std::to_string(uint64_t{q} * q));
    for (uint32_t a : big.elements_in_order()) {
        if (big.pow(a, q) == a)
            embedding_.push_back(a);
        else
            s0_.push_back(a);
    }
    if (embedding_.size() != q) throw FieldError("fixed set of x -> x^q has wrong size");
}

bool SubfieldView::contains(uint32_t a) const {
    return big_->pow(a, q_) == a;
}

uint32_t trace_to(const Field& field, uint32_t q, uint32_t beta) {
    if (field.size() != uint64_t{q} * q)
        throw FieldError("trace_to: field size is not q^2");
    return field.pow(beta, q) ^ beta;
}

uint32_t norm_to(const Field& field, uint32_t q, uint32_t beta) {
    if (field.size() != uint64_t{q} * q)
        throw FieldError("norm_to: field size is not q^2");
    return field.pow(beta, uint64_t{q} + 1);
}

std::vector<uint32_t> linearized_roots(const Field& field, uint32_t q_loc, uint32_t rhs) {
    if (q_loc < 2 || (q_loc & (q_loc - 1)) != 0 || q_loc > field.size())
        throw FieldError("q_loc must be a power of 2 dividing the field size");

    const int m = field.degree();
    // Column j holds (x^j)^q_loc + x^j in the polynomial basis; solve M v = rhs
    // over GF(2) with rows packed as bitmasks (matrix columns | rhs bit).
    std::vector<uint64_t> rows(m, 0);
    for (int j = 0; j < m; ++j) {
        uint32_t img = field.pow(uint32_t{1} << j, q_loc) ^ (uint32_t{1} << j);
        for (int i = 0; i < m; ++i)
            if (img >> i & 1) rows[i] |= uint64_t{1} << j;
    }
    for (int i = 0; i < m; ++i)
        if (rhs >> i & 1) rows[i] |= uint64_t{1} << m;

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < m && r < m; ++c) {
        int p = -1;
        for (int i = r; i < m; ++i)
            if (rows[i] >> c & 1) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        for (int i = 0; i < m; ++i)
            if (i != r && (rows[i] >> c & 1)) rows[i] ^= rows[r];
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < m; ++i)
        if (rows[i] >> m & 1) return {};  // inconsistent: no roots

    uint32_t particular = 0;
    std::vector<bool> is_pivot(m, false);
    for (int i = 0; i < r; ++i) {
        is_pivot[pivot_col[i]] = true;
        if (rows[i] >> m & 1) particular |= uint32_t{1} << pivot_col[i];
    }
    std::vector<uint32_t> kernel;
    for (int c = 0; c < m; ++c) {
        if (is_pivot[c]) continue;
        uint32_t vec = uint32_t{1} << c;
        for (int i = 0; i < r; ++i)
            if (rows[i] >> c & 1) vec |= uint32_t{1} << pivot_col[i];
        kernel.push_back(vec);
    }

    std::vector<uint32_t> roots;
    roots.reserve(size_t{1} << kernel.size());
    for (uint64_t mask = 0; mask < (uint64_t{1} << kernel.size()); ++mask) {
        uint32_t v = particular;
        for (size_t b = 0; b < kernel.size(); ++b)
            if (mask >> b & 1) v ^= kernel[b];
        roots.push_back(v);
    }
    std::sort(roots.begin(), roots.end(),
              [&field](uint32_t a, uint32_t b) { return field.order_key(a) < field.order_key(b); });
    return roots;
}

std::string elem_hex(uint32_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

std::string elem_gpow(const Field& field, uint32_t v) {
    if (v == 0) return "0";
    return "g^" + std::to_string(field.log(v));
}

uint32_t parse_elem(const Field& field, const std::string& text) {
    try {
        if (text == "0") return 0;
        if (text.rfind("g^", 0) == 0) {
            uint64_t k = std::stoull(text.substr(2));
            return field.gpow(k);
        }
        uint64_t v = std::stoull(text, nullptr, 0);
        if (v >= field.size()) throw UsageError("element out of range: " + text);
        return static_cast<uint32_t>(v);
    } catch (const std::invalid_argument&) {
        throw UsageError("cannot parse field element: " + text);
    } catch (const std::out_of_range&) {
        throw UsageError("cannot parse field element: " + text);
    }
}

}  // namespace lrclab
