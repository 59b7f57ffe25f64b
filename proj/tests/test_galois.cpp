#include <doctest.h>

#include <map>
#include <set>

#include "lrclab/galois.hpp"

using namespace lrclab;

namespace {

// Reference multiply, written independently of the library path: schoolbook
// carry-less product followed by long division by the modulus.
uint32_t ref_mul(uint32_t a, uint32_t b, uint32_t modulus, int m) {
    uint64_t prod = 0;
    for (int i = 0; i < m; ++i)
        if (b >> i & 1) prod ^= uint64_t{a} << i;
    for (int d = 2 * m - 2; d >= m; --d)
        if (prod >> d & 1) prod ^= uint64_t{modulus} << (d - m);
    return static_cast<uint32_t>(prod);
}

}  // namespace

TEST_SUITE("galois") {

TEST_CASE("default moduli are the smallest irreducibles") {
    CHECK(Field::make(2)->modulus() == 0b111);        // x^2+x+1, the only choice
    CHECK(Field::make(3)->modulus() == 0b1011);       // x^3+x+1
    CHECK(Field::make(4)->modulus() == 0b10011);      // x^4+x+1
    CHECK(Field::make(6)->modulus() == 0b1000011);    // x^6+x+1
}

TEST_CASE("pinned F_8 model has g^3 = g + 1") {
    auto f = Field::make(3, uint32_t{0b1011});
    uint32_t g = f->generator();
    CHECK(f->pow(g, 3) == (g ^ 1u));
}

TEST_CASE("GF(64) generator has order 63, by brute-force powering") {
    auto f = Field::make(6);
    CHECK(f->size() == 64);
    uint32_t g = f->generator();
    uint32_t v = 1;
    int order = 0;
    do {
        v = f->mul(v, g);
        ++order;
    } while (v != 1);
    CHECK(order == 63);
}

TEST_CASE("reducible modulus is rejected with a factor") {
    // x^4 + 1 = (x+1)^4
    CHECK_THROWS_WITH_AS(Field::make(4, uint32_t{0b10001}), doctest::Contains("divisible by"),
                         FieldError);
    CHECK_THROWS_AS(Field::make(0), FieldError);
    CHECK_THROWS_AS(Field::make(21), FieldError);
    CHECK_THROWS_AS(Field::make(4, uint32_t{0b1011}), FieldError);  // degree 3, not 4
}

TEST_CASE("multiplicative identities") {
    auto f8 = Field::make(3);
    for (uint32_t a = 0; a < 8; ++a) CHECK(f8->mul(a, 1) == a);

    auto f4 = Field::make(2);
    uint32_t alpha = f4->generator();
    CHECK(f4->mul(alpha, alpha) == (alpha ^ 1u));  // alpha^2 = alpha + 1
}

TEST_CASE("every nonzero element of GF(64) has a working inverse") {
    auto f = Field::make(6);
    for (uint32_t a = 1; a < 64; ++a) CHECK(f->mul(a, f->inv(a)) == 1);
    CHECK_THROWS_AS(f->inv(0), DivisionByZeroError);
}

TEST_CASE("mixed-field element arithmetic throws") {
    auto f4 = Field::make(2);
    auto f8 = Field::make(3);
    Elem a{1, *f4}, b{1, *f8};
    CHECK_THROWS_AS(a * b, FieldMismatchError);
    CHECK((Elem{3, *f4} * Elem{2, *f4}).v == f4->mul(3, 2));
}

TEST_CASE("table multiply agrees with the reference for m <= 6") {
    for (int m : {2, 3, 4, 6}) {
        auto f = Field::make(m);
        for (uint32_t a = 0; a < f->size(); ++a)
            for (uint32_t b = 0; b < f->size(); ++b)
                CHECK(f->mul(a, b) == ref_mul(a, b, f->modulus(), m));
    }
}

TEST_CASE("Frobenius additivity (a+b)^q = a^q + b^q, exhaustive for m <= 6") {
    for (int m : {2, 4, 6}) {
        auto f = Field::make(m);
        for (int s = 1; s < m; ++s) {
            uint64_t q = uint64_t{1} << s;
            for (uint32_t a = 0; a < f->size(); ++a)
                for (uint32_t b = 0; b < f->size(); ++b)
                    CHECK(f->pow(a ^ b, q) == (f->pow(a, q) ^ f->pow(b, q)));
        }
    }
}

TEST_CASE("subfield view: fixed set of x -> x^q") {
    auto f = Field::make(6);
    SubfieldView sub(*f, 8);
    CHECK(sub.elements().size() == 8);
    CHECK(sub.s0().size() == 56);
    // closed under + and *
    for (uint32_t a : sub.elements())
        for (uint32_t b : sub.elements()) {
            CHECK(sub.contains(a ^ b));
            CHECK(sub.contains(f->mul(a, b)));
        }
    CHECK_THROWS_AS(SubfieldView(*f, 4), FieldError);
}

TEST_CASE("trace: subfield elements have trace zero") {
    auto f = Field::make(6);
    SubfieldView sub(*f, 8);
    for (uint32_t a : sub.elements()) CHECK(trace_to(*f, 8, a) == 0);
    CHECK_THROWS_AS(trace_to(*f, 4, 1), FieldError);
}

TEST_CASE("trace fibers over GF(64): q elements per nonzero value, q in the kernel") {
    auto f = Field::make(6);
    SubfieldView sub(*f, 8);
    std::map<uint32_t, int> fiber;
    for (uint32_t a = 0; a < 64; ++a) {
        uint32_t t = trace_to(*f, 8, a);
        CHECK(sub.contains(t));
        ++fiber[t];
    }
    CHECK(fiber.size() == 8);
    for (auto [b, count] : fiber) CHECK(count == 8);
}

TEST_CASE("norm fibers over GF(64): q+1 elements per nonzero value; N multiplicative") {
    auto f = Field::make(6);
    std::map<uint32_t, int> fiber;
    for (uint32_t a = 1; a < 64; ++a) ++fiber[norm_to(*f, 8, a)];
    CHECK(norm_to(*f, 8, 1) == 1);
    for (auto [c, count] : fiber) CHECK(count == (c == 0 ? 0 : 9));
    for (uint32_t a = 0; a < 64; ++a)
        for (uint32_t b = 0; b < 64; ++b)
            CHECK(norm_to(*f, 8, f->mul(a, b)) == f->mul(norm_to(*f, 8, a), norm_to(*f, 8, b)));
}

TEST_CASE("trace is GF(q)-linear, exhaustive at q in {2,4,8}") {
    for (int mq : {1, 2, 3}) {
        uint32_t q = uint32_t{1} << mq;
        auto f = Field::make(2 * mq);
        SubfieldView sub(*f, q);
        for (uint32_t c : sub.elements())
            for (uint32_t a = 0; a < f->size(); ++a) {
                CHECK(trace_to(*f, q, f->mul(c, a)) == f->mul(c, trace_to(*f, q, a)));
                for (uint32_t b = 0; b < f->size(); ++b)
                    CHECK(trace_to(*f, q, a ^ b) ==
                          (trace_to(*f, q, a) ^ trace_to(*f, q, b)));
            }
    }
}

TEST_CASE("joint (Tr, N) fibers have 0 or 2 elements at q = 8") {
    auto f = Field::make(6);
    SubfieldView sub(*f, 8);
    for (uint32_t b : sub.elements()) {
        if (b == 0) continue;
        for (uint32_t c : sub.elements()) {
            if (c == 0) continue;
            int count = 0;
            for (uint32_t g = 0; g < 64; ++g)
                count += trace_to(*f, 8, g) == b && norm_to(*f, 8, g) == c;
            CHECK((count == 0 || count == 2));
        }
    }
}

TEST_CASE("linearized roots: kernel of t^8 + t over GF(64) is the subfield") {
    auto f = Field::make(6);
    SubfieldView sub(*f, 8);
    auto roots = linearized_roots(*f, 8, 0);
    CHECK(roots.size() == 8);
    for (uint32_t r : roots) CHECK(sub.contains(r));
}

TEST_CASE("linearized roots: q roots for every nonzero subfield rhs") {
    auto f = Field::make(6);
    SubfieldView sub(*f, 8);
    for (uint32_t b : sub.elements()) {
        if (b == 0) continue;
        auto roots = linearized_roots(*f, 8, b);
        CHECK(roots.size() == 8);
        for (uint32_t r : roots) CHECK((f->pow(r, 8) ^ r) == b);
    }
}

TEST_CASE("linearized roots: exhaustive cross-check over GF(8), q_loc = 2") {
    auto f = Field::make(3);
    uint32_t b = f->generator();
    uint32_t rhs = b ^ 1u ^ f->inv(b);  // b + 1 + 1/b
    auto roots = linearized_roots(*f, 2, rhs);
    std::set<uint32_t> brute;
    for (uint32_t t = 0; t < 8; ++t)
        if ((f->mul(t, t) ^ t) == rhs) brute.insert(t);
    CHECK(std::set<uint32_t>(roots.begin(), roots.end()) == brute);
    CHECK(roots.size() == 2);
    for (uint32_t r : roots) CHECK(r >= 2);  // outside GF(2)
}

TEST_CASE("linearized roots come back empty or kernel-sized") {
    auto f = Field::make(4);
    size_t kernel = linearized_roots(*f, 4, 0).size();
    for (uint32_t rhs = 0; rhs < 16; ++rhs) {
        auto roots = linearized_roots(*f, 4, rhs);
        CHECK((roots.size() == 0 || roots.size() == kernel));
        for (uint32_t r : roots) CHECK((f->pow(r, 4) ^ r) == rhs);
    }
}

TEST_CASE("element order: zero first, then generator powers") {
    auto f = Field::make(3);
    CHECK(f->order_key(0) == 0);
    auto elems = f->elements_in_order();
    CHECK(elems.size() == 8);
    CHECK(elems[0] == 0);
    CHECK(elems[1] == 1);  // g^0
    CHECK(elems[2] == f->generator());
    for (size_t i = 0; i < elems.size(); ++i) CHECK(f->order_key(elems[i]) == i);
}

TEST_CASE("element text forms round-trip") {
    auto f = Field::make(6);
    for (uint32_t v : {0u, 1u, 5u, 63u}) {
        CHECK(parse_elem(*f, elem_hex(v)) == v);
        CHECK(parse_elem(*f, elem_gpow(*f, v)) == v);
    }
    CHECK_THROWS_AS(parse_elem(*f, "0x40"), UsageError);
    CHECK_THROWS_AS(parse_elem(*f, "banana"), UsageError);
}

}  // TEST_SUITE
