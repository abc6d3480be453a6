#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpaley/errors.hpp"

namespace gpaley {

/// Element of F_{q^2}: either zero or the discrete log of the element with
/// respect to the field's canonical primitive element. Plain value type;
/// all arithmetic lives on Field.
class FieldElement {
public:
    constexpr FieldElement() : log_(kZeroTag) {}

    static constexpr FieldElement zero() { return FieldElement(); }
    static constexpr FieldElement from_log(std::uint32_t log) { return FieldElement(log); }

    constexpr bool is_zero() const { return log_ == kZeroTag; }

    constexpr std::uint32_t log() const { return log_; } // meaningful only when nonzero

    constexpr bool operator==(const FieldElement&) const = default;
    constexpr bool operator<(const FieldElement& o) const { return log_ + 1 < o.log_ + 1; }

private:
    explicit constexpr FieldElement(std::uint32_t log) : log_(log) {}

    static constexpr std::uint32_t kZeroTag = 0xFFFFFFFFu;
    std::uint32_t log_;
};

/// Construction parameters and canonical choices, embedded in reports so a
/// run can be reproduced exactly.
struct FieldManifest {
    std::uint32_t p = 0;
    std::uint32_t two_n = 0;
    std::vector<std::uint32_t> modulus; // coefficients, low-to-high, monic
    std::vector<std::uint32_t> beta;    // coordinates of the primitive element, low-to-high

    std::string to_text() const;
};

/// Exact arithmetic in F_{q^2} = F_p[t]/(modulus), q = p^n, via exp/log
/// tables for a canonical primitive element.
///
/// Canonical choices (deterministic rebuild from (p, 2n)):
///  - modulus: the monic irreducible polynomial of degree 2n whose
///    coefficient vector packs to the smallest base-p integer
///    (constant term = least significant digit);
///  - beta: the primitive element with the smallest packed coordinate
///    vector under the same encoding.
///
/// Derived elements: d = beta^{q+1} generates F_q^* (hence is a non-square
/// there), alpha = beta^{(q+1)/2} satisfies alpha^2 = d and alpha^q = -alpha,
/// omega = beta^{q-1} generates the norm-one subgroup of order q+1.
///
/// Immutable after construction; safe for concurrent reads.
class Field {
public:
    static constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 22;

    /// Default cap, honouring the GPALEY_FIELD_CAP environment override.
    static std::uint64_t default_cap();

    static Field build(std::uint32_t p, std::uint32_t two_n, std::uint64_t cap = 0);

    std::uint32_t p() const { return p_; }
    std::uint32_t n() const { return two_n_ / 2; }
    std::uint32_t two_n() const { return two_n_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t order() const { return order_; }            // q^2
    std::uint32_t group_order() const { return order_ - 1; }  // q^2 - 1

    FieldElement zero() const { return FieldElement::zero(); }
    FieldElement one() const { return FieldElement::from_log(0); }
    FieldElement beta() const { return FieldElement::from_log(1 % group_order()); }
    FieldElement alpha() const { return FieldElement::from_log((q_ + 1) / 2); }
    FieldElement d() const { return FieldElement::from_log(q_ + 1); }
    FieldElement omega() const { return FieldElement::from_log(q_ - 1); }
    FieldElement minus_one() const { return FieldElement::from_log(group_order() / 2); }

    FieldElement from_log(std::uint64_t k) const {
        return FieldElement::from_log(static_cast<std::uint32_t>(k % group_order()));
    }

    /// Packed base-p coordinate index <-> element. Index 0 is zero; indices
    /// 0..p-1 are the prime-field constants.
    FieldElement from_coord_index(std::uint32_t idx) const;
    std::uint32_t coord_index(FieldElement x) const;
    std::vector<std::uint32_t> coords(FieldElement x) const; // low-to-high, length 2n

    FieldElement from_int(std::uint64_t k) const { return from_coord_index(k % p_); }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    FieldElement neg(FieldElement a) const {
        if (a.is_zero()) return a;
        return FieldElement::from_log(mod_group(a.log() + group_order() / 2));
    }
    FieldElement mul(FieldElement a, FieldElement b) const {
        if (a.is_zero() || b.is_zero()) return FieldElement::zero();
        return FieldElement::from_log(mod_group(static_cast<std::uint64_t>(a.log()) + b.log()));
    }
    FieldElement inv(FieldElement a) const {
        if (a.is_zero()) raise(Errc::DivisionByZero, "inverse of zero");
        return FieldElement::from_log(mod_group(group_order() - static_cast<std::uint64_t>(a.log())));
    }
    FieldElement div(FieldElement a, FieldElement b) const {
        if (b.is_zero()) raise(Errc::DivisionByZero, "division by zero");
        return mul(a, inv(b));
    }
    FieldElement pow(FieldElement a, std::int64_t k) const;

    /// Norm map N(x) = x^{q+1} onto F_q^*; kernel is the order-(q+1) subgroup.
    FieldElement norm(FieldElement x) const {
        if (x.is_zero()) raise(Errc::ZeroInput, "norm of zero");
        return FieldElement::from_log(mod_group(static_cast<std::uint64_t>(x.log()) * (q_ + 1)));
    }

    FieldElement frobenius(FieldElement x) const { // x -> x^q
        if (x.is_zero()) return x;
        return FieldElement::from_log(mod_group(static_cast<std::uint64_t>(x.log()) * q_));
    }

    FieldElement frobenius_p(FieldElement x, std::uint32_t e) const; // x -> x^{p^e}

    bool is_mth_power(FieldElement x, std::uint64_t m) const {
        if (x.is_zero()) raise(Errc::ZeroInput, "zero has no power class");
        if (m == 0 || group_order() % m != 0)
            raise(Errc::BadModulus, "m must divide q^2-1");
        return x.log() % m == 0;
    }

    /// Subfield F_{p^d} as an element list, zero first then by log. d | 2n.
    std::vector<FieldElement> subfield(std::uint32_t d) const;
    bool in_subfield(FieldElement x, std::uint32_t d) const;
    bool in_base_subfield(FieldElement x) const { return in_subfield(x, n()); } // F_q
    std::uint32_t degree_over_prime(FieldElement x) const;

    /// Coordinates over F_q in the basis (1, alpha): x = a + b*alpha.
    std::pair<FieldElement, FieldElement> alpha_coords(FieldElement x) const;
    FieldElement from_alpha_coords(FieldElement a, FieldElement b) const {
        return add(a, mul(b, alpha()));
    }

    /// F_q in symbol order: zero, then powers of d = beta^{q+1}.
    std::vector<FieldElement> fq_elements() const { return subfield(n()); }
    std::uint32_t fq_symbol_index(FieldElement x) const;
    FieldElement fq_element_from_symbol(std::uint32_t s) const;

    FieldManifest manifest() const;

    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

private:
    Field() = default;

    std::uint32_t mod_group(std::uint64_t v) const {
        return static_cast<std::uint32_t>(v % group_order());
    }

    std::uint32_t p_ = 0;
    std::uint32_t two_n_ = 0;
    std::uint32_t q_ = 0;
    std::uint32_t order_ = 0;
    std::vector<std::uint32_t> modulus_;    // low-to-high, length 2n+1
    std::vector<std::uint32_t> exp_;        // exponent -> coordinate index, length q^2-1
    std::vector<std::uint32_t> log_;        // coordinate index -> exponent (log_[0] unused)
    std::vector<std::uint32_t> divisors_2n_;
};

} // namespace gpaley
