#pragma once

/**
 * @file series.hpp
 * @brief Truncated power series over a prime field.
 *
 * Elements of D_N = F_p[t]/(t^N), the working avatar of the complete
 * discrete valuation ring F_p[[t]]. Coefficients are stored lowest degree
 * first and always kept reduced into [0, p).
 */

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace cubic {

/// Valuation of the zero series ("at least N").
inline constexpr int kInfinity = std::numeric_limits<int>::max();

struct RingConfig {
    std::uint32_t p = 5;
    int prec = 8;

    /// Validates p prime, p >= 5 and prec >= 1.
    static RingConfig make(std::int64_t p, std::int64_t prec);

    friend bool operator==(const RingConfig&, const RingConfig&) = default;
};

bool is_prime(std::uint64_t n);

// F_p helpers.
std::uint32_t mod_p(std::int64_t x, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

class Series {
public:
    explicit Series(const RingConfig& cfg);

    static Series constant(const RingConfig& cfg, std::int64_t c);
    /// c * t^deg (zero when deg >= prec).
    static Series monomial(const RingConfig& cfg, std::int64_t c, int deg);
    /// Coefficients lowest degree first; missing entries are zero, extra
    /// entries beyond the precision are dropped.
    static Series from_coeffs(const RingConfig& cfg,
                              std::span<const std::int64_t> coeffs);

    const RingConfig& config() const { return cfg_; }
    int prec() const { return cfg_.prec; }
    std::uint32_t p() const { return cfg_.p; }
    std::uint32_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_unit() const { return c_[0] != 0; }
    /// Index of the first nonzero coefficient, kInfinity for zero.
    int valuation() const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);
    Series operator-() const;
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);

    Series scaled(std::uint32_t c) const;
    /// Multiplication by t^k.
    Series shifted_up(int k) const;
    /// Drops the k lowest coefficients: the quotient by t^k when the
    /// valuation is at least k. The top k coefficients are filled with zero.
    Series shifted_down(int k) const;
    /// Reduction modulo t^k: the unique representative of degree < k.
    Series truncated(int k) const;

    /// Inverse in D_N; throws NonUnitError when the constant term is zero.
    Series inverse() const;

    std::string to_string() const;

    friend bool operator==(const Series& a, const Series& b) {
        return a.cfg_ == b.cfg_ && a.c_ == b.c_;
    }
    friend bool operator<(const Series& a, const Series& b) { return a.c_ < b.c_; }

private:
    void check_same(const Series& o) const;

    RingConfig cfg_;
    std::vector<std::uint32_t> c_;
};

/// Valuation formatted as an integer or "inf".
std::string valuation_string(int v);

} // namespace cubic
