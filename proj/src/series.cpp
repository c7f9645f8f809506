#include "cubic/series.hpp"

#include <sstream>

#include "cubic/errors.hpp"

namespace cubic {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

RingConfig RingConfig::make(std::int64_t p, std::int64_t prec) {
    if (p < 5 || !is_prime(static_cast<std::uint64_t>(p)))
        throw ConfigError("p must be a prime >= 5, got " + std::to_string(p));
    if (p > 65521)
        throw ConfigError("p too large for 32-bit coefficient arithmetic");
    if (prec < 1 || prec > 4096)
        throw ConfigError("precision must be in [1, 4096], got " + std::to_string(prec));
    return RingConfig{static_cast<std::uint32_t>(p), static_cast<int>(prec)};
}

std::uint32_t mod_p(std::int64_t x, std::uint32_t p) {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw NonUnitError("zero has no inverse in F_p");
    std::uint64_t result = 1, base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1u) result = result * base % p;
        base = base * base % p;
        e >>= 1u;
    }
    return static_cast<std::uint32_t>(result);
}

Series::Series(const RingConfig& cfg) : cfg_(cfg), c_(static_cast<std::size_t>(cfg.prec), 0) {}

Series Series::constant(const RingConfig& cfg, std::int64_t c) {
    return monomial(cfg, c, 0);
}

Series Series::monomial(const RingConfig& cfg, std::int64_t c, int deg) {
    Series s(cfg);
    if (deg >= 0 && deg < cfg.prec) s.c_[static_cast<std::size_t>(deg)] = mod_p(c, cfg.p);
    return s;
}

Series Series::from_coeffs(const RingConfig& cfg, std::span<const std::int64_t> coeffs) {
    Series s(cfg);
    const std::size_t n = std::min(coeffs.size(), s.c_.size());
    for (std::size_t i = 0; i < n; ++i) s.c_[i] = mod_p(coeffs[i], cfg.p);
    return s;
}

void Series::check_same(const Series& o) const {
    if (!(cfg_ == o.cfg_)) throw ConfigError("series with mismatched ring configurations");
}

bool Series::is_zero() const {
    for (auto x : c_)
        if (x) return false;
    return true;
}

int Series::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i]) return static_cast<int>(i);
    return kInfinity;
}

Series& Series::operator+=(const Series& o) {
    check_same(o);
    const std::uint32_t p = cfg_.p;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        std::uint32_t s = c_[i] + o.c_[i];
        c_[i] = s >= p ? s - p : s;
    }
    return *this;
}

Series& Series::operator-=(const Series& o) {
    check_same(o);
    const std::uint32_t p = cfg_.p;
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
    return *this;
}

Series Series::operator-() const {
    Series r(cfg_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] ? cfg_.p - c_[i] : 0;
    return r;
}

Series operator*(const Series& a, const Series& b) {
    a.check_same(b);
    const std::size_t n = a.c_.size();
    const std::uint64_t p = a.cfg_.p;
    Series r(a.cfg_);
    // Accumulate in 64 bits; reduce once the sum could overflow.
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!a.c_[i]) continue;
        const std::uint64_t ai = a.c_[i];
        for (std::size_t j = 0; i + j < n; ++j) {
            if (!b.c_[j]) continue;
            acc[i + j] += ai * b.c_[j];
            if (acc[i + j] >= (std::uint64_t{1} << 62)) acc[i + j] %= p;
        }
    }
    for (std::size_t i = 0; i < n; ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i] % p);
    return r;
}

Series& Series::operator*=(const Series& o) { return *this = *this * o; }

Series Series::scaled(std::uint32_t c) const {
    Series r(cfg_);
    const std::uint64_t cc = c % cfg_.p;
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i] = static_cast<std::uint32_t>(c_[i] * cc % cfg_.p);
    return r;
}

Series Series::shifted_up(int k) const {
    Series r(cfg_);
    const int n = cfg_.prec;
    for (int i = 0; i + k < n; ++i)
        if (i + k >= 0) r.c_[static_cast<std::size_t>(i + k)] = c_[static_cast<std::size_t>(i)];
    return r;
}

Series Series::shifted_down(int k) const {
    Series r(cfg_);
    const int n = cfg_.prec;
    for (int i = k; i < n; ++i)
        if (i >= 0) r.c_[static_cast<std::size_t>(i - k)] = c_[static_cast<std::size_t>(i)];
    return r;
}

Series Series::truncated(int k) const {
    Series r = *this;
    for (int i = std::max(k, 0); i < cfg_.prec; ++i) r.c_[static_cast<std::size_t>(i)] = 0;
    return r;
}

Series Series::inverse() const {
    if (!is_unit()) throw NonUnitError("series with zero constant term is not invertible");
    const std::size_t n = c_.size();
    const std::uint64_t p = cfg_.p;
    const std::uint64_t inv0 = inv_mod(c_[0], cfg_.p);
    Series r(cfg_);
    r.c_[0] = static_cast<std::uint32_t>(inv0);
    for (std::size_t i = 1; i < n; ++i) {
        std::uint64_t s = 0;
        for (std::size_t j = 1; j <= i; ++j) s = (s + std::uint64_t{c_[j]} * r.c_[i - j]) % p;
        r.c_[i] = static_cast<std::uint32_t>((p - s) % p * inv0 % p);
    }
    return r;
}

std::string Series::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c_[i];
        } else {
            if (c_[i] != 1) os << c_[i] << '*';
            os << 't';
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

std::string valuation_string(int v) { return v == kInfinity ? "inf" : std::to_string(v); }

} // namespace cubic
