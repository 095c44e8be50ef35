#include "flatcomp/cost.hpp"

#include <numeric>

namespace flatcomp {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
        const __int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

constexpr __int128 kMax = std::int64_t{0x7fffffffffffffff};

Cost reduced(__int128 p, __int128 q) {
    const __int128 g = gcd128(p, q);
    p /= g;
    q /= g;
    if (p > kMax || q > kMax) throw std::overflow_error("cost arithmetic overflow");
    return Cost{static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)};
}

}  // namespace

Cost Cost::fin(std::int64_t p, std::int64_t q) {
    if (p < 0 || q <= 0) throw std::invalid_argument("cost: negative or zero denominator");
    const std::int64_t g = std::gcd(p, q);
    return Cost{p / g, q / g};
}

std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
    if (a.is_inf() && b.is_inf()) return std::strong_ordering::equal;
    if (a.is_inf()) return std::strong_ordering::greater;
    if (b.is_inf()) return std::strong_ordering::less;
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Cost cost_tensor(Cost x, Cost y) {
    if (x.is_inf() || y.is_inf()) return Cost::inf();
    const __int128 p = static_cast<__int128>(x.num) * y.den + static_cast<__int128>(y.num) * x.den;
    const __int128 q = static_cast<__int128>(x.den) * y.den;
    return reduced(p, q);
}

Cost cost_hom(Cost x, Cost y) {
    if (x.is_inf()) return Cost::zero();
    if (y.is_inf()) return Cost::inf();
    const __int128 p = static_cast<__int128>(y.num) * x.den - static_cast<__int128>(x.num) * y.den;
    if (p <= 0) return Cost::zero();
    return reduced(p, static_cast<__int128>(x.den) * y.den);
}

Cost cost_meet(std::span<const Cost> xs) {
    Cost acc = Cost::inf();
    for (const Cost& x : xs) acc = cost_min(acc, x);
    return acc;
}

Cost cost_join(std::span<const Cost> xs) {
    Cost acc = Cost::zero();
    for (const Cost& x : xs) acc = cost_max(acc, x);
    return acc;
}

std::string to_string(const Cost& c) {
    if (c.is_inf()) return "inf";
    if (c.den == 1) return std::to_string(c.num);
    return std::to_string(c.num) + "/" + std::to_string(c.den);
}

Cost parse_cost(std::string_view text) {
    if (text == "inf") return Cost::inf();
    if (text.empty()) throw parse_error("cost: empty value");
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view ns = text.substr(0, slash == std::string_view::npos ? text.size() : slash);
    std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits(ns) || !digits(ds))
        throw parse_error("cost: expected \"p\", \"p/q\" or \"inf\", got \"" + std::string(text) + "\"");
    if (ns.size() > 18 || ds.size() > 18)
        throw parse_error("cost: value out of range \"" + std::string(text) + "\"");
    const std::int64_t p = std::stoll(std::string(ns));
    const std::int64_t q = std::stoll(std::string(ds));
    if (q == 0) throw parse_error("cost: zero denominator in \"" + std::string(text) + "\"");
    return Cost::fin(p, q);
}

}  // namespace flatcomp
