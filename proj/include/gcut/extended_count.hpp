#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

namespace gcut {

/// A non-negative integer or +infinity. Every connectivity value lives here,
/// since a graph without a k-restricted cut has lambda_k = +inf.
class ExtendedCount {
public:
    using value_type = std::uint64_t;

    constexpr ExtendedCount() = default;
    constexpr ExtendedCount(value_type v) : value_(v) {}  // NOLINT: implicit by design of the arithmetic

    static constexpr ExtendedCount infinity() {
        ExtendedCount c;
        c.value_ = kInf;
        return c;
    }

    constexpr bool is_finite() const { return value_ != kInf; }
    constexpr bool is_infinite() const { return value_ == kInf; }

    /// Throws std::logic_error on infinity.
    value_type value() const;

    constexpr auto operator<=>(const ExtendedCount&) const = default;

    /// inf + x = inf.
    friend constexpr ExtendedCount operator+(ExtendedCount a, ExtendedCount b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return ExtendedCount(a.value_ + b.value_);
    }

    /// inf * c = inf for c > 0, and 0 for c = 0.
    friend constexpr ExtendedCount operator*(ExtendedCount a, value_type c) {
        if (c == 0) return ExtendedCount(0);
        if (a.is_infinite()) return infinity();
        return ExtendedCount(a.value_ * c);
    }
    friend constexpr ExtendedCount operator*(value_type c, ExtendedCount a) { return a * c; }

    /// "inf" or the decimal value.
    std::string to_string() const;

    /// Accepts "inf" / "infinity" or a decimal integer.
    static ExtendedCount parse(std::string_view text);

private:
    static constexpr value_type kInf = std::numeric_limits<value_type>::max();
    value_type value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ExtendedCount& c);

}  // namespace gcut
