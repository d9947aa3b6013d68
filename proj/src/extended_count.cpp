#include "gcut/extended_count.hpp"

#include <charconv>
#include <stdexcept>

#include "gcut/errors.hpp"

namespace gcut {

ExtendedCount::value_type ExtendedCount::value() const {
    if (is_infinite()) throw std::logic_error("value() called on an infinite count");
    return value_;
}

std::string ExtendedCount::to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(value_);
}

ExtendedCount ExtendedCount::parse(std::string_view text) {
    if (text == "inf" || text == "infinity") return infinity();
    value_type v = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end || v == kInf) {
        throw InvalidArgument("not an extended count: '" + std::string(text) + "'");
    }
    return ExtendedCount(v);
}

std::ostream& operator<<(std::ostream& os, const ExtendedCount& c) { return os << c.to_string(); }

}  // namespace gcut
