#include "ampamp/angles.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "ampamp/error.hpp"

namespace ampamp {

double normalize_angle(double angle) {
    if (!std::isfinite(angle)) {
        throw Error(ErrorCode::out_of_range, "angle must be finite");
    }
    double r = std::remainder(angle, 2.0 * kPi);
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void malformed(std::string_view text) {
    throw Error(ErrorCode::out_of_range, "malformed angle '" + std::string(text) + "'");
}

double parse_number(std::string_view s, std::string_view whole) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
        malformed(whole);
    }
    return value;
}

}  // namespace

double parse_angle(std::string_view text) {
    const std::string_view whole = text;
    text = trim(text);
    const auto pos = text.find("pi");
    if (pos == std::string_view::npos) return parse_number(text, whole);

    double sign = 1.0;
    std::string_view coef = trim(text.substr(0, pos));
    if (!coef.empty() && (coef.front() == '-' || coef.front() == '+')) {
        if (coef.front() == '-') sign = -1.0;
        coef = trim(coef.substr(1));
    }
    if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
    const double factor = coef.empty() ? 1.0 : parse_number(coef, whole);

    std::string_view rest = trim(text.substr(pos + 2));
    double value = sign * factor * kPi;
    if (rest.empty()) return value;
    if (rest.front() != '/') malformed(whole);
    const double denom = parse_number(rest.substr(1), whole);
    if (denom == 0.0) malformed(whole);
    return value / denom;
}

}  // namespace ampamp
