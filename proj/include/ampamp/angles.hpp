#pragma once

#include <numbers>
#include <string_view>

namespace ampamp {

inline constexpr double kPi = std::numbers::pi;

/// Maps any finite angle to its principal value in (-pi, pi].
double normalize_angle(double angle);

/// Parses a radian angle. Accepts plain numbers and symbolic forms built
/// from `pi`: "pi", "-pi/2", "3pi/4", "3*pi/4", "0.5*pi", "2*pi/3".
/// Throws Error(out_of_range) on malformed input.
double parse_angle(std::string_view text);

}  // namespace ampamp
