#pragma once

#include <numbers>
#include <string>

namespace bell {

inline constexpr double kPi = std::numbers::pi;

double deg_to_rad(double degrees);
double rad_to_deg(double radians);

// Reduces a polarizer angle to [0, pi). Polarizer settings are period-pi.
double normalize_angle(double radians);

// One analyzer configuration: a polarizer angle, a symbolic outcome label
// (e.g. "up"/"down" for discrete models), or Removed -- polarizer absent.
class Setting {
 public:
  enum class Kind { Angle, Label, Removed };

  Setting() = default;  // Removed

  static Setting angle(double radians);
  static Setting angle_degrees(double degrees);
  static Setting label(std::string name);
  static Setting removed();

  Kind kind() const { return kind_; }
  bool is_removed() const { return kind_ == Kind::Removed; }
  bool is_angle() const { return kind_ == Kind::Angle; }
  bool is_label() const { return kind_ == Kind::Label; }

  double radians() const;            // Angle only
  double degrees() const;            // Angle only
  const std::string& name() const;   // Label only

  std::string to_string() const;

  friend bool operator==(const Setting& lhs, const Setting& rhs);
  friend bool operator!=(const Setting& lhs, const Setting& rhs) { return !(lhs == rhs); }
  friend bool operator<(const Setting& lhs, const Setting& rhs);

 private:
  Kind kind_ = Kind::Removed;
  double radians_ = 0.0;
  std::string label_;
};

// Parses a user-facing token: "removed"/"inf" mean Removed, a number is a
// polarizer angle in degrees, anything else is a label.
Setting parse_setting(const std::string& token);

}  // namespace bell
