#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "panelkit/errors.hpp"

namespace panelkit {

// Calendar quarter, totally ordered. String form "YYYYQ#", e.g. "2009Q1".
struct Quarter {
  int year = 0;
  int quarter = 1;  // 1..4

  auto operator<=>(const Quarter&) const = default;

  Quarter next() const {
    return quarter == 4 ? Quarter{year + 1, 1} : Quarter{year, quarter + 1};
  }

  std::string str() const {
    return std::to_string(year) + "Q" + std::to_string(quarter);
  }

  static Quarter parse(std::string_view s);
};

}  // namespace panelkit
