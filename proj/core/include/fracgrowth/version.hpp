#pragma once

#include <string_view>

namespace fracgrowth {

[[nodiscard]] std::string_view version() noexcept;

}  // namespace fracgrowth
