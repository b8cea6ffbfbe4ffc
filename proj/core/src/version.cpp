#include "fracgrowth/version.hpp"

namespace fracgrowth {

std::string_view version() noexcept { return FRACGROWTH_VERSION; }

}  // namespace fracgrowth
