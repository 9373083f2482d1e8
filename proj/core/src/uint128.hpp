#pragma once

namespace polya::detail {

__extension__ typedef unsigned __int128 u128;

}  // namespace polya::detail
