#pragma once

#include <functional>
#include <vector>

namespace zwin {

// f(x, m) returns the values f^(j)(x) for j = 0..m.
using DerivativeFn = std::function<std::vector<double>(double, int)>;

}  // namespace zwin
