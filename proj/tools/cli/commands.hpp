#pragma once

#include <cstdint>
#include <optional>

#include "cli/input.hpp"
#include "cli/report.hpp"
#include "np/error.hpp"

namespace np::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitGeometry = 2;
inline constexpr int kExitShape = 3;
inline constexpr int kExitArithmetic = 4;
inline constexpr int kExitInput = 5;

int exit_code(ErrorKind kind) noexcept;

Report cmd_hodge(const InputDocument& in);
Report cmd_diagonal(const InputDocument& in, const Integer& p);
Report cmd_ordinary_classes(const InputDocument& in);
Report cmd_decompose(const InputDocument& in, Strategy strategy, const std::optional<Integer>& p);
Report cmd_scan(const InputDocument& in, std::uint64_t bound);

}  // namespace np::cli
