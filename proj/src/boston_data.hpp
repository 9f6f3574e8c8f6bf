#pragma once

#include <string_view>

namespace arbor::detail {

extern const std::string_view kBostonCsv;

}  // namespace arbor::detail
