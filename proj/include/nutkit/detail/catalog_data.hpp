#pragma once

#include <cstddef>

namespace nutkit::detail {

struct RawSeed {
  int degree;
  int order;
  const char* text;
};

const RawSeed* raw_seed_catalog(std::size_t* count);

} // namespace nutkit::detail
