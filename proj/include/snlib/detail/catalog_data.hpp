// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

namespace snlib::detail {

/// One network-format text blob embedded from data/catalog at build time.
struct EmbeddedNetwork {
  int channels;
  char objective;  // 'S' or 'D'
  const char* text;
};

extern const EmbeddedNetwork kEmbeddedCatalog[];
extern const std::size_t kEmbeddedCatalogCount;

}  // namespace snlib::detail
