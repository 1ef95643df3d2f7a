#pragma once

#include <string_view>
#include <vector>

namespace jordanet::detail {

struct EmbeddedFile {
  std::string_view path;
  std::string_view content;
};

const std::vector<EmbeddedFile>& embedded_files();

}  // namespace jordanet::detail
