#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hpl/gauges.hpp"

namespace hpl {

// Named bodies for the verification suites. A JSON catalog file can
// override or extend the builtin set; lookups fall back to builtins
// (square, cube, triangle, simplex, cross, ball, kgon<k>) parameterized
// by the requested dimension.
class Catalog {
  public:
    static Catalog builtin();
    static Catalog from_file(const std::string& path);

    ConvexBodySpec body(const std::string& name, int n) const;
    std::vector<std::string> default_bodies(int n) const;

  private:
    struct FileEntry {
        std::string name;
        std::string raw;  // serialized JSON body spec
    };
    std::vector<FileEntry> entries_;
};

}  // namespace hpl
