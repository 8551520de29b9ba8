#pragma once

#include <string>

namespace oodc {

/// A contiguous byte range of one source file. Lines and columns are 1-based;
/// columns count bytes.
struct Span {
  std::string file;
  int line = 0;
  int column = 0;
  int offset = 0;
  int length = 0;

  [[nodiscard]] int end() const { return offset + length; }
  [[nodiscard]] bool empty() const { return length == 0; }
  [[nodiscard]] bool contains(const Span& inner) const {
    return file == inner.file && offset <= inner.offset && inner.end() <= end();
  }

  /// Smallest span starting at `first` and ending where `last` ends.
  static Span cover(const Span& first, const Span& last) {
    Span s = first;
    s.length = last.end() - first.offset;
    return s;
  }
};

struct SourceFile {
  std::string name;
  std::string text;
};

}  // namespace oodc
