#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "urbanflow/geo.hpp"

namespace urbanflow {

// A decoded route geometry. Non-empty wherever a codec operation produced it.
using Path = std::vector<GeoPoint>;

struct PolylineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Continuation bit set on the final chunk of the text, or a coordinate pair
// cut short.
struct TruncatedEncodingError : PolylineError {
  TruncatedEncodingError() : PolylineError("truncated polyline encoding") {}
};

// Code point outside the printable [63, 126] range used by the encoding.
struct InvalidCharacterError : PolylineError {
  explicit InvalidCharacterError(char c)
      : PolylineError(std::string("invalid polyline character: code ") +
                      std::to_string(static_cast<int>(c))) {}
};

struct EmptyPathError : PolylineError {
  EmptyPathError() : PolylineError("cannot encode an empty path") {}
};

// Validated container for the 5-decimal fixed point, delta + zigzag,
// 5-bit chunk encoding. Construction decodes the text and rejects
// malformed input.
class EncodedPolyline {
 public:
  EncodedPolyline() = default;
  explicit EncodedPolyline(std::string text);

  const std::string& text() const { return text_; }

  friend bool operator==(const EncodedPolyline&,
                         const EncodedPolyline&) = default;

 private:
  std::string text_;
};

Path decode_polyline(const EncodedPolyline& e);
Path decode_polyline(std::string_view text);

// Throws EmptyPathError on an empty path. decode(encode(p)) reproduces p
// within 1e-5 degrees per coordinate.
EncodedPolyline encode_polyline(const Path& p);

}  // namespace urbanflow
