#pragma once

#include <string>

#include "immlab/error.hpp"

namespace immlab {

/// Enumeration limits. Exceeding one is an error (CapExceeded), never a
/// silent truncation.
struct Caps {
  int stream_n = 10;    // permutation streams and the n!-term permanent
  int table_n = 8;      // full character tables
  int immanant_n = 10;  // direct immanant evaluation
  int ryser_n = 24;     // Gray-code permanent

  // Immanants above 12 are out of reach of the direct sum no matter the cap.
  static constexpr int immanant_hard_limit = 12;

  void validate() const {
    if (stream_n <= 0 || table_n <= 0 || immanant_n <= 0 || ryser_n <= 0)
      throw Error(Errc::cap_exceeded, "all caps must be positive");
    if (immanant_n > immanant_hard_limit)
      throw Error(Errc::cap_exceeded, "immanant cap may not exceed " +
                                          std::to_string(immanant_hard_limit));
    if (ryser_n > 62)
      throw Error(Errc::cap_exceeded, "ryser cap may not exceed 62");
  }
};

inline void check_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw Error(Errc::cap_exceeded, std::string(what) + ": size " + std::to_string(n) +
                                        " exceeds cap " + std::to_string(cap));
}

}  // namespace immlab
