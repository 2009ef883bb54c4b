#pragma once

#include <cstdint>
#include <string_view>

namespace flavorbench {

// FNV-1a, 64-bit. Stable across platforms; used for manifest content hashes
// and index/cache fingerprints (integrity markers, not cryptography).
class Fnv1a64 {
 public:
  Fnv1a64& update(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
    return *this;
  }

  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

inline std::uint64_t fnv1a64(std::string_view bytes) {
  return Fnv1a64().update(bytes).value();
}

}  // namespace flavorbench
