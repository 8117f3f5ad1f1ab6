#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace fracperc {

/// Incremental SHA-256 (FIPS 180-4).
class Sha256 {
  public:
    Sha256();
    void update(const void* data, std::size_t len);
    void update(std::string_view s) { update(s.data(), s.size()); }
    /// Hex digest; finalizes the stream.
    std::string hex();

  private:
    void block(const std::uint8_t* p);
    std::uint32_t h_[8];
    std::uint8_t buf_[64];
    std::size_t buflen_ = 0;
    std::uint64_t total_ = 0;
};

std::string sha256_hex(std::string_view data);

}  // namespace fracperc
