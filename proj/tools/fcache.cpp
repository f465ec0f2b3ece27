#include "fcache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

namespace hypermap::cli {

namespace {

constexpr char kMagic[4] = {'H', 'M', 'F', 'C'};

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

struct Reader {
  const std::string& buf;
  std::size_t pos = 0;

  bool u32(std::uint32_t& v) {
    if (pos + 4 > buf.size()) return false;
    v = static_cast<std::uint8_t>(buf[pos]) |
        (static_cast<std::uint32_t>(static_cast<std::uint8_t>(buf[pos + 1])) << 8) |
        (static_cast<std::uint32_t>(static_cast<std::uint8_t>(buf[pos + 2])) << 16) |
        (static_cast<std::uint32_t>(static_cast<std::uint8_t>(buf[pos + 3])) << 24);
    pos += 4;
    return true;
  }
  bool u8(std::uint8_t& v) {
    if (pos >= buf.size()) return false;
    v = static_cast<std::uint8_t>(buf[pos++]);
    return true;
  }
  bool bytes(std::vector<std::uint8_t>& out, std::size_t count) {
    if (pos + count > buf.size()) return false;
    out.assign(buf.begin() + pos, buf.begin() + pos + count);
    pos += count;
    return true;
  }
};

}  // namespace

std::size_t load_fcache(const std::string& path, FGrid& grid) {
  if (path.empty()) return 0;
  std::ifstream in(path, std::ios::binary);
  if (!in) return 0;
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  Reader r{buf};
  if (buf.size() < 8 || buf.compare(0, 4, kMagic, 4) != 0) return 0;
  r.pos = 4;
  std::uint32_t version = 0;
  if (!r.u32(version) || version != kFCacheVersion) return 0;

  std::size_t loaded = 0;
  for (;;) {
    std::uint32_t k, m, n, lambda, len;
    std::uint8_t neg;
    std::vector<std::uint8_t> num, den;
    if (!r.u32(k) || !r.u32(m) || !r.u32(n) || !r.u32(lambda)) break;
    if (!r.u8(neg) || !r.u32(len) || !r.bytes(num, len)) break;
    if (!r.u32(len) || !r.bytes(den, len)) break;
    if (k < 1 || m < 1 || n < 1 || lambda < 1) continue;

    BigInt numerator = BigInt::from_magnitude_bytes(num, neg != 0);
    BigInt denominator = BigInt::from_magnitude_bytes(den, false);
    if (denominator.is_zero()) continue;
    grid.insert(static_cast<int>(k), static_cast<int>(m), static_cast<int>(n),
                static_cast<int>(lambda), BigRat(numerator, denominator));
    ++loaded;
  }
  return loaded;
}

void save_fcache(const std::string& path, const FGrid& grid) {
  if (path.empty()) return;
  std::string out;
  out.append(kMagic, 4);
  put_u32(out, kFCacheVersion);

  for (const auto& rec : grid.snapshot()) {
    put_u32(out, static_cast<std::uint32_t>(rec.k));
    put_u32(out, static_cast<std::uint32_t>(rec.m));
    put_u32(out, static_cast<std::uint32_t>(rec.n));
    put_u32(out, static_cast<std::uint32_t>(rec.lambda));
    BigInt num = rec.value.numerator();
    BigInt den = rec.value.denominator();
    out.push_back(num.sign() < 0 ? '\1' : '\0');
    auto num_bytes = num.magnitude_bytes();
    put_u32(out, static_cast<std::uint32_t>(num_bytes.size()));
    out.append(num_bytes.begin(), num_bytes.end());
    auto den_bytes = den.magnitude_bytes();
    put_u32(out, static_cast<std::uint32_t>(den_bytes.size()));
    out.append(den_bytes.begin(), den_bytes.end());
  }

  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) return;  // cache is best-effort; computation already succeeded
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::remove(tmp.c_str());
}

}  // namespace hypermap::cli
