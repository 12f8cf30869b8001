#include "ginv/degree_cache.hpp"

#include "ginv/errors.hpp"

#include <openssl/evp.h>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ginv {

namespace fs = std::filesystem;

std::string group_fingerprint(const PermGroup &g) {
  std::vector<std::vector<uint32_t>> images;
  for (const Permutation &p : g.generators())
    images.push_back(p.images());
  std::sort(images.begin(), images.end());

  std::vector<unsigned char> buf;
  auto feed_u32 = [&](uint32_t v) {
    for (int s = 0; s < 32; s += 8)
      buf.push_back(static_cast<unsigned char>(v >> s));
  };
  feed_u32(g.degree());
  feed_u32(static_cast<uint32_t>(images.size()));
  for (const auto &img : images)
    for (uint32_t v : img)
      feed_u32(v);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int digest_len = 0;
  if (!EVP_Digest(buf.data(), buf.size(), digest, &digest_len, EVP_sha256(),
                  nullptr) ||
      digest_len != 32)
    throw ComputeError("SHA-256 unavailable");

  static const char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < digest_len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

DegreeCache::DegreeCache(std::optional<fs::path> dir) {
  if (dir) {
    dir_ = *dir;
  } else if (const char *env = std::getenv("GINV_CACHE_DIR")) {
    dir_ = env;
  } else if (const char *home = std::getenv("HOME")) {
    dir_ = fs::path(home) / ".cache" / "ginv";
  } else {
    dir_ = fs::temp_directory_path() / "ginv-cache";
  }
  std::error_code ec;
  fs::create_directories(dir_, ec); // degraded to miss-only on failure
}

namespace {

fs::path entry_path(const fs::path &dir, const std::string &fingerprint) {
  return dir / (fingerprint + ".deg");
}

bool valid_fingerprint(const std::string &f) {
  return f.size() == 64 && std::all_of(f.begin(), f.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
         });
}

} // namespace

std::optional<DegreeMultiset> DegreeCache::get(
    const std::string &fingerprint) const {
  std::ifstream in(entry_path(dir_, fingerprint));
  if (!in)
    return std::nullopt;
  std::string header, stored, order_line, entries_line;
  if (!std::getline(in, header) || header != "GINVCACHE 1")
    return std::nullopt;
  if (!std::getline(in, stored) || stored != fingerprint)
    return std::nullopt;
  if (!std::getline(in, order_line) || !std::getline(in, entries_line))
    return std::nullopt;

  DegreeMultiset out;
  try {
    out.group_order = Integer(order_line);
  } catch (...) {
    return std::nullopt;
  }
  if (out.group_order < 1)
    return std::nullopt;
  std::istringstream es(entries_line);
  std::string pair;
  Integer sum = 0;
  uint64_t prev_degree = 0;
  while (es >> pair) {
    std::size_t colon = pair.find(':');
    if (colon == std::string::npos)
      return std::nullopt;
    uint64_t d, m;
    try {
      d = std::stoull(pair.substr(0, colon));
      m = std::stoull(pair.substr(colon + 1));
    } catch (...) {
      return std::nullopt;
    }
    if (d == 0 || m == 0 || d <= prev_degree)
      return std::nullopt;
    prev_degree = d;
    out.entries.emplace_back(d, m);
    sum += Integer(static_cast<unsigned long>(d)) *
           static_cast<unsigned long>(d) * static_cast<unsigned long>(m);
    if (d == 1)
      out.linear_count = m;
  }
  if (out.entries.empty() || sum != out.group_order ||
      out.linear_count == 0)
    return std::nullopt;
  return out;
}

void DegreeCache::put(const std::string &fingerprint,
                      const DegreeMultiset &degrees) const {
  if (!valid_fingerprint(fingerprint))
    throw ParseError("bad fingerprint: " + fingerprint);
  fs::path final_path = entry_path(dir_, fingerprint);
  fs::path tmp = final_path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out)
      return; // cache is best effort
    out << "GINVCACHE 1\n" << fingerprint << "\n"
        << degrees.group_order.get_str() << "\n";
    for (std::size_t i = 0; i < degrees.entries.size(); ++i) {
      if (i)
        out << ' ';
      out << degrees.entries[i].first << ':' << degrees.entries[i].second;
    }
    out << '\n';
  }
  std::error_code ec;
  fs::rename(tmp, final_path, ec);
  if (ec)
    fs::remove(tmp, ec);
}

std::size_t DegreeCache::entry_count() const {
  std::error_code ec;
  std::size_t n = 0;
  for (fs::directory_iterator it(dir_, ec), end; !ec && it != end;
       it.increment(ec))
    if (it->path().extension() == ".deg")
      ++n;
  return n;
}

void DegreeCache::clear() const {
  std::error_code ec;
  for (fs::directory_iterator it(dir_, ec), end; !ec && it != end;
       it.increment(ec))
    if (it->path().extension() == ".deg")
      fs::remove(it->path(), ec);
}

DegreeMultiset cached_character_degrees(const PermGroup &g,
                                        const DegreeCache &cache) {
  std::string fp = group_fingerprint(g);
  if (auto hit = cache.get(fp)) {
    if (hit->group_order == g.order())
      return *hit;
  }
  DegreeMultiset d = character_degrees(g);
  cache.put(fp, d);
  return d;
}

} // namespace ginv
