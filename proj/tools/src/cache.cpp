#include "cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "intertwine/errors.hpp"
#include "intertwine/parse.hpp"

namespace intertwine::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ASetCache::ASetCache(std::optional<fs::path> dir, std::ostream& warn, bool verify)
    : dir_(std::move(dir)), warn_(warn), verify_(verify) {
  if (!dir_) return;
  std::error_code ec;
  fs::create_directories(*dir_, ec);
  if (ec) {
    warn_ << "warning: cannot create cache directory " << *dir_ << ": " << ec.message() << "; caching disabled\n";
    dir_.reset();
  }
}

std::string ASetCache::request_key(const RootSystem& rs, const std::vector<Root>& letters, const Weight& mu,
                                   const IntegralData& ctx) {
  std::string key = "aset|v" + std::to_string(kCacheVersion) + "|" + rs.name() + "|lambda=" + to_string(ctx.lambda) + "|";
  for (std::size_t i = 0; i < letters.size(); ++i) key += (i ? "," : "") + to_string(letters[i]);
  return key + "|" + to_string(mu);
}

ASetProvider ASetCache::provider() {
  return [this](const RootSystem& rs, const WeylElem& w, const Weight& mu, const IntegralData& ctx) {
    return lookup(rs, w, mu, ctx);
  };
}

ASet ASetCache::lookup(const RootSystem& rs, const WeylElem& w, const Weight& mu, const IntegralData& ctx) {
  const std::vector<Root> letters = letters_of(ctx, integral_reduced_word(rs, w, ctx));
  const std::string key = request_key(rs, letters, mu, ctx);
  if (auto it = memory_.find(key); it != memory_.end()) return it->second;

  std::optional<fs::path> file;
  if (dir_) {
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
    file = *dir_ / name;
    if (auto cached = load(*file, key, rs, letters)) {
      if (verify_) {
        const ASet fresh = a_set_word(rs, letters, mu, ctx);
        if (!fresh.same_elements(*cached)) {
          warn_ << "warning: cache entry " << file->filename().string() << " disagrees with a fresh computation; replacing\n";
          store(*file, key, fresh);
          return memory_.emplace(key, fresh).first->second;
        }
      }
      ++hits_;
      return memory_.emplace(key, std::move(*cached)).first->second;
    }
  }
  ++misses_;
  ASet fresh = a_set_word(rs, letters, mu, ctx);
  if (file) store(*file, key, fresh);
  return memory_.emplace(key, std::move(fresh)).first->second;
}

std::optional<ASet> ASetCache::load(const fs::path& file, const std::string& key, const RootSystem& rs,
                                    const std::vector<Root>& letters) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  const std::string name = file.filename().string();
  try {
    const json doc = json::parse(in);
    const int version = doc.at("version").get<int>();
    if (version != kCacheVersion) {
      warn_ << "warning: cache entry " << name << " has version " << version << ", expected " << kCacheVersion
            << "; ignoring it\n";
      return std::nullopt;
    }
    if (doc.at("request").get<std::string>() != key) {
      warn_ << "warning: cache entry " << name << " belongs to a different request; ignoring it\n";
      return std::nullopt;
    }
    const std::vector<Root> betas = beta_sequence(rs, letters);
    ASet set;
    for (const auto& e : doc.at("elements")) {
      Certificate cert;
      cert.positions = e.at("positions").get<std::vector<int>>();
      for (int p : cert.positions) cert.roots.push_back(betas.at(p - 1));
      set.elements.emplace(parse_weight(e.at("weight").get<std::string>(), rs.rank()), std::move(cert));
    }
    if (set.elements.empty()) throw ParseError("empty element list");
    return set;
  } catch (const std::exception& e) {
    warn_ << "warning: ignoring corrupted cache entry " << name << " (" << e.what() << ")\n";
    return std::nullopt;
  }
}

void ASetCache::store(const fs::path& file, const std::string& key, const ASet& set) {
  if (write_failed_) return;
  json doc;
  doc["version"] = kCacheVersion;
  doc["request"] = key;
  doc["elements"] = json::array();
  for (const auto& [mu, cert] : set.elements)
    doc["elements"].push_back({{"weight", to_string(mu)}, {"positions", cert.positions}});

  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump() << '\n';
    if (!out) {
      warn_ << "warning: cannot write cache entry " << file << "; continuing without persistence\n";
      write_failed_ = true;
      return;
    }
  }
  std::error_code ec;
  fs::rename(tmp, file, ec);
  if (ec) {
    warn_ << "warning: cannot write cache entry " << file << ": " << ec.message() << "\n";
    write_failed_ = true;
  }
}

}  // namespace intertwine::cli
