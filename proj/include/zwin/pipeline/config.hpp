#pragma once

#include <map>
#include <optional>
#include <string>

namespace zwin {

// Flat "key = value" text; '#' starts a comment.  Later keys override earlier ones.
class Config {
 public:
  static Config parse(const std::string& text, const std::string& source = "<config>");
  // IoError when the file cannot be read.
  static Config load(const std::string& path);

  std::optional<std::string> get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace zwin
