// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#include "imfkit/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <regex>

namespace imfkit::cli {
namespace {

std::string squash(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '_' || c == '-' || std::isspace(static_cast<unsigned char>(c))) continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.size() >= 2 && (s.front() == '\'' || s.front() == '"') && s.back() == s.front()) {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

double to_real(std::string_view key, std::string_view v) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw InvalidArgument("setting " + std::string(key) + ": '" + std::string(v) +
                          "' is not a number");
  }
  return out;
}

long long to_integer(std::string_view key, std::string_view v) {
  const double d = to_real(key, v);
  if (d != std::floor(d) || std::abs(d) > 9.0e15) {
    throw InvalidArgument("setting " + std::string(key) + ": '" + std::string(v) +
                          "' is not an integer");
  }
  return static_cast<long long>(d);
}

int to_int(std::string_view key, std::string_view v) {
  const auto x = to_integer(key, v);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    throw InvalidArgument("setting " + std::string(key) + " is out of range");
  }
  return static_cast<int>(x);
}

std::uint64_t to_u64(std::string_view key, std::string_view v) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw InvalidArgument("setting " + std::string(key) + ": '" + std::string(v) +
                          "' is not an unsigned integer");
  }
  return out;
}

std::vector<std::size_t> to_lengths(std::string_view key, std::string_view v) {
  std::vector<std::size_t> out;
  std::string cleaned;
  for (char c : v) {
    if (c == '[' || c == ']') continue;
    cleaned.push_back(c == ';' || c == ' ' ? ',' : c);
  }
  std::size_t start = 0;
  std::string_view s(cleaned);
  while (start < s.size()) {
    auto end = s.find(',', start);
    if (end == std::string_view::npos) end = s.size();
    const auto item = trim(s.substr(start, end - start));
    if (!item.empty()) {
      const auto x = to_integer(key, item);
      if (x < 1) throw InvalidArgument("setting " + std::string(key) + ": lengths must be >= 1");
      out.push_back(static_cast<std::size_t>(x));
    }
    start = end + 1;
  }
  return out;
}

enum class Family { emd, eemd, iterative_filtering };

std::string_view family_name(Family f) {
  switch (f) {
    case Family::emd: return "EMD";
    case Family::eemd: return "EEMD";
    case Family::iterative_filtering: return "IF";
  }
  return "?";
}

bool family_allowed(Method m, Family f) {
  switch (f) {
    case Family::iterative_filtering: return m == Method::iterative_filtering;
    case Family::eemd: return m == Method::eemd;
    case Family::emd: return m == Method::emd || m == Method::eemd;
  }
  return false;
}

bool apply_if(IFSettings& s, const std::string& k, std::string_view key, std::string_view v) {
  if (k == "delta") s.delta = to_real(key, v);
  else if (k == "extpoints") s.ext_points = to_int(key, v);
  else if (k == "nimfs") s.n_imfs = to_int(key, v);
  else if (k == "extensiontype" || k == "extension") s.extension = parse_boundary(v);
  else if (k == "maxinner") s.max_inner = to_int(key, v);
  else if (k == "alpha") s.alpha = parse_mask_rule(v);
  else if (k == "xi") s.xi = to_real(key, v);
  else if (k == "masklengths") s.mask_lengths_override = to_lengths(key, v);
  else return false;
  return true;
}

bool apply_eemd(EEMDSettings& s, const std::string& k, std::string_view key, std::string_view v) {
  if (k == "nstd") s.nstd = to_real(key, v);
  else if (k == "ne") s.ne = to_int(key, v);
  else if (k == "seed") s.seed = to_u64(key, v);
  else if (k == "nimfs" || k == "numimfs") s.num_imfs = to_int(key, v);
  else return false;
  return true;
}

bool apply_emd(EMDSettings& s, const std::string& k, std::string_view key, std::string_view v) {
  if (k == "maxinner") s.max_inner = to_int(key, v);
  else if (k == "maximfs") s.max_imfs = to_int(key, v);
  else if (k == "sdthreshold" || k == "sd") s.sd_threshold = to_real(key, v);
  else if (k == "minextrema") s.min_extrema = to_int(key, v);
  else if (k == "boundary" || k == "extensiontype") s.boundary = parse_boundary(v);
  else return false;
  return true;
}

bool apply_family(RunConfig& cfg, Family f, const std::string& k, std::string_view key,
                  std::string_view v) {
  switch (f) {
    case Family::iterative_filtering: return apply_if(cfg.ifs, k, key, v);
    case Family::eemd: return apply_eemd(cfg.eemd, k, key, v);
    case Family::emd: return apply_emd(cfg.emd, k, key, v);
  }
  return false;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::emd: return "emd";
    case Method::eemd: return "eemd";
    case Method::iterative_filtering: return "if";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  const auto t = squash(text);
  if (t == "emd") return Method::emd;
  if (t == "eemd") return Method::eemd;
  if (t == "if" || t == "iterativefiltering") return Method::iterative_filtering;
  throw InvalidArgument("unknown method '" + std::string(text) + "' (expected emd, eemd or if)");
}

EEMDSettings RunConfig::effective_eemd() const {
  EEMDSettings e = eemd;
  e.emd = emd;
  return e;
}

void apply_setting(RunConfig& cfg, std::string_view raw_key, std::string_view raw_value) {
  const auto key = trim(raw_key);
  const auto value = trim(raw_value);
  std::string k = squash(key);

  std::optional<Family> family;
  if (const auto dot = k.find('.'); dot != std::string::npos) {
    const auto prefix = k.substr(0, dot);
    if (prefix == "if") family = Family::iterative_filtering;
    else if (prefix == "eemd") family = Family::eemd;
    else if (prefix == "emd") family = Family::emd;
    else throw InvalidArgument("unknown setting family in '" + std::string(key) + "'");
    k = k.substr(dot + 1);
  }

  if (family) {
    if (!family_allowed(cfg.method, *family)) {
      throw InvalidArgument("setting " + std::string(key) + " belongs to " +
                            std::string(family_name(*family)) + " and is not accepted by method " +
                            std::string(to_string(cfg.method)));
    }
    if (!apply_family(cfg, *family, k, key, value)) {
      throw InvalidArgument("unknown setting '" + std::string(key) + "'");
    }
    return;
  }

  // Bare key: the method's own family first, then EMD for eemd.
  switch (cfg.method) {
    case Method::iterative_filtering:
      if (apply_if(cfg.ifs, k, key, value)) return;
      break;
    case Method::eemd:
      if (apply_eemd(cfg.eemd, k, key, value) || apply_emd(cfg.emd, k, key, value)) return;
      break;
    case Method::emd:
      if (apply_emd(cfg.emd, k, key, value)) return;
      break;
  }
  throw InvalidArgument("unknown setting '" + std::string(key) + "' for method " +
                        std::string(to_string(cfg.method)));
}

void apply_settings_text(RunConfig& cfg, std::string_view text) {
  static const std::regex call(R"(Settings_\w+\s*\(([^)]*)\))", std::regex::icase);
  static const std::regex arg(R"re('([^']*)'|"([^"]*)"|(\[[^\]]*\])|([^,\s]+))re");

  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(trim(text.substr(start, end - start)));
    start = end + 1;
    if (const auto c = line.find_first_of("#%"); c != std::string::npos) line.resize(c);
    if (trim(line).empty()) continue;

    std::smatch m;
    if (std::regex_search(line, m, call)) {
      const std::string args = m[1].str();
      std::vector<std::string> tokens;
      for (auto it = std::sregex_iterator(args.begin(), args.end(), arg);
           it != std::sregex_iterator(); ++it) {
        const auto& g = *it;
        for (int i = 1; i <= 4; ++i) {
          if (g[i].matched) {
            tokens.push_back(g[i].str());
            break;
          }
        }
      }
      if (tokens.size() % 2 != 0) {
        throw InvalidArgument("settings call needs name/value pairs: " + line);
      }
      for (std::size_t i = 0; i < tokens.size(); i += 2) apply_setting(cfg, tokens[i], tokens[i + 1]);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidArgument("settings line without '=': " + line);
    apply_setting(cfg, std::string_view(line).substr(0, eq), std::string_view(line).substr(eq + 1));
  }
}

void apply_settings_file(RunConfig& cfg, const std::filesystem::path& path) {
  apply_settings_text(cfg, io::read_file(path));
}

io::KeyValues settings_report(const RunConfig& cfg) {
  using io::format_number;
  io::KeyValues kv{{"method", std::string(to_string(cfg.method))}};
  auto emd_lines = [&](const EMDSettings& e) {
    kv.emplace_back("max_imfs", std::to_string(e.max_imfs));
    kv.emplace_back("max_inner", std::to_string(e.max_inner));
    kv.emplace_back("sd_threshold", format_number(e.sd_threshold));
    kv.emplace_back("min_extrema", std::to_string(e.min_extrema));
    kv.emplace_back("boundary", std::string(to_string(e.boundary)));
  };
  switch (cfg.method) {
    case Method::iterative_filtering: {
      const auto& s = cfg.ifs;
      kv.emplace_back("delta", format_number(s.delta));
      kv.emplace_back("ext_points", std::to_string(s.ext_points));
      kv.emplace_back("n_imfs", std::to_string(s.n_imfs));
      kv.emplace_back("extension", std::string(to_string(s.extension)));
      kv.emplace_back("max_inner", std::to_string(s.max_inner));
      kv.emplace_back("alpha", std::string(to_string(s.alpha)));
      kv.emplace_back("xi", format_number(s.xi));
      std::string lengths;
      for (auto l : s.mask_lengths_override) {
        if (!lengths.empty()) lengths += ',';
        lengths += std::to_string(l);
      }
      kv.emplace_back("mask_lengths_override", lengths.empty() ? "none" : lengths);
      break;
    }
    case Method::eemd:
      kv.emplace_back("nstd", format_number(cfg.eemd.nstd));
      kv.emplace_back("ne", std::to_string(cfg.eemd.ne));
      kv.emplace_back("seed", std::to_string(cfg.eemd.seed));
      kv.emplace_back("num_imfs",
                      cfg.eemd.num_imfs ? std::to_string(*cfg.eemd.num_imfs) : "auto");
      emd_lines(cfg.emd);
      break;
    case Method::emd:
      emd_lines(cfg.emd);
      break;
  }
  return kv;
}

}  // namespace imfkit::cli
