#include "sgspec/config.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace sgspec {

void RunConfig::validate() const {
  if (!(psi_rel_tol > 0 && psi_rel_tol <= 1e-6))
    throw std::invalid_argument("psi_rel_tol must lie in (0, 1e-6]");
  if (!(count_rel_tol > 0 && count_rel_tol < 1e-3))
    throw std::invalid_argument("count_rel_tol must lie in (0, 1e-3)");
  if (ell_max < 1) throw std::invalid_argument("ell_max must be positive");
  if (cover_depth_cap < 1 || cover_depth_cap > 40)
    throw std::invalid_argument("cover_depth_cap must lie in [1, 40]");
  if (oracle_level_cap < 1 || oracle_level_cap > 6)
    throw std::invalid_argument("oracle_level_cap must lie in [1, 6]");
  if (format != "csv" && format != "json")
    throw std::invalid_argument("format must be \"csv\" or \"json\"");
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;
  if (!j.is_object()) throw std::invalid_argument("config root must be a JSON object");

  RunConfig cfg;
  for (const auto& [key, val] : j.items()) {
    if (key == "psi_rel_tol")
      cfg.psi_rel_tol = val.get<double>();
    else if (key == "count_rel_tol")
      cfg.count_rel_tol = val.get<double>();
    else if (key == "ell_max")
      cfg.ell_max = val.get<std::int64_t>();
    else if (key == "cover_depth_cap")
      cfg.cover_depth_cap = val.get<int>();
    else if (key == "oracle_level_cap")
      cfg.oracle_level_cap = val.get<int>();
    else if (key == "format")
      cfg.format = val.get<std::string>();
    else if (key == "output")
      cfg.output = val.get<std::string>();
    else
      throw std::invalid_argument("unknown config key: " + key);
  }
  cfg.validate();
  return cfg;
}

}  // namespace sgspec
