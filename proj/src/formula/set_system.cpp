#include "formula/set_system.hpp"

#include "formula/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace thrcnf {

SetSystem::SetSystem(unsigned n_, std::vector<VarSet> sets_) : n(n_), sets(std::move(sets_)) {
  for (const auto& s : sets)
    if (s.max_var() > n) throw InputError("set element exceeds universe size " + std::to_string(n));
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::optional<unsigned> SetSystem::uniform_size() const {
  if (sets.empty()) return std::nullopt;
  const auto sz = sets.front().size();
  for (const auto& s : sets)
    if (s.size() != sz) return std::nullopt;
  return static_cast<unsigned>(sz);
}

SetSystem parse_set_system_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("set system JSON: ") + e.what(), 0);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("blocks") || !j["blocks"].is_array())
    throw ParseError("set system JSON needs fields n and blocks", 0);
  const long long n = j["n"].get<long long>();
  if (n < 1 || n > 4096) throw ParseError("set system n out of range", 0);
  std::vector<VarSet> sets;
  for (const auto& block : j["blocks"]) {
    if (!block.is_array()) throw ParseError("each block must be an array of indices", 0);
    VarSet s;
    for (const auto& v : block) {
      const long long x = v.get<long long>();
      if (x < 1 || x > n) throw InputError("block index " + std::to_string(x) + " outside 1.." + std::to_string(n));
      s.insert(static_cast<Var>(x));
    }
    if (s.size() != block.size()) throw ParseError("block lists an index twice", 0);
    sets.push_back(std::move(s));
  }
  SetSystem sys(static_cast<unsigned>(n), std::move(sets));
  if (j.contains("block_size") && !sys.sets.empty()) {
    const auto bs = j["block_size"].get<long long>();
    for (const auto& s : sys.sets)
      if (static_cast<long long>(s.size()) != bs)
        throw ParseError("block of size " + std::to_string(s.size()) + " but block_size is " + std::to_string(bs), 0);
  }
  if (j.contains("strength")) sys.strength = j["strength"].get<unsigned>();
  return sys;
}

SetSystem read_set_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_set_system_json(buf.str());
}

std::string set_system_to_json(const SetSystem& s) {
  nlohmann::json j;
  j["n"] = s.n;
  j["block_size"] = s.uniform_size() ? nlohmann::json(*s.uniform_size()) : nlohmann::json(nullptr);
  auto blocks = nlohmann::json::array();
  for (const auto& set : s.sets) blocks.push_back(set.elements());
  j["blocks"] = blocks;
  if (s.strength) j["strength"] = *s.strength;
  return j.dump();
}

std::string to_string(const VarSet& s) {
  std::string out = "{";
  for (Var v : s.elements()) {
    if (out.size() > 1) out += ',';
    out += std::to_string(v);
  }
  return out + '}';
}

SetSystem partition_design(unsigned n, unsigned q) {
  if (q == 0 || n % q != 0) throw InputError("partition design needs q dividing n");
  std::vector<VarSet> blocks;
  for (unsigned b = 0; b < n / q; ++b) {
    VarSet s;
    for (unsigned i = 1; i <= q; ++i) s.insert(b * q + i);
    blocks.push_back(std::move(s));
  }
  SetSystem sys(n, std::move(blocks));
  sys.strength = 1;
  return sys;
}

SetSystem projective_plane_13() {
  std::vector<VarSet> lines;
  for (unsigned i = 0; i < 13; ++i) {
    VarSet s;
    for (unsigned d : {0U, 1U, 3U, 9U}) s.insert((i + d) % 13 + 1);
    lines.push_back(std::move(s));
  }
  SetSystem sys(13, std::move(lines));
  sys.strength = 2;
  return sys;
}

}  // namespace thrcnf
