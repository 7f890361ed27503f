#include "liaison/ideal.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace liaison {

Ideal::Ideal(Ring ring, std::vector<MultiPoly> gens) : ring_(ring) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.nvars() != ring_.nvars)
      throw std::invalid_argument("generator arity mismatch");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : gens_)
    if (!mp_is_homogeneous(g)) return false;
  return true;
}

Ideal Ideal::irrelevant(const Ring& ring) {
  std::vector<MultiPoly> gens;
  for (int i = 0; i < ring.nvars; ++i) gens.push_back(mp_var(ring.nvars, i));
  return Ideal(ring, std::move(gens));
}

Ideal Ideal::unit(const Ring& ring) {
  return Ideal(ring, {mp_constant(ring.nvars, 1)});
}

Ideal Ideal::zero(const Ring& ring) { return Ideal(ring, {}); }

bool Ideal::is_unit_marker() const {
  for (const auto& g : gens_)
    if (g.degree() == 0) return true;
  return false;
}

std::shared_ptr<const GroebnerBasis> Ideal::cached_basis(
    const MonomialOrder& ord) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->map.find({static_cast<int>(ord.kind), ord.elim});
  return it == cache_->map.end() ? nullptr : it->second;
}

void Ideal::store_basis(const MonomialOrder& ord,
                        std::shared_ptr<const GroebnerBasis> gb) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->map.emplace(std::make_pair(static_cast<int>(ord.kind), ord.elim),
                      std::move(gb));
}

std::string ideal_to_text(const Ideal& I) {
  std::ostringstream os;
  os << "ring p=" << I.fp().modulus() << " vars=" << I.nvars() << "\n";
  for (const auto& g : I.gens()) os << mp_print(g) << "\n";
  return os.str();
}

Ideal ideal_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::uint32_t p = 0;
  int nvars = 0;
  bool header_seen = false;
  std::vector<std::string> poly_lines;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (!header_seen) {
      std::istringstream hs(line);
      std::string word, kp, kv;
      hs >> word >> kp >> kv;
      if (word != "ring" || kp.rfind("p=", 0) != 0 ||
          kv.rfind("vars=", 0) != 0)
        throw std::invalid_argument(
            "ideal file: expected header 'ring p=<prime> vars=<n>'");
      p = static_cast<std::uint32_t>(std::stoul(kp.substr(2)));
      nvars = std::stoi(kv.substr(5));
      if (nvars < 1 || nvars > kMaxVars)
        throw std::invalid_argument("ideal file: arity out of range");
      header_seen = true;
    } else {
      poly_lines.push_back(line);
    }
  }
  if (!header_seen)
    throw std::invalid_argument("ideal file: missing header line");
  Ring ring{Fp(p), nvars};
  std::vector<MultiPoly> gens;
  for (const auto& pl : poly_lines) gens.push_back(mp_parse(ring.fp, nvars, pl));
  return Ideal(ring, std::move(gens));
}

void ideal_save(const Ideal& I, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << ideal_to_text(I);
}

Ideal ideal_load(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return ideal_from_text(buf.str());
}

}  // namespace liaison
