#include "liefield/algebra/cache.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "liefield/error.hpp"

namespace liefield {

namespace {

std::string fileSafe(const std::string& key) {
  std::string out;
  for (char c : key) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) h = (h ^ c) * 1099511628211ull;
  std::ostringstream os;
  os << out << "-" << std::hex << h << ".poly";
  return os.str();
}

}  // namespace

// One term per line: "re im y z g:e g:e ..."
std::string serializePolynomial(const NCPolynomial& p) {
  std::ostringstream os;
  os << "terms " << p.size() << "\n";
  for (const auto& t : p.terms()) {
    os << t.coeff.re().get_str() << " " << t.coeff.im().get_str() << " " << int(t.mono.y) << " " << int(t.mono.z);
    for (std::size_t g = 0; g < kMaxGenerators; ++g) {
      if (t.mono.exps[g]) os << " " << g << ":" << int(t.mono.exps[g]);
    }
    os << "\n";
  }
  return os.str();
}

NCPolynomial parsePolynomial(const std::string& text) {
  std::istringstream in(text);
  auto bad = [](const std::string& why) { return Error(ErrorKind::Domain, "malformed polynomial: " + why); };
  std::string head;
  std::size_t count = 0;
  if (!(in >> head >> count) || head != "terms") throw bad("header");
  std::string line;
  std::getline(in, line);
  std::vector<Term> terms;
  for (std::size_t k = 0; k < count; ++k) {
    if (!std::getline(in, line)) throw bad("truncated");
    std::istringstream ls(line);
    std::string re;
    std::string im;
    int y = 0;
    int z = 0;
    if (!(ls >> re >> im >> y >> z)) throw bad("term " + std::to_string(k));
    Term t;
    try {
      t.coeff = GaussianRational(mpq_class(re), mpq_class(im));
    } catch (const std::invalid_argument&) {
      throw bad("coefficient " + re + " " + im);
    }
    t.mono.y = static_cast<std::uint8_t>(y);
    t.mono.z = static_cast<std::uint8_t>(z);
    std::string ge;
    while (ls >> ge) {
      auto colon = ge.find(':');
      if (colon == std::string::npos) throw bad("exponent " + ge);
      std::size_t g = std::stoul(ge.substr(0, colon));
      if (g >= kMaxGenerators) throw bad("generator " + ge);
      t.mono.exps[g] = static_cast<std::uint8_t>(std::stoi(ge.substr(colon + 1)));
    }
    terms.push_back(std::move(t));
  }
  return NCPolynomial::fromTerms(std::move(terms));
}

PolynomialStore::PolynomialStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorKind::Config, "cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::filesystem::path PolynomialStore::file(const std::string& key) const { return dir_ / fileSafe(key); }

std::optional<NCPolynomial> PolynomialStore::load(const std::string& key) const {
  std::ifstream in(file(key));
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  // first line repeats the key so hash collisions read as misses
  auto nl = text.find('\n');
  if (nl == std::string::npos || text.substr(0, nl) != "key " + key) return std::nullopt;
  try {
    return parsePolynomial(text.substr(nl + 1));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void PolynomialStore::store(const std::string& key, const NCPolynomial& value) const {
  const auto target = file(key);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << "key " << key << "\n" << serializePolynomial(value);
    if (!out) return;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
}

}  // namespace liefield
