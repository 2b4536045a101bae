#include "amitsur/fixture.hpp"

#include <fstream>
#include <sstream>

#include "amitsur/errors.hpp"

namespace amitsur {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw FixtureError("line " + std::to_string(line) + ": " + msg);
}

std::size_t parse_index(const std::string& tok, std::size_t dim, std::size_t line) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &pos);
  } catch (const std::exception&) {
    fail(line, "bad index '" + tok + "'");
  }
  if (pos != tok.size()) fail(line, "bad index '" + tok + "'");
  if (v >= dim) fail(line, "index " + tok + " out of range (dimension " + std::to_string(dim) + ")");
  return v;
}

Rational parse_value(const std::string& tok, std::size_t line) {
  try {
    return parse_rational(tok);
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

std::uint64_t parse_u64(const std::string& tok, std::size_t line) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    fail(line, "bad integer '" + tok + "'");
  }
  if (pos != tok.size() || tok[0] == '-') fail(line, "bad integer '" + tok + "'");
  return v;
}

}  // namespace

TowerData parse_tower(std::istream& in) {
  TowerData d;
  bool have_basis = false;
  std::size_t dim = 0;
  std::string raw;
  std::size_t line = 0;

  auto require_basis = [&](const std::string& key) {
    if (!have_basis) fail(line, "'" + key + "' before 'basis'");
  };

  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    const std::string& key = tok[0];

    auto arity = [&](std::size_t k) {
      if (tok.size() != k + 1) fail(line, "'" + key + "' expects " + std::to_string(k) + " fields");
    };

    if (key == "name") {
      arity(1);
      d.name = tok[1];
    } else if (key == "characteristic") {
      arity(1);
      d.characteristic = parse_u64(tok[1], line);
    } else if (key == "basis") {
      if (have_basis) fail(line, "duplicate 'basis'");
      d.basis.assign(tok.begin() + 1, tok.end());
      dim = d.basis.size();
      if (dim == 0) fail(line, "empty basis");
      have_basis = true;
      d.mul.assign(dim, std::vector<FieldElement>(dim, FieldElement(dim, Rational(0))));
      d.sigma.assign(dim, Vector(dim, Rational(0)));
      d.tau.assign(dim, Vector(dim, Rational(0)));
      d.b.assign(dim, Rational(0));
      d.lambda.assign(dim, Rational(0));
    } else if (key == "n") {
      arity(1);
      d.n = parse_u64(tok[1], line);
    } else if (key == "m") {
      arity(1);
      d.m = parse_u64(tok[1], line);
    } else if (key == "r") {
      arity(1);
      d.r = parse_u64(tok[1], line);
    } else if (key == "t") {
      arity(1);
      d.t = parse_u64(tok[1], line);
    } else if (key == "s") {
      arity(1);
      if (d.s.set_str(tok[1], 10) != 0) fail(line, "bad integer '" + tok[1] + "'");
    } else if (key == "mul") {
      require_basis(key);
      arity(4);
      d.mul[parse_index(tok[1], dim, line)][parse_index(tok[2], dim, line)]
           [parse_index(tok[3], dim, line)] = parse_value(tok[4], line);
    } else if (key == "sigma" || key == "tau") {
      require_basis(key);
      arity(3);
      Matrix& mat = key == "sigma" ? d.sigma : d.tau;
      mat[parse_index(tok[1], dim, line)][parse_index(tok[2], dim, line)] = parse_value(tok[3], line);
    } else if (key == "b" || key == "lambda") {
      require_basis(key);
      arity(2);
      FieldElement& v = key == "b" ? d.b : d.lambda;
      v[parse_index(tok[1], dim, line)] = parse_value(tok[2], line);
    } else {
      fail(line, "unknown record '" + key + "'");
    }
  }
  if (!have_basis) throw FixtureError("missing 'basis' record");
  return d;
}

FieldTower load_tower(std::istream& in) { return FieldTower(parse_tower(in)); }

FieldTower load_tower_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open " + path);
  return load_tower(in);
}

void write_tower(std::ostream& out, const FieldTower& tower) {
  const TowerData& d = tower.data();
  const std::size_t dim = d.basis.size();
  out << "name " << (d.name.empty() ? "tower" : d.name) << "\n";
  out << "characteristic " << d.characteristic << "\n";
  out << "basis";
  for (const auto& b : d.basis) out << " " << b;
  out << "\n";
  out << "n " << d.n << "\nm " << d.m << "\nr " << d.r << "\nt " << d.t << "\ns " << d.s.get_str()
      << "\n";
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (d.mul[i][j][k] != 0)
          out << "mul " << i << " " << j << " " << k << " " << d.mul[i][j][k].get_str() << "\n";
  for (const char* key : {"sigma", "tau"}) {
    const Matrix& mat = std::string(key) == "sigma" ? d.sigma : d.tau;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (mat[i][j] != 0) out << key << " " << i << " " << j << " " << mat[i][j].get_str() << "\n";
  }
  for (std::size_t i = 0; i < dim; ++i)
    if (d.b[i] != 0) out << "b " << i << " " << d.b[i].get_str() << "\n";
  for (std::size_t i = 0; i < dim; ++i)
    if (d.lambda[i] != 0) out << "lambda " << i << " " << d.lambda[i].get_str() << "\n";
}

}  // namespace amitsur
