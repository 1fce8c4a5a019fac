#include "mmfvs/cnf.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "mmfvs/errors.hpp"

namespace mmfvs {

void CnfFormula::validate(int max_width) const {
  if (num_vars < 0) throw PreconditionError("negative variable count");
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const auto& c = clauses[i];
    if (c.empty()) throw PreconditionError("clause " + std::to_string(i + 1) + " is empty");
    if (max_width > 0 && static_cast<int>(c.size()) > max_width)
      throw PreconditionError("clause " + std::to_string(i + 1) + " has width " +
                              std::to_string(c.size()) + " > " + std::to_string(max_width));
    for (int lit : c)
      if (lit == 0 || std::abs(lit) > num_vars)
        throw PreconditionError("clause " + std::to_string(i + 1) + " has invalid literal " +
                                std::to_string(lit));
  }
}

bool CnfFormula::satisfied_by(const std::vector<bool>& a) const {
  for (const auto& c : clauses) {
    bool ok = false;
    for (int lit : c) {
      const bool val = a.at(static_cast<std::size_t>(std::abs(lit)));
      if ((lit > 0) == val) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

void PartitionedCnf::validate() const {
  formula.validate(3);
  const std::size_t n = parts[0].size();
  if (parts[1].size() != n || parts[2].size() != n)
    throw PreconditionError("parts have unequal sizes");
  std::vector<int> owner(static_cast<std::size_t>(formula.num_vars) + 1, -1);
  for (int p = 0; p < 3; ++p)
    for (int v : parts[p]) {
      if (v < 1 || v > formula.num_vars) throw PreconditionError("part lists unknown variable");
      if (owner[v] != -1) throw PreconditionError("variable " + std::to_string(v) + " in two parts");
      owner[v] = p;
    }
  for (int v = 1; v <= formula.num_vars; ++v)
    if (owner[v] == -1) throw PreconditionError("variable " + std::to_string(v) + " in no part");
  for (std::size_t i = 0; i < formula.clauses.size(); ++i) {
    bool used[3] = {false, false, false};
    for (int lit : formula.clauses[i]) {
      const int p = owner[std::abs(lit)];
      if (used[p])
        throw PreconditionError("clause " + std::to_string(i + 1) + " has two variables of part " +
                                std::to_string(p + 1));
      used[p] = true;
    }
  }
}

CnfFormula read_dimacs(std::istream& in) {
  CnfFormula f;
  std::string line;
  int lineno = 0;
  bool header = false;
  long declared = 0;
  Clause cur;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c" || first[0] == '%') continue;
    if (first == "p") {
      std::string kind;
      if (header || !(ls >> kind >> f.num_vars >> declared) || kind != "cnf")
        throw InputError("header must be 'p cnf <vars> <clauses>'", lineno, 1);
      header = true;
      continue;
    }
    if (!header) throw InputError("clause before header", lineno, 1);
    ls.clear();
    ls.seekg(0);
    long lit;
    std::string tok;
    while (ls >> tok) {
      char* end = nullptr;
      lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw InputError("bad literal '" + tok + "'", lineno, 1);
      if (lit == 0) {
        f.clauses.push_back(cur);
        cur.clear();
      } else {
        if (std::labs(lit) > f.num_vars) throw InputError("literal out of range", lineno, 1);
        cur.push_back(static_cast<int>(lit));
      }
    }
  }
  if (!header) throw InputError("missing 'p cnf' header");
  if (!cur.empty()) f.clauses.push_back(cur);
  if (static_cast<long>(f.clauses.size()) != declared)
    throw InputError("declared " + std::to_string(declared) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  f.validate();
  return f;
}

CnfFormula read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
}

}  // namespace mmfvs
