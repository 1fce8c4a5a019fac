#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmfvs {

// Literal +i / -i refers to variable i (1-based).
using Clause = std::vector<int>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  // Throws PreconditionError on an empty clause, literal 0 or an unknown variable.
  void validate(int max_width = 0) const;
  // assignment[i] is the value of variable i; index 0 unused.
  bool satisfied_by(const std::vector<bool>& assignment) const;
};

struct PartitionedCnf {
  CnfFormula formula;
  // Variables of each part, ascending. All three have the same size.
  std::vector<int> parts[3];

  int part_size() const { return static_cast<int>(parts[0].size()); }
  // Throws PreconditionError when the parts are unequal, overlap, miss a
  // variable, or a clause touches one part twice.
  void validate() const;
};

CnfFormula read_dimacs(std::istream& in);
CnfFormula read_dimacs_file(const std::string& path);
void write_dimacs(std::ostream& out, const CnfFormula& f);

}  // namespace mmfvs
