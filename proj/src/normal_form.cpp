#include "logickit/normal_form.hpp"

namespace logickit::prop {

bool is_negation_normal(Formula f) {
  switch (f.conn()) {
    case Conn::Atom:
      return true;
    case Conn::Not:
      return f.child().is_atom();
    case Conn::And:
    case Conn::Or:
      return is_negation_normal(f.left()) && is_negation_normal(f.right());
    default:
      return false;
  }
}

namespace {
Formula nf_pos(Formula f);
Formula nf_neg(Formula f);

Formula nf_pos(Formula f) {
  switch (f.conn()) {
    case Conn::Atom:
      return f;
    case Conn::Not:
      return nf_neg(f.child());
    case Conn::And:
      return Formula::conj(nf_pos(f.left()), nf_pos(f.right()));
    case Conn::Or:
      return Formula::disj(nf_pos(f.left()), nf_pos(f.right()));
    case Conn::Implies:  // (45)
      return Formula::disj(nf_neg(f.left()), nf_pos(f.right()));
    case Conn::Iff:      // (47) then (45) on each direction
      return Formula::conj(Formula::disj(nf_neg(f.left()), nf_pos(f.right())),
                           Formula::disj(nf_neg(f.right()), nf_pos(f.left())));
  }
  throw Error("unreachable connective");
}

Formula nf_neg(Formula f) {
  switch (f.conn()) {
    case Conn::Atom:
      return Formula::negation(f);
    case Conn::Not:      // (35)
      return nf_pos(f.child());
    case Conn::And:      // (39)
      return Formula::disj(nf_neg(f.left()), nf_neg(f.right()));
    case Conn::Or:       // (38)
      return Formula::conj(nf_neg(f.left()), nf_neg(f.right()));
    case Conn::Implies:  // (40)
      return Formula::conj(nf_pos(f.left()), nf_neg(f.right()));
    case Conn::Iff:
      return Formula::disj(Formula::conj(nf_pos(f.left()), nf_neg(f.right())),
                           Formula::conj(nf_pos(f.right()), nf_neg(f.left())));
  }
  throw Error("unreachable connective");
}
}  // namespace

Formula reduce_nf(Formula f) { return nf_pos(f); }

Formula denial(Formula f) {
  if (!is_negation_normal(f))
    throw NotInNormalForm(print_atomic(f));
  switch (f.conn()) {
    case Conn::Atom:
      return Formula::negation(f);
    case Conn::Not:
      return f.child();
    case Conn::And:
      return Formula::disj(denial(f.left()), denial(f.right()));
    case Conn::Or:
      return Formula::conj(denial(f.left()), denial(f.right()));
    default:
      throw NotInNormalForm(print_atomic(f));
  }
}

Formula FundamentalConjunction::formula() const {
  if (literals.empty()) throw Error("empty fundamental conjunction");
  auto lit = [](const std::pair<std::string, bool>& l) {
    Formula a = Formula::atom(l.first);
    return l.second ? a : Formula::negation(a);
  };
  Formula out = lit(literals.back());
  for (std::size_t i = literals.size() - 1; i-- > 0;)
    out = Formula::conj(lit(literals[i]), out);
  return out;
}

FundamentalConjunction fundamental_conjunction(const Assignment& row) {
  FundamentalConjunction fc;
  for (std::size_t i = 0; i < row.atoms().size(); ++i)
    fc.literals.emplace_back(row.atoms()[i], row.values()[i]);
  return fc;
}

std::vector<FundamentalConjunction> fdnf_rows(Formula f) {
  std::vector<FundamentalConjunction> rows;
  for (const auto& row : canonical_assignments(f.atoms()))
    if (eval(f, row)) rows.push_back(fundamental_conjunction(row));
  if (rows.empty()) throw IsContradiction(print_atomic(f));
  return rows;
}

Formula fdnf(Formula f) {
  auto rows = fdnf_rows(f);
  Formula out = rows.back().formula();
  for (std::size_t i = rows.size() - 1; i-- > 0;)
    out = Formula::disj(rows[i].formula(), out);
  return out;
}

}  // namespace logickit::prop
