#include "ginv/tqft.hpp"

#include "ginv/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ginv {

namespace {

const char *piece_name(Piece p) {
  switch (p) {
  case Piece::Cap:
    return "cap";
  case Piece::Cup:
    return "cup";
  case Piece::Pants:
    return "pants";
  case Piece::Copants:
    return "copants";
  case Piece::Cylinder:
    return "cylinder";
  }
  return "?";
}

int piece_in(Piece p) {
  switch (p) {
  case Piece::Cap:
    return 0;
  case Piece::Cup:
  case Piece::Copants:
  case Piece::Cylinder:
    return 1;
  case Piece::Pants:
    return 2;
  }
  return 0;
}

int piece_out(Piece p) {
  switch (p) {
  case Piece::Cap:
  case Piece::Pants:
  case Piece::Cylinder:
    return 1;
  case Piece::Cup:
    return 0;
  case Piece::Copants:
    return 2;
  }
  return 0;
}

} // namespace

CobordismWord CobordismWord::parse(const std::string &text) {
  CobordismWord w;
  std::istringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    std::size_t a = name.find_first_not_of(" \t");
    std::size_t b = name.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw ParseError("empty piece in cobordism word");
    name = name.substr(a, b - a + 1);
    if (name == "cap")
      w.pieces.push_back(Piece::Cap);
    else if (name == "cup")
      w.pieces.push_back(Piece::Cup);
    else if (name == "pants")
      w.pieces.push_back(Piece::Pants);
    else if (name == "copants")
      w.pieces.push_back(Piece::Copants);
    else if (name == "cylinder")
      w.pieces.push_back(Piece::Cylinder);
    else
      throw ParseError("unknown cobordism piece: " + name);
  }
  if (w.pieces.empty())
    throw ParseError("empty cobordism word");
  return w;
}

std::string CobordismWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i)
      out += ',';
    out += piece_name(pieces[i]);
  }
  return out;
}

bool CobordismWord::valid() const {
  long circles = 0;
  for (Piece p : pieces) {
    if (circles < piece_in(p))
      return false;
    circles += piece_out(p) - piece_in(p);
  }
  return true;
}

bool CobordismWord::closed() const { return valid() && final_circles() == 0; }

std::size_t CobordismWord::final_circles() const {
  long circles = 0;
  for (Piece p : pieces)
    circles += piece_out(p) - piece_in(p);
  assert(circles >= 0);
  return static_cast<std::size_t>(circles);
}

CobordismWord genus_word(uint64_t h) {
  CobordismWord w;
  w.pieces.push_back(Piece::Cap);
  for (uint64_t i = 0; i < h; ++i) {
    w.pieces.push_back(Piece::Copants);
    w.pieces.push_back(Piece::Pants);
  }
  w.pieces.push_back(Piece::Cup);
  return w;
}

FrobeniusAlgebraModL build_frobenius(const ClassTable &t,
                                     const CentralCharactersModL &c,
                                     const Integer &group_order) {
  FrobeniusAlgebraModL f;
  f.ell = c.ell;
  f.k = t.size();
  f.central = c;
  f.class_sizes = t.sizes;
  f.inverse_class = t.inverse_class;
  f.group_order = group_order;
  uint64_t order_mod =
      static_cast<uint64_t>(mpz_fdiv_ui(group_order.get_mpz_t(), f.ell));
  uint64_t order_inv = invmod(order_mod, f.ell);
  f.idempotent_coeffs = MatFp(f.k, f.k, f.ell);
  for (std::size_t r = 0; r < f.k; ++r) {
    uint64_t d = c.degrees[r] % f.ell;
    uint64_t scale = mulmod(mulmod(d, d, f.ell), order_inv, f.ell);
    for (std::size_t j = 0; j < f.k; ++j) {
      uint64_t w = c.omega.at(r, t.inverse_class[j]);
      uint64_t size_inv = invmod(t.sizes[j] % f.ell, f.ell);
      f.idempotent_coeffs.at(r, j) =
          mulmod(mulmod(scale, w, f.ell), size_inv, f.ell);
    }
  }
  return f;
}

FrobeniusAlgebraModL build_frobenius(const PermGroup &g) {
  ClassTable t = conjugacy_classes(g);
  CentralCharactersModL c = central_characters(g, t);
  return build_frobenius(t, c, g.order());
}

namespace {

// a_mod[i].at(j, n) = a_{ijn} mod ell
std::vector<MatFp> reduce_structure_constants(const ClassMatrices &a,
                                              uint64_t ell) {
  std::size_t k = a.a.size();
  std::vector<MatFp> out(k, MatFp(k, k, ell));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t n = 0; n < k; ++n)
        out[i].at(j, n) = static_cast<uint64_t>(
            mpz_fdiv_ui(a.a[i][j][n].get_mpz_t(), ell));
  return out;
}

// Products (e_r e_s)_n for all pairs, via the class matrices.
std::vector<std::vector<std::vector<uint64_t>>>
idempotent_products(const FrobeniusAlgebraModL &f, const ClassMatrices &a) {
  std::size_t k = f.k;
  uint64_t ell = f.ell;
  std::vector<MatFp> mats = reduce_structure_constants(a, ell);
  std::vector<std::vector<std::vector<uint64_t>>> prod(
      k, std::vector<std::vector<uint64_t>>(k, std::vector<uint64_t>(k, 0)));
  for (std::size_t s = 0; s < k; ++s) {
    // t_mat[i][n] = sum_j a_{ijn} c_{s,j}
    std::vector<std::vector<uint64_t>> t_mat(k, std::vector<uint64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        uint64_t cj = f.idempotent_coeffs.at(s, j);
        if (cj == 0)
          continue;
        for (std::size_t n = 0; n < k; ++n) {
          uint64_t v = t_mat[i][n] + mulmod(mats[i].at(j, n), cj, ell);
          t_mat[i][n] = v >= ell ? v - ell : v;
        }
      }
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t i = 0; i < k; ++i) {
        uint64_t ci = f.idempotent_coeffs.at(r, i);
        if (ci == 0)
          continue;
        for (std::size_t n = 0; n < k; ++n) {
          uint64_t v = prod[r][s][n] + mulmod(ci, t_mat[i][n], ell);
          prod[r][s][n] = v >= ell ? v - ell : v;
        }
      }
  }
  return prod;
}

} // namespace

bool idempotents_orthogonal(const FrobeniusAlgebraModL &f,
                            const ClassMatrices &a) {
  auto prod = idempotent_products(f, a);
  for (std::size_t r = 0; r < f.k; ++r)
    for (std::size_t s = 0; s < f.k; ++s)
      for (std::size_t n = 0; n < f.k; ++n) {
        uint64_t want = r == s ? f.idempotent_coeffs.at(r, n) : 0;
        if (prod[r][s][n] != want)
          return false;
      }
  return true;
}

bool idempotents_sum_to_identity(const FrobeniusAlgebraModL &f) {
  for (std::size_t j = 0; j < f.k; ++j) {
    uint64_t s = 0;
    for (std::size_t r = 0; r < f.k; ++r)
      s = (s + f.idempotent_coeffs.at(r, j)) % f.ell;
    if (s != (j == 0 ? 1u : 0u))
      return false;
  }
  return true;
}

bool linear_form_matches(const FrobeniusAlgebraModL &f,
                         const ClassMatrices &a) {
  uint64_t ell = f.ell;
  uint64_t order_mod =
      static_cast<uint64_t>(mpz_fdiv_ui(f.group_order.get_mpz_t(), ell));
  uint64_t order_inv = invmod(order_mod, ell);
  // lambda(C_n-hat) = sum_chi omega_{chi,n} (chi(1)/|G|)^2
  std::vector<uint64_t> lambda(f.k, 0);
  for (std::size_t n = 0; n < f.k; ++n)
    for (std::size_t r = 0; r < f.k; ++r) {
      uint64_t d = mulmod(f.central.degrees[r] % ell, order_inv, ell);
      uint64_t term = mulmod(mulmod(d, d, ell), f.central.omega.at(r, n), ell);
      lambda[n] = (lambda[n] + term) % ell;
    }
  auto prod = idempotent_products(f, a);
  for (std::size_t r = 0; r < f.k; ++r)
    for (std::size_t s = 0; s < f.k; ++s) {
      uint64_t got = 0;
      for (std::size_t n = 0; n < f.k; ++n)
        got = (got + mulmod(prod[r][s][n], lambda[n], ell)) % ell;
      uint64_t want = 0;
      if (r == s) {
        uint64_t d = mulmod(f.central.degrees[r] % ell, order_inv, ell);
        want = mulmod(d, d, ell);
      }
      if (got != want)
        return false;
    }
  return true;
}

OpenEvaluation evaluate_open(const CobordismWord &w, const DegreeMultiset &d) {
  if (!w.valid())
    throw ParseError("cobordism word arities do not compose");
  std::size_t m = d.entries.size();
  Rational order(d.group_order);

  OpenEvaluation st;
  for (Piece p : w.pieces) {
    switch (p) {
    case Piece::Cap:
      if (st.circles != 0)
        throw ComputeError(
            "cap on a nonempty boundary leaves the diagonal evaluator");
      st.coeffs.assign(m, Rational(1));
      st.circles = 1;
      break;
    case Piece::Cylinder: // identity map
      if (st.circles == 0)
        throw ComputeError("cylinder needs a boundary circle");
      break;
    case Piece::Copants:
      if (st.circles == 0)
        throw ComputeError("copants needs a boundary circle");
      for (std::size_t i = 0; i < m; ++i) {
        Rational f = order / Rational(static_cast<unsigned long>(
                                 d.entries[i].first));
        st.coeffs[i] *= f * f;
      }
      st.circles += 1;
      break;
    case Piece::Pants:
      if (st.circles < 2)
        throw ComputeError("pants needs two boundary circles");
      st.circles -= 1;
      break;
    case Piece::Cup: {
      if (st.circles == 0)
        throw ComputeError("cup needs a boundary circle");
      for (std::size_t i = 0; i < m; ++i) {
        Rational f = Rational(static_cast<unsigned long>(
                         d.entries[i].first)) /
                     order;
        st.coeffs[i] *= f * f;
      }
      st.circles -= 1;
      if (st.circles == 0) {
        Rational total = 0;
        for (std::size_t i = 0; i < m; ++i)
          total += Rational(static_cast<unsigned long>(
                       d.entries[i].second)) *
                   st.coeffs[i];
        st.scalar *= total;
        st.coeffs.clear();
      }
      break;
    }
    }
  }
  return st;
}

Rational evaluate_closed(const CobordismWord &w, const DegreeMultiset &d) {
  if (!w.closed())
    throw ParseError("cobordism word is not closed");
  OpenEvaluation st = evaluate_open(w, d);
  assert(st.circles == 0);
  return st.scalar;
}

Rational evaluate_closed(const CobordismWord &w,
                         const FrobeniusAlgebraModL &f) {
  return evaluate_closed(w, degree_multiset(f.central, f.group_order));
}

} // namespace ginv
