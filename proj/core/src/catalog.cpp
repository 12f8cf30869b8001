#include "ginv/catalog.hpp"

#include "ginv/errors.hpp"
#include "ginv/modular.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <numeric>
#include <sstream>

namespace ginv {

namespace {

// Arithmetic for F_q with q prime, plus F_9 = F_3[z]/(z^2+1) encoded as
// a + 3b for a + b*z.
struct SmallField {
  uint32_t q;
  bool ext9;

  explicit SmallField(uint32_t q_) : q(q_), ext9(q_ == 9) {
    if (!ext9 && !is_prime(q))
      throw ParseError("field size must be prime (or 9)");
  }

  uint32_t add(uint32_t a, uint32_t b) const {
    if (!ext9)
      return (a + b) % q;
    return (a % 3 + b % 3) % 3 + 3 * ((a / 3 + b / 3) % 3);
  }
  uint32_t neg(uint32_t a) const {
    if (!ext9)
      return (q - a) % q;
    return (3 - a % 3) % 3 + 3 * ((3 - a / 3) % 3);
  }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (!ext9)
      return (a * b) % q;
    uint32_t a0 = a % 3, a1 = a / 3, b0 = b % 3, b1 = b / 3;
    uint32_t c0 = (a0 * b0 + 2 * a1 * b1) % 3; // z^2 = -1
    uint32_t c1 = (a0 * b1 + a1 * b0) % 3;
    return c0 + 3 * c1;
  }
  uint32_t inv(uint32_t a) const {
    assert(a != 0);
    uint32_t x = a, r = 1;
    // order of the multiplicative group is q-1
    for (uint32_t e = 0; e + 2 < q; ++e) { // a^(q-2)
      r = mul(r, x);
    }
    (void)x;
    return r;
  }
};

using Mat2 = std::array<uint32_t, 4>; // row major [[a,b],[c,d]]

// Permutation of the q^2-1 nonzero row vectors under v -> v*M.
Permutation linear_perm(const SmallField &f, const Mat2 &m) {
  uint32_t q = f.q;
  auto index = [&](uint32_t x, uint32_t y) { return x * q + y - 1; };
  std::vector<uint32_t> img(q * q - 1);
  for (uint32_t x = 0; x < q; ++x)
    for (uint32_t y = 0; y < q; ++y) {
      if (x == 0 && y == 0)
        continue;
      uint32_t nx = f.add(f.mul(x, m[0]), f.mul(y, m[2]));
      uint32_t ny = f.add(f.mul(x, m[1]), f.mul(y, m[3]));
      img[index(x, y)] = index(nx, ny);
    }
  return Permutation(std::move(img));
}

// Permutation of the projective line: [x:1] -> point x, [1:0] -> point q.
Permutation projective_perm(const SmallField &f, const Mat2 &m) {
  uint32_t q = f.q;
  std::vector<uint32_t> img(q + 1);
  auto image_of = [&](uint32_t vx, uint32_t vy) {
    uint32_t nx = f.add(f.mul(vx, m[0]), f.mul(vy, m[2]));
    uint32_t ny = f.add(f.mul(vx, m[1]), f.mul(vy, m[3]));
    if (ny == 0)
      return q;
    return f.mul(nx, f.inv(ny));
  };
  for (uint32_t x = 0; x < q; ++x)
    img[x] = image_of(x, 1);
  img[q] = image_of(1, 0);
  return Permutation(std::move(img));
}

uint32_t primitive_element(const SmallField &f) {
  uint32_t order = f.q - 1;
  for (uint32_t g = 1; g < f.q; ++g) {
    uint32_t x = g;
    uint32_t k = 1;
    while (x != 1) {
      x = f.mul(x, g);
      ++k;
    }
    if (k == order)
      return g;
  }
  throw ComputeError("no primitive element");
}

std::vector<Mat2> sl2_matrix_gens(const SmallField &f) {
  std::vector<Mat2> gens;
  gens.push_back({1, 1, 0, 1});
  gens.push_back({1, 0, 1, 1});
  if (f.ext9) {
    uint32_t z = 3; // the generator of F_9 over F_3
    gens.push_back({1, z, 0, 1});
    gens.push_back({1, 0, z, 1});
  }
  return gens;
}

PermGroup make_cyclic(uint64_t n) {
  if (n == 0)
    throw ParseError("C(n) needs n >= 1");
  if (n == 1)
    return PermGroup::trivial(1);
  std::vector<uint32_t> img(n);
  for (uint64_t i = 0; i < n; ++i)
    img[i] = static_cast<uint32_t>((i + 1) % n);
  return PermGroup(static_cast<unsigned>(n), {Permutation(std::move(img))},
                   Integer(static_cast<unsigned long>(n)));
}

PermGroup make_dihedral(uint64_t order) {
  if (order < 4 || order % 2)
    throw ParseError("D(order) needs an even order >= 4");
  uint64_t n = order / 2;
  if (n == 2) {
    // degree-4 model; the degree-2 rotation and reflection coincide
    return PermGroup(4,
                     {Permutation::parse_cycles("(1 2)", 4),
                      Permutation::parse_cycles("(3 4)", 4)},
                     Integer(4));
  }
  std::vector<uint32_t> rot(n), refl(n);
  for (uint64_t i = 0; i < n; ++i) {
    rot[i] = static_cast<uint32_t>((i + 1) % n);
    refl[i] = static_cast<uint32_t>(n - 1 - i);
  }
  return PermGroup(static_cast<unsigned>(n),
                   {Permutation(std::move(rot)), Permutation(std::move(refl))},
                   Integer(static_cast<unsigned long>(order)));
}

Integer factorial(uint64_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

PermGroup make_symmetric(uint64_t n) {
  if (n == 0)
    throw ParseError("S(n) needs n >= 1");
  if (n == 1)
    return PermGroup::trivial(1);
  std::vector<Permutation> gens;
  gens.push_back(Permutation::parse_cycles("(1 2)", n));
  if (n > 2) {
    std::vector<uint32_t> cyc(n);
    for (uint64_t i = 0; i < n; ++i)
      cyc[i] = static_cast<uint32_t>((i + 1) % n);
    gens.push_back(Permutation(std::move(cyc)));
  }
  return PermGroup(static_cast<unsigned>(n), std::move(gens), factorial(n));
}

PermGroup make_alternating(uint64_t n) {
  if (n == 0)
    throw ParseError("A(n) needs n >= 1");
  if (n <= 2)
    return PermGroup::trivial(static_cast<unsigned>(std::max<uint64_t>(n, 1)));
  std::vector<Permutation> gens;
  gens.push_back(Permutation::parse_cycles("(1 2 3)", n));
  if (n > 3) {
    std::vector<uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    if (n % 2) { // (1 2 ... n)
      for (uint64_t i = 0; i < n; ++i)
        img[i] = static_cast<uint32_t>((i + 1) % n);
    } else { // (2 3 ... n)
      for (uint64_t i = 1; i < n; ++i)
        img[i] = static_cast<uint32_t>(i % (n - 1) + 1);
    }
    gens.push_back(Permutation(std::move(img)));
  }
  return PermGroup(static_cast<unsigned>(n), std::move(gens),
                   factorial(n) / 2);
}

void check_linear_field(uint64_t q) {
  if (q == 9)
    return;
  if (q < 2 || q > 61 || !is_prime(q))
    throw ParseError("linear groups need prime q <= 61 (or q = 9)");
}

PermGroup make_sl2(uint64_t q) {
  check_linear_field(q);
  SmallField f(static_cast<uint32_t>(q));
  std::vector<Permutation> gens;
  for (const Mat2 &m : sl2_matrix_gens(f))
    gens.push_back(linear_perm(f, m));
  Integer order = Integer(static_cast<unsigned long>(q)) *
                  static_cast<unsigned long>(q - 1) *
                  static_cast<unsigned long>(q + 1);
  return PermGroup(static_cast<unsigned>(q * q - 1), std::move(gens), order);
}

PermGroup make_psl2(uint64_t q) {
  check_linear_field(q);
  SmallField f(static_cast<uint32_t>(q));
  std::vector<Permutation> gens;
  for (const Mat2 &m : sl2_matrix_gens(f))
    gens.push_back(projective_perm(f, m));
  Integer order = Integer(static_cast<unsigned long>(q)) *
                  static_cast<unsigned long>(q - 1) *
                  static_cast<unsigned long>(q + 1);
  if (q % 2)
    order /= 2;
  return PermGroup(static_cast<unsigned>(q + 1), std::move(gens), order);
}

PermGroup make_pgl2(uint64_t q) {
  check_linear_field(q);
  SmallField f(static_cast<uint32_t>(q));
  std::vector<Permutation> gens;
  for (const Mat2 &m : sl2_matrix_gens(f))
    gens.push_back(projective_perm(f, m));
  uint32_t r = primitive_element(f);
  gens.push_back(projective_perm(f, {r, 0, 0, 1}));
  Integer order = Integer(static_cast<unsigned long>(q)) *
                  static_cast<unsigned long>(q - 1) *
                  static_cast<unsigned long>(q + 1);
  return PermGroup(static_cast<unsigned>(q + 1), std::move(gens), order);
}

// Heisenberg group of order p^3 (exponent p for odd p): upper unitriangular
// 3x3 matrices over F_p acting on row vectors of F_p^3.
PermGroup make_extraspecial_plus(uint64_t p) {
  if (p < 3 || p > 61 || !is_prime(p))
    throw ParseError("extraspecial+(p) needs an odd prime p <= 61");
  uint32_t pp = static_cast<uint32_t>(p);
  uint64_t deg = static_cast<uint64_t>(pp) * pp * pp;
  auto build = [&](bool second) {
    std::vector<uint32_t> img(deg);
    for (uint32_t r0 = 0; r0 < pp; ++r0)
      for (uint32_t r1 = 0; r1 < pp; ++r1)
        for (uint32_t r2 = 0; r2 < pp; ++r2) {
          uint32_t n0 = r0, n1 = r1, n2 = r2;
          if (!second)
            n1 = (r1 + r0) % pp; // E12(1)
          else
            n2 = (r2 + r1) % pp; // E23(1)
          img[(r0 * pp + r1) * pp + r2] = (n0 * pp + n1) * pp + n2;
        }
    return Permutation(std::move(img));
  };
  return PermGroup(static_cast<unsigned>(deg), {build(false), build(true)},
                   Integer(static_cast<unsigned long>(deg)));
}

// (C_2)^f : C_p with p = 2^f - 1 a Mersenne prime, as translations and a
// multiplication on F_{2^f}.
PermGroup make_frobenius_mersenne(uint64_t f) {
  uint32_t poly;
  switch (f) {
  case 2:
    poly = 0b111;
    break;
  case 3:
    poly = 0b1011;
    break;
  case 5:
    poly = 0b100101;
    break;
  case 7:
    poly = 0b10000011;
    break;
  default:
    throw ParseError("frobenius_mersenne(f) needs f in {2,3,5,7}");
  }
  uint64_t p = (uint64_t(1) << f) - 1;
  assert(is_prime(p));
  uint32_t n = uint32_t(1) << f;
  auto gf_mul_x = [&](uint32_t v) {
    v <<= 1;
    if (v & n)
      v ^= poly;
    return v;
  };
  std::vector<uint32_t> tr(n), mu(n);
  for (uint32_t v = 0; v < n; ++v) {
    tr[v] = v ^ 1u;
    mu[v] = gf_mul_x(v);
  }
  return PermGroup(n, {Permutation(std::move(tr)), Permutation(std::move(mu))},
                   Integer(static_cast<unsigned long>(n)) *
                       static_cast<unsigned long>(p));
}

PermGroup make_direct(const GroupSpec &spec) {
  if (spec.factors.size() < 2)
    throw ParseError("direct(...) needs at least two factors");
  std::vector<PermGroup> parts;
  unsigned degree = 0;
  Integer order = 1;
  for (const GroupSpec &s : spec.factors) {
    parts.push_back(make_group(s));
    degree += parts.back().degree();
    order *= parts.back().order();
  }
  std::vector<Permutation> gens;
  unsigned offset = 0;
  for (const PermGroup &part : parts) {
    for (const Permutation &g : part.generators()) {
      std::vector<uint32_t> img(degree);
      std::iota(img.begin(), img.end(), 0);
      for (uint32_t i = 0; i < part.degree(); ++i)
        img[offset + i] = offset + g[i];
      gens.emplace_back(std::move(img));
    }
    offset += part.degree();
  }
  return PermGroup(degree, std::move(gens), order);
}

} // namespace

std::string GroupSpec::label() const {
  switch (kind) {
  case Kind::Family:
    return family + "(" + std::to_string(param) + ")";
  case Kind::Direct: {
    std::string s = "direct(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i)
        s += ",";
      s += factors[i].label();
    }
    return s + ")";
  }
  case Kind::Generators: {
    std::string s = "gens:" + std::to_string(degree) + ":";
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (i)
        s += ",";
      s += cycles[i];
    }
    return s;
  }
  }
  return {};
}

namespace {

std::string strip(const std::string &s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos)
    return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Splits "A(4),C(2)" at top-level commas.
std::vector<std::string> split_top_level(const std::string &s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(')
      ++depth;
    if (c == ')')
      --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

GroupSpec parse_family_body(const std::string &body) {
  std::size_t open = body.find('(');
  if (open == std::string::npos || body.back() != ')')
    throw ParseError("bad family spec: " + body);
  std::string name = strip(body.substr(0, open));
  std::string args = body.substr(open + 1, body.size() - open - 2);
  if (name.empty())
    throw ParseError("bad family spec: " + body);
  GroupSpec spec;
  if (name == "direct") {
    spec.kind = GroupSpec::Kind::Direct;
    for (const std::string &part : split_top_level(args))
      spec.factors.push_back(parse_family_body(strip(part)));
    if (spec.factors.size() < 2)
      throw ParseError("direct(...) needs at least two factors");
    return spec;
  }
  static const char *known[] = {"C",    "D",    "S",
                                "A",    "SL2",  "PSL2",
                                "PGL2", "PSL3", "extraspecial+",
                                "frobenius_mersenne"};
  if (std::find_if(std::begin(known), std::end(known), [&](const char *k) {
        return name == k;
      }) == std::end(known))
    throw ParseError("unknown family: " + name);
  spec.kind = GroupSpec::Kind::Family;
  spec.family = name;
  std::string digits = strip(args);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("bad family parameter: " + body);
  spec.param = std::stoull(digits);
  return spec;
}

} // namespace

GroupSpec parse_group_spec(const std::string &text) {
  std::string t = strip(text);
  if (t.rfind("family:", 0) == 0)
    return parse_family_body(strip(t.substr(7)));
  if (t.rfind("gens:", 0) == 0) {
    std::string rest = t.substr(5);
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos)
      throw ParseError("gens spec needs gens:<degree>:<cycles>");
    std::string deg_str = strip(rest.substr(0, colon));
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::Generators;
    try {
      spec.degree = static_cast<unsigned>(std::stoul(deg_str));
    } catch (...) {
      throw ParseError("bad degree in gens spec: " + text);
    }
    if (spec.degree == 0)
      throw ParseError("degree must be >= 1");
    for (const std::string &part : split_top_level(rest.substr(colon + 1))) {
      std::string cyc = strip(part);
      if (cyc.empty())
        throw ParseError("empty cycle in gens spec: " + text);
      // canonicalize through a parse/print round trip
      spec.cycles.push_back(
          Permutation::parse_cycles(cyc, spec.degree).to_cycles());
    }
    return spec;
  }
  throw ParseError("group spec must start with family: or gens:");
}

PermGroup make_group(const GroupSpec &spec) {
  switch (spec.kind) {
  case GroupSpec::Kind::Direct:
    return make_direct(spec);
  case GroupSpec::Kind::Generators: {
    std::vector<Permutation> gens;
    for (const std::string &c : spec.cycles)
      gens.push_back(Permutation::parse_cycles(c, spec.degree));
    return PermGroup(spec.degree, std::move(gens));
  }
  case GroupSpec::Kind::Family:
    break;
  }
  const std::string &f = spec.family;
  uint64_t n = spec.param;
  if (f == "C")
    return make_cyclic(n);
  if (f == "D")
    return make_dihedral(n);
  if (f == "S")
    return make_symmetric(n);
  if (f == "A")
    return make_alternating(n);
  if (f == "SL2")
    return make_sl2(n);
  if (f == "PSL2")
    return make_psl2(n);
  if (f == "PGL2")
    return make_pgl2(n);
  if (f == "PSL3") {
    if (n != 2)
      throw ParseError("only PSL3(2) is available");
    return make_psl2(7);
  }
  if (f == "extraspecial+")
    return make_extraspecial_plus(n);
  if (f == "frobenius_mersenne")
    return make_frobenius_mersenne(n);
  throw ParseError("unknown family: " + f);
}

Integer spec_order(const GroupSpec &spec) {
  switch (spec.kind) {
  case GroupSpec::Kind::Direct: {
    Integer r = 1;
    for (const GroupSpec &s : spec.factors)
      r *= spec_order(s);
    return r;
  }
  case GroupSpec::Kind::Generators:
    return make_group(spec).order();
  case GroupSpec::Kind::Family:
    break;
  }
  const std::string &f = spec.family;
  uint64_t n = spec.param;
  auto lin = [&](uint64_t q) -> Integer {
    return Integer(static_cast<unsigned long>(q)) *
           static_cast<unsigned long>(q - 1) *
           static_cast<unsigned long>(q + 1);
  };
  if (f == "C")
    return Integer(static_cast<unsigned long>(std::max<uint64_t>(n, 1)));
  if (f == "D")
    return Integer(static_cast<unsigned long>(n));
  if (f == "S")
    return factorial(n);
  if (f == "A")
    return n <= 2 ? Integer(1) : factorial(n) / 2;
  if (f == "SL2")
    return lin(n);
  if (f == "PSL2")
    return n % 2 ? Integer(lin(n) / 2) : lin(n);
  if (f == "PGL2")
    return lin(n);
  if (f == "PSL3")
    return Integer(168);
  if (f == "extraspecial+")
    return Integer(static_cast<unsigned long>(n)) *
           static_cast<unsigned long>(n) * static_cast<unsigned long>(n);
  if (f == "frobenius_mersenne")
    return Integer(static_cast<unsigned long>(uint64_t(1) << n)) *
           static_cast<unsigned long>((uint64_t(1) << n) - 1);
  throw ParseError("unknown family: " + f);
}

std::vector<GroupSpec> default_catalog() {
  std::vector<GroupSpec> out;
  auto fam = [&](const std::string &name, uint64_t p) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Family;
    s.family = name;
    s.param = p;
    out.push_back(std::move(s));
  };
  for (uint64_t n = 1; n <= 12; ++n)
    fam("C", n);
  for (uint64_t n = 2; n <= 10; ++n)
    fam("D", 2 * n);
  for (uint64_t n = 1; n <= 6; ++n)
    fam("S", n);
  for (uint64_t n = 1; n <= 6; ++n)
    fam("A", n);
  for (uint64_t q : {5, 7, 9, 11, 13}) {
    fam("SL2", q);
    fam("PSL2", q);
    fam("PGL2", q);
  }
  for (uint64_t p : {3, 5, 11, 59})
    fam("extraspecial+", p);
  for (uint64_t f : {2, 3, 5})
    fam("frobenius_mersenne", f);
  fam("PSL3", 2);
  return out;
}

std::vector<GroupSpec> read_spec_file(std::istream &in) {
  std::vector<GroupSpec> out;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos)
      line = line.substr(0, hash);
    line = strip(line);
    if (line.empty())
      continue;
    out.push_back(parse_group_spec(line));
  }
  return out;
}

} // namespace ginv
