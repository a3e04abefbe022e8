#include "newtonlab/covers.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace newtonlab {

std::int64_t CoverSpec::geometric_branch_points() const {
  std::int64_t b = 0;
  for (const auto& br : branches) b += br.degree;
  return b;
}

void CoverSpec::validate() const {
  if (!is_odd_prime(p)) fail(ErrorCode::InvalidCover, "p=" + std::to_string(p) + " is not an odd prime");
  if (base_genus < 0) fail(ErrorCode::InvalidCover, "negative base genus");
  for (const auto& br : branches) {
    if (br.conductor < 1 || br.degree < 1) {
      fail(ErrorCode::InvalidCover, "branch data must be positive");
    }
    if (br.conductor % p == 0) {
      fail(ErrorCode::InvalidCover,
           "conductor " + std::to_string(br.conductor) + " divisible by p=" + std::to_string(p));
    }
  }
}

std::string format_branches(const std::vector<BranchDatum>& branches) {
  std::string out;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(branches[i].conductor) + ":" + std::to_string(branches[i].degree);
  }
  return out;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    fail(ErrorCode::ParseError, "bad integer '" + std::string(s) + "' for " + std::string(what));
  }
  return v;
}

bool parse_bool(std::string_view s) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  fail(ErrorCode::ParseError, "bad boolean '" + std::string(s) + "'");
}

}  // namespace

std::vector<BranchDatum> parse_branches(std::string_view text) {
  std::vector<BranchDatum> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma - start);
    const std::size_t colon = item.find(':');
    BranchDatum br;
    br.conductor = parse_int(item.substr(0, colon), "conductor");
    if (colon != std::string_view::npos) br.degree = parse_int(item.substr(colon + 1), "degree");
    out.push_back(br);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string CoverSpec::str() const {
  return "p=" + std::to_string(p) + " gX=" + std::to_string(base_genus) +
         " ordinary=" + (base_ordinary ? "true" : "false") +
         " branches=" + format_branches(branches);
}

CoverSpec CoverSpec::parse(std::string_view text) {
  CoverSpec spec;
  std::istringstream in{std::string(text)};
  std::string token;
  std::map<std::string, bool> seen;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) fail(ErrorCode::ParseError, "expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string_view value = std::string_view(token).substr(eq + 1);
    if (seen[key]) fail(ErrorCode::ParseError, "duplicate key '" + key + "'");
    seen[key] = true;
    if (key == "p") {
      spec.p = parse_int(value, "p");
    } else if (key == "gX") {
      spec.base_genus = parse_int(value, "gX");
    } else if (key == "ordinary") {
      spec.base_ordinary = parse_bool(value);
    } else if (key == "branches") {
      spec.branches = parse_branches(value);
    } else {
      fail(ErrorCode::ParseError, "unknown cover key '" + key + "'");
    }
  }
  if (!seen["p"]) fail(ErrorCode::ParseError, "cover spec needs p=");
  spec.validate();
  return spec;
}

std::string_view to_string(Exactness e) {
  switch (e) {
    case Exactness::ExactSmallConductors: return "small-conductors";
    case Exactness::ExactBooherPries: return "booher-pries";
    case Exactness::LowerBoundOnly: return "lower-bound";
  }
  return "?";
}

std::int64_t local_swan_conductor(const LocalASData& data, std::int64_t p) {
  std::map<std::int64_t, std::int64_t> terms;
  for (const auto& [n, a] : data.terms) {
    auto& slot = terms[n];
    slot = mod_p(slot + a, p);
  }
  while (true) {
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
    if (terms.empty() || terms.begin()->first >= 0) return 0;
    const auto [n, a] = *terms.begin();
    if ((-n) % p != 0) return -n;
    // a t^{-pk} = (a t^{-k})^p over F_p; subtract h^p - h with h = a t^{-k}.
    terms.erase(terms.begin());
    auto& slot = terms[n / p];
    slot = mod_p(slot + a, p);
  }
}

RationalFunction reduce_artin_schreier(RationalFunction f) {
  const std::int64_t p = f.prime();
  const FpPoly x = FpPoly::monomial(p, 1, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    if (f.is_zero()) break;
    // Pole at infinity: c x^{pn} ~ c x^n since c^p = c in F_p.
    const int order_inf = f.num().degree() - f.den().degree();
    if (order_inf > 0 && order_inf % p == 0) {
      const std::int64_t c = f.num().leading() * inv_mod(f.den().leading(), p) % p;
      f -= RationalFunction(FpPoly::monomial(p, c, order_inf));
      f += RationalFunction(FpPoly::monomial(p, c, order_inf / static_cast<int>(p)));
      changed = true;
      continue;
    }
    if (f.den().degree() == 0) continue;
    for (const Factor& fac : factor(f.den())) {
      if (fac.multiplicity % p != 0) continue;
      if (fac.poly.degree() != 1) {
        fail(ErrorCode::IrreduciblePoleUnsupported,
             "pole of order " + std::to_string(fac.multiplicity) + " at " + fac.poly.str());
      }
      const std::int64_t a = mod_p(-fac.poly.coeff(0), p);
      FpPoly rest = f.den();
      for (int i = 0; i < fac.multiplicity; ++i) rest = rest.divmod(fac.poly).first;
      const std::int64_t c = f.num().eval(a) * inv_mod(rest.eval(a), p) % p;
      const RationalFunction t(fac.poly);
      const RationalFunction cc(FpPoly::constant(p, c));
      f -= cc * t.pow(-fac.multiplicity);
      f += cc * t.pow(-fac.multiplicity / static_cast<int>(p));
      changed = true;
      break;
    }
  }
  return f;
}

std::vector<BranchDatum> swan_conductors(const RationalFunction& f) {
  const std::int64_t p = f.prime();
  std::vector<BranchDatum> out;
  const int order_inf = f.num().degree() - f.den().degree();
  if (!f.is_zero() && order_inf > 0) {
    if (order_inf % p == 0) fail(ErrorCode::NotReduced, "pole of order " + std::to_string(order_inf) + " at infinity");
    out.push_back({order_inf, 1});
  }
  if (f.den().degree() > 0) {
    for (const Factor& fac : factor(f.den())) {
      if (fac.multiplicity % p == 0) {
        fail(ErrorCode::NotReduced, "pole of order " + std::to_string(fac.multiplicity) + " at " + fac.poly.str());
      }
      out.push_back({fac.multiplicity, fac.poly.degree()});
    }
  }
  return out;
}

std::int64_t rh_genus(const CoverSpec& spec) {
  spec.validate();
  const std::int64_t p = spec.p;
  std::int64_t twice_minus_two = p * (2 * spec.base_genus - 2);
  for (const auto& br : spec.branches) twice_minus_two += br.degree * (p - 1) * (br.conductor + 1);
  if (twice_minus_two < -2) {
    fail(ErrorCode::NegativeGenus, "cover data " + spec.str() + " give 2g-2=" + std::to_string(twice_minus_two));
  }
  return (twice_minus_two + 2) / 2;
}

namespace {

// Slope-0 multiplicity: p * gX + (B - 1)(p - 1) with B geometric branch points.
std::int64_t slope_zero_count(const CoverSpec& spec) {
  return spec.p * spec.base_genus + (spec.geometric_branch_points() - 1) * (spec.p - 1);
}

}  // namespace

std::int64_t ds_prank(const CoverSpec& spec) {
  spec.validate();
  if (!spec.base_ordinary) fail(ErrorCode::BaseNotOrdinary, "p-rank formula needs an ordinary base");
  const std::int64_t f = slope_zero_count(spec);
  if (f < 0) fail(ErrorCode::NegativeGenus, "cover data " + spec.str() + " give a negative p-rank");
  return f;
}

NewtonPolygon hodge_lower_bound(const CoverSpec& spec) {
  const std::int64_t genus = rh_genus(spec);
  const std::int64_t s0 = slope_zero_count(spec);
  std::vector<Rational> slopes;
  slopes.insert(slopes.end(), static_cast<std::size_t>(std::max<std::int64_t>(s0, 0)), Rational(0));
  slopes.insert(slopes.end(), static_cast<std::size_t>(std::max<std::int64_t>(s0, 0)), Rational(1));
  for (const auto& br : spec.branches) {
    std::vector<Rational> block;
    for (std::int64_t j = 1; j < br.conductor; ++j) block.emplace_back(j, br.conductor);
    auto copies = repeat_slopes(block, br.degree * (spec.p - 1));
    slopes.insert(slopes.end(), copies.begin(), copies.end());
  }
  if (static_cast<std::int64_t>(slopes.size()) != 2 * genus || s0 < 0) {
    fail(ErrorCode::HeightMismatch, "bound has " + std::to_string(slopes.size()) +
                                        " slopes for genus " + std::to_string(genus));
  }
  return NewtonPolygon::from_slopes(std::move(slopes));
}

Exactness exactness_class(const CoverSpec& spec) {
  spec.validate();
  if (!spec.base_ordinary) return Exactness::LowerBoundOnly;
  const bool small = std::all_of(spec.branches.begin(), spec.branches.end(),
                                 [](const BranchDatum& b) { return b.conductor <= 2; });
  if (small) return Exactness::ExactSmallConductors;
  const bool bp = std::all_of(spec.branches.begin(), spec.branches.end(),
                              [&](const BranchDatum& b) { return (spec.p - 1) % b.conductor == 0; });
  return bp ? Exactness::ExactBooherPries : Exactness::LowerBoundOnly;
}

}  // namespace newtonlab
