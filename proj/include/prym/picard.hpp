#pragma once

#include <prym/cycle_space.hpp>
#include <prym/graph.hpp>

#include <boost/rational.hpp>

#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace prym {

using Rational = boost::rational<std::int64_t>;

inline constexpr std::int64_t kMinTwist = 10;
inline constexpr std::size_t kMaxSubcurveComponents = 20;

inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Multidegree of eta (x) omega^t on a quasistable model, indexed by
/// component (base vertices first, then exceptional components).
struct Multidegree {
  QuasistableModel model;
  std::int64_t t = kMinTwist;
  std::vector<std::int64_t> degrees;
  std::int64_t total = 0;
};

/// Degree of eta alone on each component: -m_v/2 on a base vertex with m_v
/// blown half-edges, +1 on every exceptional component.
inline std::vector<std::int64_t> eta_degrees(const QuasistableModel& model) {
  std::vector<std::int64_t> out(model.component_count(), 1);
  const auto blown_val = model.blown_valency();
  for (std::size_t v = 0; v < model.base_component_count(); ++v) out[v] = -static_cast<std::int64_t>(blown_val[v] / 2);
  return out;
}

inline Multidegree prym_multidegree(const QuasistableModel& model, std::int64_t t = kMinTwist) {
  if (t < kMinTwist) throw Error(ErrorKind::BadT, "t must be at least 10, got " + std::to_string(t));
  const DualGraph& g = model.base();
  if (!is_eulerian(g, model.blown()))
    throw Error(ErrorKind::NotEulerian, "blown-up node set is not eulerian; X supports no Prym curve");

  // Bound every intermediate of the certificate arithmetic below 2^62.
  const auto genus = static_cast<__int128>(g.genus());
  const __int128 d = 2 * static_cast<__int128>(t) * (genus - 1);
  const __int128 spread = 2 * genus + 2 * static_cast<__int128>(model.component_count() + g.edge_count()) + 4;
  if (d * spread * static_cast<__int128>(genus + 1) > (static_cast<__int128>(1) << 62))
    throw Error(ErrorKind::Overflow, "t and genus too large for exact 64-bit certificate arithmetic");

  Multidegree md{model, t, eta_degrees(model), 0};
  for (std::size_t v = 0; v < model.base_component_count(); ++v) {
    const auto canonical = 2 * static_cast<std::int64_t>(g.vertex(v).genus) - 2 + static_cast<std::int64_t>(g.valency(v));
    md.degrees[v] += t * canonical;
  }
  for (auto x : md.degrees) md.total += x;
  return md;
}

/// Basic Inequality data for one subcurve Y (a bitmask over components).
struct SubcurveCertificate {
  std::uint32_t subcurve = 0;
  std::int64_t d_Y = 0;
  std::int64_t k_Y = 0;
  std::int64_t g_Y = 0;  // arithmetic genus; may be negative when Y is disconnected
  Rational m_Y;
  Rational slack_low;   // d_Y - m_Y
  Rational slack_high;  // m_Y + k_Y - d_Y
  std::int64_t ktilde_Y = 0;

  bool holds() const { return slack_low >= Rational(0) && slack_high >= Rational(0); }

  std::vector<std::size_t> components() const {
    std::vector<std::size_t> out;
    for (std::uint32_t m = subcurve; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
  }
};

namespace detail {

struct CurveEdge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  bool between_base = false;  // an unblown node: both ends non-exceptional
};

inline std::vector<CurveEdge> curve_edges(const QuasistableModel& model) {
  std::vector<CurveEdge> out;
  const auto& g = model.base();
  auto next_exc = static_cast<std::uint32_t>(model.base_component_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto u = static_cast<std::uint32_t>(g.edge(i).u);
    const auto v = static_cast<std::uint32_t>(g.edge(i).v);
    if (!model.blown().contains(i)) {
      out.push_back({u, v, true});
    } else {
      out.push_back({u, next_exc, false});
      out.push_back({next_exc, v, false});
      ++next_exc;
    }
  }
  return out;
}

}  // namespace detail

/// Calls visit(cert) for every nonempty proper subset Y of components.
template <class Visitor>
void for_each_subcurve_certificate(const Multidegree& md, Visitor&& visit) {
  const auto& model = md.model;
  const std::size_t n = model.component_count();
  if (n > kMaxSubcurveComponents)
    throw Error(ErrorKind::TooManyComponents,
                std::to_string(n) + " components; subcurve enumeration is limited to " +
                    std::to_string(kMaxSubcurveComponents));
  if (n < 2) return;

  const auto edges = detail::curve_edges(model);
  const auto g = static_cast<std::int64_t>(model.base().genus());
  std::vector<std::int64_t> genera(n);
  for (std::size_t c = 0; c < n; ++c) genera[c] = static_cast<std::int64_t>(model.component_genus(c));

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  SubcurveCertificate cert;
  for (std::uint32_t y = 1; y < full; ++y) {
    std::int64_t d_y = 0;
    std::int64_t genus_sum = 0;
    for (std::uint32_t m = y; m != 0; m &= m - 1) {
      const auto c = static_cast<std::size_t>(std::countr_zero(m));
      d_y += md.degrees[c];
      genus_sum += genera[c];
    }
    std::int64_t inner = 0, k = 0, ktilde = 0;
    for (const auto& e : edges) {
      const bool ia = (y >> e.a) & 1u;
      const bool ib = (y >> e.b) & 1u;
      if (ia && ib) {
        ++inner;
      } else if (ia != ib) {
        ++k;
        ktilde += e.between_base;
      }
    }
    const std::int64_t g_y = genus_sum + inner - std::popcount(y) + 1;
    cert.subcurve = y;
    cert.d_Y = d_y;
    cert.k_Y = k;
    cert.g_Y = g_y;
    cert.ktilde_Y = ktilde;
    // m_Y = d/(g-1) (g_Y - 1 + k/2) - k/2, over the common denominator 2(g-1).
    cert.m_Y = Rational(md.total * (2 * g_y - 2 + k) - k * (g - 1), 2 * (g - 1));
    cert.slack_low = Rational(d_y) - cert.m_Y;
    cert.slack_high = cert.m_Y + k - d_y;
    visit(static_cast<const SubcurveCertificate&>(cert));
  }
}

inline std::vector<SubcurveCertificate> basic_inequality_check(const Multidegree& md) {
  std::vector<SubcurveCertificate> out;
  for_each_subcurve_certificate(md, [&](const SubcurveCertificate& c) { out.push_back(c); });
  return out;
}

/// Every Y with d_Y = m_Y must have no unblown node crossing to its complement.
inline bool closed_orbit_criterion(const std::vector<SubcurveCertificate>& certs) {
  for (const auto& c : certs)
    if (c.slack_low == Rational(0) && c.ktilde_Y != 0) return false;
  return true;
}

struct EtaRestriction {
  Rational e_Y;              // sum of eta degrees over components of Y
  Rational e_Y_bookkeeping;  // same, assembled exceptional component by exceptional component
  std::int64_t k_Y = 0;
  bool within_bounds = false;  // -k_Y/2 <= e_Y <= k_Y/2
};

/// deg(eta|_Y) computed two ways. The bookkeeping route: an exceptional E
/// outside Y meeting Y in m points gives -m/2; an exceptional E inside Y
/// meeting the complement in l points gives 1 - (2 - l)/2 = l/2; base
/// vertices carry no other eta degree.
inline EtaRestriction eta_restriction_bounds(const QuasistableModel& model, std::uint32_t y) {
  const std::size_t n = model.component_count();
  if (n > kMaxSubcurveComponents) throw Error(ErrorKind::TooManyComponents, "too many components");
  if (n < 32 && (y >> n) != 0) throw Error(ErrorKind::InvalidGraph, "subcurve mask names a missing component");

  EtaRestriction out;
  const auto eta = eta_degrees(model);
  std::int64_t direct = 0;
  for (std::size_t c = 0; c < n; ++c)
    if ((y >> c) & 1u) direct += eta[c];
  out.e_Y = direct;

  const auto& g = model.base();
  Rational book = 0;
  for (std::size_t c = model.base_component_count(); c < n; ++c) {
    const Edge& e = g.edge(model.exceptional_edge(c));
    const int attached_in_y = static_cast<int>((y >> e.u) & 1u) + static_cast<int>((y >> e.v) & 1u);
    if ((y >> c) & 1u) {
      const int l = 2 - attached_in_y;
      book += Rational(1) - Rational(2 - l, 2);
    } else {
      book -= Rational(attached_in_y, 2);
    }
  }
  out.e_Y_bookkeeping = book;

  for (const auto& e : detail::curve_edges(model)) out.k_Y += (((y >> e.a) ^ (y >> e.b)) & 1u);
  out.within_bounds = Rational(-out.k_Y, 2) <= out.e_Y && out.e_Y <= Rational(out.k_Y, 2);
  return out;
}

}  // namespace prym
