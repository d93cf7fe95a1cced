#pragma once
// Genus, bad places, SNC special fibers, Tamagawa numbers, conductor and
// Faltings height of J.

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "superjac/orbits.hpp"

namespace superjac {

u64 genus(u64 a, u64 b);
mpz_class conductor_degree(const CurveParams& c);

// Places of F_r(t) over F_q and infinity, grouped by degree.
struct PlaceGroup {
  u64 degree = 0;
  mpz_class count;
};
struct BadPlaces {
  std::vector<PlaceGroup> finite;  // ascending degree
  PlaceGroup infinity{1, 1};
  mpz_class total_degree() const;
};
BadPlaces bad_places(const CurveParams& c);

enum class PlaceKind { finite, infinity };
const char* place_name(PlaceKind k);

struct SncComponent {
  u64 multiplicity = 0;
  u64 genus = 0;
  std::string role;  // "central", or the edge name and position in its chain
};
struct SncFiber {
  PlaceKind kind = PlaceKind::finite;
  std::vector<SncComponent> components;  // components[0] is central
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<u64> multiplicities() const;
  std::vector<std::size_t> degrees() const;  // intersections with other components
  bool is_tree() const;
};

// Chain of multiplicities from the face of multiplicity delta_face towards an
// edge of denominator delta_edge, starting at slope s = num / (delta_face / delta_edge).
std::vector<u64> snc_chain(u64 delta_face, u64 delta_edge, u64 num);
SncFiber snc_special_fiber(const CurveParams& c, PlaceKind kind);
// Checks tree shape, genus 0, gcd 1, central multiplicity ab with three
// neighbours and terminal multiplicities {a, b, 1}. Returns the failures.
std::vector<std::string> fiber_invariant_failures(const SncFiber& f, const CurveParams& c);
std::string to_dot(const SncFiber& f, const std::string& name = "fiber");

// prod_i m_i^{d_i - 2} for d_i the number of neighbours of component i.
mpq_class lorenzini_product(const SncFiber& f);
struct TamagawaCertificate {
  mpq_class finite, infinity;  // one local factor per kind of bad place
  mpq_class global;            // over all bad places
  bool all_one() const { return finite == 1 && infinity == 1 && global == 1; }
};
TamagawaCertificate tamagawa(const CurveParams& c);

struct HeightData {
  mpq_class D, E;
  mpz_class h;  // D q + E
  mpq_class D_lower, D_upper;  // (ab-a-b)^3 / (6 a^2 b^2) and ab / 6
  u64 genus = 0;
  bool bounds_hold() const { return D_lower < D && D < D_upper && 0 < E && E < genus; }
};
HeightData height(const CurveParams& c);

}  // namespace superjac
