#pragma once

// Numerical tautological ring of the Fano variety of lines F in G(2, n+2),
// computed through intersection numbers deg_G(x * y * [F]).

#include <cubic/grassmann.hpp>

#include <optional>
#include <vector>

namespace cubic::fano {

struct FanoPairing {
  int n = 0;
  int k = 0;
  std::vector<Exponents> left;   // basis of A^k(G)
  std::vector<Exponents> right;  // basis of A^{2(n-2)-k}(G)
  MatQ matrix;
};

/// Requires n >= 2 and 0 <= k <= 2(n-2); UnsupportedRange otherwise.
FanoPairing fano_pairing(const grassmann::RingPtr& ring, int k);
FanoPairing fano_pairing(int n, int k);

std::size_t taut_rank_F(const grassmann::RingPtr& ring, int k);
std::size_t taut_rank_F(int n, int k);

/// The induced pairing on the images is perfect: the rank equals the
/// dimension of the quotient by the kernel on each side.
bool pairing_is_perfect(const FanoPairing& p);

struct TautRow {
  int k = 0;
  std::size_t dim_G = 0;
  std::size_t rank = 0;
};

std::vector<TautRow> taut_table(int n);

struct ExtraRelation {
  int n = 0;
  WPoly P;  // weighted degree n-1, c1^{n-1} coefficient normalised to 1
  std::size_t kernel_dimension = 0;
};

/// Kernel of A^{n-1}(G) -> A^{n+3}(G), x -> x*[F]. Requires n >= 3.
/// Throws CheckFailed when the kernel is zero or no kernel element has a
/// nonzero c1^{n-1} coefficient.
ExtraRelation extra_relation(int n);

struct Cofactors {
  WPoly A;  // span{x^2, y}
  WPoly B;  // span{x}
};

/// Solves R = A*h_{n+1} + B*h_{n+2} for R of weighted degree n+3.
std::optional<Cofactors> ideal_decomposition(int n, const WPoly& R);

}  // namespace cubic::fano
