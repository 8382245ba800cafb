#pragma once

#include "zsr/bigint.hpp"
#include "zsr/group.hpp"

namespace zsr {

/// |N(G, k, g)|: k-element subsets of G summing to g, 0 <= k <= |G|.
///   (1/n) sum_{d | (n,k)} Phi_G(g,d) (-1)^{k + k/d} C(n/d, k/d)
/// k = 0 and k = |G| are answered directly (sum of the empty set / of G).
Count count_subsets(const GroupSpec& group, Int k, const GroupElement& g);

/// |M(G, m, g)|: length-m sequences over G summing to g, m >= 0.
///   (1/(n+m)) sum_{d | (n,m)} Phi_G(g,d) C(n/d + m/d, n/d)
Count count_sequences(const GroupSpec& group, Int m, const GroupElement& g);

/// Cat_{a,b} = C(a+b, a) / (a+b) for coprime a, b >= 1.
Count rational_catalan(Int a, Int b);

/// dim (S^p(R) (x) Lambda^m(R))_G for |G| = q + m, via the multinomial sum
///   (1/N) sum_{d | (p,q,m)} (-1)^{m + m/d} phi_G(d) multinomial(N/d; p/d, q/d, m/d),
/// N = p + q + m.
Count pair_dimension(Int p, Int q, Int m, const GroupSpec& group);

/// Number of pairs (A, B), A a length-p sequence, B a k-subset of G, with
/// sigma(A) + sigma(B) = g; the s^p t^k coefficient of the isotypic
/// Poincare series:
///   (1/n) sum_{d | (n,p,k)} Phi_G(g,d) (-1)^{k + k/d} C(n/d + p/d - 1, p/d) C(n/d, k/d)
Count count_pairs_coefficient(const GroupSpec& group, const GroupElement& g, Int p, Int k);

}  // namespace zsr
