#pragma once

#include <array>
#include <utility>
#include <vector>

#include "aalpha/predict.hpp"
#include "aalpha/spectra.hpp"

// Independent transcriptions of the closed-form auxiliary matrices and
// eigenvalue formulas for the special families. The generic joined-union
// construction is normative; these exist so any deviation between the two
// routes is surfaced instead of silently absorbed.

namespace aalpha {

// Power graph of Z_pq: 3x3 quotient, rows ordered [p-class, universal, q-class].
Matrix reference_pq_aux(long long p, long long q, Alpha a);

// Power graph of Z_pqr: 7x7 quotient, rows ordered
// [universal, p, q, r, pq, pr, qr].
Matrix reference_pqr_aux(long long p, long long q, long long r, Alpha a);
std::vector<long long> reference_pqr_divisor_order(long long p, long long q,
                                                   long long r);

// Power graph of Z_{p q^N}: the explicitly known eigenvalues with their
// totient multiplicities (the auxiliary matrix is covered by the generic
// construction).
std::vector<FixedEigenvalue> reference_pq_power_fixed(long long p, long long q,
                                                      int N, Alpha a);

// Elementary abelian p-group of order p^k: (l+1)x(l+1) quotient,
// l = (p^k - 1)/(p - 1), rows [universal, l clique classes].
Matrix reference_elementary_abelian_aux(int p, int k, Alpha a);
// Final eigenvalue pair as stated in the source form (which lacks the 1/2
// factor of a trace/discriminant pair); kept verbatim for the deviation check.
std::pair<double, double> reference_elementary_abelian_pair(int p, int k, Alpha a);

// Non-abelian group of order pq: (q+2)x(q+2) quotient, rows
// [identity, q clique classes, K_{q-1} class].
Matrix reference_nonabelian_pq_aux(int p, int q, Alpha a);

// Dihedral group of order 2n, n a prime power: 3x3 quotient and the companion
// cubic, both in their stated form (deviations are detected downstream).
Matrix reference_dihedral_aux(int n, Alpha a);
std::array<double, 4> reference_dihedral_cubic(int n, Alpha a);  // ascending

// Generalized quaternion group of order 4n: reduced 3x3 plus the stated
// explicit eigenvalue list.
Matrix reference_dicyclic_aux(int n, Alpha a);
std::vector<FixedEigenvalue> reference_dicyclic_fixed(int n, Alpha a);

// Join-corollary scalar pairs.
std::pair<double, double> reference_complete_bipartite_pair(int a_size, int b_size,
                                                            Alpha a);
std::pair<double, double> reference_wheel_pair(int n, Alpha a);
// The stated complete-split pair contains no alpha at all; transcribed
// verbatim for the documented deviation check.
std::pair<double, double> reference_complete_split_pair(int clique, int total);

// Eigenvalues of a 2x2 matrix with a real spectrum (b*c >= 0), descending.
std::pair<double, double> eigenvalues_2x2(const Matrix& m);

}  // namespace aalpha
