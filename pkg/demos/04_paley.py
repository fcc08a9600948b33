#!/usr/bin/env python3
"""Paley graphs: exact character identities pin down spectrum, rank, and payoff.

The quadratic-character matrix K satisfies K^2 = qI - J exactly over the
integers, which forces the adjacency spectrum and makes the Gram matrix
I + 2/(sqrt(q)+1) A(complement) rank (q+1)/2.  Factoring it yields unit
vectors, one per field element, with every non-adjacent overlap equal to
2/(sqrt(q)+1): the optimal quantum strategy in dimension (q+1)/2.
"""

import numpy as np

from cliquecomm import (
    gen_paley,
    lovasz_theta,
    optimal_gram,
    paley_payoff,
    quadratic_residues,
    representation_payoff,
    verify_character_square,
    verify_representation,
)
from cliquecomm.paley import (
    adjacency_from_character,
    adjacency_matrix,
    expected_adjacency_spectrum,
    extract_vectors,
    fourier_eigenvector_check,
    verify_adjacency_square,
)

for q in (5, 13, 17, 29):
    print(f"=== q = {q} ===")
    print("  residues:", sorted(quadratic_residues(q))[:6],
          "..." if q > 13 else "")
    print("  K^2 = qI - J (exact integers):", verify_character_square(q))
    print("  A = (K + J - I)/2 (exact):",
          bool(np.array_equal(adjacency_from_character(q), adjacency_matrix(q))))
    print("  A^2 = (q-1)/4 (J+I) - A (exact):", verify_adjacency_square(q))
    print("  adjacency spectrum:",
          ", ".join(f"{v:+.4f} (x{m})" for v, m in expected_adjacency_spectrum(q)))
    report = optimal_gram(q)
    print(f"  Gram rank: {report.rank} = (q+1)/2,  entry sum: {report.entry_sum:.6f}"
          f" = q^1.5 = {q ** 1.5:.6f}")
    print(f"  theta: {lovasz_theta(q):.6f} = sqrt(q)")
    rep = extract_vectors(report)
    g = gen_paley(q)
    print("  extracted vectors faithful:", verify_representation(rep, g).ok,
          f" in dimension {rep.d}")
    print(f"  payoff: {representation_payoff(rep, g):.9f}"
          f"  (formula {paley_payoff(q):.9f})")
    print("  Fourier vectors diagonalize the Gram matrix:",
          fourier_eigenvector_check(q))
    print()

print("Note the kernel sits on the residue frequencies: the Fourier vector at")
print("index k has eigenvalue 0 when k is a quadratic residue and")
print("2 sqrt(q)/(1+sqrt(q)) when it is not, with sqrt(q) on the constant vector.")
