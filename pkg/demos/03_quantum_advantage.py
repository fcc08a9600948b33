#!/usr/bin/env python3
"""The quantum side: send the selected vertex's vector, measure in the clique basis.

A faithful orthogonal representation keeps adjacent vertices orthogonal and
everything else overlapping, so the Born rule lands exactly on the relation
(zero outside, positive inside).  The message dimension is the clique size
whatever the number of cliques, while the classical message count grows
with the graph order: that is the unbounded gap, visible below at desk
scale.  The best payoff in a fixed dimension is a packing problem; for
qubits three unbiased bases reach the bound and four cannot.
"""

from cliquecomm import (
    QuantumStrategy,
    build_relation,
    build_representation,
    check_consistency,
    check_coverage,
    enumerate_maximum_cliques,
    gen_disconnected,
    optimize_payoff,
    payoff,
    quantum_table,
    sccr_protocol,
)

print("=== scaling: classical messages vs quantum dimension ===")
print(" n | vertices | classical messages | quantum dimension")
for n in range(2, 7):
    g = gen_disconnected(n, 2)
    cliques = enumerate_maximum_cliques(g)
    rel = build_relation(g, cliques)
    classical = sccr_protocol(g, cliques, rel).m
    rep = build_representation(g, cliques)
    table = quantum_table(QuantumStrategy.create(rep, g, cliques), rel)
    ok = check_consistency(table, rel)[0] and check_coverage(table, rel)[0]
    print(f" {n} |    {g.order:2d}    |        {classical:2d}          |"
          f"        {rep.d}        (zero-error + covering: {ok})")

print("\n=== how large can the payoff get for qubits? ===")
for n in (2, 3, 4):
    g = gen_disconnected(n, 2)
    cliques = enumerate_maximum_cliques(g)
    res = optimize_payoff(g, cliques, 2, restarts=16, seed=0)
    print(f" n={n}: best found payoff {res.payoff:.9f}"
          + ("  <- bound 1/2 reached (mutually unbiased bases)" if res.payoff > 0.499 else ""))
print("With four cliques only three unbiased qubit bases exist, so the")
print("payoff drops to the best packing of four lines (1/3, cube diagonals).")

print("\n=== the chain graph also runs in dimension 3 ===")
from cliquecomm import gen_nncc

g = gen_nncc(4, 3, 1)
cliques = enumerate_maximum_cliques(g)
rel = build_relation(g, cliques)
rep = build_representation(g, cliques)
table = quantum_table(QuantumStrategy.create(rep, g, cliques), rel)
print("order:", g.order, " dimension:", rep.d,
      " payoff:", float(payoff(table, rel).value))
