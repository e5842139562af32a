"""Polynomial covers and the pair-trapping witness built from them."""

from semiclose.fixtures import M21, S2, Z2
from semiclose.kernel import direct_product
from semiclose.polynomials import (
    UNIT, compose, polynomial, polyfinite_from_polybounded, search_polybounded, verify_polyfinite,
)

# %% Coefficients live in the semigroup with an identity adjoined (UNIT).
sq = polynomial(Z2, [UNIT, UNIT, UNIT])
print("x^2 on Z2:", sq.render(), "->", sq.values())
g = compose(polynomial(Z2, [1, UNIT]), polynomial(Z2, [UNIT, 1]))
print("composite a x . x a =", g.render(), "->", g.values())

# %% Smallest cover by polynomial fibres in the truncated search space.
for name, S in [("Z2", Z2), ("S2", S2), ("M21 x S2", direct_product(M21, S2))]:
    cover = search_polybounded(S, S.order)
    items = ", ".join(f"{f.render()} = {b}" for f, b in cover.items)
    print(f"{name}: {len(cover)} fibre(s): {items}")

    # %% From k fibres to a finite trap F and degree bound d.
    w = polyfinite_from_polybounded(S, cover)
    print(f"   d = {w.d}, F = {sorted(w.F)}, verified: {verify_polyfinite(S, w)}")
