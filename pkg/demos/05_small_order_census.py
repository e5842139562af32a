"""Census of small semigroups and the lemma checks run over all of them."""

import time

from semiclose import oracle
from semiclose.oracle import EnumerationSpec, enumerate_semigroups

# %% Labeled tables, isomorphism classes and commutative classes.
for n in range(1, 5):
    labeled = sum(1 for _ in enumerate_semigroups(EnumerationSpec(n)))
    classes = sum(1 for _ in enumerate_semigroups(EnumerationSpec(n, up_to_isomorphism=True)))
    comm = sum(1 for _ in enumerate_semigroups(EnumerationSpec(n, True, True)))
    print(f"order {n}: {labeled:5} labeled, {classes:4} up to isomorphism, {comm:3} commutative")

# %% The naive filter over all n^(n*n) tables agrees at order 3.
print("naive count at order 3:", oracle.naive_labeled_count(3))

# %% Run every check on every semigroup of order <= 4 up to isomorphism.
t0 = time.perf_counter()
report = oracle.run_lemma_suite([EnumerationSpec(n, up_to_isomorphism=True) for n in range(1, 5)])
print(f"\n{report.semigroups} semigroups in {time.perf_counter() - t0:.1f} s")
print(oracle.BANNER)
for name in oracle.CHECKS:
    print(f"  {name:40} {report.passed.get(name, 0):4} passed {report.failed.get(name, 0):3} failed")
