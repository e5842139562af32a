"""Three-valued predicates and closedness verdicts for infinite constructors."""

from semiclose.classifier import CHAIN, classify
from semiclose.symbolic import eval_predicate, parse_dsl, truncation_contradictions

# %% Terms are written in a small constructor language.
terms = ["OmegaChain", "NullOmega", "Prufer(2)", "FreeComm(1)", "Sum(omega, C(2))",
         "Zero(Sum(omega, C(3))) * M(2,1)", "FreeComm(1) * Prufer(3)"]

# %% Every verdict carries the rule that produced it.
v = eval_predicate(parse_dsl("Sum(omega, C(2)) * NullOmega"), "bounded")
print(v.explain())

# %% Closedness classes, strongest first, with the conditions that fail.
for text in terms:
    report = classify(parse_dsl(text))
    print(f"\n{text}")
    for name in CHAIN:
        failing = report.failing_conditions(name)
        print(f"  {name:24} {report.value(name).value:8} {', '.join(failing)}")

# %% Some products stay undecided rather than guessed.
print("\nchain-finite for FreeComm(1) * Prufer(3):",
      eval_predicate(parse_dsl("FreeComm(1) * Prufer(3)"), "chain_finite").value.value)

# %% Finite pieces of each term never contradict what the rules assert.
for text in terms:
    checked, bad = truncation_contradictions(parse_dsl(text))
    print(f"{text:36} {checked:3} comparisons, {len(bad)} contradictions")

# %% A markdown report, as ``semiclose classify --format markdown`` emits it.
print(classify(parse_dsl("Sum(omega, C(2))")).to_markdown())
