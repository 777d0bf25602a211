"""Relevance levels, Markov blankets and minimal sufficient subsets.

We extend the truth table with one pure-noise column and ask the
structural questions directly: which features are strongly relevant,
which are replaceable, and which subsets retain all class information.
"""

import miselect as ms

ds, roles = ms.generate(ms.SyntheticSpec(
    relevant=1, xor_groups=1, redundant_copies=1, noise=1, exhaustive=True))
print("generated columns and their ground-truth roles:")
for f in ds.feature_names:
    print(f"  {f}: {roles[f]}")

report = ms.analyze(ds)
print()
print("relevance classification:")
for f, level in report.relevance.items():
    witness = f"  (witness S = {list(level.witness)})" if level.witness else ""
    print(f"  {f}: {level.level}{witness}")

print()
print("minimal Markov blankets (a blanket makes its feature disposable):")
for f, blankets in report.markov_blankets.items():
    print(f"  {f}: {[list(b) for b in blankets]}")

from miselect import data as mdata

full_mi = mdata.mutual_information(ds, list(ds.feature_names), [ds.target_name])
print()
print(f"I(F;C) = {full_mi:.6f} bits; minimal sufficient subsets:")
for s in report.sufficient_subsets:
    print(f"  {list(s.features)}  DMI = {s.dmi:.2e}  "
          f"lagrangian = {s.lagrangian:.4f}")
