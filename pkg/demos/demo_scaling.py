"""Near-linear scaling, and indifference to how resolved the trees are.

Runs a short doubling ladder at both degree extremes and prints wall
time alongside time normalized by M log2^2 M.  The normalized column
staying flat is the near-linearity claim; the star rows staying close
to the binary rows is the degree-independence claim.  The full-size
ladder (2^15..2^21) is available via `treecompat bench`.

Run: python3 demos/demo_scaling.py
"""

from treecompat.bench import format_table, run_ladder

SIZES = [4096, 8192, 16384, 32768]

rows = run_ladder(sizes=SIZES, shapes=["binary", "star"], seed=0)
print(format_table(rows))

binary = [r for r in rows if r.shape == "binary"]
print("\nper-doubling time ratios (2.0 would be perfectly linear):")
for a, b in zip(binary, binary[1:]):
    print(f"  {a.m_p:>6} -> {b.m_p:>6}: {b.seconds / a.seconds:.2f}x")
