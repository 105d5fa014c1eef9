"""Which sextuples can be sent anywhere, and which can receive anything?

Builds the basic database, then scans a sample of six-sets.
Run: python demos/07_transitivity.py
"""
from m13.transitivity import (DONOR, RECIPIENT, SextupleOracle, find_collision_witness,
                              verify_donor_theorem, verify_recipient_theorem)

oracle = SextupleOracle()
for s in [(0, 1, 2, 3, 4, 5), (1, 2, 3, 4, 5, 6)]:
    print(s, "donor:", oracle.is_universal(s, DONOR), " recipient:", oracle.is_universal(s, RECIPIENT))

a, b = find_collision_witness((1, 2, 3, 4, 5, 6), DONOR)
print("two elements agreeing on counters 1..6:", a, "and", b)

print(verify_donor_theorem(oracle, ("sampled", 50)).summary())
print(verify_recipient_theorem(oracle, ("sampled", 50)).summary())
