"""
Build a phoneme substitution cost matrix from a pronouncing dictionary
======================================================================

Words with several accepted pronunciations tell us which phonemes
speakers (and recognizers) treat as interchangeable.  Aligning each
word's alternative pronunciations against each other and counting how
often phonemes substitute for one another yields a weighted cost
WC(a, b) in [0, 1]: 0 for identical phonemes, small for common
confusions, 1 for pairs never observed substituting.
"""

from skillvet.costmatrix import build_matrix, collect_statistics
from skillvet.prondict import load_default_dictionary, parse_dictionary

# The classic worked example: "tomato" with its two pronunciations.
# The alignment matches T, AH, M, T, OW and substitutes EY for AA.
tomato = parse_dictionary(
    [
        "TOMATO  T AH M EY T OW",
        "TOMATO(1)  T AH M AA T OW",
    ]
)
stats = collect_statistics(tomato)
print("substitution counts:", dict(stats.substitution_frequency))
print("phoneme frequencies:", dict(stats.frequency))

# WC(EY, AA) = 1 - (SF(EY,AA) + SF(AA,EY)) / (F(EY) + F(AA))
#            = 1 - (1 + 0) / (1 + 1) = 0.5
matrix = build_matrix(tomato)
print("WC(EY, AA) =", matrix.cost("EY", "AA"))

# Phonemes that never substitute for each other stay at the ceiling,
# and aligning a phoneme with itself is free.
print("WC(EY, K)  =", matrix.cost("EY", "K"))
print("WC(EY, EY) =", matrix.cost("EY", "EY"))

# The packaged mini dictionary carries enough variant-rich entries to
# give useful statistics.  Build the full 40x40 matrix (39 phonemes
# plus the gap symbol used for insertions and deletions).
dictionary = load_default_dictionary()
matrix = build_matrix(dictionary)
print()
print("dictionary entries:", len(dictionary.entries))
print("pronunciation pairs used:", matrix.pair_count)

# A few cells.  S/Z, IH/IY, and AH/EY substitutions are witnessed by
# the mini dictionary and so fall below the ceiling; T/D never
# substitutes in it and stays at 1.  Indel costs come from the gap
# column.
for a, b in [("S", "Z"), ("IH", "IY"), ("AH", "EY"), ("T", "D")]:
    print(f"WC({a}, {b}) = {matrix.cost(a, b):.4f}")
print("indel cost of T:", f"{matrix.indel_cost('T'):.4f}")
print("cheapest possible indel:", f"{matrix.min_indel_cost():.4f}")

# The matrix serializes to a plain text table with a checksum header,
# so a scan can pin the exact matrix it ran with.
text = matrix.to_text()
print()
print("serialized header:")
for line in text.splitlines()[:3]:
    print(" ", line)
