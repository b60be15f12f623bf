"""
Phonetic distance between spoken skill names
============================================

A squatting attack works when two invocation names sound alike, not
when they are spelled alike.  So the comparison runs on phoneme
sequences: phonemize both names, then align them with Needleman-Wunsch
using the weighted substitution costs from the cost matrix.
"""

from skillvet.costmatrix import build_matrix
from skillvet.distance import (
    banded_distance_at_most,
    phrase_distance,
    weighted_distance,
)
from skillvet.prondict import Phonemizer, load_default_dictionary

dictionary = load_default_dictionary()
matrix = build_matrix(dictionary)
phonemizer = Phonemizer(dictionary)

# "cat fax" is a phonetic squat on "cat facts": FACTS has an accepted
# pronunciation F AE K S that collapses the T, which is exactly the
# FAX pronunciation.
for phrase in ("cat facts", "cat fax"):
    print(phrase, "->", [" ".join(p) for p in phonemizer.phrase(phrase)])

# phrase_distance takes the minimum over all pronunciation combinations
# of both phrases.
d = phrase_distance("cat facts", "cat fax", dictionary, matrix)
print("distance(cat facts, cat fax) =", d)

# Unrelated names land far apart.
d = phrase_distance("cat facts", "daily weather", dictionary, matrix)
print("distance(cat facts, daily weather) =", round(d, 4))

# weighted_distance works on raw phoneme sequences.  Distance 0 means
# the sequences are identical; each substitution or indel adds its
# matrix cost.
a = ["S", "L", "IY", "P"]
b = ["S", "L", "IY", "P", "S"]
print("one trailing S costs", round(weighted_distance(a, b, matrix), 4))

# For scanning at scale the full alignment table is wasteful: most
# pairs are nowhere near the threshold.  The banded variant only fills
# diagonal cells that could still finish under the bound and returns
# infinity the moment no cell can.
bound = 0.5
d = banded_distance_at_most(a, b, matrix, bound)
print(f"banded at bound {bound}:", round(d, 4))
far = phonemizer.phrase("daily weather")[0]
print("banded on a far pair:", banded_distance_at_most(a, far, matrix, bound))

# The banded result always agrees with the full computation whenever
# the true distance is within the bound; above the bound it reports
# infinity instead of the exact value.
full = weighted_distance(a, far, matrix)
print("full distance on the far pair:", round(full, 4))
