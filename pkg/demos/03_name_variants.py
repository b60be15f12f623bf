"""
Paraphrase variants of an invocation name
=========================================

Users rarely speak a skill name verbatim.  They wrap it in politeness
("sleep sounds please") or articles ("the sleep sounds"), and the
launch phrase itself ("tell me a dog fact") can leak words into the
name.  A squatter can register exactly such a wrapped name and capture
the invocation.  This module generates the wrapped readings so the
scanner can test for them.
"""

from skillvet.costmatrix import build_matrix
from skillvet.prondict import load_default_dictionary
from skillvet.variants import (
    VariantConfig,
    generate_variants,
    paraphrase_candidate_texts,
    paraphrase_distance,
)

cfg = VariantConfig()
print("prefixes:", cfg.prefixes)
print("suffixes:", cfg.suffixes)

# Variants of a target name: every prefix, every suffix, and every
# prefix+suffix combination, deduplicated.
variants = generate_variants("sleep sounds", cfg)
print()
print(len(variants), "variants of 'sleep sounds', first ten:")
for v in variants[:10]:
    print(f"  {v.kind:13s} {v.text}")

# The candidate side: a registered name may only match once a trigger
# word from the launch grammar ("open", "tell", "ask", ...) is read as
# part of it.  "me a dog fact" is the canonical example: spoken as
# "tell me a dog fact", it contains "dog fact" wrapped in "tell me a".
texts = paraphrase_candidate_texts("me a dog fact")
print()
print("candidate readings of 'me a dog fact':")
for t in texts:
    print(" ", t)

# paraphrase_distance compares every candidate reading against every
# variant of the target and reports the cheapest phonetic distance.
# Distance 0 means some reading is phonetically identical to some
# variant: a paraphrase squat.
dictionary = load_default_dictionary()
matrix = build_matrix(dictionary)
for candidate, target in [
    ("sleep sounds please", "sleep sounds"),
    ("me a dog fact", "dog fact"),
    ("daily weather", "sleep sounds"),
]:
    d = paraphrase_distance(candidate, target, cfg, dictionary, matrix, bound=0.0)
    shown = "inf" if d == float("inf") else f"{d:.4f}"
    print(f"paraphrase_distance({candidate!r}, {target!r}) = {shown}")

# The infinity above means: no reading of "daily weather" comes within
# the bound of any variant of "sleep sounds", so there is no paraphrase
# relation at that threshold.
