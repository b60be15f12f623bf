"""skillvet: vetting toolkit for voice-assistant skill markets.

Two families of checks:

- Voice squatting: phonetic analysis of skill invocation names.  A
  weighted phoneme edit distance (learned from pronunciation-variant
  statistics) and an utterance-paraphrase matcher drive an all-pairs
  catalog scan for competitive invocation names.
- Voice masquerading: conversation-transcript analysis.  A skill
  response checker flags silent or system-mimicking responses; a user
  intention classifier (random forest over sentence-relevance features)
  flags context-switch attempts the skill should not be answering.
"""

__version__ = "0.1.0"
