"""
Detect voice masquerading in conversation transcripts
=====================================================

A running skill can impersonate the assistant in two ways: fake
termination (answer a goodbye with silence or a canned farewell while
staying active) and fake context switch (swallow an utterance the user
meant for the system or another skill).  The detector combines two
checks: the skill response checker (SRC) flags suspicious skill
responses against a blacklist, and the user intention classifier (UIC)
flags user utterances that look like context switches.
"""

from skillvet.corpus import (
    attack_transcripts,
    benign_transcripts,
    default_blacklist,
    default_system_commands,
    detector_catalog,
    uic_corpus,
)
from skillvet.detector import (
    FeatureExtractor,
    calibrate_src,
    detect,
    evaluate_uic,
    extract_features,
    train_uic,
)
from skillvet.embedding import make_provider

provider = make_provider("baseline")
catalog = detector_catalog()
blacklist = default_blacklist()
syscmds = default_system_commands()

# Calibrate the SRC threshold: legitimate skill responses must score
# below it, paraphrased blacklist entries above it.
legitimate = [
    turn.text
    for transcript in benign_transcripts()
    for turn in transcript.turns
    if turn.role == "skill"
]
calibration = calibrate_src(legitimate, blacklist, provider)
print("max relevance of a legitimate response: ", round(calibration.max_legitimate, 4))
print("min relevance of a paraphrased farewell:", round(calibration.min_paraphrase, 4))
print("separable:", calibration.separable)

# Train the UIC random forest on the labeled utterance corpus and
# cross-validate it.
rows = uic_corpus()
print()
print("labeled corpus:", len(rows), "utterances")
metrics = evaluate_uic(rows, catalog, syscmds, provider, folds=5, seed=42)
print(
    "5-fold CV: precision", round(metrics["precision"], 4),
    "recall", round(metrics["recall"], 4),
)
forest = train_uic(rows, catalog, syscmds, provider, seed=42)

# The ten features for one utterance, against the sleep-sounds skill:
# relevance to system commands, invocation-name containment, relevance
# to the prior response, and relevance to the skill's own description.
fv = extract_features(
    "what is the weather today",
    prior_response="Playing rain sounds now.",
    skill=catalog[0],
    syscmds=syscmds,
    catalog=catalog,
    provider=provider,
)
print()
print("feature vector for an off-topic utterance:")
print(" ", [round(x, 3) for x in fv.as_array().tolist()])

# Run the full detector over one attacked session.  switch-01 injects
# a system-directed utterance into a benign sleep-sounds session; the
# skill answers it instead of handing control back.
attacks, expected = attack_transcripts()
session = attacks[0]
print()
print("session", session.session_id, "turns:")
for index, turn in enumerate(session.turns):
    print(f"  {index:2d} {turn.role:5s} {turn.text[:64]}")

extractor = FeatureExtractor(syscmds, catalog, provider)
alarms = detect(
    session, blacklist, syscmds, catalog, forest, provider, extractor=extractor
)
for alarm in alarms:
    print(
        "alarm:", alarm.kind, "at turn", alarm.turn_index,
        "evidence", alarm.evidence,
    )

# The benign corpus stays quiet.
total = 0
for transcript in benign_transcripts():
    total += len(
        detect(
            transcript, blacklist, syscmds, catalog, forest, provider,
            extractor=extractor,
        )
    )
print()
print("alarms across the benign corpus:", total)
