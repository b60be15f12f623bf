"""Shipped corpora: reference data files and deterministic builders.

Everything the test suite and the demos run against lives here:

- the default response blacklist and system command list (packaged JSON
  files),
- a ten-skill catalog with scripted benign conversations (61 user
  utterances across ten sessions) and an attack set derived from them
  (15 context-switch substitutions, 10 fake-termination substitutions),
- a balanced labeled corpus for training the intent classifier,
- synthetic skill catalogs for the squatting scanner: a 200-skill
  catalog with 20 planted confusable pairs at known distances, and a
  5,000-skill benchmark catalog.

Builders are pure functions of their seed, so rerunning any of them
reproduces byte-identical artifacts.
"""

from __future__ import annotations

import json
import random
from importlib import resources
from typing import Iterable, Sequence

from .catalog import SkillRecord
from .detector import (
    Blacklist,
    ConversationTurn,
    KIND_SRC_MIMICRY,
    KIND_SRC_SILENT,
    KIND_UIC_SWITCH,
    LABEL_NO_SWITCH,
    LABEL_SWITCH,
    LabeledUtterance,
    SystemCommandList,
    Transcript,
)

PLANTED_SEED = 20170501
BENCHMARK_SEED = 20170502
UIC_SEED = 20170503


def _data_text(name: str) -> str:
    return resources.files("skillvet.data").joinpath(name).read_text("utf-8")


def default_blacklist() -> Blacklist:
    """The packaged response blacklist (includes the silent entry)."""
    return Blacklist(tuple(json.loads(_data_text("blacklist.json"))))


def default_system_commands() -> SystemCommandList:
    """The packaged system command list (with ``<name>`` templates)."""
    return SystemCommandList(tuple(json.loads(_data_text("system_commands.json"))))


# ---------------------------------------------------------------------------
# Detector catalog: ten skills from different categories, each with the
# description sentences the intent features are computed against.
# ---------------------------------------------------------------------------

_DETECTOR_SKILLS: tuple[dict, ...] = (
    {
        "id": "sleep-sounds",
        "display_name": "Sleep Sounds",
        "invocation_name": "sleep sounds",
        "category": "Health & Wellness",
        "description": [
            "Play relaxing sounds to help you fall asleep.",
            "Choose from rain, ocean waves, thunder, and white noise.",
            "You can set a sleep timer for any sound.",
            "New soundscapes are added every month.",
        ],
    },
    {
        "id": "cat-facts",
        "display_name": "Cat Facts",
        "invocation_name": "cat facts",
        "category": "Education",
        "description": [
            "Hear a new fact about cats every day.",
            "Covers cat breeds, behavior, and feline history.",
            "Ask for another fact whenever you want.",
            "Fun for cat lovers of all ages.",
        ],
    },
    {
        "id": "daily-horoscope",
        "display_name": "Daily Horoscope",
        "invocation_name": "daily horoscope",
        "category": "Lifestyle",
        "description": [
            "Hear your horoscope for today.",
            "Covers all twelve zodiac signs.",
            "Ask about love, career, or wellness readings.",
            "Your stars are updated every morning.",
        ],
    },
    {
        "id": "quiz-master",
        "display_name": "Quiz Master",
        "invocation_name": "quiz master",
        "category": "Games",
        "description": [
            "Test your knowledge with trivia questions.",
            "Topics include history, science, movies, and sports.",
            "Play a quick round or a full match.",
            "The quiz keeps track of your score.",
        ],
    },
    {
        "id": "bedtime-stories",
        "display_name": "Bedtime Stories",
        "invocation_name": "bedtime stories",
        "category": "Kids",
        "description": [
            "Listen to short stories for children.",
            "Choose fairy tales, animal adventures, or space journeys.",
            "Each story lasts about five minutes.",
            "Gentle narration helps kids wind down.",
        ],
    },
    {
        "id": "guided-meditation",
        "display_name": "Guided Meditation",
        "invocation_name": "guided meditation",
        "category": "Health & Wellness",
        "description": [
            "Follow short guided meditation sessions.",
            "Practice slow breathing and body scans.",
            "Choose sessions from three to twenty minutes.",
            "Reduce stress and improve your focus.",
        ],
    },
    {
        "id": "recipe-helper",
        "display_name": "Recipe Helper",
        "invocation_name": "recipe helper",
        "category": "Food & Drink",
        "description": [
            "Find recipes by ingredient or cuisine.",
            "Get step by step cooking instructions.",
            "Convert measurements while you cook.",
            "Save your favorite dishes for later.",
        ],
    },
    {
        "id": "workout-coach",
        "display_name": "Workout Coach",
        "invocation_name": "workout coach",
        "category": "Health & Fitness",
        "description": [
            "Start a quick home workout.",
            "Choose cardio, strength, or stretching routines.",
            "The coach counts your reps and times your rest.",
            "No equipment is needed.",
        ],
    },
    {
        "id": "space-facts",
        "display_name": "Space Facts",
        "invocation_name": "space facts",
        "category": "Education",
        "description": [
            "Discover facts about planets, stars, and galaxies.",
            "Learn about space missions and astronauts.",
            "Ask about any planet in the solar system.",
            "Fresh space trivia every week.",
        ],
    },
    {
        "id": "joke-of-the-day",
        "display_name": "Joke of the Day",
        "invocation_name": "joke of the day",
        "category": "Entertainment",
        "description": [
            "Hear a new joke every day.",
            "Family friendly humor for all ages.",
            "Ask for puns, riddles, or knock knock jokes.",
            "A fresh laugh every morning.",
        ],
    },
)


def detector_catalog() -> list[SkillRecord]:
    """The ten-skill catalog behind the masquerading corpora."""
    return [
        SkillRecord(
            id=s["id"],
            display_name=s["display_name"],
            invocation_name=s["invocation_name"],
            author="skillvet corpus",
            description=tuple(s["description"]),
            category=s["category"],
        )
        for s in _DETECTOR_SKILLS
    ]


# ---------------------------------------------------------------------------
# Benign conversations: ten scripted sessions, one per skill, with 61
# user utterances in total.  Sessions start with the skill's welcome
# turn and alternate strictly.
# ---------------------------------------------------------------------------

_BENIGN_SESSIONS: tuple[tuple[str, tuple[str, ...]], ...] = (
    (
        "sleep-sounds",
        (
            "Hello, welcome to sleep sounds. Which sleep sound would you like today?",
            "the rain sound",
            "Here is the sound of rain falling on leaves. Enjoy.",
            "can you add thunder in the background",
            "Now playing rain with distant thunder.",
            "set the sleep timer for forty five minutes",
            "Sleep timer set for forty five minutes of rain and thunder.",
            "which other sounds do you have",
            "I have ocean waves, white noise, wind, and a crackling campfire.",
            "play the ocean waves instead",
            "Now playing ocean waves for you.",
            "that is perfect thank you",
            "Sweet dreams. The waves will keep playing all night.",
        ),
    ),
    (
        "cat-facts",
        (
            "Welcome to cat facts. Would you like to hear a cat fact?",
            "yes give me a cat fact",
            "Cats sleep for about sixteen hours every day.",
            "another one please",
            "A group of cats is called a clowder.",
            "do cats really have nine lives",
            "That is a myth, but cats often survive high falls thanks to a flexible spine.",
            "tell me about cat breeds",
            "The maine coon is one of the largest cat breeds in the world.",
            "how big do they get",
            "Maine coons can weigh more than eight kilograms and measure a meter long.",
            "great tell me one more fact",
            "A cat's nose print is unique, much like a human fingerprint.",
        ),
    ),
    (
        "daily-horoscope",
        (
            "Welcome to daily horoscope. Which zodiac sign should I read?",
            "virgo please",
            "Virgo: a calm morning gives way to a productive afternoon. Focus on small wins.",
            "what about the career reading",
            "Career: a colleague brings good news about a shared project.",
            "read the love one too",
            "Love: an honest talk brings you closer to someone special.",
            "and for taurus",
            "Taurus: patience pays off today. An old plan finally moves forward.",
            "do the signs change every day",
            "Yes, each sign gets a fresh reading every morning.",
            "nice read me virgo again",
            "Virgo: a calm morning gives way to a productive afternoon. Focus on small wins.",
        ),
    ),
    (
        "quiz-master",
        (
            "Welcome to quiz master. Ready for your first question?",
            "yes ask me a question",
            "In which year did the first person walk on the moon?",
            "nineteen sixty nine",
            "Correct. One point for you. Next question: which planet has the most moons?",
            "is it saturn",
            "Right again. Saturn has the most confirmed moons. Your score is two.",
            "give me a history question",
            "Who was the first president of the united states?",
            "george washington",
            "Correct. Your score is three. One more?",
            "sure one more question",
            "Which country hosted the first football world cup?",
            "uruguay",
            "Amazing, four points. You are a true quiz champion today.",
        ),
    ),
    (
        "bedtime-stories",
        (
            "Welcome to bedtime stories. Would you like a fairy tale or an animal adventure?",
            "an animal adventure",
            "Tonight, a little fox sets out across the snowy forest to find the northern lights.",
            "what happens to the fox",
            "The fox follows a frozen river and meets a wise old owl who knows the way.",
            "read a bit slower please",
            "Of course. The owl points one wing toward the glowing green sky.",
            "do you have a story about dragons",
            "Yes. A young dragon learns to share his mountain with a village of tiny mice.",
            "tell that one tomorrow",
            "I will save the dragon story for tomorrow night.",
            "finish the fox story",
            "The fox reaches the hilltop, watches the lights dance, and falls fast asleep.",
        ),
    ),
    (
        "guided-meditation",
        (
            "Welcome to guided meditation. How long would you like to meditate?",
            "a five minute session",
            "Starting a five minute breathing practice. Find a comfortable seat.",
            "should i close my eyes",
            "Yes, gently close your eyes and take a slow breath in through your nose.",
            "my mind keeps wandering",
            "That is normal. Each time you notice a thought, softly return to your breath.",
            "can we do a body scan next",
            "Sure. Bring your attention to the top of your head and slowly move it downward.",
            "this is very relaxing",
            "Wonderful. Let your shoulders drop and feel the calm spread through your body.",
            "guide me through the last minute",
            "Breathe in deeply, hold for a moment, and breathe out. Your practice is complete.",
        ),
    ),
    (
        "recipe-helper",
        (
            "Welcome to recipe helper. What would you like to cook today?",
            "something with tomatoes and pasta",
            "How about a simple tomato basil pasta? It takes twenty minutes.",
            "sounds good read the ingredients",
            "You need pasta, ripe tomatoes, garlic, olive oil, basil, and parmesan.",
            "how much olive oil",
            "Two tablespoons of olive oil for four servings.",
            "convert that to milliliters",
            "Two tablespoons is about thirty milliliters.",
            "what is the first step",
            "First, boil the pasta in salted water until al dente.",
            "save this recipe for me",
            "Saved. Tomato basil pasta is in your favorites.",
        ),
    ),
    (
        "workout-coach",
        (
            "Welcome to workout coach. Do you want cardio, strength, or stretching?",
            "a short cardio routine",
            "Great. We begin with thirty seconds of jumping jacks. Ready, go.",
            "done what is next",
            "Nice work. Twenty high knees, nice and quick.",
            "my legs are burning",
            "You are doing great. Ten seconds of rest, then mountain climbers.",
            "make the rest longer",
            "Resting for thirty seconds. Shake out your legs.",
            "how many exercises are left",
            "Two more: mountain climbers and a final stretch.",
            "let us finish strong",
            "That is the spirit. Last set, then a slow cool down stretch. Well done today.",
        ),
    ),
    (
        "space-facts",
        (
            "Welcome to space facts. Which planet or star are you curious about?",
            "tell me about jupiter",
            "Jupiter is the largest planet and hosts a storm bigger than earth.",
            "how many moons does jupiter have",
            "Jupiter has ninety five known moons, including the four large galilean moons.",
            "what about saturn's rings",
            "Saturn's rings are made of ice and rock, some pieces as small as grains of sand.",
            "give me a fact about astronauts",
            "Astronauts grow a little taller in space because their spines stretch.",
            "that is amazing one more",
            "A day on venus lasts longer than a year on venus.",
            "explain why that happens",
            "Venus spins so slowly that it orbits the sun before completing one turn.",
        ),
    ),
    (
        "joke-of-the-day",
        (
            "Welcome to joke of the day. Want to hear today's joke?",
            "yes make me laugh",
            "Why did the bicycle fall over? Because it was two tired.",
            "that was funny tell another",
            "What do you call a bear with no teeth? A gummy bear.",
            "do you know any puns",
            "I used to be a banker, but i lost interest.",
            "give me a knock knock joke",
            "Knock knock. Who is there? Lettuce. Lettuce who? Lettuce in, it is cold outside.",
            "one about space please",
            "Why did the sun go to school? To get a little brighter.",
            "perfect see you tomorrow",
            "Come back tomorrow for a brand new joke.",
        ),
    ),
)


def benign_transcripts() -> list[Transcript]:
    """Ten scripted benign sessions (61 user utterances in total)."""
    by_id = {record.id: record for record in detector_catalog()}
    sessions = []
    for k, (skill_id, texts) in enumerate(_BENIGN_SESSIONS, start=1):
        turns = tuple(
            ConversationTurn(role="skill" if i % 2 == 0 else "user", text=text)
            for i, text in enumerate(texts)
        )
        sessions.append(
            Transcript(
                session_id=f"benign-{k:02d}", skill=by_id[skill_id], turns=turns
            )
        )
    return sessions


def legitimate_responses() -> list[str]:
    """Every skill turn in the benign corpus; the calibration baseline."""
    out = []
    for transcript in benign_transcripts():
        for turn in transcript.turns:
            if turn.role == "skill":
                out.append(turn.text)
    return out


# ---------------------------------------------------------------------------
# Attack corpus: every attack is one benign session with one turn
# substituted, following the construction the detector is evaluated on:
# context switches replace a user turn with an invocation or system
# utterance; fake terminations replace the final skill response with an
# empty, audio-only, or system-mimicking text.
# ---------------------------------------------------------------------------

# (base session index, user-turn index within the session, utterance)
_SWITCH_INJECTIONS: tuple[tuple[int, int, str], ...] = (
    (1, 7, "open sleep sounds please"),
    (0, 7, "alexa open cat facts"),
    (0, 5, "what is the week's forecast"),
    (2, 5, "switch off the tv"),
    (3, 7, "turn off bluetooth"),
    (4, 5, "what time is it"),
    (5, 7, "launch quiz master"),
    (6, 5, "start bedtime stories"),
    (7, 7, "play space facts"),
    (8, 5, "open recipe helper"),
    (9, 7, "show me the news"),
    (1, 3, "set an alarm for seven"),
    (2, 9, "amazon music"),
    (3, 3, "turn off the lights"),
    (4, 9, "stop"),
)

# (base session index, replacement text or None for empty)
_TERMINATION_INJECTIONS: tuple[tuple[int, str], ...] = (
    (0, ""),
    (1, ""),
    (2, ""),
    (3, '<audio src="https://example.com/one-hour-of-silence.mp3"/>'),
    (4, ""),
    (5, "Goodbye, have a nice day."),
    (6, "Your session has timed out."),
    (7, "This session has now ended, goodbye."),
    (8, "Sorry, I don't know that one."),
    (9, "There was a problem with the requested skill."),
)


def attack_transcripts() -> tuple[list[Transcript], list[dict]]:
    """The 25-instance attack corpus and its expected alarms.

    Returns (transcripts, expected) where each expected entry is
    ``{"session_id", "turn_index", "kind"}``.
    """
    base = benign_transcripts()
    transcripts: list[Transcript] = []
    expected: list[dict] = []

    for k, (session, turn_index, utterance) in enumerate(_SWITCH_INJECTIONS, start=1):
        source = base[session]
        assert source.turns[turn_index].role == "user"
        turns = list(source.turns)
        turns[turn_index] = ConversationTurn(role="user", text=utterance)
        session_id = f"switch-{k:02d}"
        transcripts.append(
            Transcript(session_id=session_id, skill=source.skill, turns=tuple(turns))
        )
        expected.append(
            {"session_id": session_id, "turn_index": turn_index, "kind": KIND_UIC_SWITCH}
        )

    for k, (session, replacement) in enumerate(_TERMINATION_INJECTIONS, start=1):
        source = base[session]
        last = len(source.turns) - 1
        assert source.turns[last].role == "skill"
        turns = list(source.turns)
        turns[last] = ConversationTurn(role="skill", text=replacement)
        session_id = f"fakestop-{k:02d}"
        transcripts.append(
            Transcript(session_id=session_id, skill=source.skill, turns=tuple(turns))
        )
        kind = (
            KIND_SRC_SILENT
            if not replacement or replacement.startswith("<audio")
            else KIND_SRC_MIMICRY
        )
        expected.append(
            {"session_id": session_id, "turn_index": last, "kind": kind}
        )

    return transcripts, expected


# ---------------------------------------------------------------------------
# Labeled corpus for the intent classifier: balanced switch/no-switch
# utterances tied to the ten-skill catalog.
# ---------------------------------------------------------------------------

_INVOCATION_TEMPLATES = (
    "open {name}",
    "open {name} please",
    "{name} please",
    "launch {name}",
    "start {name}",
    "play {name}",
    "ask {name} for help",
    "alexa open {name}",
    "switch to {name}",
    "can you open {name}",
)

# Real context-switch utterances overheard inside sleep-sound sessions,
# with the skill response each one followed.
_OVERHEARD_SWITCHES: tuple[tuple[str, str], ...] = (
    ("switch off the tv", "Hello, welcome to soothing sleep sounds. Which sleep sound would you like today?"),
    ("what time", "Hello, welcome to soothing sleep sounds. Which sleep sound would you like today?"),
    ("what is the week's forecast", "Hello, welcome to soothing sleep sounds. Which sleep sound would you like today?"),
    ("show me the news", "Hello, welcome to soothing sleep sounds. Which sleep sound would you like today?"),
    ("turn off bluetooth", "Sorry, I do not understand. Which sound do you want today?"),
    ("goodbye alexa", "Sorry, I do not understand. Which sound do you want today?"),
    ("i meant walk back to the timer", "Sorry, I do not understand. Which sound do you want today?"),
    ("amazon music", "Sorry, I do not understand. Which sound do you want today?"),
    ("what is the weather in northridge", "Sorry, I do not understand. Which sound do you want today?"),
    ("what is in the news", "Sorry, I do not understand. Which sound do you want today?"),
    ("i am home", "Sorry, I do not understand. Which sound do you want today?"),
    ("tell me a quote", "Hello, welcome to my sleep sounds. Which sleep sound would you like today?"),
    ("what was the time", "Hello, welcome to my sleep sounds. Which sleep sound would you like today?"),
    ("what is my flash briefing", "Hello, welcome to incredible fast sleep. Which sleep sound would you like today?"),
)

# Paraphrases of the commands a voice platform documents; each stays
# lexically close to an entry on the shipped system command list.
_COMMAND_VARIATIONS: tuple[str, ...] = (
    "alexa stop",
    "alexa cancel",
    "stop now",
    "cancel that",
    "exit this",
    "quit now",
    "go back home",
    "pause for a second",
    "resume playback",
    "alexa quit",
    "what time is it now",
    "tell me the time",
    "what is the time right now",
    "do you know what time it is",
    "what time is it in london",
    "set a timer for ten minutes",
    "set a kitchen timer",
    "set an alarm for seven in the morning",
    "cancel my alarm",
    "cancel the timer",
    "snooze the alarm",
    "what is the weather today",
    "what is the weather like outside",
    "give me the weather forecast",
    "what is tomorrow's forecast",
    "what is the forecast for tuesday",
    "what is in the news today",
    "give me the news",
    "play the news briefing",
    "any news headlines",
    "play my flash briefing",
    "play some jazz music",
    "play amazon music",
    "amazon music please",
    "put on amazon music",
    "play my morning playlist",
    "skip to the next song",
    "go to the previous song",
    "play music by my favorite band",
    "turn the volume up",
    "turn the volume down",
    "make it louder",
    "make it quieter",
    "set the volume to five",
    "turn off the kitchen lights",
    "turn on the living room lights",
    "switch off the television",
    "turn the tv off",
    "turn off the bluetooth speaker",
    "good morning alexa",
    "alexa goodbye",
    "alexa help",
    "what can you do for me",
    "alexa go home",
    "mute the speaker",
    "unmute the speaker",
    "alexa volume up",
    "alexa set a timer",
    "turn the lights off please",
    "switch the tv off now",
    "alexa play music",
    "what is the weather for the weekend",
    "show me the news about sports",
)

# Per-skill on-topic material: question starters crossed with topic
# phrases drawn from each skill's own vocabulary.
_ON_TOPIC: dict[str, tuple[str, ...]] = {
    "sleep-sounds": (
        "the white noise please",
        "something with rain",
        "can you loop the campfire sound",
        "make the waves a little softer",
        "add some wind to the mix",
        "how long does each soundscape last",
        "set the sleep timer for one hour",
        "i like the thunder one",
        "which sound helps babies sleep",
        "bring back the rain",
        "do you have forest sounds",
        "the crackling campfire please",
        "softer please",
        "a calmer sound",
        "keep this one playing",
    ),
    "cat-facts": (
        "tell me about siamese cats",
        "why do cats purr",
        "how long do cats live",
        "give me a fact about kittens",
        "do cats dream",
        "what do cats eat in the wild",
        "another fact about breeds",
        "are black cats unlucky",
        "why do cats knead",
        "how fast can a cat run",
        "tell me something about feline history",
        "one more about behavior",
        "do cats see in the dark",
        "yes",
        "one more",
    ),
    "daily-horoscope": (
        "read my horoscope",
        "what do the stars say for leo",
        "the wellness reading please",
        "and for gemini",
        "read aries next",
        "is today good for big decisions",
        "what about my lucky number",
        "do capricorn now",
        "the career one again",
        "read tomorrow's stars",
        "which sign has the best day",
        "libra please",
        "scorpio",
        "my sign is pisces",
        "yes read it",
    ),
    "quiz-master": (
        "ask me a science question",
        "give me a sports question",
        "a movie question please",
        "harder questions please",
        "what is my score",
        "is the answer mercury",
        "i think it is brazil",
        "true",
        "false",
        "next question please",
        "repeat the question",
        "a question about movies",
        "let us play a full match",
        "einstein",
        "the pacific ocean",
    ),
    "bedtime-stories": (
        "a fairy tale please",
        "read the space journey",
        "a story about a brave mouse",
        "continue the story",
        "read it again",
        "a shorter story tonight",
        "something gentle for a toddler",
        "the one about the dragon",
        "what stories do you have",
        "a new adventure please",
        "read slower",
        "skip to the ending",
        "a tale about the forest",
        "one with a happy ending",
        "yes that one",
    ),
    "guided-meditation": (
        "a ten minute session",
        "guide my breathing",
        "a body scan please",
        "help me relax before bed",
        "a session for focus",
        "something for stress",
        "continue the practice",
        "a longer meditation",
        "breathing exercises please",
        "how should i sit",
        "a three minute session",
        "one for the morning",
        "guide me again",
        "slower breathing",
        "that felt wonderful",
    ),
    "recipe-helper": (
        "find a recipe with chicken",
        "something italian tonight",
        "read the next step",
        "how many grams in a cup",
        "what ingredients do i need",
        "a dessert recipe please",
        "convert three tablespoons to milliliters",
        "repeat the last step",
        "how long does it bake",
        "a vegetarian dish",
        "save this one",
        "what goes with salmon",
        "a soup for dinner",
        "read my favorites",
        "double the servings",
    ),
    "workout-coach": (
        "a strength routine",
        "start the stretching",
        "count my reps",
        "a twenty minute workout",
        "what exercise is next",
        "an easier routine please",
        "add more cardio",
        "how long is the rest",
        "one more set",
        "a workout for my back",
        "skip the jumping jacks",
        "slow down the pace",
        "finish with a stretch",
        "done",
        "ready",
    ),
    "space-facts": (
        "a fact about mars",
        "tell me about the milky way",
        "how hot is the sun",
        "which planet is the biggest",
        "a fact about black holes",
        "tell me about the moon landing",
        "how far is neptune",
        "something about galaxies",
        "do stars die",
        "what is a comet made of",
        "a fact about telescopes",
        "tell me about mercury",
        "one about saturn",
        "why is mars red",
        "more about astronauts",
    ),
    "joke-of-the-day": (
        "tell me a pun",
        "a riddle please",
        "another knock knock joke",
        "one about animals",
        "a joke for kids",
        "make it sillier",
        "tell the bicycle one again",
        "a joke about food",
        "do you have dad jokes",
        "one more laugh",
        "that was hilarious",
        "a clean joke for grandma",
        "the funniest one you know",
        "surprise me",
        "a short one",
    ),
}


def uic_corpus() -> list[LabeledUtterance]:
    """Balanced labeled utterances (switch vs no-switch), 210 per class.

    Switch instances are invocation utterances aimed at other catalog
    skills, system commands and close paraphrases of them, and the
    overheard real-world context switches.  No-switch instances are the
    benign conversations' user turns plus scripted on-topic requests.
    Deterministic: fixed seed, fixed ordering.
    """
    catalog = detector_catalog()
    ids = [record.id for record in catalog]
    rng = random.Random(UIC_SEED)

    welcome_of = {skill_id: texts[0] for skill_id, texts in _BENIGN_SESSIONS}
    responses_of = {
        skill_id: [t for i, t in enumerate(texts) if i % 2 == 0]
        for skill_id, texts in _BENIGN_SESSIONS
    }

    rows: list[LabeledUtterance] = []
    seen: set[tuple[str, str]] = set()

    def add(utterance: str, prior: str | None, skill_id: str, label: str) -> None:
        key = (utterance, skill_id)
        if key in seen:
            return
        seen.add(key)
        rows.append(
            LabeledUtterance(
                utterance=utterance,
                prior_response=prior,
                skill_id=skill_id,
                label=label,
            )
        )

    # Switch: invoking some other skill from inside a session.
    for i, record in enumerate(catalog):
        for j, template in enumerate(_INVOCATION_TEMPLATES):
            host = ids[(i + 1 + j) % len(ids)]
            if host == record.id:
                host = ids[(i + 2 + j) % len(ids)]
            prior = rng.choice(responses_of[host])
            add(
                template.format(name=record.invocation_name),
                prior,
                host,
                LABEL_SWITCH,
            )

    # Switch: documented system commands, verbatim and paraphrased.
    for k, entry in enumerate(default_system_commands().entries):
        if "<name>" in entry:
            continue
        host = ids[k % len(ids)]
        add(entry, rng.choice(responses_of[host]), host, LABEL_SWITCH)
    for k, text in enumerate(_COMMAND_VARIATIONS):
        host = ids[(k + 3) % len(ids)]
        add(text, rng.choice(responses_of[host]), host, LABEL_SWITCH)

    # Switch: overheard real-world context switches (sleep sessions).
    for text, prior in _OVERHEARD_SWITCHES:
        add(text, prior, "sleep-sounds", LABEL_SWITCH)

    switch_count = len(rows)

    # No-switch: the benign sessions' own user turns, with true priors.
    for skill_id, texts in _BENIGN_SESSIONS:
        for i in range(1, len(texts), 2):
            add(texts[i], texts[i - 1], skill_id, LABEL_NO_SWITCH)

    # No-switch: scripted on-topic requests, prior = welcome or content.
    for skill_id, pool in _ON_TOPIC.items():
        options = responses_of[skill_id]
        for k, text in enumerate(pool):
            prior = welcome_of[skill_id] if k % 3 == 0 else options[k % len(options)]
            add(text, prior, skill_id, LABEL_NO_SWITCH)

    # No-switch: bare acknowledgements common to every skill.
    for k, skill_id in enumerate(ids):
        add("yes please", responses_of[skill_id][k % 3], skill_id, LABEL_NO_SWITCH)
        add("again", welcome_of[skill_id], skill_id, LABEL_NO_SWITCH)
        add("one more time", responses_of[skill_id][k % 2], skill_id, LABEL_NO_SWITCH)

    no_switch_count = len(rows) - switch_count
    size = min(switch_count, no_switch_count)
    switches = [r for r in rows if r.label == LABEL_SWITCH][:size]
    others = [r for r in rows if r.label == LABEL_NO_SWITCH][:size]
    balanced = switches + others
    rng.shuffle(balanced)
    return balanced


# ---------------------------------------------------------------------------
# Synthetic squatting catalogs.
# ---------------------------------------------------------------------------

# Two-word themed vocabulary for synthetic invocation names; every word
# has a dictionary pronunciation, so phonemization never falls back.
_NAME_HEADS = (
    "daily", "smart", "calm", "fast", "magic", "soothing", "relaxing",
    "incredible", "animal", "ocean", "mountain", "garden", "kitchen",
    "history", "science", "travel", "money", "fitness", "bedtime",
    "zen", "night", "water", "city", "country", "baseball",
    "football", "soccer", "tennis", "golf", "cricket", "piano", "jazz",
    "rock", "nature", "brain", "coffee", "burger", "pizza", "sushi",
    "taco", "caramel", "apricot", "pecan", "flower", "river", "island",
    "beach", "lake", "space", "crypto", "budget", "english",
    "spanish", "french", "movie", "cinema", "poker", "chess", "bingo",
)

_NAME_TAILS = (
    "facts", "trivia", "quiz", "stories", "sounds", "news", "jokes",
    "quotes", "helper", "guide", "coach", "buddy", "tracker", "planner",
    "finder", "manager", "reader", "teacher", "translator", "diary",
    "journal", "workout", "recipe", "game", "games", "songs", "radio",
    "podcast", "library", "school", "market", "bank", "doctor", "chef",
    "guru", "lullaby", "prayer", "poem", "riddles", "puzzle", "dictionary",
)

# Pairs that share a pronunciation in the packaged dictionary; used to
# plant phonetically identical names under different spellings.
HOMOPHONE_WORD_PAIRS: tuple[tuple[str, str], ...] = (
    ("sea", "see"),
    ("plain", "plane"),
    ("flour", "flower"),
    ("night", "knight"),
    ("meat", "meet"),
    ("fairy tale", "fairy tail"),
    ("steal", "steel"),
    ("one", "won"),
    ("hair", "hare"),
    ("whole", "hole"),
)


def _random_name(rng: random.Random, words: int) -> str:
    if words == 1:
        return rng.choice(_NAME_TAILS)
    if words == 2:
        return f"{rng.choice(_NAME_HEADS)} {rng.choice(_NAME_TAILS)}"
    return (
        f"{rng.choice(_NAME_HEADS)} {rng.choice(_NAME_HEADS)} "
        f"{rng.choice(_NAME_TAILS)}"
    )


def _record(prefix: str, index: int, name: str) -> SkillRecord:
    return SkillRecord(
        id=f"{prefix}{index:04d}",
        display_name=name.title(),
        invocation_name=name,
        author=f"dev-{index % 97:02d}",
        description=(f"The {name} skill.",),
        category="Synthetic",
    )


def planted_catalog(
    seed: int = PLANTED_SEED, size: int = 200
) -> tuple[list[SkillRecord], list[dict]]:
    """A synthetic catalog with 20 planted confusable pairs.

    Returns (catalog, expected) where each expected entry is
    ``{"skill_id", "competitor_id", "relation"}`` for a pair constructed
    at distance 0: 4 same-spelling duplicates, 8 homophone spellings,
    and 8 affix paraphrases.  All planted distances are 0, so any scan
    threshold >= 0 must report them.
    """
    if size < 60:
        raise ValueError("planted catalog needs at least 60 skills")
    rng = random.Random(seed)

    same_spelling_names = ("cat facts", "sleep sounds", "daily trivia", "space game")

    homophone_tails = (
        "sounds", "facts", "garden", "stories", "planner", "quiz", "savings", "trivia",
    )
    homophone_plants = []
    for (word_a, word_b), tail in zip(HOMOPHONE_WORD_PAIRS[:8], homophone_tails):
        if " " in word_a:  # already a two-word name
            homophone_plants.append((word_b, word_a))
        else:
            homophone_plants.append((f"{word_b} {tail}", f"{word_a} {tail}"))

    paraphrase_plants = (
        ("my daily quiz", "daily quiz"),
        ("dog facts please", "dog facts"),
        ("tell me a night story", "night story"),
        ("piano songs app", "piano songs"),
        ("the travel guide", "travel guide"),
        ("some relaxing sounds", "relaxing sounds"),
        ("ocean songs for me", "ocean songs"),
        ("open the coffee quiz", "coffee quiz"),
    )

    # Background names must not collide with any planted name, so every
    # planted relation stays attributable to its construction.
    reserved = set(same_spelling_names)
    for attacker_name, victim_name in (*homophone_plants, *paraphrase_plants):
        reserved.add(attacker_name)
        reserved.add(victim_name)

    base_names: list[str] = []
    names_seen: set[str] = set(reserved)
    while len(base_names) < size - 40:
        name = _random_name(rng, rng.choice((2, 2, 2, 3)))
        if name not in names_seen:
            names_seen.add(name)
            base_names.append(name)

    catalog = [_record("s", k, name) for k, name in enumerate(base_names)]
    expected: list[dict] = []
    next_index = len(catalog)

    def plant(attacker_name: str, victim_name: str, relation: str):
        nonlocal next_index
        victim = _record("s", next_index, victim_name)
        attacker = _record("s", next_index + 1, attacker_name)
        next_index += 2
        catalog.extend([victim, attacker])
        expected.append(
            {
                "skill_id": attacker.id,
                "competitor_id": victim.id,
                "relation": relation,
            }
        )

    for name in same_spelling_names:
        plant(name, name, "same-spelling")
    for attacker_name, victim_name in homophone_plants:
        plant(attacker_name, victim_name, "phonetic")
    for attacker_name, victim_name in paraphrase_plants:
        plant(attacker_name, victim_name, "paraphrase")

    assert len(catalog) == size
    assert len(expected) == 20
    rng.shuffle(catalog)
    return catalog, expected


def benchmark_catalog(size: int = 5000, seed: int = BENCHMARK_SEED) -> list[SkillRecord]:
    """A large synthetic catalog for scan performance measurements."""
    rng = random.Random(seed)
    records = []
    for k in range(size):
        words = rng.choice((1, 2, 2, 2, 2, 3))
        records.append(_record("b", k, _random_name(rng, words)))
    return records


# ---------------------------------------------------------------------------
# Writers matching the detector module's JSONL readers.
# ---------------------------------------------------------------------------


def save_transcripts(transcripts: Iterable[Transcript], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for transcript in transcripts:
            turns = []
            for turn in transcript.turns:
                data = {"role": turn.role, "text": turn.text}
                if turn.timestamp is not None:
                    data["timestamp"] = turn.timestamp
                turns.append(data)
            fh.write(
                json.dumps(
                    {
                        "session_id": transcript.session_id,
                        "skill_id": transcript.skill.id,
                        "turns": turns,
                    },
                    sort_keys=True,
                )
                + "\n"
            )


def save_labels(rows: Iterable[LabeledUtterance], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(
                json.dumps(
                    {
                        "utterance": row.utterance,
                        "prior_response": row.prior_response,
                        "skill_id": row.skill_id,
                        "label": row.label,
                    },
                    sort_keys=True,
                )
                + "\n"
            )
