#!/usr/bin/env python3
"""Generate the bundled WNDB-format WordNet subset under data/fixture/wordnet.

Synset offsets are real byte offsets into the generated data.<pos> files, as in
the Princeton distribution. Re-run after editing the SYNSETS table:

    python3 scripts/make_wordnet_fixture.py data/fixture/wordnet
"""
import os
import sys

HEADER_LINES = [
    "  1 This is a hand-built subset in WordNet 3.0 database format.",
    "  2 Synsets, glosses and lexicographer files follow Princeton WordNet",
    "  3 conventions; the content is reduced for testing.",
]

# key: (pos, lexfile, words, hypernym keys, gloss)
# Keys are local names; pos is one of n v a s r.
SYNSETS = {
    # ---- noun taxonomy ----
    "entity": ("n", 3, ["entity"], [], "that which is perceived or known or inferred to have its own distinct existence"),
    "physical_entity": ("n", 3, ["physical_entity"], ["entity"], "an entity that has physical existence"),
    "abstraction": ("n", 3, ["abstraction", "abstract_entity"], ["entity"], "a general concept formed by extracting common features from specific examples"),
    "object": ("n", 3, ["object", "physical_object"], ["physical_entity"], "a tangible and visible entity; an entity that can cast a shadow"),
    "living_thing": ("n", 3, ["living_thing"], ["object"], "a living entity"),
    "organism": ("n", 3, ["organism", "being"], ["living_thing"], "a living thing that has the ability to act or function independently"),
    "animal": ("n", 5, ["animal", "beast", "creature"], ["organism"], "a living organism characterized by voluntary movement"),
    "dog": ("n", 5, ["dog", "domestic_dog"], ["animal"], "a domesticated carnivorous animal kept as a pet or for hunting"),
    "cat": ("n", 5, ["cat", "true_cat"], ["animal"], "a small domesticated feline animal kept as a pet"),
    "game_animal": ("n", 5, ["game"], ["animal"], "animal hunted for food or sport"),
    "person": ("n", 18, ["person", "individual", "someone"], ["organism"], "a human being"),
    "artifact": ("n", 3, ["artifact", "artefact"], ["object"], "a man-made object taken as a whole"),
    "device": ("n", 6, ["device"], ["artifact"], "an instrumentality invented for a particular purpose"),
    "phone": ("n", 6, ["phone", "telephone", "telephone_set"], ["device"], "electronic device for calling other people and talking to them"),
    "camera": ("n", 6, ["camera", "photographic_camera"], ["device"], "equipment for taking photographs with a lens and a shutter"),
    "lens_optic": ("n", 6, ["lens", "lense", "lens_system"], ["device"], "a transparent optical device used to focus light and form images in a camera"),
    "battery": ("n", 6, ["battery", "electric_battery"], ["device"], "a device that produces electricity and keeps an electronic device running"),
    "screen": ("n", 6, ["screen", "display"], ["device"], "the display surface of an electronic device on which images are shown"),
    "book_volume": ("n", 6, ["book", "volume"], ["artifact"], "physical objects consisting of a number of pages bound together"),
    "body_part": ("n", 8, ["body_part"], ["object"], "any part of an organism such as an organ or extremity"),
    "lens_eye": ("n", 8, ["lens", "crystalline_lens"], ["body_part"], "biconvex transparent body situated behind the iris in the eye"),
    "communication": ("n", 3, ["communication"], ["abstraction"], "something that is communicated by or to or between people or groups"),
    "book_work": ("n", 10, ["book"], ["communication"], "a written work or composition that has been published"),
    "story": ("n", 10, ["story"], ["communication"], "a message that tells the particulars of an act or occurrence or course of events"),
    "music": ("n", 10, ["music"], ["communication"], "an artistic form of auditory communication incorporating instrumental or vocal tones"),
    "software": ("n", 10, ["software", "software_program"], ["communication"], "written programs pertaining to the operation of a computer"),
    "act": ("n", 4, ["act", "deed", "human_action"], ["abstraction"], "something that people do or cause to happen"),
    "game_contest": ("n", 4, ["game"], ["act"], "a contest with rules to determine a winner that people play"),
    "attribute": ("n", 3, ["attribute"], ["abstraction"], "an abstraction belonging to or characteristic of an entity"),
    "quality": ("n", 7, ["quality"], ["attribute"], "an essential and distinguishing attribute of something or someone"),
    "good": ("n", 7, ["good", "goodness"], ["quality"], "moral excellence or admirableness"),
    "state": ("n", 26, ["state"], ["abstraction"], "the way something is with respect to its main attributes"),
    "feeling": ("n", 12, ["feeling"], ["state"], "the experiencing of affective and emotional states"),
    "emotion": ("n", 12, ["emotion"], ["feeling"], "any strong feeling"),
    "anger": ("n", 12, ["anger", "choler", "ire"], ["emotion"], "a strong emotion; a feeling that is oriented toward some real or supposed grievance"),
    "fury": ("n", 12, ["fury", "rage", "madness"], ["anger"], "state of violent anger"),
    "annoyance": ("n", 12, ["annoyance", "irritation", "vexation"], ["anger"], "the feeling of being irritated or angry"),
    "disgust": ("n", 12, ["disgust"], ["emotion"], "strong feelings of dislike"),
    "fear": ("n", 12, ["fear", "fearfulness", "fright"], ["emotion"], "an emotion experienced in anticipation of some specific pain or danger"),
    "terror": ("n", 12, ["terror", "panic"], ["fear"], "an overwhelming feeling of fear and anxiety"),
    "joy": ("n", 12, ["joy", "joyousness", "joyfulness"], ["emotion"], "the emotion of great happiness"),
    "delight": ("n", 12, ["delight", "pleasure"], ["joy"], "a feeling of extreme pleasure or satisfaction"),
    "happiness": ("n", 12, ["happiness", "felicity"], ["joy", "state"], "state of well-being characterized by emotions ranging from contentment to intense joy"),
    "sadness": ("n", 12, ["sadness", "unhappiness"], ["emotion"], "emotions experienced when not in a state of well-being"),
    "sorrow": ("n", 12, ["sorrow"], ["sadness"], "an emotion of great sadness associated with loss or bereavement"),
    "grief": ("n", 12, ["grief", "heartache", "heartbreak"], ["sorrow"], "intense sorrow caused by loss of a loved one"),
    "surprise": ("n", 12, ["surprise"], ["emotion"], "the astonishment you feel when something totally unexpected happens to you"),
    "astonishment": ("n", 12, ["astonishment", "amazement", "wonder"], ["surprise"], "the feeling that accompanies something extremely surprising"),
    # ---- verbs (several disjoint roots) ----
    "get": ("v", 40, ["get", "acquire"], [], "come into the possession of something concrete or abstract"),
    "buy": ("v", 40, ["buy", "purchase"], ["get"], "obtain by purchase; acquire by means of a financial transaction"),
    "sell": ("v", 40, ["sell"], [], "exchange or deliver for money or its equivalent"),
    "be": ("v", 42, ["be"], [], "have the quality of being something"),
    "make": ("v", 36, ["make", "create"], [], "make or cause to be or to become"),
    "think": ("v", 31, ["think", "cogitate"], [], "use or exercise the mind in order to make a decision or arrive at a solution"),
    "tell": ("v", 32, ["tell"], [], "express in words"),
    "sleep": ("v", 29, ["sleep", "kip", "slumber"], [], "be asleep"),
    "put": ("v", 35, ["put", "set", "place"], [], "put into a certain place or abstract location"),
    "play": ("v", 33, ["play"], [], "participate in games or sport"),
    "fight": ("v", 33, ["fight", "battle"], [], "be engaged in a fight; carry on a fight"),
    "feel": ("v", 37, ["feel", "experience"], [], "undergo an emotional sensation or be in a particular state of mind"),
    "enjoy": ("v", 37, ["enjoy", "like"], ["feel"], "have a good time; derive pleasure from something"),
    "anger_v": ("v", 37, ["anger"], ["feel"], "make angry"),
    "fear_v": ("v", 37, ["fear", "dread"], ["feel"], "be afraid or feel anxious or apprehensive about a possible situation"),
    "rage_v": ("v", 37, ["rage"], ["feel"], "feel intense anger"),
    # ---- adjectives ----
    "good_a": ("a", 0, ["good"], [], "having desirable or positive qualities especially those suitable for a thing specified"),
    "bad_a": ("a", 0, ["bad"], [], "having undesirable or negative qualities"),
    "fantastic": ("s", 0, ["fantastic", "wonderful", "marvelous"], [], "extraordinarily good or great"),
    "unreliable": ("a", 0, ["unreliable", "undependable"], [], "not worthy of reliance or trust"),
    "stylish": ("a", 0, ["stylish", "fashionable"], [], "having elegance or taste or refinement in manners or dress"),
    "dimensional": ("a", 0, ["dimensional"], [], "of or relating to dimensions"),
    "one_dimensional": ("a", 0, ["one-dimensional"], [], "relating to a single dimension or aspect; having no depth or scope"),
    "happy_a": ("a", 0, ["happy"], [], "enjoying or showing or marked by joy or pleasure"),
    "sad_a": ("a", 0, ["sad"], [], "experiencing or showing sorrow or unhappiness"),
    "electronic": ("a", 1, ["electronic"], [], "of or relating to electronics"),
    # ---- adverbs ----
    "very": ("r", 2, ["very", "really"], [], "used as intensifiers"),
    "disproportionately": ("r", 2, ["disproportionately"], [], "to a disproportionate degree"),
    "never": ("r", 2, ["never", "ne'er"], [], "not ever; at no time in the past or future"),
}

# Sense-rank overrides for polysemous lemmas (default: table order).
SENSE_ORDER = {
    ("noun", "book"): ["book_work", "book_volume"],
    ("noun", "game"): ["game_contest", "game_animal"],
}

FILE_POS = {"n": "noun", "v": "verb", "a": "adj", "s": "adj", "r": "adv"}
PTR_POS = {"noun": "n", "verb": "v", "adj": "a", "adv": "r"}

EXCEPTIONS = {
    "noun": [("children", "child"), ("men", "man")],
    "verb": [("is", "be"), ("are", "be"), ("was", "be"), ("were", "be"), ("been", "be"),
             ("am", "be"), ("bought", "buy"), ("sold", "sell"), ("made", "make"),
             ("told", "tell"), ("thought", "think"), ("slept", "sleep"), ("fought", "fight"),
             ("felt", "feel"), ("got", "get")],
    "adj": [("better", "good"), ("best", "good"), ("worse", "bad"), ("worst", "bad")],
    "adv": [],
}


def hyponyms_of(key):
    return [k for k, v in SYNSETS.items() if key in v[3]]


def render_line(key, offsets):
    ss_type, lexfile, words, hypers, gloss = SYNSETS[key]
    fpos = FILE_POS[ss_type]
    parts = ["%08d" % offsets[key], "%02d" % lexfile, ss_type, "%02x" % len(words)]
    for w in words:
        parts += [w, "0"]
    ptrs = []
    for h in hypers:
        ptrs.append("@ %08d %s 0000" % (offsets[h], PTR_POS[fpos]))
    for h in hyponyms_of(key):
        ptrs.append("~ %08d %s 0000" % (offsets[h], PTR_POS[fpos]))
    parts.append("%03d" % len(ptrs))
    parts += ptrs
    if fpos == "verb":
        parts += ["01", "+", "02", "00"]
    return " ".join(parts) + " | " + gloss + "  \n"


def build(outdir):
    os.makedirs(outdir, exist_ok=True)
    by_file = {}
    for key, spec in SYNSETS.items():
        by_file.setdefault(FILE_POS[spec[0]], []).append(key)
    header = "".join(l + "\n" for l in HEADER_LINES)
    offsets = {k: 0 for k in SYNSETS}
    # Line lengths do not depend on offset values (fixed width), so two passes converge.
    for _ in range(2):
        for fpos, keys in by_file.items():
            pos = len(header.encode())
            for k in keys:
                offsets[k] = pos
                pos += len(render_line(k, offsets).encode())
    for fpos, keys in by_file.items():
        with open(os.path.join(outdir, "data." + fpos), "w", newline="\n") as f:
            f.write(header)
            for k in keys:
                f.write(render_line(k, offsets))
        index = {}
        for k in keys:
            for w in SYNSETS[k][2]:
                index.setdefault(w.lower(), []).append(k)
        with open(os.path.join(outdir, "index." + fpos), "w", newline="\n") as f:
            f.write(header)
            for lemma in sorted(index):
                ks = SENSE_ORDER.get((fpos, lemma), index[lemma])
                ptrset = []
                if any(SYNSETS[k][3] for k in ks):
                    ptrset.append("@")
                if any(hyponyms_of(k) for k in ks):
                    ptrset.append("~")
                fields = [lemma, PTR_POS[fpos], str(len(ks)), str(len(ptrset))] + ptrset
                fields += [str(len(ks)), "0"] + ["%08d" % offsets[k] for k in ks]
                f.write(" ".join(fields) + "  \n")
        with open(os.path.join(outdir, fpos + ".exc"), "w", newline="\n") as f:
            for infl, base in sorted(EXCEPTIONS[fpos]):
                f.write("%s %s\n" % (infl, base))


if __name__ == "__main__":
    build(sys.argv[1] if len(sys.argv) > 1 else "data/fixture/wordnet")
