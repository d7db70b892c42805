"""Small diagrams used by the check commands and the tests."""

from .link import LinkDiagram, parse_braid, parse_pd

# PD inputs.  A kink is one crossing whose two loops close on themselves.
UNKNOT = {"crossings": [], "loops": 1}
KINK_POS = {"crossings": [{"sign": 1, "edges": [2, 2, 1, 1]}]}
KINK_NEG = {"crossings": [{"sign": -1, "edges": [1, 2, 2, 1]}]}
UNLINK2 = {"crossings": [], "loops": 2}

BRAIDS = {
    "unknot_braid": ("", 1),
    "hopf": ("1 1", 2),
    "trefoil": ("1 1 1", 2),
    "trefoil_mirror": ("-1 -1 -1", 2),
    "r2_unlink": ("1 -1", 2),
    "r2_hopf": ("1 1 2 -2", 3),
    "hopf_unknot": ("1 1", 3),
    "r3_left": ("1 2 1", 3),
    "r3_right": ("2 1 2", 3),
    "r3_mixed_left": ("1 2 -1", 3),
    "r3_mixed_right": ("-2 1 2", 3),
}


def diagram(name: str) -> LinkDiagram:
    pd = {"unknot": UNKNOT, "kink_pos": KINK_POS, "kink_neg": KINK_NEG, "unlink2": UNLINK2}
    if name in pd:
        return parse_pd(pd[name])
    if name in BRAIDS:
        word, strands = BRAIDS[name]
        return parse_braid(word, strands)
    raise KeyError(name)


# (move, first, second) pairs of diagrams of the same link
REIDEMEISTER_PAIRS = [
    ("R1+", "kink_pos", "unknot"),
    ("R1-", "kink_neg", "unknot"),
    ("R2", "r2_unlink", "unlink2"),
    ("R2 split", "r2_hopf", "hopf_unknot"),
    ("R3", "r3_left", "r3_right"),
    ("R3 mixed", "r3_mixed_left", "r3_mixed_right"),
]

# name -> number of components, for the free-rank checks
GORNIK_LINKS = {"unknot": 1, "trefoil": 1, "hopf": 2}
