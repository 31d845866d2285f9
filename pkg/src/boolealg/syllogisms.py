"""The 256 categorical syllogism moods as basic-formula arguments."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .syntax import SENTENCES
from .terms import Argument, BasicFormula

__all__ = ["Mood", "all_moods", "valid_moods", "TRADITIONAL_NAMES", "categorical"]

# (major premiss, minor premiss) as (subject, predicate) pairs per figure
FIGURES = {
    1: (("M", "P"), ("S", "M")),
    2: (("P", "M"), ("S", "M")),
    3: (("M", "P"), ("M", "S")),
    4: (("P", "M"), ("M", "S")),
}

# Names only; validity is always computed.
TRADITIONAL_NAMES = {
    (1, "AAA"): "Barbara", (1, "EAE"): "Celarent", (1, "AII"): "Darii",
    (1, "EIO"): "Ferio", (1, "AAI"): "Barbari", (1, "EAO"): "Celaront",
    (2, "EAE"): "Cesare", (2, "AEE"): "Camestres", (2, "EIO"): "Festino",
    (2, "AOO"): "Baroco", (2, "EAO"): "Cesaro", (2, "AEO"): "Camestros",
    (3, "IAI"): "Disamis", (3, "AII"): "Datisi", (3, "OAO"): "Bocardo",
    (3, "EIO"): "Ferison", (3, "AAI"): "Darapti", (3, "EAO"): "Felapton",
    (4, "AEE"): "Calemes", (4, "IAI"): "Dimatis", (4, "EIO"): "Fresison",
    (4, "AAI"): "Bamalip", (4, "AEO"): "Calemos", (4, "EAO"): "Fesapo",
}

_FORMS = {s.name: s for s in SENTENCES if s.name in "AEIO"}


def categorical(form: str, subject: str, predicate: str) -> BasicFormula:
    return _FORMS[form].build(subject, predicate)


@dataclass(frozen=True)
class Mood:
    figure: int
    forms: str  # major, minor, conclusion, e.g. "AAA"

    @property
    def name(self) -> str | None:
        return TRADITIONAL_NAMES.get((self.figure, self.forms))

    @property
    def label(self) -> str:
        return f"{self.forms}-{self.figure}"

    def sentences(self) -> list[str]:
        (ms, mp), (ns, np_) = FIGURES[self.figure]
        pairs = [(ms, mp), (ns, np_), ("S", "P")]
        return [_FORMS[f].template.format(*sp) for f, sp in zip(self.forms, pairs)]

    def argument(self) -> Argument:
        major, minor = FIGURES[self.figure]
        return Argument(
            [categorical(self.forms[0], *major), categorical(self.forms[1], *minor)],
            categorical(self.forms[2], "S", "P"))


def all_moods() -> list[Mood]:
    return [Mood(fig, "".join(f))
            for fig in (1, 2, 3, 4)
            for f in itertools.product("AEIO", repeat=3)]


def valid_moods(decide: Callable[[Argument], bool]) -> list[Mood]:
    return [m for m in all_moods() if decide(m.argument())]
