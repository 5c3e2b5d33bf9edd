"""Finite integer linear combinations of words, with canonical rendering."""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from .words import Word, word_to_mzv


class LinComb:
    """A finite map word -> integer coefficient; zero coefficients are dropped.

    Instances are immutable value objects: arithmetic returns new objects and
    iteration always follows the canonical term order (length, then lex with
    y before x).
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[Word | str, int] | Iterable[tuple[Word | str, int]] | None = None,
    ):
        data: dict[Word, int] = {}
        if terms is not None:
            pairs = terms.items() if isinstance(terms, Mapping) else terms
            for word, coeff in pairs:
                if not isinstance(word, Word):
                    word = Word(word)
                if not isinstance(coeff, int):
                    raise TypeError(f"coefficients must be int, got {type(coeff).__name__}")
                total = data.get(word, 0) + coeff
                if total:
                    data[word] = total
                elif word in data:
                    del data[word]
        self._terms = data

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def term(cls, word: Word | str, coeff: int = 1) -> "LinComb":
        return cls([(word, coeff)])

    def items(self) -> list[tuple[Word, int]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def words(self) -> list[Word]:
        return [w for w, _ in self.items()]

    def coefficient(self, word: Word | str) -> int:
        if not isinstance(word, Word):
            word = Word(word)
        return self._terms.get(word, 0)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        return NotImplemented

    __hash__ = None  # mutable-looking container semantics; not hashable

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        data = dict(self._terms)
        for word, coeff in other._terms.items():
            total = data.get(word, 0) + coeff
            if total:
                data[word] = total
            elif word in data:
                del data[word]
        out = LinComb()
        out._terms = data
        return out

    def __neg__(self) -> "LinComb":
        return self * -1

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: int) -> "LinComb":
        if not isinstance(scalar, int):
            return NotImplemented
        out = LinComb()
        if scalar:
            out._terms = {w: c * scalar for w, c in self._terms.items()}
        return out

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"LinComb({self.render()!r})"

    def all_admissible(self) -> bool:
        return all(w.is_admissible for w in self._terms)

    def render(self, fmt: str = "plain", *, zeta: bool | None = None) -> str:
        """Deterministic rendering in 'plain', 'latex' or 'json' form.

        In latex form, zeta notation is used when every word is admissible
        (override with the explicit flag).
        """
        if fmt == "plain":
            return self._render_plain()
        if fmt == "latex":
            if zeta is None:
                zeta = self.all_admissible()
            return self._render_latex(zeta)
        if fmt == "json":
            return json.dumps(self.to_json_obj())
        raise ValueError(f"unknown format {fmt!r}")

    def _render_plain(self) -> str:
        items = self.items()
        if not items:
            return "0"
        parts = []
        for word, coeff in items:
            mag = abs(coeff)
            body = str(word) if mag == 1 else f"{mag}*{word}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def _render_latex(self, zeta: bool) -> str:
        items = self.items()
        if not items:
            return "0"
        out = []
        for word, coeff in items:
            if zeta:
                body = (
                    "1"
                    if word.is_empty
                    else "\\zeta(" + ",".join(str(k) for k in word_to_mzv(word)) + ")"
                )
            else:
                body = _latex_word(word)
            mag = abs(coeff)
            if body == "1":
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}{body}"
            if not out:
                out.append(text if coeff > 0 else f"-{text}")
            else:
                out.append(("+" if coeff > 0 else "-") + text)
        return "".join(out)

    def to_json_obj(self) -> dict:
        """Coefficients as decimal strings: they can exceed 64 bits."""
        return {
            "terms": [{"word": str(w), "coeff": str(c)} for w, c in self.items()]
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "LinComb":
        from .words import parse_word

        return cls([(parse_word(t["word"]), int(t["coeff"])) for t in obj["terms"]])


def _latex_word(word: Word) -> str:
    if word.is_empty:
        return "1"
    import itertools

    parts = []
    for ch, run in itertools.groupby(word.text):
        n = sum(1 for _ in run)
        parts.append(ch if n == 1 else f"{ch}^{{{n}}}")
    return "".join(parts)
