"""Group models with exact word arithmetic, normal forms and ball enumeration.

Four model kinds are supported:

* FreeGroup(k): normal form is the freely reduced word.
* FreeAbelian(n): normal form is x1^e1 ... xn^en (sorted exponent blocks).
* KleinBottle: presentation <a, b | a b a^-1 = b^-1>, normal form b^n a^m,
  obtained by pushing every a past the b's with the rewrite a b^e -> b^-e a.
* DirectProduct(m1, m2): disjoint-union alphabet, normal form is the
  concatenation of the factor normal forms, so |(g, h)| = |g| + |h|.

Every element is stored by its canonical word, which makes elements usable
as deterministic dictionary keys.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapExceeded, ModelMismatch
from .words import (
    EMPTY,
    GeneratorAlphabet,
    Word,
    concat,
    format_word,
    free_reduce,
    inverse_word,
    parse_word,
    shortlex_key,
)

DEFAULT_CAP = 10**7

# Traversal order for ball BFS; "reverse" flips letter expansion only, the
# returned members must be identical either way.
TRAVERSALS = ("forward", "reverse")


@dataclass(frozen=True)
class Element:
    """A group element held by its canonical (normal form) word."""

    model: "GroupModel"
    word: Word

    def __hash__(self) -> int:
        # hot path in ball BFS; the word alone is a valid hash (equality
        # still compares the model)
        return hash(self.word)

    def __mul__(self, other: "Element") -> "Element":
        return self.model.multiply(self, other)

    def inverse(self) -> "Element":
        return self.model.invert(self)

    def is_identity(self) -> bool:
        return not self.word

    def sort_key(self) -> tuple:
        return shortlex_key(self.word, self.model.alphabet)

    @property
    def length(self) -> int:
        """Word-metric distance from the identity."""
        return self.model.word_length(self.word)

    def __str__(self) -> str:
        return format_word(self.word)

    def __repr__(self) -> str:
        return f"<{format_word(self.word)}>"


@dataclass(frozen=True)
class Ball:
    """All elements within a given word-metric radius of the center."""

    center: Element
    radius: int
    members: dict[Element, int] = field(compare=False)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: Element) -> bool:
        return g in self.members

    def __iter__(self):
        return iter(self.sorted_elements())

    def sorted_elements(self) -> list[Element]:
        return sorted(self.members, key=Element.sort_key)

    def sphere(self, distance: int) -> list[Element]:
        return [g for g in self.sorted_elements() if self.members[g] == distance]

    def translated(self, g: Element) -> "Ball":
        """The ball g * B: left translation preserves word distances."""
        moved = {g * h: d for h, d in self.members.items()}
        return Ball(center=g * self.center, radius=self.radius, members=moved)


class GroupModel:
    """Shared machinery; concrete kinds fill in the normal form."""

    # concrete subclasses define: alphabet, kind, normal_form_word, descriptor

    @property
    def alphabet(self) -> GeneratorAlphabet:
        raise NotImplementedError

    def normal_form_word(self, word: Word) -> Word:
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError

    # -- elements ---------------------------------------------------------

    def normal_form(self, word: Word) -> Element:
        self.alphabet.check_word(word)
        return Element(self, self.normal_form_word(word))

    def element(self, spec: "Word | str | Element") -> Element:
        if isinstance(spec, Element):
            if spec.model != self:
                raise ModelMismatch(f"element {spec} belongs to a different model")
            return spec
        if isinstance(spec, str):
            spec = parse_word(spec, self.alphabet)
        return self.normal_form(tuple(spec))

    def identity(self) -> Element:
        return Element(self, EMPTY)

    def generator(self, index: int) -> Element:
        """The index-th generator (1-based) as an element."""
        return self.normal_form((index,))

    def multiply(self, g: Element, h: Element) -> Element:
        if g.model != self or h.model != self:
            raise ModelMismatch("operands belong to different models")
        return Element(self, self.normal_form_word(concat(g.word, h.word)))

    def invert(self, g: Element) -> Element:
        if g.model != self:
            raise ModelMismatch("operand belongs to a different model")
        return Element(self, self.normal_form_word(inverse_word(g.word)))

    # -- metric -----------------------------------------------------------

    def word_length(self, word: Word) -> int:
        """|w| in the word metric: length of the canonical word by default."""
        return len(self.normal_form_word(word))

    def distance(self, g: Element, h: Element) -> int:
        """d(g, h) = |g^-1 h|."""
        if g.model != self or h.model != self:
            raise ModelMismatch("operands belong to different models")
        return self.word_length(concat(inverse_word(g.word), h.word))

    # -- enumeration ------------------------------------------------------

    def ball(self, radius: int, cap: int | None = None,
             traversal: str = "forward") -> Ball:
        """Breadth-first ball around the identity with exact distances."""
        if radius < 0:
            raise ValueError("radius must be non-negative")
        if traversal not in TRAVERSALS:
            raise ValueError(f"traversal must be one of {TRAVERSALS}")
        cap = DEFAULT_CAP if cap is None else cap
        estimate = len(self.alphabet) ** radius
        if estimate > cap:
            raise CapExceeded(estimate, cap, what=f"ball of radius {radius}")
        letters = self.alphabet.letters
        if traversal == "reverse":
            letters = tuple(reversed(letters))
        gens = [self.normal_form((l,)) for l in letters]
        identity = self.identity()
        members: dict[Element, int] = {identity: 0}
        frontier = [identity]
        for depth in range(1, radius + 1):
            extension = []
            for g in frontier:
                for x in gens:
                    h = g * x
                    if h not in members:
                        members[h] = depth
                        extension.append(h)
            frontier = extension
        return Ball(center=identity, radius=radius, members=members)


@dataclass(frozen=True)
class FreeGroup(GroupModel):
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("free group rank must be >= 1")

    @property
    def alphabet(self) -> GeneratorAlphabet:
        return GeneratorAlphabet(self.rank)

    def normal_form_word(self, word: Word) -> Word:
        return free_reduce(word)

    def descriptor(self) -> dict:
        return {"kind": "free", "rank": self.rank}


@dataclass(frozen=True)
class FreeAbelian(GroupModel):
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("free abelian rank must be >= 1")

    @property
    def alphabet(self) -> GeneratorAlphabet:
        return GeneratorAlphabet(self.rank)

    def normal_form_word(self, word: Word) -> Word:
        exponents = self.exponents_of_word(word)
        out: list[int] = []
        for i, e in enumerate(exponents, start=1):
            out.extend([i if e > 0 else -i] * abs(e))
        return tuple(out)

    def exponents_of_word(self, word: Word) -> tuple[int, ...]:
        exps = [0] * self.rank
        for letter in word:
            exps[abs(letter) - 1] += 1 if letter > 0 else -1
        return tuple(exps)

    def exponents(self, g: Element) -> tuple[int, ...]:
        return self.exponents_of_word(g.word)

    def from_exponents(self, exps) -> Element:
        if len(exps) != self.rank:
            raise ValueError(f"expected {self.rank} exponents, got {len(exps)}")
        word: list[int] = []
        for i, e in enumerate(exps, start=1):
            word.extend([i if e > 0 else -i] * abs(e))
        return Element(self, tuple(word))

    def descriptor(self) -> dict:
        return {"kind": "abelian", "rank": self.rank}


# Klein bottle ball cache: all KleinBottle() instances are equal, so one
# shared growing ball serves every distance query.
_KLEIN_BALLS: dict["KleinBottle", Ball] = {}


@dataclass(frozen=True)
class KleinBottle(GroupModel):
    """<a, b | a b a^-1 = b^-1> with a = letter 1 and b = letter 2."""

    @property
    def alphabet(self) -> GeneratorAlphabet:
        return GeneratorAlphabet(2)

    def normal_form_word(self, word: Word) -> Word:
        n, m = self.pair_of_word(word)
        out: list[int] = []
        out.extend([2 if n > 0 else -2] * abs(n))
        out.extend([1 if m > 0 else -1] * abs(m))
        return tuple(out)

    def pair_of_word(self, word: Word) -> tuple[int, int]:
        """(n, m) with the element equal to b^n a^m."""
        n = m = 0
        for letter in word:
            if abs(letter) == 1:
                m += 1 if letter > 0 else -1
            else:
                # b^n a^m * b^e = b^(n + (-1)^m e) a^m
                e = 1 if letter > 0 else -1
                n += e if m % 2 == 0 else -e
        return n, m

    def pair(self, g: Element) -> tuple[int, int]:
        return self.pair_of_word(g.word)

    def word_length(self, word: Word) -> int:
        # BFS depth is the source of truth here, not a closed form; the
        # canonical length bounds the search radius.
        target = self.normal_form_word(word)
        if not target:
            return 0
        bound = len(target)
        cached = _KLEIN_BALLS.get(self)
        if cached is None or cached.radius < bound:
            cached = self.ball(bound)
            _KLEIN_BALLS[self] = cached
        return cached.members[Element(self, target)]

    def descriptor(self) -> dict:
        return {"kind": "klein"}


@dataclass(frozen=True)
class DirectProduct(GroupModel):
    """A x B over the disjoint union of the factor alphabets."""

    factors: tuple[GroupModel, GroupModel]

    def __post_init__(self):
        if len(self.factors) != 2:
            raise ValueError("DirectProduct takes exactly two factors")

    @property
    def alphabet(self) -> GeneratorAlphabet:
        return GeneratorAlphabet(self.factors[0].alphabet.rank
                                 + self.factors[1].alphabet.rank)

    def split_word(self, word: Word) -> tuple[Word, Word]:
        """Project onto the factors (a homomorphism since factors commute)."""
        shift = self.factors[0].alphabet.rank
        first: list[int] = []
        second: list[int] = []
        for letter in word:
            if abs(letter) <= shift:
                first.append(letter)
            else:
                second.append(letter - shift if letter > 0 else letter + shift)
        return tuple(first), tuple(second)

    def join_words(self, first: Word, second: Word) -> Word:
        shift = self.factors[0].alphabet.rank
        shifted = tuple(l + shift if l > 0 else l - shift for l in second)
        return concat(first, shifted)

    def normal_form_word(self, word: Word) -> Word:
        first, second = self.split_word(word)
        return self.join_words(self.factors[0].normal_form_word(first),
                               self.factors[1].normal_form_word(second))

    def word_length(self, word: Word) -> int:
        first, second = self.split_word(word)
        return (self.factors[0].word_length(first)
                + self.factors[1].word_length(second))

    def project(self, g: Element, index: int) -> Element:
        part = self.split_word(g.word)[index]
        return self.factors[index].normal_form(part)

    def embed(self, g: Element, index: int) -> Element:
        """The factor element as (g, 1) or (1, g) in the product."""
        if g.model != self.factors[index]:
            raise ModelMismatch("element does not belong to the requested factor")
        parts = [EMPTY, EMPTY]
        parts[index] = g.word
        return Element(self, self.join_words(parts[0], parts[1]))

    def pair(self, first: Element, second: Element) -> Element:
        if first.model != self.factors[0] or second.model != self.factors[1]:
            raise ModelMismatch("pair components do not match the factor models")
        return Element(self, self.join_words(first.word, second.word))

    def descriptor(self) -> dict:
        return {"kind": "product",
                "factors": [f.descriptor() for f in self.factors]}


def model_from_descriptor(data: dict) -> GroupModel:
    """Parse the JSON group descriptor (see module docs)."""
    if not isinstance(data, dict) or "kind" not in data:
        raise ValueError(f"bad group descriptor: {data!r}")
    kind = data["kind"]
    if kind == "free":
        return FreeGroup(int(data["rank"]))
    if kind == "abelian":
        return FreeAbelian(int(data["rank"]))
    if kind == "klein":
        return KleinBottle()
    if kind == "product":
        factors = data.get("factors")
        if not isinstance(factors, list) or len(factors) != 2:
            raise ValueError("product descriptor needs exactly two factors")
        return DirectProduct((model_from_descriptor(factors[0]),
                              model_from_descriptor(factors[1])))
    raise ValueError(f"unknown group kind {kind!r}")
