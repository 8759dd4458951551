"""Deterministic finite automata over group generators: candidate regular cones.

A ConeDfa reads words over the doubled alphabet (lowercase generator,
uppercase inverse) with a total transition function. The evaluation set
ev(L) of its language is a candidate positive cone; regular sets are always
(2|S|+1)-connected in the Cayley graph, interpolated through shortest
accepting completions of each prefix.

Membership of a group element in ev(L) is only semi-decidable by length
enumeration, so cone verification reports PASS / FAIL / UNKNOWN against a
word-length cutoff.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .errors import CapExceeded, NotAccepted
from .geometry import RPath
from .groups import Element, GroupModel
from .words import GeneratorAlphabet, Word, concat, format_word, letter_char

DEFAULT_NODE_CAP = 2_000_000
DEFAULT_WORD_CAP = 500_000


@dataclass(frozen=True)
class ConeDfa:
    """A total deterministic automaton (states, accepting, initial, alphabet, tau)."""

    states: tuple[str, ...]
    initial: str
    accepting: frozenset[str]
    alphabet: GeneratorAlphabet
    transitions: dict[str, dict[str, str]]

    def __post_init__(self):
        if not self.states:
            raise ValueError("a DFA needs at least one state")
        if len(set(self.states)) != len(self.states):
            raise ValueError("duplicate state names")
        if self.initial not in self.states:
            raise ValueError(f"initial state {self.initial!r} unknown")
        if not self.accepting <= set(self.states):
            raise ValueError("accepting states must be states")
        chars = [letter_char(l) for l in self.alphabet.letters]
        for state in self.states:
            row = self.transitions.get(state)
            if row is None:
                raise ValueError(f"missing transition row for state {state!r}")
            for ch in chars:
                if ch not in row:
                    raise ValueError(f"transition missing for ({state!r}, {ch!r})")
                if row[ch] not in self.states:
                    raise ValueError(f"transition target {row[ch]!r} unknown")

    def step(self, state: str, letter: int) -> str:
        self.alphabet.check_letter(letter)
        return self.transitions[state][letter_char(letter)]

    def size(self) -> int:
        return len(self.states)

    def to_json(self) -> dict:
        return {
            "states": list(self.states),
            "initial": self.initial,
            "accepting": sorted(self.accepting),
            "alphabet": "".join(chr(ord("a") + i)
                                for i in range(self.alphabet.rank)),
            "transitions": {s: dict(sorted(row.items()))
                            for s, row in sorted(self.transitions.items())},
        }

    @staticmethod
    def from_json(data: dict) -> "ConeDfa":
        alphabet = GeneratorAlphabet(len(data["alphabet"]))
        expected = [chr(ord("a") + i) for i in range(alphabet.rank)]
        if list(data["alphabet"]) != expected:
            raise ValueError(f"alphabet must be {''.join(expected)!r}")
        return ConeDfa(
            states=tuple(data["states"]),
            initial=data["initial"],
            accepting=frozenset(data["accepting"]),
            alphabet=alphabet,
            transitions={s: dict(row)
                         for s, row in data["transitions"].items()},
        )


def dfa_run(dfa: ConeDfa, word: Word) -> tuple[str, bool]:
    """Fold the transition function left to right; accepted iff final state is."""
    state = dfa.initial
    for letter in word:
        state = dfa.step(state, letter)
    return state, state in dfa.accepting


def prefix_completion(dfa: ConeDfa, state: str) -> Word | None:
    """Shortest word from the state to acceptance, ties by the letter order.

    Returns None when no accepting state is reachable. A shortest completion
    never repeats a state, so its length is at most |states| - 1.
    """
    if state not in dfa.states:
        raise ValueError(f"unknown state {state!r}")
    if state in dfa.accepting:
        return ()
    parents: dict[str, tuple[str, int]] = {state: None}
    queue = deque([state])
    while queue:
        current = queue.popleft()
        for letter in dfa.alphabet.letters:
            target = dfa.step(current, letter)
            if target in parents:
                continue
            parents[target] = (current, letter)
            if target in dfa.accepting:
                out: list[int] = []
                back = target
                while parents[back] is not None:
                    back, letter_taken = parents[back]
                    out.append(letter_taken)
                word = tuple(reversed(out))
                assert len(word) <= dfa.size() - 1
                return word
            queue.append(target)
    return None


def connectivity_radius(dfa: ConeDfa) -> int:
    """The constructive connectivity constant 2|S| + 1 for ev(L)."""
    return 2 * dfa.size() + 1


def regular_interpolation(dfa: ConeDfa, model: GroupModel,
                          word: Word) -> RPath:
    """Interpolate an accepted word through ev(L) with gaps <= 2|S| + 1.

    Each prefix is completed to an accepted word by a shortest completion
    from its state; the evaluations of those completions are at most |S| - 1
    away from the prefix evaluation, so consecutive interpolation points are
    within 2|S| + 1 of each other.
    """
    state, accepted = dfa_run(dfa, word)
    if not accepted:
        raise NotAccepted(f"word {format_word(word)} is rejected")
    bound = connectivity_radius(dfa)
    points = [model.identity()]
    current = dfa.initial
    consumed: list[int] = []
    for i in range(len(word) + 1):
        completion = prefix_completion(dfa, current)
        assert completion is not None  # accepted word: acceptance reachable
        witness = concat(tuple(consumed), completion)
        _, ok = dfa_run(dfa, witness)
        assert ok, "completion must re-accept"
        point = model.normal_form(witness)
        if point != points[-1]:
            points.append(point)
        if i < len(word):
            consumed.append(word[i])
            current = dfa.step(current, word[i])
    path = RPath(tuple(points), bound)
    path.check()
    return path


@dataclass(frozen=True)
class LanguageSample:
    """All accepted words up to a length, with their evaluations."""

    max_length: int
    words: tuple[Word, ...]
    evaluations: dict[Element, tuple[Word, ...]]

    def elements(self) -> set[Element]:
        return set(self.evaluations)


def _live_states(dfa: ConeDfa) -> set[str]:
    """States from which some accepting state is reachable."""
    live = set(dfa.accepting)
    changed = True
    while changed:
        changed = False
        for state in dfa.states:
            if state in live:
                continue
            for letter in dfa.alphabet.letters:
                if dfa.step(state, letter) in live:
                    live.add(state)
                    changed = True
                    break
    return live


def language_sample(dfa: ConeDfa, model: GroupModel, max_length: int,
                    word_cap: int | None = None) -> LanguageSample:
    """Enumerate the accepted words of length <= max_length (dead-state pruned)."""
    word_cap = DEFAULT_WORD_CAP if word_cap is None else word_cap
    live = _live_states(dfa)
    words: list[Word] = []
    evaluations: dict[Element, list[Word]] = {}
    frontier: list[tuple[Word, str]] = [((), dfa.initial)]
    if dfa.initial in dfa.accepting:
        words.append(())
        evaluations.setdefault(model.identity(), []).append(())
    for _ in range(max_length):
        extension: list[tuple[Word, str]] = []
        for word, state in frontier:
            for letter in dfa.alphabet.letters:
                target = dfa.step(state, letter)
                if target not in live:
                    continue
                grown = word + (letter,)
                if target in dfa.accepting:
                    words.append(grown)
                    ev = model.normal_form(grown)
                    evaluations.setdefault(ev, []).append(grown)
                    if len(words) > word_cap:
                        raise CapExceeded(len(words), word_cap,
                                          what="language enumeration")
                extension.append((grown, target))
        frontier = extension
    return LanguageSample(
        max_length=max_length,
        words=tuple(words),
        evaluations={e: tuple(ws) for e, ws in evaluations.items()},
    )


@dataclass(frozen=True)
class ConeDfaReport:
    verdict: str  # "PASS" | "FAIL" | "UNKNOWN"
    radius: int
    max_length: int
    in_ball: tuple[Element, ...]
    unresolved: tuple[Element, ...]
    counterexamples: tuple
    unresolved_products: tuple

    def in_set(self) -> set[Element]:
        return set(self.in_ball)

    def summary(self) -> str:
        return (f"cone-dfa R={self.radius} Lmax={self.max_length}: {self.verdict} "
                f"({len(self.in_ball)} in, {len(self.unresolved)} unresolved, "
                f"{len(self.counterexamples)} violations)")


def reachable_evaluations(dfa: ConeDfa, model: GroupModel, max_length: int,
                          node_cap: int | None = None,
                          traversal: str = "forward") -> set[Element]:
    """Elements of ev(L) hit by accepted words of length <= max_length.

    Runs a BFS over (state, element) pairs, which classifies exactly the
    same elements as enumerating the language but without the word blowup.
    Pairs whose state cannot reach acceptance are pruned: they contribute
    nothing to ev(L).
    """
    node_cap = DEFAULT_NODE_CAP if node_cap is None else node_cap
    letters = dfa.alphabet.letters
    if traversal == "reverse":
        letters = tuple(reversed(letters))
    steps = [(letter_char(letter), model.normal_form((letter,)))
             for letter in letters]
    live = _live_states(dfa)
    reached: set[Element] = set()
    if dfa.initial not in live:
        return reached
    start = (dfa.initial, model.identity())
    visited = {start}
    frontier = [start]
    if dfa.initial in dfa.accepting:
        reached.add(model.identity())
    for _ in range(max_length):
        extension = []
        for state, g in frontier:
            row = dfa.transitions[state]
            for ch, gen in steps:
                target = row[ch]
                if target not in live:
                    continue
                h = g * gen
                pair = (target, h)
                if pair in visited:
                    continue
                visited.add(pair)
                if len(visited) > node_cap:
                    raise CapExceeded(len(visited), node_cap,
                                      what="state-element reachability")
                if target in dfa.accepting:
                    reached.add(h)
                extension.append(pair)
        frontier = extension
    return reached


def verify_cone_dfa(dfa: ConeDfa, model: GroupModel, radius: int,
                    max_length: int | None = None,
                    cap: int | None = None, node_cap: int | None = None,
                    traversal: str = "forward") -> ConeDfaReport:
    """Check ev(L) against the cone axioms on B(1, R), up to the length cutoff.

    FAIL on a hard violation: a word evaluating to the identity, both g and
    g^-1 reached, or a product of two reached elements whose inverse is
    reached. UNKNOWN when some element of the ball (or some product) is not
    classified by length max_length; PASS otherwise. Default cutoff 4R.
    """
    if max_length is None:
        max_length = 4 * radius
    ball = model.ball(radius, cap=cap, traversal=traversal)
    reached = reachable_evaluations(dfa, model, max_length,
                                    node_cap=node_cap, traversal=traversal)

    counterexamples = []
    identity = model.identity()
    if identity in reached:
        counterexamples.append(("identity-in", str(identity)))

    in_ball = [g for g in ball.sorted_elements()
               if not g.is_identity() and g in reached]
    unresolved = []
    seen: set[Element] = set()
    for g in ball.sorted_elements():
        if g.is_identity() or g in seen:
            continue
        inv = g.inverse()
        seen.add(g)
        seen.add(inv)
        gin, iin = g in reached, inv in reached
        if gin and iin:
            counterexamples.append(("both-in", str(g), str(inv)))
        elif not gin and not iin:
            unresolved.append(g)

    unresolved_products = []
    for g in in_ball:
        for h in in_ball:
            product = g * h
            if product not in ball.members:
                continue
            if product.is_identity():
                continue  # already reported as both-in
            if product.inverse() in reached and product not in reached:
                counterexamples.append(
                    ("product-negative", str(g), str(h), str(product)))
            elif product not in reached:
                unresolved_products.append((str(g), str(h), str(product)))

    if counterexamples:
        verdict = "FAIL"
    elif unresolved or unresolved_products:
        verdict = "UNKNOWN"
    else:
        verdict = "PASS"
    return ConeDfaReport(
        verdict=verdict,
        radius=radius,
        max_length=max_length,
        in_ball=tuple(in_ball),
        unresolved=tuple(unresolved),
        counterexamples=tuple(counterexamples),
        unresolved_products=tuple(unresolved_products),
    )


@dataclass(frozen=True)
class QuasigeodesicReport:
    verdict: str  # "PASS" | "FAIL"
    lam: object
    c: object
    max_length: int
    violation: tuple | None = None

    def summary(self) -> str:
        if self.verdict == "PASS":
            return (f"quasigeodesic lambda={self.lam} c={self.c} "
                    f"Lmax={self.max_length}: PASS")
        word, i, j, dist = self.violation
        return (f"quasigeodesic lambda={self.lam} c={self.c}: FAIL at "
                f"word {word} prefixes ({i},{j}), distance {dist}")


def quasigeodesic_check(dfa: ConeDfa, model: GroupModel, lam, c,
                        max_length: int, cap: int | None = None,
                        word_cap: int | None = None) -> QuasigeodesicReport:
    """Check (j - i)/lambda - c <= d(ev(w_i), ev(w_j)) on all accepted words.

    Distances are exact ball-BFS values: the infix w[i:j] evaluates inside
    B(1, max_length), whose distances are precomputed once. lambda and c
    are compared exactly through fractions.
    """
    from fractions import Fraction

    lam = Fraction(lam)
    c = Fraction(c)
    if lam < 1 or c < 0:
        raise ValueError("need lambda >= 1 and c >= 0")
    sample = language_sample(dfa, model, max_length, word_cap=word_cap)
    ball = model.ball(max_length, cap=cap)
    for word in sample.words:
        n = len(word)
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                infix = model.normal_form(word[i:j])
                dist = ball.members[infix]
                if Fraction(j - i, 1) / lam - c > dist:
                    return QuasigeodesicReport(
                        verdict="FAIL", lam=lam, c=c, max_length=max_length,
                        violation=(format_word(word), i, j, dist))
    return QuasigeodesicReport(verdict="PASS", lam=lam, c=c,
                               max_length=max_length)


# -- shipped automata ----------------------------------------------------------

def z2_lex_cone_dfa() -> ConeDfa:
    """The lexicographic cone on Z^2 as normal-form words x^m y^n.

    Accepted: a positive x-run optionally followed by a one-signed y-run,
    or a pure positive y-run. This is exactly the hyperplane cone with
    weights (1, 0) and lexicographic tie-break.
    """
    sink = {"a": "sink", "A": "sink", "b": "sink", "B": "sink"}
    return ConeDfa(
        states=("s0", "sx", "sy+", "sy-", "sink"),
        initial="s0",
        accepting=frozenset({"sx", "sy+", "sy-"}),
        alphabet=GeneratorAlphabet(2),
        transitions={
            "s0": {"a": "sx", "A": "sink", "b": "sy+", "B": "sink"},
            "sx": {"a": "sx", "A": "sink", "b": "sy+", "B": "sy-"},
            "sy+": {"a": "sink", "A": "sink", "b": "sy+", "B": "sink"},
            "sy-": {"a": "sink", "A": "sink", "b": "sink", "B": "sy-"},
            "sink": dict(sink),
        },
    )


def klein_cone_dfa() -> ConeDfa:
    """The Klein bottle cone as normal-form words b^n a^m.

    Accepted: a one-signed b-run followed by a positive a-run, or a pure
    positive b-run; these are exactly the normal forms of the semigroup
    generated by a and b.
    """
    sink = {"a": "sink", "A": "sink", "b": "sink", "B": "sink"}
    return ConeDfa(
        states=("s0", "sb+", "sb-", "sa", "sink"),
        initial="s0",
        accepting=frozenset({"sb+", "sa"}),
        alphabet=GeneratorAlphabet(2),
        transitions={
            "s0": {"a": "sa", "A": "sink", "b": "sb+", "B": "sb-"},
            "sb+": {"a": "sa", "A": "sink", "b": "sb+", "B": "sink"},
            "sb-": {"a": "sa", "A": "sink", "b": "sink", "B": "sb-"},
            "sa": {"a": "sa", "A": "sink", "b": "sink", "B": "sink"},
            "sink": dict(sink),
        },
    )


def random_dfa(rng: random.Random, max_states: int = 4,
               rank: int = 2) -> ConeDfa:
    """A uniformly random total DFA over the doubled alphabet."""
    n = rng.randint(1, max_states)
    states = tuple(f"q{i}" for i in range(n))
    alphabet = GeneratorAlphabet(rank)
    chars = [letter_char(l) for l in alphabet.letters]
    transitions = {s: {ch: states[rng.randrange(n)] for ch in chars}
                   for s in states}
    accepting = frozenset(s for s in states if rng.random() < 0.5)
    return ConeDfa(states=states, initial=states[0], accepting=accepting,
                   alphabet=alphabet, transitions=transitions)
