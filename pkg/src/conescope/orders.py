"""Computable left-order oracles: total sign functions realizing positive cones.

An OrderOracle wraps a sign function Element -> {Positive, Negative,
Identity} for a fixed group model. Shipped constructors:

* magnus_order: bi-invariant order on free groups via the power-series
  expansion compared in deglex monomial order.
* hyperplane_order: free-abelian cones from exact p + q*sqrt(2) weights,
  with lexicographic tie-break on the lattice points of the hyperplane.
* klein_order: the semigroup cone generated by a and b in the Klein
  bottle group (positive iff m > 0, or m = 0 and n > 0, for b^n a^m).
* lex_pair_sign: lexicographic combination along the factors of a direct
  product; when the leading factor is a copy of Z the oracle records the
  declared cofinal central generator.

verify_order_axioms checks the cone axioms exhaustively on a ball.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

from .errors import AllZeroWeights, ModelMismatch
from .groups import (
    Ball,
    DirectProduct,
    Element,
    FreeAbelian,
    FreeGroup,
    GroupModel,
    KleinBottle,
)
from .magnus import leading_term
from .quadratic import QuadraticValue, ZERO, as_quadratic
from .words import Word


class Sign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    IDENTITY = "identity"

    def negated(self) -> "Sign":
        if self is Sign.POSITIVE:
            return Sign.NEGATIVE
        if self is Sign.NEGATIVE:
            return Sign.POSITIVE
        return Sign.IDENTITY


def _sign_of_int(value: int) -> Sign:
    if value > 0:
        return Sign.POSITIVE
    if value < 0:
        return Sign.NEGATIVE
    return Sign.IDENTITY


@dataclass
class OrderOracle:
    """A total sign function on a group model, hence a positive cone."""

    name: str
    model: GroupModel
    sign_fn: Callable[[Element], Sign]
    declared_cofinal_central: Element | None = None
    _cache: dict[Word, Sign] = field(default_factory=dict, repr=False)

    def sign(self, g: Element) -> Sign:
        if g.model != self.model:
            raise ModelMismatch(f"element {g} does not live in {self.name}'s model")
        cached = self._cache.get(g.word)
        if cached is None:
            cached = self.sign_fn(g)
            self._cache[g.word] = cached
        return cached

    def is_positive(self, g: Element) -> bool:
        return self.sign(g) is Sign.POSITIVE

    def is_negative(self, g: Element) -> bool:
        return self.sign(g) is Sign.NEGATIVE

    def precedes(self, g: Element, h: Element) -> bool:
        """g < h in the left-invariant order, i.e. g^-1 h is positive."""
        return self.is_positive(g.inverse() * h)

    def positives(self, ball: Ball) -> list[Element]:
        return [g for g in ball.sorted_elements() if self.is_positive(g)]


# -- free groups: Magnus order ---------------------------------------------

def magnus_sign(word: Word) -> Sign:
    """Sign of a free-group word under the deglex power-series order."""
    term = leading_term(word)
    if term is None:
        return Sign.IDENTITY
    return _sign_of_int(term[1])


def magnus_order(model: FreeGroup, name: str = "magnus") -> OrderOracle:
    if not isinstance(model, FreeGroup):
        raise ModelMismatch("the Magnus order lives on free groups")
    return OrderOracle(name=name, model=model,
                       sign_fn=lambda g: magnus_sign(g.word))


# -- free abelian groups: hyperplane orders --------------------------------

def hyperplane_sign(vector, weights) -> Sign:
    """Sign of sum(v_i * w_i); exact ties fall back to lex on the vector."""
    weights = [as_quadratic(w) for w in weights]
    if len(weights) != len(vector):
        raise ValueError(f"{len(vector)} coordinates but {len(weights)} weights")
    if all(w.is_zero() for w in weights):
        raise AllZeroWeights("hyperplane weights are all zero")
    total = ZERO
    for v, w in zip(vector, weights):
        total = total + w.scaled(v)
    value_sign = total.sign()
    if value_sign != 0:
        return _sign_of_int(value_sign)
    for v in vector:
        if v != 0:
            return _sign_of_int(v)
    return Sign.IDENTITY


def hyperplane_order(model: FreeAbelian, weights,
                     name: str = "hyperplane") -> OrderOracle:
    if not isinstance(model, FreeAbelian):
        raise ModelMismatch("hyperplane orders live on free abelian groups")
    fixed = tuple(as_quadratic(w) for w in weights)
    if len(fixed) != model.rank:
        raise ValueError(f"need {model.rank} weights, got {len(fixed)}")
    oracle = OrderOracle(
        name=name, model=model,
        sign_fn=lambda g: hyperplane_sign(model.exponents(g), fixed))
    oracle.weights = fixed
    return oracle


def sqrt2_weights(rank: int = 2) -> list[QuadraticValue]:
    """The irrational weight row (1, sqrt2, sqrt2^...) used in the demos."""
    if rank == 1:
        return [QuadraticValue(1, 0)]
    if rank == 2:
        return [QuadraticValue(1, 0), QuadraticValue(0, 1)]
    raise ValueError("sqrt2 weights are provided for rank <= 2")


# -- Klein bottle group -----------------------------------------------------

def klein_cone_sign(g: Element) -> Sign:
    """The cone generated by a and b: positive iff m > 0 or (m = 0, n > 0)."""
    if not isinstance(g.model, KleinBottle):
        raise ModelMismatch("klein_cone_sign expects a Klein bottle element")
    n, m = g.model.pair(g)
    if m != 0:
        return _sign_of_int(m)
    return _sign_of_int(n)


def klein_order(model: KleinBottle | None = None,
                name: str = "klein-cone") -> OrderOracle:
    model = model or KleinBottle()
    return OrderOracle(name=name, model=model, sign_fn=klein_cone_sign)


# -- direct products: lexicographic pairs -----------------------------------

@dataclass
class LexPairOracle(OrderOracle):
    """Lexicographic order on a direct product; leading factor decides."""

    leading: OrderOracle | None = None
    trailing: OrderOracle | None = None
    leading_factor: int = 0

    def factor_oracle(self, index: int) -> OrderOracle:
        return self.leading if index == self.leading_factor else self.trailing


def lex_pair_sign(leading: OrderOracle, trailing: OrderOracle,
                  leading_factor: int = 0, name: str | None = None) -> LexPairOracle:
    """Combine factor oracles into the lexicographic order on A x B.

    leading_factor says which product coordinate the leading oracle reads
    (0 for the first factor). When the leading factor model is Z, its
    generator is central and cofinal in the product order, and the oracle
    records it for the cofinal path construction.
    """
    if leading_factor not in (0, 1):
        raise ValueError("leading_factor must be 0 or 1")
    factors = [None, None]
    factors[leading_factor] = leading.model
    factors[1 - leading_factor] = trailing.model
    product = DirectProduct((factors[0], factors[1]))

    def sign_fn(g: Element) -> Sign:
        lead_part = product.project(g, leading_factor)
        lead_sign = leading.sign(lead_part)
        if lead_sign is not Sign.IDENTITY:
            return lead_sign
        return trailing.sign(product.project(g, 1 - leading_factor))

    declared = None
    lead_model = leading.model
    if isinstance(lead_model, FreeAbelian) and lead_model.rank == 1:
        declared = product.embed(lead_model.generator(1), leading_factor)
    return LexPairOracle(
        name=name or f"lex({leading.name},{trailing.name})",
        model=product,
        sign_fn=sign_fn,
        declared_cofinal_central=declared,
        leading=leading,
        trailing=trailing,
        leading_factor=leading_factor,
    )


# -- axiom verification ------------------------------------------------------

@dataclass(frozen=True)
class AxiomReport:
    oracle_name: str
    radius: int
    checked: int
    partition_failures: tuple
    identity_failures: tuple
    closure_failures: tuple

    @property
    def passed(self) -> bool:
        return not (self.partition_failures or self.identity_failures
                    or self.closure_failures)

    def summary(self) -> str:
        verdict = "pass" if self.passed else "fail"
        return (f"axioms[{self.oracle_name}] R={self.radius}: {verdict} "
                f"({self.checked} elements, "
                f"{len(self.partition_failures)} partition, "
                f"{len(self.identity_failures)} identity, "
                f"{len(self.closure_failures)} closure failures)")


def verify_order_axioms(oracle: OrderOracle, radius: int,
                        cap: int | None = None,
                        traversal: str = "forward") -> AxiomReport:
    """Exhaustive cone axioms on B(1, R).

    (i) for g != 1 exactly one of g, g^-1 is positive (and neither is
    labelled identity), (ii) sign(1) = Identity, (iii) positive pairs with
    |gh| <= R have a positive product.
    """
    ball = oracle.model.ball(radius, cap=cap, traversal=traversal)
    partition_failures = []
    identity_failures = []
    closure_failures = []

    signs: dict[Element, Sign] = {}
    for g in ball.sorted_elements():
        signs[g] = oracle.sign(g)

    identity = oracle.model.identity()
    if signs[identity] is not Sign.IDENTITY:
        identity_failures.append((str(identity), signs[identity].value))

    seen: set[Element] = set()
    for g in ball.sorted_elements():
        if g.is_identity() or g in seen:
            continue
        inv = g.inverse()
        seen.add(g)
        seen.add(inv)
        sg, si = signs[g], signs[inv]
        positives = [s for s in (sg, si) if s is Sign.POSITIVE]
        if len(positives) != 1 or Sign.IDENTITY in (sg, si):
            partition_failures.append((str(g), sg.value, str(inv), si.value))

    positives_list = [g for g in ball.sorted_elements()
                      if signs[g] is Sign.POSITIVE]
    for g in positives_list:
        for h in positives_list:
            product = g * h
            if product in ball.members and signs[product] is not Sign.POSITIVE:
                closure_failures.append((str(g), str(h), str(product),
                                         signs[product].value))

    return AxiomReport(
        oracle_name=oracle.name,
        radius=radius,
        checked=len(ball),
        partition_failures=tuple(partition_failures),
        identity_failures=tuple(identity_failures),
        closure_failures=tuple(closure_failures),
    )


# -- descriptors -------------------------------------------------------------

def order_from_descriptor(data: dict, model: GroupModel) -> OrderOracle:
    """Parse the JSON order descriptor against a group model."""
    if not isinstance(data, dict) or "kind" not in data:
        raise ValueError(f"bad order descriptor: {data!r}")
    kind = data["kind"]
    name = data.get("name")
    if kind == "magnus":
        return magnus_order(model, name=name or "magnus")
    if kind == "hyperplane":
        weights = data.get("weights")
        if weights is None:
            raise ValueError("hyperplane descriptor needs weights")
        return hyperplane_order(model, weights, name=name or "hyperplane")
    if kind == "klein":
        if not isinstance(model, KleinBottle):
            raise ModelMismatch("klein order needs the Klein bottle model")
        return klein_order(model, name=name or "klein-cone")
    if kind == "lex_pair":
        if not isinstance(model, DirectProduct):
            raise ModelMismatch("lex_pair order needs a product model")
        leading_factor = int(data.get("leading_factor", 0))
        if leading_factor not in (0, 1):
            raise ValueError("leading_factor must be 0 or 1")
        lead = order_from_descriptor(data["leading"],
                                     model.factors[leading_factor])
        trail = order_from_descriptor(data["trailing"],
                                      model.factors[1 - leading_factor])
        oracle = lex_pair_sign(lead, trail, leading_factor=leading_factor,
                               name=name)
        if oracle.model != model:
            raise ModelMismatch("lex_pair factors do not match the product model")
        return oracle
    raise ValueError(f"unknown order kind {kind!r}")


def order_descriptor(oracle: OrderOracle) -> dict:
    """JSON descriptor for shipped oracle kinds (inverse of order_from_descriptor)."""
    if isinstance(oracle, LexPairOracle):
        return {"name": oracle.name, "kind": "lex_pair",
                "leading_factor": oracle.leading_factor,
                "leading": order_descriptor(oracle.leading),
                "trailing": order_descriptor(oracle.trailing)}
    if isinstance(oracle.model, FreeGroup):
        return {"name": oracle.name, "kind": "magnus"}
    if isinstance(oracle.model, KleinBottle):
        return {"name": oracle.name, "kind": "klein"}
    if isinstance(oracle.model, FreeAbelian) and hasattr(oracle, "weights"):
        return {"name": oracle.name, "kind": "hyperplane",
                "weights": [[w.p, w.q] for w in oracle.weights]}
    raise ValueError(f"no canonical descriptor for oracle {oracle.name!r}")
