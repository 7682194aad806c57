"""Tube-level certificates and classification verdicts.

The Tube map is never built geometrically.  What it preserves of a welded
knot (group, quandle, meridian, longitude up to inverse) is computed from
the diagram, and two diagrams are compared through those invariants.
Equal invariants never prove isotopy; a verdict is either a refutation or
``NotDistinguished``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .codec import GaussCode, Symmetry, symmetry
from .invariants.bracket import f_polynomial
from .invariants.battery import (
    DEFAULT_PALETTE,
    InvariantBattery,
    Level,
    Palette,
    battery,
    first_difference,
)
from .knotgroup import PeripheralStructure, peripheral

__all__ = [
    "Outcome",
    "Verdict",
    "TubeCertificate",
    "tube_certificate",
    "spun_compare",
    "welded_compare",
    "reverse_mirror",
    "reverse_vreflect",
    "non_injectivity_witness",
]

# Facts cited in verdict notes, keyed by short name.
CLASSICAL_FAITHFUL = "classical-faithful: classical diagrams that are welded equivalent are classically isotopic"
TUBE_REVERSE = "tube-reverse: -Tube(K) = Tube(-K) and Tube(K) = -Tube(K)*"
TUBE_MIRROR = "tube-mirror: Tube(K)* = Tube(-K^up)"
TUBE_NOT_INJECTIVE = "tube-not-injective: some inequivalent welded knots have isotopic Tube images"
TUBE_PERIPHERAL = "tube-peripheral: Tube preserves the knot group, the meridian and the longitude up to inverse"
SPUN_DICHOTOMY = "spun-dichotomy: for classical K, K', Tube(K) = Tube(K') iff K = K' or K = -K'*"


class Outcome(str, Enum):
    DISTINGUISHED = "Distinguished"
    DISTINGUISHED_CLASSICALLY = "DistinguishedClassically"
    NOT_DISTINGUISHED = "NotDistinguished"

    @property
    def distinguished(self) -> bool:
        return self is not Outcome.NOT_DISTINGUISHED


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    witness: str | None = None
    notes: tuple[str, ...] = ()
    evidence: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.outcome.distinguished and self.witness is None:
            raise ValueError("a distinguishing verdict needs a witness entry")

    def to_json(self) -> dict:
        out = {"outcome": self.outcome.value, "witness": self.witness, "notes": list(self.notes)}
        if self.evidence:
            out["evidence"] = self.evidence
        return out


def reverse_mirror(code: GaussCode) -> GaussCode:
    """-K*"""
    return symmetry(symmetry(code, Symmetry.MIRROR), Symmetry.REVERSE)


def reverse_vreflect(code: GaussCode) -> GaussCode:
    """-K^up"""
    return symmetry(symmetry(code, Symmetry.VREFLECT), Symmetry.REVERSE)


@dataclass(frozen=True)
class TubeCertificate:
    """Computable shadow of ``Tube(K)``; equality is battery equality."""

    source: GaussCode = field(compare=False)
    peripheral: PeripheralStructure = field(compare=False)
    tube_battery: InvariantBattery

    def to_json(self) -> dict:
        return {
            "source": str(self.source),
            "peripheral": self.peripheral.to_json(),
            "tube_battery": self.tube_battery.to_json(),
        }


def tube_certificate(code: GaussCode, palette: Palette = DEFAULT_PALETTE) -> TubeCertificate:
    return TubeCertificate(code, peripheral(code), battery(code, Level.TUBE, palette))


def spun_compare(k1: GaussCode, k2: GaussCode, palette: Palette = DEFAULT_PALETTE) -> Verdict:
    """Compare the Tube images of two diagrams.

    Differing Tube batteries prove the spun tori are not isotopic.  Equal
    ones are reported as ``NotDistinguished``, together with which branch of
    the ``K = K'`` / ``K = -K'*`` dichotomy the welded batteries allow.
    """
    c1 = tube_certificate(k1, palette)
    c2 = tube_certificate(k2, palette)
    diff = first_difference(c1.tube_battery, c2.tube_battery)
    if diff is not None:
        return Verdict(Outcome.DISTINGUISHED, diff, (TUBE_PERIPHERAL,))
    w1 = battery(k1, Level.WELDED, palette)
    same = first_difference(w1, battery(k2, Level.WELDED, palette))
    flipped = first_difference(w1, battery(reverse_mirror(k2), Level.WELDED, palette))
    evidence = {
        "welded_vs_other": "equal" if same is None else f"differ at {same}",
        "welded_vs_reverse_mirror_of_other": "equal" if flipped is None else f"differ at {flipped}",
    }
    return Verdict(Outcome.NOT_DISTINGUISHED, None, (SPUN_DICHOTOMY, TUBE_PERIPHERAL, TUBE_REVERSE), evidence)


def welded_compare(
    k1: GaussCode,
    k2: GaussCode,
    classical: tuple[bool, bool] = (False, False),
    palette: Palette = DEFAULT_PALETTE,
) -> Verdict:
    """Compare two diagrams as welded knots.

    Differing welded batteries refute welded equivalence.  When both inputs
    are flagged as classical diagrams the virtual battery (which adds the
    f-polynomial) is consulted too: a difference there shows the knots are
    classically distinct, hence welded-distinct as well.
    """
    diff = first_difference(battery(k1, Level.WELDED, palette), battery(k2, Level.WELDED, palette))
    if diff is not None:
        return Verdict(Outcome.DISTINGUISHED, diff, ("welded battery is a welded invariant",))
    if all(classical):
        vdiff = first_difference(battery(k1, Level.VIRTUAL, palette), battery(k2, Level.VIRTUAL, palette))
        if vdiff is not None:
            return Verdict(Outcome.DISTINGUISHED_CLASSICALLY, vdiff, (CLASSICAL_FAITHFUL,))
    return Verdict(Outcome.NOT_DISTINGUISHED)


def non_injectivity_witness(code: GaussCode, palette: Palette = DEFAULT_PALETTE) -> dict:
    """Evidence that ``code`` and ``-code^up`` have the same Tube image but
    are different welded knots.

    Meant for a chiral classical diagram such as the right trefoil.  The
    three parts are: equal Tube certificates, f-polynomials that differ but
    agree after ``A -> A**-1``, and the classical-faithfulness fact that turns
    a classical distinction into a welded one.
    """
    other = reverse_vreflect(code)
    tube_equal = tube_certificate(code, palette) == tube_certificate(other, palette)
    f1, f2 = f_polynomial(code), f_polynomial(other)
    verdict = welded_compare(code, other, (True, True), palette)
    holds = tube_equal and f1 != f2 and f1.substitute_inverse() == f2
    return {
        "knot": str(code),
        "partner": str(other),
        "tube_certificates_equal": tube_equal,
        "f_polynomial": f1.format("A"),
        "f_polynomial_partner": f2.format("A"),
        "f_polynomials_differ": f1 != f2,
        "f_partner_is_substituted_inverse": f1.substitute_inverse() == f2,
        "welded_verdict": verdict.to_json(),
        "citations": [TUBE_MIRROR, TUBE_REVERSE, CLASSICAL_FAITHFUL, TUBE_NOT_INJECTIVE],
        "holds": holds,
    }
