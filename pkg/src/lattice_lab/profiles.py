"""Three-part interpretive security profiles.

Each profile records, per scheme: resistance to known classical
polynomial-time attacks, resistance to known quantum polynomial-time
attacks (both tri-state: yes/no/unknown), and whether the scheme's
security is backed by reduction arguments from standard hard problems
(strictly binary). Profiles are descriptive bookkeeping with citations;
the validator checks structure only and never renders a judgment about
actual cryptographic security.
"""

import json
from dataclasses import dataclass, field

from .errors import UnknownSchemeError

TRI_STATES = ("yes", "no", "unknown")
BINARY_STATES = ("yes", "no")

INDICATORS = ("classical", "quantum", "reduction_backed")


@dataclass(frozen=True)
class SecurityProfile:
    scheme: str
    classical: str
    quantum: str
    reduction_backed: str
    notes: dict = field(default_factory=dict)
    references: tuple[str, ...] = ()


def builtin_registry() -> dict[str, SecurityProfile]:
    """The two shipped worked examples."""
    rsa = SecurityProfile(
        scheme="RSA-2048",
        classical="yes",
        quantum="no",
        reduction_backed="no",
        notes={
            "classical": "No known polynomial-time factoring algorithm",
            "quantum": "Shor",
            "reduction_backed": "No known worst-case to average-case reduction for factoring",
        },
        references=("Shor 1997",),
    )
    mlkem = SecurityProfile(
        scheme="ML-KEM-768",
        classical="yes",
        quantum="yes",
        reduction_backed="yes",
        notes={
            "classical": "No known polynomial-time classical attack",
            "quantum": "No known attack",
            "reduction_backed": "Module-LWE",
        },
        references=("Regev 2009", "FIPS 203"),
    )
    return {p.scheme: p for p in (rsa, mlkem)}


def profile_of(registry: dict[str, SecurityProfile], scheme: str) -> SecurityProfile:
    if scheme not in registry:
        raise UnknownSchemeError(scheme, sorted(registry))
    return registry[scheme]


def validate_profile(profile: SecurityProfile) -> list[str]:
    """Structural violations only; an empty list means ok."""
    violations = []
    if not profile.scheme:
        violations.append("scheme name must be nonempty")
    if profile.classical not in TRI_STATES:
        violations.append(f"classical must be one of {TRI_STATES}, got {profile.classical!r}")
    if profile.quantum not in TRI_STATES:
        violations.append(f"quantum must be one of {TRI_STATES}, got {profile.quantum!r}")
    if profile.reduction_backed not in BINARY_STATES:
        violations.append(
            f"reduction_backed must be 'yes' or 'no' (never 'unknown'), "
            f"got {profile.reduction_backed!r}"
        )
    for indicator in INDICATORS:
        value = getattr(profile, indicator)
        if value in ("yes", "no") and not profile.notes.get(indicator):
            violations.append(f"{indicator}={value!r} needs a nonempty note")
    return violations


def validate_registry(registry: dict[str, SecurityProfile]) -> list[str]:
    violations = []
    for name, profile in registry.items():
        if name != profile.scheme:
            violations.append(f"registry key {name!r} does not match scheme {profile.scheme!r}")
        violations.extend(f"{name}: {v}" for v in validate_profile(profile))
    return violations


def export_profiles(registry: dict[str, SecurityProfile]) -> str:
    """Canonical JSON: array sorted by scheme name, fixed key order.
    Parsing the output and re-exporting reproduces it byte for byte."""
    out = []
    for scheme in sorted(registry):
        p = registry[scheme]
        out.append(
            {
                "scheme": p.scheme,
                "classical": p.classical,
                "quantum": p.quantum,
                "reduction_backed": p.reduction_backed,
                "notes": {ind: p.notes.get(ind, "") for ind in INDICATORS},
                "references": list(p.references),
            }
        )
    return json.dumps(out, indent=2) + "\n"


def load_profiles(text: str) -> dict[str, SecurityProfile]:
    registry = {}
    for obj in json.loads(text):
        profile = SecurityProfile(
            scheme=obj["scheme"],
            classical=obj["classical"],
            quantum=obj["quantum"],
            reduction_backed=obj["reduction_backed"],
            notes=dict(obj["notes"]),
            references=tuple(obj["references"]),
        )
        registry[profile.scheme] = profile
    return registry
