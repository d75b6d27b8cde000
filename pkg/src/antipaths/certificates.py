"""Certificates: structured-text records tying a search result to a graph.

A certificate is a key/value text block with a vertex array.  Verification
re-validates the vertices against the referenced graph from scratch, so it
does not depend on anything the emitting engine did; the graph is pinned by
the digest of its canonical file bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .alternating import Orientation, PathError, validate_anticycle, validate_antipath
from .driver import Found, NotGuaranteed, SearchOutcome
from .graphs import Digraph
from .graphio import graph_digest
from .rotation import HypothesisViolation

KINDS = ("antipath", "anticycle", "violation", "not_guaranteed")


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    kind: str
    graph_hash: str
    k: int
    orientation: str
    length: int
    vertices: tuple[int, ...]
    engine_version: str = __version__
    detail: str = ""


def certificate_for_outcome(
    d: Digraph, k: int, orient: Orientation, outcome: SearchOutcome
) -> Certificate:
    digest = graph_digest(d)
    if isinstance(outcome, Found):
        return Certificate(
            kind="antipath",
            graph_hash=digest,
            k=k,
            orientation=orient.value,
            length=outcome.path.length,
            vertices=outcome.path.verts,
        )
    if isinstance(outcome, NotGuaranteed):
        verts = outcome.best_path.verts if outcome.best_path is not None else ()
        return Certificate(
            kind="not_guaranteed",
            graph_hash=digest,
            k=k,
            orientation=orient.value,
            length=max(len(verts) - 1, 0),
            vertices=verts,
            detail=outcome.reason,
        )
    if isinstance(outcome, HypothesisViolation):
        return Certificate(
            kind="violation",
            graph_hash=digest,
            k=k,
            orientation=orient.value,
            length=0,
            vertices=(outcome.witness,),
            detail=f"{outcome.context}: {outcome.detail}",
        )
    raise CertificateError(f"unknown outcome {outcome!r}")


def anticycle_certificate(d: Digraph, verts: tuple[int, ...]) -> Certificate:
    cycle = validate_anticycle(d, verts)
    return Certificate(
        kind="anticycle",
        graph_hash=graph_digest(d),
        k=cycle.length,
        orientation="none",
        length=cycle.length,
        vertices=cycle.verts,
    )


def format_certificate(cert: Certificate) -> str:
    lines = [
        f"kind {cert.kind}",
        f"graph_hash {cert.graph_hash}",
        f"k {cert.k}",
        f"orientation {cert.orientation}",
        f"length {cert.length}",
        "vertices " + " ".join(str(v) for v in cert.vertices),
        f"engine_version {cert.engine_version}",
    ]
    if cert.detail:
        lines.append(f"detail {cert.detail}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str, source: str = "<certificate>") -> Certificate:
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        key, _, value = raw.partition(" ")
        if not key:
            raise CertificateError(f"{source}:{lineno}: malformed line {raw!r}")
        if key in fields:
            raise CertificateError(f"{source}:{lineno}: repeated key {key!r}")
        fields[key] = value.strip()
    required = ("kind", "graph_hash", "k", "orientation", "length", "vertices", "engine_version")
    for key in required:
        if key not in fields:
            raise CertificateError(f"{source}: missing key {key!r}")
    unknown = set(fields) - set(required) - {"detail"}
    if unknown:
        raise CertificateError(f"{source}: unknown keys {sorted(unknown)}")
    if fields["kind"] not in KINDS:
        raise CertificateError(f"{source}: unknown kind {fields['kind']!r}")
    try:
        k = int(fields["k"])
        length = int(fields["length"])
        vertices = tuple(int(t) for t in fields["vertices"].split())
    except ValueError as exc:
        raise CertificateError(f"{source}: non-integer numeric field ({exc})") from None
    return Certificate(
        kind=fields["kind"],
        graph_hash=fields["graph_hash"],
        k=k,
        orientation=fields["orientation"],
        length=length,
        vertices=vertices,
        engine_version=fields["engine_version"],
        detail=fields.get("detail", ""),
    )


def load_certificate(path: str | Path) -> Certificate:
    p = Path(path)
    return parse_certificate(p.read_text(), source=str(p))


def verify_certificate(d: Digraph, cert: Certificate) -> None:
    """Raise CertificateError naming the first failing invariant; return
    silently when the certificate checks out against the graph."""
    digest = graph_digest(d)
    if cert.graph_hash != digest:
        raise CertificateError(
            f"hash mismatch: certificate pins {cert.graph_hash[:12]}.., graph is {digest[:12]}.."
        )
    if cert.kind == "antipath":
        try:
            path = validate_antipath(d, cert.vertices)
        except PathError as exc:
            raise CertificateError(f"{type(exc).__name__}: {exc}") from exc
        if path.length != cert.length:
            raise CertificateError(f"length mismatch: declared {cert.length}, actual {path.length}")
        if cert.k != cert.length:
            raise CertificateError(f"k mismatch: declared k={cert.k}, path length {cert.length}")
        want = Orientation.from_flag(cert.orientation)
        if path.orientation != want:
            raise CertificateError(
                f"orientation mismatch: declared {cert.orientation},"
                f" path reads {path.orientation.value}"
            )
        return
    if cert.kind == "anticycle":
        try:
            cycle = validate_anticycle(d, cert.vertices)
        except PathError as exc:
            raise CertificateError(f"{type(exc).__name__}: {exc}") from exc
        if cycle.length != cert.length:
            raise CertificateError(f"length mismatch: declared {cert.length}, actual {cycle.length}")
        return
    raise CertificateError(f"kind {cert.kind!r} is not verifiable")
