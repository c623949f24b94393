"""Plain-text rendering of elements, tensors and hypergroup data."""

from __future__ import annotations

from typing import Sequence

from .duality import CERTIFICATE_FIELDS, FQHCertificate
from .exactnum import Matrix, Scalar

__all__ = ["element", "tensor", "render_side", "render_certificate", "render_pair"]


def _coef(c: Scalar) -> tuple[str, str]:
    """Sign and magnitude prefix for a term, e.g. ('-', '1/2 ')."""
    if c.is_real():
        if c.re < 0:
            mag = -c.re
            return "-", "" if mag == 1 else f"{mag} "
        return "+", "" if c.re == 1 else f"{c.re} "
    if not c.re:
        if c.im < 0:
            return "-", f"{Scalar(0, -c.im)} "
        return "+", f"{c} "
    return "+", f"({c}) "


def _terms(pairs: Sequence[tuple[Scalar, str]]) -> str:
    out = ""
    for c, name in pairs:
        if not c:
            continue
        sign, mag = _coef(c)
        if not out:
            out = ("-" if sign == "-" else "") + mag + name
        else:
            out += f" {sign} {mag}{name}"
    return out or "0"


def element(v: Sequence[Scalar], labels: Sequence[str]) -> str:
    return _terms(list(zip(v, labels)))


def tensor(col: Sequence[Scalar], labels: Sequence[str]) -> str:
    d = len(labels)
    return _terms([(col[i * d + k], f"{labels[i]}⊗{labels[k]}") for i in range(d) for k in range(d)])


def render_side(title: str, algebra, coproduct: Matrix, counit, integral, antipode: Matrix | None) -> str:
    L = algebra.labels
    d = algebra.dim
    lines = [f"{title}: basis {', '.join(L)}"]
    for i in range(d):
        for j in range(d):
            lines.append(f"  {L[i]}·{L[j]} = {element(algebra.table[i][j], L)}")
    if algebra.unit is not None:
        lines.append(f"  1 = {element(algebra.unit, L)}")
    if algebra.star is not None:
        for j in range(d):
            lines.append(f"  {L[j]}* = {element(algebra.star.col(j), L)}")
    for j in range(d):
        lines.append(f"  Δ({L[j]}) = {tensor(coproduct.col(j), L)}")
    lines.append("  " + ", ".join(f"ε({L[j]}) = {counit[j]}" for j in range(d)))
    lines.append("  " + ", ".join(f"φ({L[j]}) = {integral[j]}" for j in range(d)))
    if antipode is not None:
        for j in range(d):
            lines.append(f"  S({L[j]}) = {element(antipode.col(j), L)}")
    return "\n".join(lines)


def render_pair(P: Matrix, labels_a: Sequence[str], labels_b: Sequence[str]) -> str:
    lines = ["pairing:"]
    for i, a in enumerate(labels_a):
        lines.append("  " + ", ".join(f"⟨{a},{b}⟩ = {P[i, j]}" for j, b in enumerate(labels_b)))
    return "\n".join(lines)


def render_certificate(cert: FQHCertificate, title: str = "certificate") -> str:
    lines = [f"{title}: {'PASS' if cert.ok else 'FAIL'}"]
    for f in CERTIFICATE_FIELDS:
        v = getattr(cert, f)
        lines.append(f"  {f}: {'n/a' if v is None else str(v).lower()}")
    for f in cert.failed():
        if f in cert.witnesses:
            lines.append(f"  witness {f}: {cert.witnesses[f]}")
    return "\n".join(lines)
