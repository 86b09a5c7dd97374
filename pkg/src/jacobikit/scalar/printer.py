"""Deterministic text form of scalar fields, readable back by the parser."""

from __future__ import annotations


def _join(chunks):
    """``chunks`` is a list of ``(negative, body)``; render as a signed sum."""
    if not chunks:
        return "0"
    out = []
    for k, (negative, body) in enumerate(chunks):
        if k == 0:
            out.append("-" + body if negative else body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def _coefficient_body(q, factors):
    q = abs(q)
    if not factors:
        return str(q)
    if q == 1:
        return "*".join(factors)
    return f"{q}*" + "*".join(factors)


def format_linform(names, freqs) -> str:
    chunks = [(q < 0, _coefficient_body(q, [name])) for name, q in zip(names, freqs) if q]
    return _join(chunks)


def format_terms(names, terms) -> str:
    n = len(names)
    ordered = sorted(
        terms.items(),
        key=lambda kv: (kv[0][1] if kv[0][1] is not None else (0,) * n, kv[0][0]),
        reverse=True,
    )
    chunks = []
    for (a, c), q in ordered:
        factors = []
        for name, e in zip(names, a):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if c is not None:
            factors.append(f"exp({format_linform(names, c)})")
        chunks.append((q < 0, _coefficient_body(q, factors)))
    return _join(chunks)


def format_scalar(s) -> str:
    names = s.chart.names
    num = format_terms(names, s._num)
    if s._den is None:
        return num
    return f"({num})/({format_terms(names, s._den)})"
