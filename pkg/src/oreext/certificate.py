"""Straight-line certificates that 1 lies in a two-sided ideal.

A certificate is a register program.  Register 0 holds the input b; each
step reads earlier registers and appends one new register:

* ``left_mul``:   by * v[src]
* ``right_mul``:  v[src] * by
* ``commutator``: g*v[src] - v[src]*g (side "left") or v[src]*g - g*v[src]
  (side "right")
* ``lincomb``:    sum c_i * v[i] with coefficients c_i from R

Every step keeps the value inside the two-sided ideal generated by b, so a
final register equal to 1 proves the ideal is the whole ring.  Operands are
stored as printed polynomials; :func:`replay` re-parses them and recomputes
everything through plain Ore multiplication, sharing no code with the
search that produced the certificate.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import UsageError

__all__ = ["Certificate", "ReplayResult", "replay"]

_OPS = {"left_mul", "right_mul", "commutator", "lincomb"}


@dataclass
class Certificate:
    input: str
    steps: list = field(default_factory=list)
    claim: str = "1"
    algebra: dict | None = None  # configuration the expressions are read in

    def add(self, step: dict) -> int:
        """Append a step; return the index of the register it defines."""
        if step.get("op") not in _OPS:
            raise UsageError(f"unknown certificate step {step.get('op')!r}")
        self.steps.append(step)
        return len(self.steps)

    @property
    def register_count(self) -> int:
        return len(self.steps) + 1

    def to_json(self) -> dict:
        out = {"input": self.input, "steps": self.steps, "claim": self.claim}
        if self.algebra is not None:
            out["algebra"] = self.algebra
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, data) -> "Certificate":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            cert = cls(input=data["input"], claim=data.get("claim", "1"),
                       algebra=data.get("algebra"))
            for step in data["steps"]:
                cert.add(dict(step))
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed certificate: {exc}") from None
        return cert


@dataclass
class ReplayResult:
    ok: bool
    value: str
    registers: int

    def to_json(self):
        return {"ok": self.ok, "value": self.value, "registers": self.registers}


def replay(cert: Certificate, spec=None) -> ReplayResult:
    """Recompute a certificate and compare the last register with its claim."""
    from .parser import parse_ore_expr
    if spec is None:
        if cert.algebra is None:
            raise UsageError("certificate carries no algebra; pass one explicitly")
        from .catalog import build_algebra
        spec = build_algebra(cert.algebra)

    def read(text):
        return parse_ore_expr(text, spec)

    regs = [read(cert.input)]

    def reg(i):
        if not isinstance(i, int) or not 0 <= i < len(regs):
            raise UsageError(f"certificate refers to undefined register {i!r}")
        return regs[i]

    for step in cert.steps:
        op = step["op"]
        if op == "left_mul":
            regs.append(read(step["by"]) * reg(step["src"]))
        elif op == "right_mul":
            regs.append(reg(step["src"]) * read(step["by"]))
        elif op == "commutator":
            g, e = read(step["with"]), reg(step["src"])
            side = step.get("side", "left")
            if side not in ("left", "right"):
                raise UsageError(f"commutator side must be left or right, not {side!r}")
            regs.append(g * e - e * g if side == "left" else e * g - g * e)
        elif op == "lincomb":
            acc = spec.zero
            for i, c in step["terms"]:
                acc = acc + read(c) * reg(i)
            regs.append(acc)
    final = regs[-1]
    return ReplayResult(final == read(cert.claim), str(final), len(regs))
