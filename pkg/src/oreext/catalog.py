"""Algebra configurations: JSON schema validation and construction.

A configuration names a base field, a coefficient ring, sigma and delta;
see ``data/config.schema.json``.  Built-in configurations live in
``data/configs`` and can be referred to by name (``weyl_q``) or by file
name (``weyl_q.json``).
"""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

import jsonschema

from .errors import UsageError
from .maps import make_derivation, make_endomorphism
from .ore import OreAlgebra
from .parser import parse_polynomial, parse_ring_element, parse_scalar
from .rings import (BaseFieldRing, PolynomialRing, QuotientRing,
                    RationalFunctionField, SequenceRing)
from .scalars import GF, QQ

__all__ = ["config_schema", "builtin_names", "load_config", "validate_config",
           "build_ring", "build_algebra", "algebra", "COMPATIBILITY"]

# sigma / delta kinds accepted by each ring kind
COMPATIBILITY = {
    "field": {"sigma": {"identity", "q_scale"}, "delta": {"zero", "d_dy", "euler", "inner"}},
    "poly": {"sigma": {"identity", "q_scale", "eval0"},
             "delta": {"zero", "d_dy", "jackson", "euler", "inner"}},
    "quotient": {"sigma": {"identity", "q_scale"},
                 "delta": {"zero", "quotient_d_dy", "euler", "inner"}},
    "ratfunc": {"sigma": {"identity", "q_scale"},
                "delta": {"zero", "d_dy", "jackson", "euler", "inner"}},
    "sequences": {"sigma": {"identity", "seq_shift"}, "delta": {"zero", "inner"}},
}


def _data():
    return resources.files("oreext") / "data"


def config_schema() -> dict:
    return json.loads((_data() / "config.schema.json").read_text(encoding="utf-8"))


def builtin_names():
    return sorted(p.name[:-5] for p in (_data() / "configs").iterdir() if p.name.endswith(".json"))


def validate_config(config: dict) -> dict:
    try:
        jsonschema.validate(config, config_schema())
    except jsonschema.ValidationError as exc:
        raise UsageError(f"invalid config: {exc.message}") from None
    rk = config["ring"]["kind"]
    table = COMPATIBILITY[rk]
    if config["sigma"]["kind"] not in table["sigma"]:
        raise UsageError(f"sigma kind {config['sigma']['kind']!r} is not available on ring kind {rk!r}")
    if config["delta"]["kind"] not in table["delta"]:
        raise UsageError(f"delta kind {config['delta']['kind']!r} is not available on ring kind {rk!r}")
    return config


def load_config(source) -> dict:
    """Load a config from a dict, a file path, or a built-in name."""
    if isinstance(source, dict):
        return validate_config(source)
    path = Path(source)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
    else:
        stem = path.name[:-5] if path.name.endswith(".json") else path.name
        candidate = _data() / "configs" / f"{stem}.json"
        if not candidate.is_file():
            raise UsageError(f"no config file or built-in named {source!r}")
        text = candidate.read_text(encoding="utf-8")
    try:
        config = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"config is not valid JSON: {exc}") from None
    return validate_config(config)


def _field(desc):
    if desc["kind"] == "Q":
        return QQ
    return GF(desc["p"])


def build_ring(config: dict):
    field = _field(config["base_field"])
    rc = config["ring"]
    kind = rc["kind"]
    var = rc.get("var", "y")
    if kind == "field":
        return BaseFieldRing(field)
    if kind == "poly":
        return PolynomialRing(field, var)
    if kind == "quotient":
        modulus = parse_polynomial(rc["modulus"], field, var)
        return QuotientRing(field, modulus, var, domain=rc.get("domain"))
    if kind == "ratfunc":
        return RationalFunctionField(field, var)
    if kind == "sequences":
        return SequenceRing(field)
    raise UsageError(f"unknown ring kind {kind!r}")


def build_algebra(config: dict, *, seed=0, samples=100, check=True) -> OreAlgebra:
    config = validate_config(config)
    ring = build_ring(config)
    sc = dict(config["sigma"])
    kind = sc.pop("kind")
    if "q" in sc:
        sc["q"] = parse_scalar(str(sc["q"]), ring.field)
    sigma = make_endomorphism(ring, kind, **sc)
    dc = dict(config["delta"])
    dkind = dc.pop("kind")
    if "a" in dc:
        dc["a"] = parse_ring_element(dc["a"], ring)
    delta = make_derivation(ring, sigma, dkind, **dc)
    spec = OreAlgebra(ring, sigma, delta, seed=seed, samples=samples, check=check,
                      name=config.get("name"))
    spec.config = config
    return spec


def algebra(name_or_config, **kw) -> OreAlgebra:
    """Shorthand: ``algebra("weyl_q")``."""
    return build_algebra(load_config(name_or_config), **kw)
