"""
Self-contained JSON certificates and their replay.

A certificate stores the inputs of an experiment (parameters, modulus,
seed, kind and kind-specific options) next to its outputs.  Replaying the
inputs must regenerate the payload exactly.  The on-disk form is canonical:
sorted keys, two-space indent, no floats, and integers above 2**53 written
as decimal strings.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from .errors import VerificationError
from .fano import fano_points
from .invariants import Parameters, classify, delta_h, dim_formulas
from .rigidity import COL_ORDER, ROW_ORDER, rigidity_check
from .sampler import CISample, r_bases, sample_ci
from .singular import DEFAULT_PRIMES, sing_dim_estimate

SCHEMA_VERSION = "1"
SUFFIX = ".fanocert.json"
KINDS = ("rigidity", "fano", "fano_batch", "singular", "invariants")
COEFFICIENT_CAP = 10**4
DIGEST_ALG = "sha256"
_JSON_SAFE = 2**53


def canonical(obj):
    """Convert to the canonical JSON value tree, rejecting floats."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > _JSON_SAFE else obj
    if isinstance(obj, float):
        raise TypeError("floating-point values are not allowed in certificates")
    if isinstance(obj, dict):
        return {str(key): canonical(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(val) for val in obj]
    if hasattr(obj, "to_json"):
        return canonical(obj.to_json())
    if hasattr(obj, "item"):      # numpy scalar
        return canonical(obj.item())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(canonical(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def sample_tables(sample: CISample) -> dict:
    """Coefficient tables of a sample in canonical index order."""
    c = [[i, h, list(mu), v] for (i, h, mu), v in sample.c.items()]
    r = [[i, list(mu), sample.r[i].coeffs.get(mu, 0)]
         for i, basis in enumerate(r_bases(sample.params)) for mu in basis]
    tables = {"c": c, "r": r}
    entries = len(c) + len(r)
    if entries > COEFFICIENT_CAP:
        digest = hashlib.new(DIGEST_ALG, dumps(tables).encode()).hexdigest()
        tables = {"digest": digest, "digest_alg": DIGEST_ALG}
    tables["attempt"] = sample.attempt
    tables["entries"] = entries
    return tables


def _fraction(num: int, den: int) -> str:
    return f"{num}/{den}"


def run_experiment(kind: str, params: Parameters, modulus: int, seed: int,
                   options: dict | None = None) -> dict:
    """Compute the payload of a certificate from its inputs."""
    options = options or {}
    if kind == "rigidity":
        sample = sample_ci(params, modulus, seed)
        res = rigidity_check(sample)
        return {"sample": sample_tables(sample), "rank": res.rank,
                "nullity": res.nullity, "is_rigid": res.is_rigid,
                "row_order": ROW_ORDER, "col_order": COL_ORDER}
    if kind == "fano":
        sample = sample_ci(params, modulus, seed)
        res = fano_points(sample, modulus)
        return {"sample": sample_tables(sample), "q": modulus, "count": res.count,
                "contains_standard": res.contains_standard,
                "planes": [pl.to_json() for pl in res.planes]}
    if kind == "fano_batch":
        trials = int(options["trials"])
        counts, standard = [], []
        for trial in range(trials):
            res = fano_points(sample_ci(params, modulus, seed + trial), modulus)
            counts.append(res.count)
            standard.append(res.contains_standard)
        unique = sum(1 for c in counts if c == 1)
        threshold = Fraction(options.get("threshold", "7/10"))
        return {"seeds": [seed, seed + trials - 1], "q": modulus, "counts": counts,
                "contains_standard": sum(standard), "unique": unique, "trials": trials,
                "unique_rate": _fraction(unique, trials),
                "threshold": _fraction(threshold.numerator, threshold.denominator),
                "threshold_met": Fraction(unique, trials) >= threshold}
    if kind == "singular":
        primes = options.get("primes", list(DEFAULT_PRIMES))
        return sing_dim_estimate(params, seed, primes).to_json()
    if kind == "invariants":
        return invariants_payload(params)
    raise VerificationError(f"unknown certificate kind {kind!r}")


def invariants_payload(params: Parameters) -> dict:
    hs = range(-1, params.k)
    return {
        "regime": classify(params).to_json(),
        "delta": {str(h): delta_h(params, h) for h in hs},
        "dimensions": {str(h): dim_formulas(params, h).to_json() for h in hs},
    }


@dataclass
class Certificate:
    params: Parameters
    p_or_q: int
    seed: int
    kind: str
    payload: dict
    options: dict = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION
    toolkit_version: str = __version__
    wall_time_ms: int = 0

    def to_json(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "toolkit_version": self.toolkit_version,
            "kind": self.kind,
            "params": self.params.to_json(),
            "p_or_q": self.p_or_q,
            "seed": self.seed,
            "options": self.options,
            "payload": self.payload,
            "wall_time_ms": self.wall_time_ms,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        version = data.get("schema_version")
        if version != SCHEMA_VERSION:
            raise VerificationError(f"unknown certificate schema_version {version!r}")
        try:
            par = data["params"]
            return cls(
                params=Parameters(int(par["m"]), int(par["k"]), tuple(par["d"])),
                p_or_q=int(data["p_or_q"]),
                seed=int(data["seed"]),
                kind=data["kind"],
                payload=data["payload"],
                options=data.get("options", {}),
                schema_version=version,
                toolkit_version=data.get("toolkit_version", ""),
                wall_time_ms=int(data.get("wall_time_ms", 0)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise VerificationError(f"malformed certificate: {exc}") from exc


def make_certificate(kind: str, params: Parameters, modulus: int, seed: int,
                     options: dict | None = None) -> Certificate:
    options = dict(options or {})
    start = time.perf_counter()
    payload = run_experiment(kind, params, modulus, seed, options)
    elapsed = int((time.perf_counter() - start) * 1000)
    return Certificate(params, modulus, seed, kind, payload, options, wall_time_ms=elapsed)


def write_certificate(cert: Certificate, path) -> Path:
    path = Path(path)
    text = dumps(cert)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write certificate {path}: {exc}") from exc
    return path


def read_certificate(path) -> Certificate:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise OSError(f"cannot read certificate {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise VerificationError(f"{path} is not valid JSON: {exc}") from exc
    return Certificate.from_json(data)


def diff(expected, actual, prefix="") -> list[str]:
    """Dotted paths at which two canonical JSON trees differ."""
    if isinstance(expected, dict) and isinstance(actual, dict):
        out = []
        for key in sorted(set(expected) | set(actual)):
            path = f"{prefix}.{key}" if prefix else key
            if key not in expected or key not in actual:
                out.append(path)
            else:
                out.extend(diff(expected[key], actual[key], path))
        return out
    if isinstance(expected, list) and isinstance(actual, list) and len(expected) == len(actual):
        out = []
        for idx, (a, b) in enumerate(zip(expected, actual)):
            out.extend(diff(a, b, f"{prefix}[{idx}]"))
        return out
    return [] if expected == actual else [prefix or "<root>"]


@dataclass
class VerifyResult:
    valid: bool
    mismatches: list


def verify_certificate(path) -> VerifyResult:
    cert = read_certificate(path)
    replayed = run_experiment(cert.kind, cert.params, cert.p_or_q, cert.seed, cert.options)
    mismatches = diff(canonical(replayed), canonical(cert.payload), "payload")
    return VerifyResult(not mismatches, mismatches)
